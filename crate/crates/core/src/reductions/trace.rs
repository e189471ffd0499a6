use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::instance::{Edge, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ReductionKind {
    Identity,
    W3satToQpbo,
    QpboToKlabel { k: usize },
    Planarize,
}

impl ReductionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionKind::Identity => "identity",
            ReductionKind::W3satToQpbo => "w3sat-to-qpbo",
            ReductionKind::QpboToKlabel { .. } => "qpbo-to-klabel",
            ReductionKind::Planarize => "planarize",
        }
    }
}

/// One replaced crossing: the two original edges, the crossing point, the
/// auxiliary nodes in creation order and their coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub edge_a: Edge,
    pub edge_b: Edge,
    pub point: Point,
    pub aux_nodes: Vec<NodeId>,
    pub positions: Vec<Point>,
}

/// Bookkeeping produced by a forward map, sufficient to rebuild the target
/// from the source and run the reverse map in a separate process.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub kind: ReductionKind,
    pub original_nodes: Vec<NodeId>,
    pub aux_nodes: Vec<NodeId>,
    pub big_m: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossings: Vec<CrossingRecord>,
    /// Next id the fresh-node counter would hand out.
    pub next_id: NodeId,
}

impl ReductionTrace {
    pub fn new(kind: ReductionKind, num_original: usize, big_m: i64) -> Self {
        ReductionTrace {
            kind,
            original_nodes: (0..num_original).collect(),
            aux_nodes: Vec::new(),
            big_m,
            crossings: Vec::new(),
            next_id: num_original,
        }
    }

    pub fn num_original(&self) -> usize {
        self.original_nodes.len()
    }

    /// Checks that original and auxiliary ids are disjoint and together
    /// cover `0..num_nodes` exactly.
    pub fn check_partition(&self, num_nodes: usize) -> Result<()> {
        let mut seen = vec![false; num_nodes];
        for &u in self.original_nodes.iter().chain(&self.aux_nodes) {
            if u >= num_nodes || std::mem::replace(&mut seen[u], true) {
                return Err(Error::TraceMismatch(format!("node {u} is out of range or listed twice")));
            }
        }
        match seen.iter().position(|s| !s) {
            Some(u) => Err(Error::TraceMismatch(format!("node {u} is neither original nor auxiliary"))),
            None if self.next_id != num_nodes => {
                Err(Error::TraceMismatch(format!("counter at {} for {num_nodes} nodes", self.next_id)))
            }
            None => Ok(()),
        }
    }

    pub fn expect_kind(&self, kind: &ReductionKind) -> Result<()> {
        if std::mem::discriminant(&self.kind) == std::mem::discriminant(kind) {
            Ok(())
        } else {
            Err(Error::TraceMismatch(format!("expected a {} trace, got {}", kind.name(), self.kind.name())))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::TraceMismatch(format!("unreadable trace: {e}")))
    }
}
