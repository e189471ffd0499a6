//! Places an instance on the complexity axis from structural and
//! interaction checks, and names a solver together with its guarantee.
//!
//! Checks that reject their input (for example a submodularity test on an
//! instance with `+INF` entries) count as "flag not set".

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{list_crossings, validate_general_position, Drawing};
use crate::instance::EnergyInstance;
use crate::solvers::{is_forest, is_metric, is_potts, is_submodular_binary, is_submodular_lattice, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PO")]
    Po,
    #[serde(rename = "APX")]
    Apx,
    #[serde(rename = "log-APX")]
    LogApx,
    #[serde(rename = "exp-APX-complete-class")]
    ExpApxComplete,
    #[serde(rename = "unknown")]
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Po => "PO",
            Verdict::Apx => "APX",
            Verdict::LogApx => "log-APX",
            Verdict::ExpApxComplete => "exp-APX-complete-class",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub forest: bool,
    /// `None` without a drawing; `Some(false)` also when the drawing is
    /// incomplete or not in general position.
    pub planar_by_drawing: Option<bool>,
    pub binary: bool,
    pub uniform_k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteractionFlags {
    pub submodular_binary: bool,
    pub submodular_lattice: bool,
    pub potts: bool,
    pub metric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub structure: StructureFlags,
    pub interactions: InteractionFlags,
    pub verdict: Verdict,
    /// The rule of the decision table that fired.
    pub rule: String,
    pub solver: Method,
    pub guarantee: String,
    pub undetected: Vec<String>,
}

/// Families the checks do not recognise; instances in them may be easier
/// than the verdict suggests.
pub const UNDETECTED_FAMILIES: [&str; 3] =
    ["outerplanar graphs", "bounded treewidth above 1", "permuted submodularity"];

fn planar_by_drawing(i: &EnergyInstance, d: &Drawing) -> bool {
    d.check_covers(i).is_ok()
        && validate_general_position(i, d).is_ok()
        && list_crossings(i, d).is_ok_and(|c| c.is_empty())
}

pub fn structure_flags(i: &EnergyInstance, d: Option<&Drawing>) -> StructureFlags {
    StructureFlags {
        forest: is_forest(i),
        planar_by_drawing: d.map(|d| planar_by_drawing(i, d)),
        binary: i.is_binary(),
        uniform_k: i.uniform_label_count(),
    }
}

pub fn interaction_flags(i: &EnergyInstance) -> InteractionFlags {
    InteractionFlags {
        submodular_binary: is_submodular_binary(i).unwrap_or(false),
        submodular_lattice: is_submodular_lattice(i).unwrap_or(false),
        potts: is_potts(i).unwrap_or(false),
        metric: is_metric(i).unwrap_or(false),
    }
}

/// Applies the decision table; the first matching rule wins.
pub fn classify(i: &EnergyInstance, d: Option<&Drawing>) -> ComplexityReport {
    let s = structure_flags(i, d);
    let f = interaction_flags(i);
    let (verdict, rule, solver, guarantee) = if s.forest {
        (
            Verdict::Po,
            "forest",
            Method::Tree,
            "exact: dynamic programming over the forest (Viterbi), linear in the number of edges",
        )
    } else if s.binary && f.submodular_binary {
        (
            Verdict::Po,
            "binary submodular",
            Method::Mincut,
            "exact: one minimum cut in a corresponding network; for 2 labels either the problem is submodular and in PO or it is NP-hard",
        )
    } else if f.submodular_lattice {
        (
            Verdict::Po,
            "lattice submodular",
            Method::Elim,
            "exact: the family is solvable in polynomial time; solved here by elimination at desk scale",
        )
    } else if f.potts {
        (Verdict::Apx, "potts", Method::Alphaexp, "α-expansion is a 2-approximate algorithm for Potts interactions")
    } else if f.metric {
        (
            Verdict::LogApx,
            "metric",
            Method::Alphaexp,
            "metric labeling is approximable within O(log k); α-expansion here only guarantees 2·max/min ratio of the non-zero interaction costs",
        )
    } else if s.planar_by_drawing == Some(true) && s.binary {
        (
            Verdict::Unknown,
            "planar binary",
            Method::Elim,
            "open: the approximability of planar 2-label instances is an open question; exact by elimination at desk scale",
        )
    } else {
        (
            Verdict::ExpApxComplete,
            "general",
            Method::Elim,
            "worst case: the class is exp-APX-complete (also for planar graphs with 3 or more labels); exact by elimination at desk scale only",
        )
    };
    ComplexityReport {
        structure: s,
        interactions: f,
        verdict,
        rule: rule.to_string(),
        solver,
        guarantee: guarantee.to_string(),
        undetected: UNDETECTED_FAMILIES.iter().map(|s| s.to_string()).collect(),
    }
}

impl ComplexityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.structure;
        let i = &self.interactions;
        writeln!(f, "verdict {}", self.verdict)?;
        writeln!(f, "rule {}", self.rule)?;
        writeln!(f, "solver {}", self.solver)?;
        writeln!(f, "guarantee {}", self.guarantee)?;
        writeln!(f, "forest {}", yes_no(s.forest))?;
        match s.planar_by_drawing {
            Some(p) => writeln!(f, "planar-by-drawing {}", yes_no(p))?,
            None => writeln!(f, "planar-by-drawing n/a")?,
        }
        writeln!(f, "binary {}", yes_no(s.binary))?;
        match s.uniform_k {
            Some(k) => writeln!(f, "uniform-k {k}")?,
            None => writeln!(f, "uniform-k no")?,
        }
        writeln!(f, "submodular-binary {}", yes_no(i.submodular_binary))?;
        writeln!(f, "submodular-lattice {}", yes_no(i.submodular_lattice))?;
        writeln!(f, "potts {}", yes_no(i.potts))?;
        writeln!(f, "metric {}", yes_no(i.metric))?;
        write!(f, "not detected: {}", self.undetected.join(", "))
    }
}
