//! Pairwise energy instances, labelings and the big-M constant.
//!
//! An instance is a graph whose nodes carry a label count `k_u`, a unary
//! table `f_u` and whose edges carry a `k_u × k_v` table `f_uv`, plus a
//! finite constant offset. Nodes are identified by their index `0..n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::cost::{ExtendedCost, Finite, Infinite};
use crate::error::{Error, Result};

pub type NodeId = usize;

/// An unordered node pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(NodeId, NodeId);

impl Edge {
    /// Normalizes the pair. Self-loops are representable here and rejected
    /// when an instance is built.
    pub fn new(a: NodeId, b: NodeId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> NodeId {
        self.0
    }

    pub fn v(self) -> NodeId {
        self.1
    }

    pub fn contains(self, n: NodeId) -> bool {
        self.0 == n || self.1 == n
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }

    pub fn other(self, n: NodeId) -> Option<NodeId> {
        if self.0 == n {
            Some(self.1)
        } else if self.1 == n {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A dense row-major `rows × cols` cost table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CostTable {
    rows: usize,
    cols: usize,
    costs: Vec<ExtendedCost>,
}

impl CostTable {
    pub fn new(rows: usize, cols: usize, costs: Vec<ExtendedCost>) -> Result<Self> {
        if costs.len() != rows * cols {
            return Err(Error::InvalidInstance(format!("table has {} entries, expected {rows}x{cols}", costs.len())));
        }
        Ok(CostTable { rows, cols, costs })
    }

    pub fn filled(rows: usize, cols: usize, value: ExtendedCost) -> Self {
        CostTable { rows, cols, costs: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExtendedCost) -> Self {
        let mut costs = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                costs.push(f(a, b));
            }
        }
        CostTable { rows, cols, costs }
    }

    /// Builds a table from finite rows; panics on ragged input, so only for
    /// literals in code and tests.
    pub fn from_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |a, b| Finite(rows[a][b]))
    }

    /// A `{0, +INF}` table that is finite exactly on `allowed`.
    pub fn relation(rows: usize, cols: usize, allowed: &[(usize, usize)]) -> Self {
        let mut t = Self::filled(rows, cols, Infinite);
        for &(a, b) in allowed {
            t.costs[a * cols + b] = Finite(0);
        }
        t
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, a: usize, b: usize) -> ExtendedCost {
        self.costs[a * self.cols + b]
    }

    pub fn costs(&self) -> &[ExtendedCost] {
        &self.costs
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |a, b| self.get(b, a))
    }

    pub fn map(&self, f: impl Fn(ExtendedCost) -> ExtendedCost) -> Self {
        CostTable { rows: self.rows, cols: self.cols, costs: self.costs.iter().map(|&c| f(c)).collect() }
    }
}

/// One label index per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Labeling(Vec<usize>);

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Self {
        Labeling(labels)
    }

    pub fn zeros(n: usize) -> Self {
        Labeling(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Restriction to the first `n` nodes.
    pub fn restrict(&self, n: usize) -> Labeling {
        Labeling(self.0[..n.min(self.0.len())].to_vec())
    }
}

impl Index<NodeId> for Labeling {
    type Output = usize;

    fn index(&self, u: NodeId) -> &usize {
        &self.0[u]
    }
}

impl From<Vec<usize>> for Labeling {
    fn from(v: Vec<usize>) -> Self {
        Labeling(v)
    }
}

/// A validated pairwise energy instance. Immutable; use [`InstanceBuilder`]
/// (or [`EnergyInstance::to_builder`]) to construct or derive one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyInstance {
    label_counts: Vec<usize>,
    unary: Vec<Vec<ExtendedCost>>,
    pairwise: BTreeMap<Edge, CostTable>,
    constant: i64,
}

impl EnergyInstance {
    pub fn builder(label_counts: Vec<usize>) -> InstanceBuilder {
        InstanceBuilder::new(label_counts)
    }

    pub fn to_builder(&self) -> InstanceBuilder {
        InstanceBuilder {
            label_counts: self.label_counts.clone(),
            unary: self.unary.clone(),
            pairwise: self.pairwise.clone(),
            constant: self.constant,
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.label_counts.len()
    }

    pub fn num_edges(&self) -> usize {
        self.pairwise.len()
    }

    pub fn label_count(&self, u: NodeId) -> usize {
        self.label_counts[u]
    }

    pub fn label_counts(&self) -> &[usize] {
        &self.label_counts
    }

    /// `Some(k)` when every node has exactly `k` labels.
    pub fn uniform_label_count(&self) -> Option<usize> {
        let first = *self.label_counts.first()?;
        self.label_counts.iter().all(|&k| k == first).then_some(first)
    }

    pub fn is_binary(&self) -> bool {
        self.label_counts.iter().all(|&k| k == 2)
    }

    pub fn unary(&self, u: NodeId) -> &[ExtendedCost] {
        &self.unary[u]
    }

    pub fn pairwise(&self, e: Edge) -> Option<&CostTable> {
        self.pairwise.get(&e)
    }

    /// Edges in lexicographic order with their tables (rows index the
    /// smaller endpoint).
    pub fn edges(&self) -> impl Iterator<Item = (Edge, &CostTable)> + '_ {
        self.pairwise.iter().map(|(e, t)| (*e, t))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.pairwise.keys().copied().collect()
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    /// `f_uv(a, b)` for any orientation of the pair; `None` when there is no edge.
    pub fn pair_cost(&self, u: NodeId, v: NodeId, a: usize, b: usize) -> Option<ExtendedCost> {
        let t = self.pairwise.get(&Edge::new(u, v))?;
        Some(if u < v { t.get(a, b) } else { t.get(b, a) })
    }

    pub fn adjacency(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.num_nodes()];
        for e in self.pairwise.keys() {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        adj
    }

    pub fn has_infinite(&self) -> bool {
        self.all_costs().any(ExtendedCost::is_infinite)
    }

    fn all_costs(&self) -> impl Iterator<Item = ExtendedCost> + '_ {
        self.unary.iter().flatten().copied().chain(self.pairwise.values().flat_map(|t| t.costs().iter().copied()))
    }

    /// Number of joint labelings, saturating at `u128::MAX`.
    pub fn configuration_count(&self) -> u128 {
        self.label_counts.iter().try_fold(1u128, |acc, &k| acc.checked_mul(k as u128)).unwrap_or(u128::MAX)
    }

    pub fn check_labeling(&self, x: &Labeling) -> Result<()> {
        if x.len() != self.num_nodes() {
            return Err(Error::LabelingLength { expected: self.num_nodes(), got: x.len() });
        }
        for (u, (&label, &count)) in x.as_slice().iter().zip(&self.label_counts).enumerate() {
            if label >= count {
                return Err(Error::LabelOutOfRange { node: u, label, count });
            }
        }
        Ok(())
    }
}

/// Energy of a labeling: `constant + Σ_u f_u(x_u) + Σ_uv f_uv(x_u, x_v)`.
pub fn evaluate(instance: &EnergyInstance, x: &Labeling) -> Result<ExtendedCost> {
    instance.check_labeling(x)?;
    let unary = instance.unary.iter().enumerate().map(|(u, t)| t[x[u]]);
    let pairwise = instance.pairwise.iter().map(|(e, t)| t.get(x[e.u()], x[e.v()]));
    ExtendedCost::checked_sum(std::iter::once(Finite(instance.constant)).chain(unary).chain(pairwise))
}

fn abs_sum(mut costs: impl Iterator<Item = i64>) -> Result<i64> {
    costs.try_fold(0i64, |acc, c| {
        let a = c.checked_abs().ok_or(Error::Overflow)?;
        acc.checked_add(a).ok_or(Error::Overflow)
    })
}

fn big_m_of_finite(instance: &EnergyInstance) -> Result<i64> {
    let s = abs_sum(instance.all_costs().filter_map(ExtendedCost::finite))?;
    let c = instance.constant.checked_abs().ok_or(Error::Overflow)?;
    s.checked_add(1).and_then(|s| s.checked_add(c)).ok_or(Error::Overflow)
}

/// `Σ|f_u(a)| + Σ|f_uv(a,b)| + 1 + |constant|`, strictly larger than the
/// absolute energy of every labeling. Rejects instances with `+INF` entries.
pub fn big_m(instance: &EnergyInstance) -> Result<i64> {
    if instance.has_infinite() {
        return Err(Error::InfiniteEntry);
    }
    big_m_of_finite(instance)
}

/// Big-M computed over the finite entries only; used where `+INF` must be
/// simulated by a finite number.
pub fn big_m_finite_part(instance: &EnergyInstance) -> Result<i64> {
    big_m_of_finite(instance)
}

/// Replaces every `+INF` entry by the big-M of the finite entries.
pub fn materialize_infinities(instance: &EnergyInstance) -> Result<EnergyInstance> {
    if !instance.has_infinite() {
        return Ok(instance.clone());
    }
    let m = Finite(big_m_of_finite(instance)?);
    let fix = |c: ExtendedCost| if c.is_infinite() { m } else { c };
    Ok(EnergyInstance {
        label_counts: instance.label_counts.clone(),
        unary: instance.unary.iter().map(|t| t.iter().map(|&c| fix(c)).collect()).collect(),
        pairwise: instance.pairwise.iter().map(|(e, t)| (*e, t.map(fix))).collect(),
        constant: instance.constant,
    })
}

/// Mutable staging area for an [`EnergyInstance`]; invariants are checked
/// by [`InstanceBuilder::build`].
#[derive(Debug, Clone)]
pub struct InstanceBuilder {
    label_counts: Vec<usize>,
    unary: Vec<Vec<ExtendedCost>>,
    pairwise: BTreeMap<Edge, CostTable>,
    constant: i64,
}

impl InstanceBuilder {
    /// All unary tables start at zero, no edges, constant 0.
    pub fn new(label_counts: Vec<usize>) -> Self {
        let unary = label_counts.iter().map(|&k| vec![Finite(0); k]).collect();
        InstanceBuilder { label_counts, unary, pairwise: BTreeMap::new(), constant: 0 }
    }

    pub fn num_nodes(&self) -> usize {
        self.label_counts.len()
    }

    pub fn add_node(&mut self, labels: usize) -> NodeId {
        self.label_counts.push(labels);
        self.unary.push(vec![Finite(0); labels]);
        self.label_counts.len() - 1
    }

    pub fn set_unary(&mut self, u: NodeId, costs: Vec<ExtendedCost>) -> &mut Self {
        self.unary[u] = costs;
        self
    }

    /// Sets `f_uv`, with `table` indexed `[x_u][x_v]` in the given
    /// orientation. Replaces any existing table on the pair.
    pub fn set_pairwise(&mut self, u: NodeId, v: NodeId, table: CostTable) -> &mut Self {
        let t = if u <= v { table } else { table.transpose() };
        self.pairwise.insert(Edge::new(u, v), t);
        self
    }

    pub fn remove_edge(&mut self, e: Edge) -> Option<CostTable> {
        self.pairwise.remove(&e)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.pairwise.contains_key(&e)
    }

    pub fn set_constant(&mut self, c: i64) -> &mut Self {
        self.constant = c;
        self
    }

    pub fn build(&self) -> Result<EnergyInstance> {
        let n = self.label_counts.len();
        for (u, (&k, unary)) in self.label_counts.iter().zip(&self.unary).enumerate() {
            if k == 0 {
                return Err(Error::InvalidInstance(format!("node {u} has no labels")));
            }
            if unary.len() != k {
                return Err(Error::InvalidInstance(format!(
                    "unary table of node {u} has {} entries, expected {k}",
                    unary.len()
                )));
            }
            if unary.iter().all(|c| c.is_infinite()) {
                return Err(Error::InvalidInstance(format!("node {u} has no label with finite unary cost")));
            }
        }
        for (e, t) in &self.pairwise {
            if e.u() == e.v() {
                return Err(Error::InvalidInstance(format!("self-loop on node {}", e.u())));
            }
            if e.v() >= n {
                return Err(Error::InvalidInstance(format!("edge {e} references a missing node")));
            }
            let (ku, kv) = (self.label_counts[e.u()], self.label_counts[e.v()]);
            if t.rows() != ku || t.cols() != kv {
                return Err(Error::InvalidInstance(format!(
                    "table on edge {e} is {}x{}, expected {ku}x{kv}",
                    t.rows(),
                    t.cols()
                )));
            }
        }
        Ok(EnergyInstance {
            label_counts: self.label_counts.clone(),
            unary: self.unary.clone(),
            pairwise: self.pairwise.clone(),
            constant: self.constant,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_node(costs: [ExtendedCost; 2]) -> EnergyInstance {
        let mut b = EnergyInstance::builder(vec![2]);
        b.set_unary(0, costs.to_vec());
        b.build().unwrap()
    }

    fn anti_ferro() -> EnergyInstance {
        let mut b = EnergyInstance::builder(vec![2, 2]);
        b.set_pairwise(0, 1, CostTable::from_rows(&[[0, 1], [1, 0]]));
        b.build().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let i = one_node([Finite(0), Finite(5)]);
        assert_eq!(evaluate(&i, &Labeling::new(vec![0])).unwrap(), Finite(0));
        assert_eq!(evaluate(&anti_ferro(), &Labeling::new(vec![0, 1])).unwrap(), Finite(1));

        let mut b = anti_ferro().to_builder();
        b.set_pairwise(0, 1, CostTable::relation(2, 2, &[(0, 0)]));
        let i = b.build().unwrap();
        assert_eq!(evaluate(&i, &Labeling::new(vec![1, 0])).unwrap(), Infinite);
    }

    #[test]
    fn evaluate_rejects_mismatch() {
        let i = anti_ferro();
        assert!(matches!(evaluate(&i, &Labeling::new(vec![0])), Err(Error::LabelingLength { .. })));
        assert!(matches!(evaluate(&i, &Labeling::new(vec![0, 2])), Err(Error::LabelOutOfRange { .. })));
    }

    #[test]
    fn evaluate_reports_overflow() {
        let mut b = EnergyInstance::builder(vec![1, 1]);
        b.set_unary(0, vec![Finite(i64::MAX)]).set_unary(1, vec![Finite(1)]);
        assert_eq!(evaluate(&b.build().unwrap(), &Labeling::zeros(2)), Err(Error::Overflow));
    }

    #[test]
    fn big_m_examples() {
        assert_eq!(big_m(&EnergyInstance::builder(vec![]).build().unwrap()).unwrap(), 1);
        assert_eq!(big_m(&one_node([Finite(0), Finite(5)])).unwrap(), 6);
        // unary magnitudes 3, pairwise magnitudes 4
        let mut b = EnergyInstance::builder(vec![2, 2]);
        b.set_unary(0, vec![Finite(-1), Finite(2)]);
        b.set_pairwise(0, 1, CostTable::from_rows(&[[1, -1], [0, 2]]));
        assert_eq!(big_m(&b.build().unwrap()).unwrap(), 8);
        assert_eq!(big_m(&one_node([Finite(0), Infinite])), Err(Error::InfiniteEntry));
    }

    #[test]
    fn materialize_examples() {
        let plain = anti_ferro();
        assert_eq!(materialize_infinities(&plain).unwrap(), plain);
        let m = materialize_infinities(&one_node([Finite(0), Infinite])).unwrap();
        assert_eq!(m.unary(0), &[Finite(0), Finite(1)]);
    }

    #[test]
    fn build_rejects_bad_instances() {
        let mut b = EnergyInstance::builder(vec![2, 2]);
        b.set_pairwise(0, 0, CostTable::filled(2, 2, Finite(0)));
        assert!(b.build().is_err());

        let mut b = EnergyInstance::builder(vec![2, 3]);
        b.set_pairwise(0, 1, CostTable::filled(2, 2, Finite(0)));
        assert!(b.build().is_err());

        let mut b = EnergyInstance::builder(vec![2]);
        b.set_unary(0, vec![Infinite, Infinite]);
        assert!(b.build().is_err());

        assert!(EnergyInstance::builder(vec![0]).build().is_err());
    }

    #[test]
    fn reversed_orientation_is_transposed() {
        let mut b = EnergyInstance::builder(vec![2, 3]);
        b.set_pairwise(1, 0, CostTable::from_rows(&[[1, 2], [3, 4], [5, 6]]));
        let i = b.build().unwrap();
        assert_eq!(i.pair_cost(0, 1, 1, 2), Some(Finite(6)));
        assert_eq!(i.pair_cost(1, 0, 2, 1), Some(Finite(6)));
        assert_eq!(i.pair_cost(1, 0, 0, 1), Some(Finite(2)));
    }
}
