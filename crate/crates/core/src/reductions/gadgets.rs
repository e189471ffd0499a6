//! Zero/infinity gadgets for planarization.
//!
//! Every node is a 3-label node. A "binary" node is simulated by an
//! infinite unary cost on label 2. Allowed label pairs cost 0 and all other
//! pairs cost `+INF`.

use crate::cost::{ExtendedCost, Finite, Infinite};
use crate::instance::{CostTable, EnergyInstance, InstanceBuilder, NodeId};

pub const LABELS: usize = 3;

/// Unary table of a simulated 2-label node.
pub fn binary_unary() -> Vec<ExtendedCost> {
    vec![Finite(0), Finite(0), Infinite]
}

pub fn equality_table() -> CostTable {
    CostTable::relation(LABELS, LABELS, &[(0, 0), (1, 1), (2, 2)])
}

/// Root labels `a, b, c` = 0, 1, 2; first child `d, e` = 0, 1; second child
/// `f, g` = 0, 1. Finite joint states: `a ↔ (d, f)`, `b ↔ (d|e, g)`,
/// `c ↔ (e, f)`.
pub const SPLIT_ROOT_FIRST: [(usize, usize); 4] = [(0, 0), (1, 0), (1, 1), (2, 1)];
pub const SPLIT_ROOT_SECOND: [(usize, usize); 3] = [(0, 0), (1, 1), (2, 0)];

/// Diamond with corners `tl, tr, br, bl` and internal nodes `m1, m2`.
/// Finite states are exactly those with `br = tl` and `bl = tr`; then
/// `m1 = 2` if `tl = 1` else `tr`, and `m2 = 0` if `tl = 0` else `1 + tr`.
pub const UC_TL_M1: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 2)];
pub const UC_SIDE_M1: [(usize, usize); 4] = [(0, 0), (1, 1), (0, 2), (1, 2)];
pub const UC_SIDE_M2: [(usize, usize); 4] = [(0, 0), (1, 0), (0, 1), (1, 2)];
pub const UC_BR_M2: [(usize, usize); 3] = [(0, 0), (1, 1), (1, 2)];
pub const UC_M1_M2: [(usize, usize); 4] = [(0, 0), (1, 0), (2, 1), (2, 2)];

fn relation(allowed: &[(usize, usize)]) -> CostTable {
    CostTable::relation(LABELS, LABELS, allowed)
}

/// Wires `root` to its two binary channels.
pub fn wire_split(b: &mut InstanceBuilder, root: NodeId, first: NodeId, second: NodeId) {
    b.set_unary(first, binary_unary());
    b.set_unary(second, binary_unary());
    b.set_pairwise(root, first, relation(&SPLIT_ROOT_FIRST));
    b.set_pairwise(root, second, relation(&SPLIT_ROOT_SECOND));
}

/// Wires an uncross-copy diamond between existing corner nodes and two
/// internal nodes `m1`, `m2`.
pub fn wire_uncross_copy(b: &mut InstanceBuilder, corners: [NodeId; 4], m1: NodeId, m2: NodeId) {
    let [tl, tr, br, bl] = corners;
    for c in corners {
        b.set_unary(c, binary_unary());
    }
    b.set_pairwise(tl, m1, relation(&UC_TL_M1));
    b.set_pairwise(tr, m1, relation(&UC_SIDE_M1));
    b.set_pairwise(bl, m1, relation(&UC_SIDE_M1));
    b.set_pairwise(tr, m2, relation(&UC_SIDE_M2));
    b.set_pairwise(bl, m2, relation(&UC_SIDE_M2));
    b.set_pairwise(br, m2, relation(&UC_BR_M2));
    b.set_pairwise(m1, m2, relation(&UC_M1_M2));
}

/// A gadget as a standalone instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub instance: EnergyInstance,
    pub boundary: Vec<NodeId>,
    pub internal: Vec<NodeId>,
}

/// Nodes: 0 = root (3 labels), 1 = first channel, 2 = second channel.
pub fn split_gadget() -> GadgetInstance {
    let mut b = EnergyInstance::builder(vec![LABELS; 3]);
    wire_split(&mut b, 0, 1, 2);
    GadgetInstance { instance: b.build().expect("valid gadget"), boundary: vec![0, 1, 2], internal: vec![] }
}

/// Nodes: 0 = top-left, 1 = top-right, 2 = bottom-right, 3 = bottom-left,
/// 4 and 5 = internal.
pub fn uncross_copy_gadget() -> GadgetInstance {
    let mut b = EnergyInstance::builder(vec![LABELS; 6]);
    wire_uncross_copy(&mut b, [0, 1, 2, 3], 4, 5);
    GadgetInstance { instance: b.build().expect("valid gadget"), boundary: vec![0, 1, 2, 3], internal: vec![4, 5] }
}
