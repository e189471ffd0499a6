//! Crossing removal for 3-label instances drawn with straight lines.
//!
//! A crossing of `(u, v)` and `(p, q)` is replaced inside a small disk
//! around the crossing point. The interaction of `(u, v)` moves to a copy
//! `v'` on `u`'s side, `v` gets an equal copy `w` on its own side, and the
//! value of `v'` travels to `w` over two binary channels (SPLIT at both
//! ends). The same is done for `(p, q)` with `q'` and `z`. The four binary
//! channels meet in a 2×2 grid of UNCROSSCOPY diamonds.
//!
//! Template coordinates `(s, t)` map to `X + s·D1 + t·D2`, with `X` the
//! crossing point and `D1`, `D2` short vectors along the two edges:
//!
//! ```text
//!                 z (0,1)
//!          d1 (-1/3,2/3)   d2 (1/3,2/3)
//!  a2 (-2/3,1/3)   hm_hi (0,1/3)   b2 (2/3,1/3)
//!  v' (-1,0)  vm_l (-1/3,0)   vm_r (1/3,0)  w (1,0)
//!  a1 (-2/3,-1/3)  hm_lo (0,-1/3)  b1 (2/3,-1/3)
//!          c1 (-1/3,-2/3)  c2 (1/3,-2/3)
//!                 q' (0,-1)
//! ```
//!
//! Diamonds are centred at `(±1/3, ±1/3)` with internal nodes at
//! `centre ∓ (1/9, 0)`.

use num::BigInt;

use super::gadgets::{equality_table, wire_split, wire_uncross_copy, LABELS};
use super::trace::{CrossingRecord, ReductionKind, ReductionTrace};
use crate::error::{Error, Result};
use crate::geometry::{
    free_radius_among, list_crossings, validate_general_position, Crossing, Drawing, Point, Rational,
};
use crate::instance::{big_m_finite_part, evaluate, Edge, EnergyInstance, InstanceBuilder, Labeling, NodeId};

/// Auxiliary nodes added per replaced crossing.
pub const AUX_PER_CROSSING: usize = 24;

/// The count reported for the original construction, kept for comparison.
pub const REFERENCE_AUX_PER_CROSSING: usize = 22;

fn r(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Template positions in creation order.
fn template() -> Vec<(Rational, Rational)> {
    let third = |k: i64| r(k, 3);
    let mut t = vec![
        (r(-1, 1), r(0, 1)),    // v'
        (r(1, 1), r(0, 1)),     // w
        (r(0, 1), r(-1, 1)),    // q'
        (r(0, 1), r(1, 1)),     // z
        (third(-2), third(-1)), // a1
        (third(-2), third(1)),  // a2
        (third(2), third(-1)),  // b1
        (third(2), third(1)),   // b2
        (third(-1), third(-2)), // c1
        (third(1), third(-2)),  // c2
        (third(-1), third(2)),  // d1
        (third(1), third(2)),   // d2
        (r(0, 1), third(-1)),   // hm_lo
        (r(0, 1), third(1)),    // hm_hi
        (third(-1), r(0, 1)),   // vm_l
        (third(1), r(0, 1)),    // vm_r
    ];
    for (cs, ct) in DIAMOND_CENTRES {
        let (cs, ct) = (third(cs), third(ct));
        t.push((&cs - r(1, 9), ct.clone()));
        t.push((&cs + r(1, 9), ct));
    }
    t
}

/// Diamond centres in thirds, in the order their internal nodes are made.
const DIAMOND_CENTRES: [(i64, i64); 4] = [(-1, -1), (1, -1), (-1, 1), (1, 1)];

/// Applies the structural part of one crossing replacement to `b` and
/// returns the new node ids in creation order.
fn apply_crossing(b: &mut InstanceBuilder, edge_a: Edge, edge_b: Edge) -> Result<Vec<NodeId>> {
    let (u, v) = (edge_a.u(), edge_a.v());
    let (p, q) = (edge_b.u(), edge_b.v());
    let table_a = b.remove_edge(edge_a).ok_or_else(|| Error::Placement(format!("edge {edge_a} is not present")))?;
    let table_b = b.remove_edge(edge_b).ok_or_else(|| Error::Placement(format!("edge {edge_b} is not present")))?;

    let ids: Vec<NodeId> = (0..AUX_PER_CROSSING).map(|_| b.add_node(LABELS)).collect();
    let [v1, w, q1, z, a1, a2, b1, b2, c1, c2, d1, d2, hm_lo, hm_hi, vm_l, vm_r, rest @ ..] = ids.as_slice() else {
        unreachable!("fixed node count");
    };
    // Rows of the stored tables index the smaller endpoint, u and p.
    b.set_pairwise(u, *v1, table_a);
    b.set_pairwise(v, *w, equality_table());
    b.set_pairwise(p, *q1, table_b);
    b.set_pairwise(q, *z, equality_table());

    wire_split(b, *v1, *a1, *a2);
    wire_split(b, *w, *b1, *b2);
    wire_split(b, *q1, *c1, *c2);
    wire_split(b, *z, *d1, *d2);

    // Corners: [left, top, right, bottom]; left→right carries the first
    // edge's channel, bottom→top the second's.
    let diamonds =
        [[*a1, *vm_l, *hm_lo, *c1], [*hm_lo, *vm_r, *b1, *c2], [*a2, *d1, *hm_hi, *vm_l], [*hm_hi, *d2, *b2, *vm_r]];
    for (corners, internal) in diamonds.iter().zip(rest.chunks(2)) {
        wire_uncross_copy(b, *corners, internal[0], internal[1]);
    }
    Ok(ids)
}

fn direction(from: &Point, to: &Point, length: &Rational) -> Point {
    let d = to - from;
    let scale = length / d.norm_l1();
    d.scale(&scale)
}

/// One replacement step: `crossings` are the current crossings of
/// `(i, d)`, already known to be in general position. Also returns the
/// crossings of the result.
fn replace_step(
    i: &EnergyInstance,
    d: &Drawing,
    trace: &ReductionTrace,
    c: &Crossing,
    crossings: &[Crossing],
) -> Result<(EnergyInstance, Drawing, ReductionTrace, Vec<Crossing>)> {
    let radius = free_radius_among(i, d, &c.point, &[c.edge_a, c.edge_b], crossings)?;
    let quarter = &radius / r(4, 1);
    let d1 = direction(d.point(c.edge_a.u())?, d.point(c.edge_a.v())?, &quarter);
    let d2 = direction(d.point(c.edge_b.u())?, d.point(c.edge_b.v())?, &quarter);

    let mut b = i.to_builder();
    let ids = apply_crossing(&mut b, c.edge_a, c.edge_b)?;
    let out = b.build()?;

    let mut drawing = d.clone();
    let mut positions = Vec::with_capacity(ids.len());
    for (s, t) in template() {
        let p = &(&c.point + &d1.scale(&s)) + &d2.scale(&t);
        drawing.push(p.clone());
        positions.push(p);
    }

    let report = validate_general_position(&out, &drawing);
    if !report.is_ok() {
        return Err(Error::Placement(format!("template violates general position: {:?}", report.violations)));
    }
    let after = list_crossings(&out, &drawing)?;
    if after.len() + 1 != crossings.len() {
        return Err(Error::Placement(format!("crossing count went from {} to {}", crossings.len(), after.len())));
    }

    let mut t = trace.clone();
    t.aux_nodes.extend(&ids);
    t.next_id = out.num_nodes();
    t.crossings.push(CrossingRecord {
        edge_a: c.edge_a,
        edge_b: c.edge_b,
        point: c.point.clone(),
        aux_nodes: ids,
        positions,
    });
    Ok((out, drawing, t, after))
}

fn require_three_labels(i: &EnergyInstance) -> Result<()> {
    match i.label_counts().iter().position(|&k| k != LABELS) {
        Some(u) => Err(Error::LabelCountMismatch { node: u, expected: LABELS, got: i.label_count(u) }),
        None => Ok(()),
    }
}

/// Replaces crossing `c` of `(i, d)`. The trace gains one record and the
/// auxiliary ids; the result has exactly one crossing fewer.
pub fn replace_crossing(
    i: &EnergyInstance,
    d: &Drawing,
    trace: &ReductionTrace,
    c: &Crossing,
) -> Result<(EnergyInstance, Drawing, ReductionTrace)> {
    require_three_labels(i)?;
    validate_general_position(i, d).into_result()?;
    let crossings = list_crossings(i, d)?;
    if !crossings.contains(c) {
        return Err(Error::NotACrossing((c.edge_a, c.edge_b)));
    }
    replace_step(i, d, trace, c, &crossings).map(|(i, d, t, _)| (i, d, t))
}

/// Removes every crossing, always replacing the first one in edge order.
pub fn planarize(i: &EnergyInstance, d: &Drawing) -> Result<(EnergyInstance, Drawing, ReductionTrace)> {
    require_three_labels(i)?;
    d.check_covers(i)?;
    validate_general_position(i, d).into_result()?;

    let mut trace = ReductionTrace::new(ReductionKind::Planarize, i.num_nodes(), big_m_finite_part(i)?);
    let mut current = (i.clone(), d.clone());
    let mut crossings = list_crossings(&current.0, &current.1)?;
    let bound = crossings.len() + 1;
    let mut iterations = 0;
    while let Some(first) = crossings.first() {
        iterations += 1;
        if iterations > bound {
            return Err(Error::IterationBound(bound));
        }
        let (ni, nd, nt, next) = replace_step(&current.0, &current.1, &trace, first, &crossings)?;
        current = (ni, nd);
        trace = nt;
        crossings = next;
    }
    Ok((current.0, current.1, trace))
}

/// Rebuilds the planarized instance from the original and the trace alone.
pub fn replay_planarize(original: &EnergyInstance, trace: &ReductionTrace) -> Result<EnergyInstance> {
    trace.expect_kind(&ReductionKind::Planarize)?;
    if trace.num_original() != original.num_nodes() {
        return Err(Error::TraceMismatch(format!(
            "trace covers {} original nodes, instance has {}",
            trace.num_original(),
            original.num_nodes()
        )));
    }
    let mut b = original.to_builder();
    for rec in &trace.crossings {
        let ids = apply_crossing(&mut b, rec.edge_a, rec.edge_b)
            .map_err(|e| Error::TraceMismatch(format!("cannot replay crossing: {e}")))?;
        if ids != rec.aux_nodes {
            return Err(Error::TraceMismatch("auxiliary ids differ from the recorded ones".into()));
        }
    }
    let target = b.build()?;
    trace.check_partition(target.num_nodes())?;
    Ok(target)
}

/// Restriction of `y` to the original nodes when its energy is finite and
/// below `M`, otherwise the all-zeros labeling.
pub fn planar_sigma(original: &EnergyInstance, trace: &ReductionTrace, y: &Labeling) -> Result<Labeling> {
    let target = replay_planarize(original, trace)?;
    let energy = evaluate(&target, y)?;
    if energy.cmp_finite(trace.big_m).is_lt() {
        Ok(y.restrict(original.num_nodes()))
    } else {
        Ok(Labeling::zeros(original.num_nodes()))
    }
}
