use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{orientation, Drawing, Point, Rational};
use crate::error::{Error, Result};
use crate::instance::{Edge, EnergyInstance, NodeId};

/// A proper crossing between two non-adjacent edges, with `edge_a < edge_b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub edge_a: Edge,
    pub edge_b: Edge,
    pub point: Point,
}

/// Position of `p` along the line through `a` and `b`, in units of `b - a`.
fn line_param(a: &Point, b: &Point, p: &Point) -> Rational {
    let ab = b - a;
    (p - a).dot(&ab) / ab.norm_sq()
}

/// The unique point interior to both open segments `(p1, p2)` and
/// `(p3, p4)`, if any.
///
/// Segments that only touch (at an endpoint or a T-junction) and disjoint
/// segments yield `None`. Collinear segments sharing more than a point are
/// an error.
pub fn segment_intersection(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Result<Option<Point>> {
    if p1 == p2 || p3 == p4 {
        return Err(Error::DegenerateSegment);
    }
    let o1 = orientation(p1, p2, p3);
    let o2 = orientation(p1, p2, p4);
    let o3 = orientation(p3, p4, p1);
    let o4 = orientation(p3, p4, p2);

    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        let t3 = line_param(p1, p2, p3);
        let t4 = line_param(p1, p2, p4);
        let (lo, hi) = if t3 < t4 { (t3, t4) } else { (t4, t3) };
        let zero = Rational::zero();
        let one = Rational::one();
        let overlap_lo = if lo > zero { lo } else { zero };
        let overlap_hi = if hi < one { hi } else { one };
        return if overlap_lo < overlap_hi { Err(Error::CollinearOverlap) } else { Ok(None) };
    }

    let proper = o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o1 != o2
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
        && o3 != o4;
    if !proper {
        return Ok(None);
    }
    let d12 = p2 - p1;
    let d34 = p4 - p3;
    let t = (p3 - p1).cross(&d34) / d12.cross(&d34);
    Ok(Some(p1 + &d12.scale(&t)))
}

fn segment(d: &Drawing, e: Edge) -> Result<(&Point, &Point)> {
    Ok((d.point(e.u())?, d.point(e.v())?))
}

/// All proper crossings between non-adjacent edges, ordered by
/// `(edge_a, edge_b)`.
pub fn list_crossings(instance: &EnergyInstance, d: &Drawing) -> Result<Vec<Crossing>> {
    d.check_covers(instance)?;
    let edges = instance.edge_list();
    let mut out = Vec::new();
    for (i, &ea) in edges.iter().enumerate() {
        let (a1, a2) = segment(d, ea)?;
        for &eb in &edges[i + 1..] {
            if ea.shares_endpoint(eb) {
                continue;
            }
            let (b1, b2) = segment(d, eb)?;
            if let Some(point) = segment_intersection(a1, a2, b1, b2)? {
                out.push(Crossing { edge_a: ea, edge_b: eb, point });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    MissingCoordinate(NodeId),
    CoincidentNodes(NodeId, NodeId),
    NodeOnEdge { node: NodeId, edge: Edge },
    CollinearOverlap(Edge, Edge),
    ConcurrentEdges { point: Point, edges: Vec<Edge> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingCoordinate(u) => write!(f, "node {u} has no coordinate"),
            Violation::CoincidentNodes(a, b) => write!(f, "nodes {a} and {b} share a point"),
            Violation::NodeOnEdge { node, edge } => write!(f, "node {node} lies inside edge {edge}"),
            Violation::CollinearOverlap(a, b) => write!(f, "edges {a} and {b} overlap"),
            Violation::ConcurrentEdges { point, edges } => {
                let list: Vec<String> = edges.iter().map(Edge::to_string).collect();
                write!(f, "edges {} meet at {point}", list.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GeneralPositionReport {
    pub violations: Vec<Violation>,
}

impl GeneralPositionReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            return Ok(());
        }
        let list: Vec<String> = self.violations.iter().map(Violation::to_string).collect();
        Err(Error::GeneralPosition(list.join("; ")))
    }
}

/// Checks that nodes are distinct, no node lies inside a non-incident edge,
/// no two edges overlap and no three edges pass through a common interior
/// point.
pub fn validate_general_position(instance: &EnergyInstance, d: &Drawing) -> GeneralPositionReport {
    let mut violations = Vec::new();
    let n = instance.num_nodes();
    if d.len() < n {
        violations.extend((d.len()..n).map(Violation::MissingCoordinate));
        return GeneralPositionReport { violations };
    }
    let pts = &d.points()[..n];
    for a in 0..n {
        for b in a + 1..n {
            if pts[a] == pts[b] {
                violations.push(Violation::CoincidentNodes(a, b));
            }
        }
    }
    let edges: Vec<Edge> = instance.edge_list().into_iter().filter(|e| pts[e.u()] != pts[e.v()]).collect();
    for &e in &edges {
        let (a, b) = (&pts[e.u()], &pts[e.v()]);
        for (w, p) in pts.iter().enumerate() {
            if e.contains(w) || p == a || p == b {
                continue;
            }
            if orientation(a, b, p) == Ordering::Equal {
                let t = line_param(a, b, p);
                if t.is_positive() && t < Rational::one() {
                    violations.push(Violation::NodeOnEdge { node: w, edge: e });
                }
            }
        }
    }
    let mut meeting: BTreeMap<Point, BTreeSet<Edge>> = BTreeMap::new();
    for (i, &ea) in edges.iter().enumerate() {
        for &eb in &edges[i + 1..] {
            match segment_intersection(&pts[ea.u()], &pts[ea.v()], &pts[eb.u()], &pts[eb.v()]) {
                Ok(Some(p)) => {
                    let set = meeting.entry(p).or_default();
                    set.insert(ea);
                    set.insert(eb);
                }
                Ok(None) => {}
                Err(_) => violations.push(Violation::CollinearOverlap(ea, eb)),
            }
        }
    }
    for (point, set) in meeting {
        if set.len() >= 3 {
            violations.push(Violation::ConcurrentEdges { point, edges: set.into_iter().collect() });
        }
    }
    GeneralPositionReport { violations }
}

/// Largest power of two `r = 2^k` (`k` may be negative) with `r² ≤ q`,
/// for `q > 0`. Dyadic radii keep the coordinates of later placements
/// small.
fn dyadic_root_floor(q: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut r = Rational::one();
    if &r * &r <= *q {
        while &(&r * &two) * &(&r * &two) <= *q {
            r = &r * &two;
        }
    } else {
        while &r * &r > *q {
            r = &r / &two;
        }
    }
    r
}

/// A radius `r > 0` such that the open disk of radius `r` around `p` meets
/// no node, no edge outside `exclude` and no crossing point other than `p`.
///
/// The value is the largest power of two not exceeding half the minimum
/// distance, so it lies between a quarter and a half of that distance.
pub fn free_radius(instance: &EnergyInstance, d: &Drawing, p: &Point, exclude: &[Edge]) -> Result<Rational> {
    d.check_covers(instance)?;
    free_radius_among(instance, d, p, exclude, &list_crossings(instance, d)?)
}

/// [`free_radius`] with the crossings of `(instance, d)` already listed.
pub(crate) fn free_radius_among(
    instance: &EnergyInstance,
    d: &Drawing,
    p: &Point,
    exclude: &[Edge],
    crossings: &[Crossing],
) -> Result<Rational> {
    if d.is_empty() {
        return Err(Error::EmptyDrawing);
    }
    d.check_covers(instance)?;
    let mut best: Option<Rational> = None;
    let mut consider = |dist_sq: Rational, what: &dyn Fn() -> String| -> Result<()> {
        if dist_sq.is_zero() {
            return Err(Error::PointOnElement(what()));
        }
        if best.as_ref().is_none_or(|b| &dist_sq < b) {
            best = Some(dist_sq);
        }
        Ok(())
    };
    for (u, q) in d.points().iter().enumerate() {
        consider(p.dist_sq(q), &|| format!("node {u}"))?;
    }
    for e in instance.edge_list() {
        if exclude.contains(&e) {
            continue;
        }
        let (a, b) = segment(d, e)?;
        consider(p.dist_sq_to_segment(a, b), &|| format!("edge {e}"))?;
    }
    for c in crossings {
        if &c.point != p {
            consider(p.dist_sq(&c.point), &|| format!("crossing of {} and {}", c.edge_a, c.edge_b))?;
        }
    }
    let min_sq = best.ok_or(Error::EmptyDrawing)?;
    Ok(dyadic_root_floor(&(min_sq / Rational::from_integer(4.into()))))
}
