//! Seeded instance families for tests, benchmarks and the `gen` command.
//!
//! Every generator takes the RNG explicitly; [`rng`] builds the one used by
//! the command line so a seed always reproduces the same corpus.

use std::fmt;
use std::str::FromStr;

use num::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cost::{ExtendedCost, Finite, Infinite};
use crate::error::{Error, Result};
use crate::geometry::{list_crossings, validate_general_position, Drawing, Point, Rational};
use crate::instance::{CostTable, EnergyInstance, NodeId};
use crate::reductions::{Clause, Literal, W3SatTriv};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    W3sat,
    Potts,
    Submodular,
    Random3Label,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::W3sat, Family::Potts, Family::Submodular, Family::Random3Label];

    pub fn name(self) -> &'static str {
        match self {
            Family::W3sat => "w3sat",
            Family::Potts => "potts",
            Family::Submodular => "submodular",
            Family::Random3Label => "random3label",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("unknown family `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Edges of a random simple graph, each pair kept with probability `p`.
pub fn random_edges<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<(NodeId, NodeId)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                out.push((u, v));
            }
        }
    }
    out
}

/// A random formula with `3..=max_vars` variables, up to `max_clauses`
/// clauses and weights in `0..=max_weight`.
pub fn random_w3sat<R: Rng>(rng: &mut R, max_vars: usize, max_clauses: usize, max_weight: i64) -> W3SatTriv {
    let n = rng.gen_range(3..=max_vars.max(3));
    random_w3sat_with_vars(rng, n, max_clauses, max_weight)
}

/// Like [`random_w3sat`] with exactly `n ≥ 3` variables.
pub fn random_w3sat_with_vars<R: Rng>(rng: &mut R, n: usize, max_clauses: usize, max_weight: i64) -> W3SatTriv {
    let m = rng.gen_range(0..=max_clauses);
    let vars: Vec<usize> = (0..n).collect();
    let clauses = (0..m)
        .map(|_| {
            let picked: Vec<usize> = vars.choose_multiple(rng, 3).copied().collect();
            let lits = [0, 1, 2].map(|k| Literal { var: picked[k], negated: rng.gen_bool(0.5) });
            Clause::new(lits).expect("distinct variables")
        })
        .collect();
    let weights = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    W3SatTriv::new(n, clauses, weights).expect("valid formula")
}

/// Potts interactions with weights in `1..=max_weight` and non-negative
/// unaries, on a random graph.
pub fn random_potts<R: Rng>(rng: &mut R, n: usize, k: usize, max_weight: i64) -> EnergyInstance {
    let mut b = EnergyInstance::builder(vec![k; n]);
    for u in 0..n {
        b.set_unary(u, (0..k).map(|_| Finite(rng.gen_range(0..=2 * max_weight))).collect());
    }
    for (u, v) in random_edges(rng, n, 0.5) {
        let w = rng.gen_range(1..=max_weight);
        b.set_pairwise(u, v, CostTable::from_fn(k, k, |a, c| Finite(if a == c { 0 } else { w })));
    }
    b.build().expect("valid instance")
}

/// Binary instance whose every table satisfies
/// `f(0,1) + f(1,0) ≥ f(0,0) + f(1,1)`.
pub fn random_submodular<R: Rng>(rng: &mut R, n: usize, max_abs: i64) -> EnergyInstance {
    let mut b = EnergyInstance::builder(vec![2; n]);
    for u in 0..n {
        b.set_unary(u, vec![Finite(rng.gen_range(-max_abs..=max_abs)), Finite(rng.gen_range(-max_abs..=max_abs))]);
    }
    for (u, v) in random_edges(rng, n, 0.5) {
        let a = rng.gen_range(-max_abs..=max_abs);
        let d = rng.gen_range(-max_abs..=max_abs);
        let bb = rng.gen_range(-max_abs..=max_abs);
        let c = a + d - bb + rng.gen_range(0..=max_abs);
        b.set_pairwise(u, v, CostTable::from_rows(&[[a, bb], [c, d]]));
    }
    b.build().expect("valid instance")
}

/// Arbitrary finite costs in `-max_abs..=max_abs` on a random graph.
pub fn random_finite<R: Rng>(rng: &mut R, labels: Vec<usize>, p: f64, max_abs: i64) -> EnergyInstance {
    let n = labels.len();
    let mut b = EnergyInstance::builder(labels.clone());
    for (u, &k) in labels.iter().enumerate() {
        b.set_unary(u, (0..k).map(|_| Finite(rng.gen_range(-max_abs..=max_abs))).collect());
    }
    for (u, v) in random_edges(rng, n, p) {
        b.set_pairwise(
            u,
            v,
            CostTable::from_fn(labels[u], labels[v], |_, _| Finite(rng.gen_range(-max_abs..=max_abs))),
        );
    }
    b.set_constant(rng.gen_range(-max_abs..=max_abs));
    b.build().expect("valid instance")
}

/// A random tree (or forest when `connected` is false) with arbitrary
/// finite costs.
pub fn random_forest<R: Rng>(rng: &mut R, labels: Vec<usize>, connected: bool, max_abs: i64) -> EnergyInstance {
    let n = labels.len();
    let mut b = EnergyInstance::builder(labels.clone());
    for (u, &k) in labels.iter().enumerate() {
        b.set_unary(u, (0..k).map(|_| Finite(rng.gen_range(-max_abs..=max_abs))).collect());
    }
    for v in 1..n {
        if connected || rng.gen_bool(0.7) {
            let u = rng.gen_range(0..v);
            b.set_pairwise(
                u,
                v,
                CostTable::from_fn(labels[u], labels[v], |_, _| Finite(rng.gen_range(-max_abs..=max_abs))),
            );
        }
    }
    b.build().expect("valid instance")
}

fn random_cost<R: Rng>(rng: &mut R, max_abs: i64, p_inf: f64) -> ExtendedCost {
    if rng.gen_bool(p_inf) {
        Infinite
    } else {
        Finite(rng.gen_range(-max_abs..=max_abs))
    }
}

/// Any instance the file format can hold: mixed label counts, `+INF`
/// entries and, optionally, rational coordinates.
pub fn random_any<R: Rng>(rng: &mut R, max_nodes: usize, with_drawing: bool) -> (EnergyInstance, Option<Drawing>) {
    let n = rng.gen_range(1..=max_nodes.max(1));
    let labels: Vec<usize> =
        if rng.gen_bool(0.5) { vec![rng.gen_range(1..=4); n] } else { (0..n).map(|_| rng.gen_range(1..=4)).collect() };
    let mut b = EnergyInstance::builder(labels.clone());
    for (u, &k) in labels.iter().enumerate() {
        let mut costs: Vec<ExtendedCost> = (0..k).map(|_| random_cost(rng, 1_000_000, 0.2)).collect();
        let keep = rng.gen_range(0..k);
        if costs[keep].is_infinite() {
            costs[keep] = Finite(rng.gen_range(-9..=9));
        }
        b.set_unary(u, costs);
    }
    for (u, v) in random_edges(rng, n, 0.4) {
        b.set_pairwise(u, v, CostTable::from_fn(labels[u], labels[v], |_, _| random_cost(rng, 1 << 40, 0.15)));
    }
    b.set_constant(rng.gen_range(i64::MIN / 4..=i64::MAX / 4));
    let drawing = with_drawing.then(|| {
        Drawing::new(
            (0..n)
                .map(|_| {
                    let mut r = || {
                        Rational::new(
                            BigInt::from(rng.gen_range(-1000i64..=1000)),
                            BigInt::from(rng.gen_range(1i64..=97)),
                        )
                    };
                    Point::new(r(), r())
                })
                .collect(),
        )
    });
    (b.build().expect("valid instance"), drawing)
}

/// 3-label instance on integer grid points in general position whose
/// drawing has between `min_crossings` and `max_crossings` crossings.
/// Costs are finite except for a few `+INF` pairwise entries.
pub fn random_three_label_drawn<R: Rng>(
    rng: &mut R,
    n: usize,
    min_crossings: usize,
    max_crossings: usize,
) -> Result<(EnergyInstance, Drawing)> {
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        let d = Drawing::new((0..n).map(|_| Point::from_ints(rng.gen_range(0..12), rng.gen_range(0..12))).collect());
        let mut b = EnergyInstance::builder(vec![3; n]);
        for u in 0..n {
            b.set_unary(u, (0..3).map(|_| Finite(rng.gen_range(-5..=5))).collect());
        }
        for (u, v) in random_edges(rng, n, 0.5) {
            b.set_pairwise(u, v, CostTable::from_fn(3, 3, |_, _| random_cost(rng, 5, 0.05)));
        }
        let i = b.build().expect("valid instance");
        if !validate_general_position(&i, &d).is_ok() {
            continue;
        }
        let c = list_crossings(&i, &d)?.len();
        if (min_crossings..=max_crossings).contains(&c) {
            return Ok((i, d));
        }
    }
    Err(Error::Placement(format!(
        "no {n}-node drawing with {min_crossings}..={max_crossings} crossings after {ATTEMPTS} attempts"
    )))
}
