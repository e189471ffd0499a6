//! Exhaustive checking of approximation-preserving reductions.
//!
//! For each source instance the harness enumerates every source solution
//! and every target labeling (collapsing infinite branches), then checks
//! that the reverse map lands on feasible solutions, never increases the
//! measure, and transfers performance ratios: `R1(σ(y)) ≤ 1 + α(R2(y) - 1)`
//! with `R(m) = max(m/m*, m*/m)`. All ratio arithmetic is exact.

use std::fmt;

use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};

use super::klabel::{klabel_sigma, qpbo_to_klabel};
use super::planar::{planar_sigma, planarize};
use super::trace::{ReductionKind, ReductionTrace};
use super::w3sat::{w3sat_sigma, w3sat_to_qpbo, W3SatTriv};
use crate::cost::{ExtendedCost, Finite, Infinite};
use crate::error::{Error, Result};
use crate::geometry::Drawing;
use crate::instance::{evaluate, EnergyInstance, Labeling};

/// Default cap on enumerated solutions per side and instance.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 1 << 20;

/// A minimization problem whose feasible solutions can be listed.
pub trait SourceProblem {
    type Solution: Clone + fmt::Debug;

    /// Every feasible solution.
    fn feasible_solutions(&self, limit: usize) -> Result<Vec<Self::Solution>>;

    /// The objective, `+INF` for infeasible solutions.
    fn measure(&self, s: &Self::Solution) -> Result<ExtendedCost>;
}

impl SourceProblem for W3SatTriv {
    type Solution = Vec<bool>;

    fn feasible_solutions(&self, limit: usize) -> Result<Vec<Vec<bool>>> {
        let n = self.num_vars();
        if n >= usize::BITS as usize || 1usize << n > limit {
            return Err(Error::Oracle(format!("2^{n} assignments exceed the enumeration limit {limit}")));
        }
        Ok((0..1usize << n)
            .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
            .filter(|a| self.is_feasible(a))
            .collect())
    }

    fn measure(&self, s: &Vec<bool>) -> Result<ExtendedCost> {
        Ok(W3SatTriv::measure(self, s))
    }
}

impl SourceProblem for EnergyInstance {
    type Solution = Labeling;

    fn feasible_solutions(&self, limit: usize) -> Result<Vec<Labeling>> {
        Ok(enumerate_labelings(self, limit)?.into_iter().filter(|(_, e)| e.is_finite()).map(|(y, _)| y).collect())
    }

    fn measure(&self, s: &Labeling) -> Result<ExtendedCost> {
        evaluate(self, s)
    }
}

/// Source instances for planarization carry their drawing.
#[derive(Debug, Clone)]
pub struct DrawnInstance {
    pub instance: EnergyInstance,
    pub drawing: Drawing,
}

impl SourceProblem for DrawnInstance {
    type Solution = Labeling;

    fn feasible_solutions(&self, limit: usize) -> Result<Vec<Labeling>> {
        self.instance.feasible_solutions(limit)
    }

    fn measure(&self, s: &Labeling) -> Result<ExtendedCost> {
        evaluate(&self.instance, s)
    }
}

/// A forward map π with its reverse map σ.
pub trait ApReduction {
    type Source: SourceProblem;

    fn name(&self) -> &str;

    fn forward(&self, source: &Self::Source) -> Result<(EnergyInstance, ReductionTrace)>;

    fn sigma(
        &self,
        source: &Self::Source,
        trace: &ReductionTrace,
        y: &Labeling,
    ) -> Result<<Self::Source as SourceProblem>::Solution>;
}

pub struct W3satToQpbo;

impl ApReduction for W3satToQpbo {
    type Source = W3SatTriv;

    fn name(&self) -> &str {
        "w3sat-to-qpbo"
    }

    fn forward(&self, s: &W3SatTriv) -> Result<(EnergyInstance, ReductionTrace)> {
        w3sat_to_qpbo(s)
    }

    fn sigma(&self, s: &W3SatTriv, trace: &ReductionTrace, y: &Labeling) -> Result<Vec<bool>> {
        w3sat_sigma(s, trace, y)
    }
}

pub struct QpboToKlabel {
    pub k: usize,
}

impl ApReduction for QpboToKlabel {
    type Source = EnergyInstance;

    fn name(&self) -> &str {
        "qpbo-to-klabel"
    }

    fn forward(&self, i: &EnergyInstance) -> Result<(EnergyInstance, ReductionTrace)> {
        qpbo_to_klabel(i, self.k)
    }

    fn sigma(&self, i: &EnergyInstance, trace: &ReductionTrace, y: &Labeling) -> Result<Labeling> {
        klabel_sigma(i, trace, y)
    }
}

pub struct Planarize;

impl ApReduction for Planarize {
    type Source = DrawnInstance;

    fn name(&self) -> &str {
        "planarize"
    }

    fn forward(&self, s: &DrawnInstance) -> Result<(EnergyInstance, ReductionTrace)> {
        planarize(&s.instance, &s.drawing).map(|(i, _, t)| (i, t))
    }

    fn sigma(&self, s: &DrawnInstance, trace: &ReductionTrace, y: &Labeling) -> Result<Labeling> {
        planar_sigma(&s.instance, trace, y)
    }
}

/// The identity map on energy instances.
pub struct Identity;

impl ApReduction for Identity {
    type Source = EnergyInstance;

    fn name(&self) -> &str {
        "identity"
    }

    fn forward(&self, i: &EnergyInstance) -> Result<(EnergyInstance, ReductionTrace)> {
        let m = crate::instance::big_m_finite_part(i)?;
        Ok((i.clone(), ReductionTrace::new(ReductionKind::Identity, i.num_nodes(), m)))
    }

    fn sigma(&self, _: &EnergyInstance, _: &ReductionTrace, y: &Labeling) -> Result<Labeling> {
        Ok(y.clone())
    }
}

/// All labelings of `i` with their energies, in lexicographic order. A
/// branch whose partial assignment is already infinite contributes one
/// representative (completed with zeros) instead of its whole subtree.
pub fn enumerate_labelings(i: &EnergyInstance, limit: usize) -> Result<Vec<(Labeling, ExtendedCost)>> {
    let n = i.num_nodes();
    let adj = i.adjacency();
    let mut out = Vec::new();
    let mut x = vec![0usize; n];

    fn partial_infinite(i: &EnergyInstance, adj: &[Vec<usize>], x: &[usize], u: usize) -> bool {
        i.unary(u)[x[u]].is_infinite()
            || adj[u].iter().any(|&v| v < u && i.pair_cost(u, v, x[u], x[v]).expect("edge").is_infinite())
    }

    fn rec(
        i: &EnergyInstance,
        adj: &[Vec<usize>],
        x: &mut Vec<usize>,
        u: usize,
        limit: usize,
        out: &mut Vec<(Labeling, ExtendedCost)>,
    ) -> Result<()> {
        if out.len() > limit {
            return Err(Error::Oracle(format!("more than {limit} target solutions")));
        }
        if u == x.len() {
            let y = Labeling::new(x.clone());
            let e = evaluate(i, &y)?;
            out.push((y, e));
            return Ok(());
        }
        for a in 0..i.label_count(u) {
            x[u] = a;
            if partial_infinite(i, adj, x, u) {
                let mut rep = x.clone();
                rep[u + 1..].iter_mut().for_each(|l| *l = 0);
                out.push((Labeling::new(rep), Infinite));
            } else {
                rec(i, adj, x, u + 1, limit, out)?;
            }
        }
        x[u] = 0;
        Ok(())
    }

    rec(i, &adj, &mut x, 0, limit, &mut out)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    WellFormed,
    FeasibilityPreserved,
    SigmaFeasible,
    MeasureTransfer,
    RatioTransfer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: usize,
    pub check: Check,
    pub target_solution: Option<Labeling>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub index: usize,
    pub source_optimum: Option<ExtendedCost>,
    pub target_optimum: Option<ExtendedCost>,
    pub target_solutions: usize,
    /// Set when an optimum is not strictly positive, so ratios are undefined.
    pub ratio_undefined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApReport {
    pub reduction: String,
    pub alpha: String,
    pub instances: Vec<InstanceReport>,
    pub counterexamples: Vec<Counterexample>,
}

impl ApReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn ratio_undefined_count(&self) -> usize {
        self.instances.iter().filter(|r| r.ratio_undefined).count()
    }
}

fn ratio(m: i64, opt: i64) -> BigRational {
    let (m, opt) = (BigInt::from(m), BigInt::from(opt));
    let a = BigRational::new(m.clone(), opt.clone());
    let b = BigRational::new(opt, m);
    if a > b {
        a
    } else {
        b
    }
}

fn min_measure(values: impl Iterator<Item = ExtendedCost>) -> Option<ExtendedCost> {
    values.min()
}

/// Runs all checks of `reduction` with ratio slack `alpha` over `sources`.
pub fn verify_ap_reduction<R: ApReduction>(
    reduction: &R,
    alpha: &BigRational,
    sources: &[R::Source],
    limit: usize,
) -> Result<ApReport> {
    let mut report = ApReport {
        reduction: reduction.name().to_string(),
        alpha: alpha.to_string(),
        instances: Vec::new(),
        counterexamples: Vec::new(),
    };
    for (index, source) in sources.iter().enumerate() {
        let mut fail = |check, y: Option<&Labeling>, detail: String| {
            report.counterexamples.push(Counterexample { instance: index, check, target_solution: y.cloned(), detail })
        };

        let feasible = source.feasible_solutions(limit)?;
        let m1_opt = min_measure(feasible.iter().map(|s| source.measure(s)).collect::<Result<Vec<_>>>()?.into_iter());

        let (target, trace) = match reduction.forward(source) {
            Ok(t) => t,
            Err(e) => {
                fail(Check::WellFormed, None, format!("forward map failed: {e}"));
                report.instances.push(InstanceReport {
                    index,
                    source_optimum: m1_opt,
                    target_optimum: None,
                    target_solutions: 0,
                    ratio_undefined: true,
                });
                continue;
            }
        };
        if let Err(e) = trace.check_partition(target.num_nodes()) {
            fail(Check::WellFormed, None, e.to_string());
        }

        let solutions = enumerate_labelings(&target, limit)?;
        let m2_opt = min_measure(solutions.iter().map(|(_, e)| *e));
        if m1_opt.is_some() && !m2_opt.is_some_and(ExtendedCost::is_finite) {
            fail(Check::FeasibilityPreserved, None, "source is feasible but no target labeling is finite".into());
        }

        let positive = |o: Option<ExtendedCost>| matches!(o, Some(Finite(v)) if v > 0);
        let ratio_undefined = !(positive(m1_opt) && positive(m2_opt));

        for (y, m2) in &solutions {
            let x = match reduction.sigma(source, &trace, y) {
                Ok(x) => x,
                Err(e) => {
                    fail(Check::SigmaFeasible, Some(y), format!("reverse map failed: {e}"));
                    continue;
                }
            };
            let m1 = source.measure(&x)?;
            if m1.is_infinite() {
                fail(Check::SigmaFeasible, Some(y), format!("reverse map returned infeasible {x:?}"));
                continue;
            }
            if m1 > *m2 {
                fail(Check::MeasureTransfer, Some(y), format!("m1 = {m1} exceeds m2 = {m2}"));
            }
            if ratio_undefined {
                continue;
            }
            if let (Finite(a), Finite(b), Some(Finite(o1)), Some(Finite(o2))) = (m1, *m2, m1_opt, m2_opt) {
                if b <= 0 {
                    continue;
                }
                let r1 = ratio(a, o1);
                let r2 = ratio(b, o2);
                let bound = BigRational::one() + alpha * (&r2 - BigRational::one());
                if r1 > bound {
                    fail(Check::RatioTransfer, Some(y), format!("R1 = {r1} exceeds 1 + α(R2 - 1) = {bound}"));
                }
            }
        }
        report.instances.push(InstanceReport {
            index,
            source_optimum: m1_opt,
            target_optimum: m2_opt,
            target_solutions: solutions.len(),
            ratio_undefined,
        });
    }
    Ok(report)
}
