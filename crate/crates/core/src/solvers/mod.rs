//! Exact oracles and the α-expansion move-making approximation.

mod brute;
mod elimination;
mod expansion;
mod flow;
mod interactions;
mod submodular;
mod tree;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use brute::{solve_brute_force, solve_brute_force_with_limit, DEFAULT_BRUTE_LIMIT};
pub use elimination::{min_degree_order, solve_elimination, solve_elimination_with_limit, DEFAULT_TABLE_LIMIT};
pub use expansion::{alpha_expansion, ExpansionResult};
pub use flow::{max_flow, FlowNetwork, MaxFlow};
pub use interactions::{is_metric, is_potts, metric_violation};
pub use submodular::{is_submodular_binary, is_submodular_lattice, solve_submodular_qpbo};
pub use tree::{is_forest, solve_tree_dp};

use crate::cost::ExtendedCost;
use crate::error::{Error, Result};
use crate::instance::{EnergyInstance, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Elim,
    Tree,
    Mincut,
    Alphaexp,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Brute, Method::Elim, Method::Tree, Method::Mincut, Method::Alphaexp];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Elim => "elim",
            Method::Tree => "tree",
            Method::Mincut => "mincut",
            Method::Alphaexp => "alphaexp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub labeling: Labeling,
    pub value: ExtendedCost,
    pub method: Method,
    pub exact: bool,
}

/// Runs `method` with its default settings (min-degree order for
/// elimination, all-zeros start for α-expansion).
pub fn solve(instance: &EnergyInstance, method: Method) -> Result<SolveResult> {
    match method {
        Method::Brute => solve_brute_force(instance),
        Method::Elim => solve_elimination(instance, &min_degree_order(instance)),
        Method::Tree => solve_tree_dp(instance),
        Method::Mincut => solve_submodular_qpbo(instance),
        Method::Alphaexp => alpha_expansion(instance, None).map(|r| r.result),
    }
}

/// Wide accumulator for partial energies: sums of `i64` terms cannot
/// overflow `i128` at any size these solvers accept. Final values are
/// re-evaluated with checked `i64` arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Acc {
    Fin(i128),
    Inf,
}

impl Acc {
    pub(crate) const ZERO: Acc = Acc::Fin(0);

    pub(crate) fn add(self, rhs: Acc) -> Acc {
        match (self, rhs) {
            (Acc::Fin(a), Acc::Fin(b)) => Acc::Fin(a + b),
            _ => Acc::Inf,
        }
    }
}

impl From<ExtendedCost> for Acc {
    fn from(c: ExtendedCost) -> Self {
        match c {
            ExtendedCost::Finite(v) => Acc::Fin(v as i128),
            ExtendedCost::Infinite => Acc::Inf,
        }
    }
}

pub(crate) fn finish(
    instance: &EnergyInstance,
    labels: Vec<usize>,
    method: Method,
    exact: bool,
) -> Result<SolveResult> {
    let labeling = Labeling::new(labels);
    let value = crate::instance::evaluate(instance, &labeling)?;
    Ok(SolveResult { labeling, value, method, exact })
}

pub(crate) fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}
