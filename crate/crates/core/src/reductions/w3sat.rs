//! Weighted 3-SAT with the trivial all-true solution, and its reduction to
//! quadratic pseudo-Boolean optimization.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::quadratize::quadratize_from;
use super::trace::{ReductionKind, ReductionTrace};
use crate::cost::ExtendedCost;
use crate::error::{Error, Result};
use crate::instance::{evaluate, EnergyInstance, Labeling};
use crate::poly::{quadratic_poly_to_instance_with_vars, MultilinearPoly, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: VarId,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: VarId) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: VarId) -> Self {
        Literal { var, negated: true }
    }

    /// From the 1-based signed form used in files (`-3` is `¬x3`).
    pub fn from_signed(v: i64) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidClause("literal 0".into()));
        }
        let var = (v.unsigned_abs() - 1) as VarId;
        Ok(Literal { var, negated: v < 0 })
    }

    pub fn to_signed(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn value(self, a: &[bool]) -> bool {
        a[self.var] != self.negated
    }

    /// `1 - ℓ` as a polynomial: `1 - x` for a positive literal, `x` for a
    /// negated one.
    fn falsity(self) -> MultilinearPoly {
        if self.negated {
            MultilinearPoly::var(self.var)
        } else {
            let mut p = MultilinearPoly::constant(1);
            p.add_term(&[self.var], -1).expect("valid term");
            p
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A disjunction of exactly three literals over distinct variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clause(pub [Literal; 3]);

impl Clause {
    pub fn new(lits: [Literal; 3]) -> Result<Self> {
        let [a, b, c] = lits.map(|l| l.var);
        if a == b || a == c || b == c {
            return Err(Error::InvalidClause(format!("clause {} repeats a variable", Clause(lits))));
        }
        Ok(Clause(lits))
    }

    pub fn satisfied(&self, a: &[bool]) -> bool {
        self.0.iter().any(|l| l.value(a))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a} {b} {c})")
    }
}

/// Minimize `Σ w_i x_i` over assignments that satisfy every clause, with
/// all-true always admitted as a feasible fallback.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct W3SatTriv {
    num_vars: usize,
    clauses: Vec<Clause>,
    weights: Vec<i64>,
}

impl W3SatTriv {
    pub fn new(num_vars: usize, clauses: Vec<Clause>, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != num_vars {
            return Err(Error::InvalidFormula(format!("{} weights for {num_vars} variables", weights.len())));
        }
        if let Some(w) = weights.iter().find(|&&w| w < 0) {
            return Err(Error::InvalidFormula(format!("negative weight {w}")));
        }
        for c in &clauses {
            Clause::new(c.0)?;
            if let Some(l) = c.0.iter().find(|l| l.var >= num_vars) {
                return Err(Error::InvalidClause(format!("literal {l} exceeds {num_vars} variables")));
            }
        }
        weights.iter().try_fold(0i64, |acc, &w| acc.checked_add(w)).ok_or(Error::Overflow)?;
        Ok(W3SatTriv { num_vars, clauses, weights })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `Σ w_i`, the measure of the all-true fallback.
    pub fn total_weight(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn satisfies(&self, a: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.satisfied(a))
    }

    pub fn is_feasible(&self, a: &[bool]) -> bool {
        a.len() == self.num_vars && (self.satisfies(a) || a.iter().all(|&b| b))
    }

    /// `Σ w_i x_i` for a feasible assignment, `+INF` otherwise.
    pub fn measure(&self, a: &[bool]) -> ExtendedCost {
        if !self.is_feasible(a) {
            return ExtendedCost::Infinite;
        }
        ExtendedCost::Finite(self.weights.iter().zip(a).filter(|(_, &b)| b).map(|(w, _)| w).sum())
    }
}

/// The clause as a 0/1 polynomial: `1 - Π(1 - ℓ)`.
pub fn clause_to_poly(clause: &Clause) -> Result<MultilinearPoly> {
    let clause = Clause::new(clause.0)?;
    let mut p = MultilinearPoly::constant(1);
    p.add(&falsity_product(&clause)?.scaled(-1)?)?;
    Ok(p)
}

fn falsity_product(clause: &Clause) -> Result<MultilinearPoly> {
    let [a, b, c] = clause.0;
    a.falsity().mul(&b.falsity())?.mul(&c.falsity())
}

/// `M·(1 - C)`: `M` when the clause is false and 0 when it holds.
pub fn clause_penalty(clause: &Clause, m: i64) -> Result<MultilinearPoly> {
    if m < 0 {
        return Err(Error::InvalidFormula(format!("penalty weight {m} is negative")));
    }
    let clause = Clause::new(clause.0)?;
    falsity_product(&clause)?.scaled(m)
}

/// The QPBO polynomial over `n + m` variables: the weights as linear terms
/// plus each clause penalty quadratized with auxiliary `n + c` for clause
/// `c`.
pub fn w3sat_polynomial(s: &W3SatTriv) -> Result<MultilinearPoly> {
    let m = s.total_weight();
    let mut p = MultilinearPoly::new();
    for (i, &w) in s.weights.iter().enumerate() {
        p.add_term(&[i], w)?;
    }
    for (c, clause) in s.clauses.iter().enumerate() {
        let (q, _) = quadratize_from(&clause_penalty(clause, m)?, s.num_vars + c)?;
        p.add(&q)?;
    }
    Ok(p)
}

/// Builds the QPBO instance with `M = Σ w_i`. One auxiliary node is
/// allocated per clause even when its penalty vanishes (`M = 0`), so node
/// ids depend only on the formula's shape.
pub fn w3sat_to_qpbo(s: &W3SatTriv) -> Result<(EnergyInstance, ReductionTrace)> {
    let total = s.num_vars + s.clauses.len();
    let instance = quadratic_poly_to_instance_with_vars(&w3sat_polynomial(s)?, total)?;
    let mut trace = ReductionTrace::new(ReductionKind::W3satToQpbo, s.num_vars, s.total_weight());
    trace.aux_nodes = (s.num_vars..total).collect();
    trace.next_id = total;
    Ok((instance, trace))
}

/// Restriction of `y` to the original variables when its energy is below
/// `M`, otherwise the all-true assignment.
pub fn w3sat_sigma(s: &W3SatTriv, trace: &ReductionTrace, y: &Labeling) -> Result<Vec<bool>> {
    trace.expect_kind(&ReductionKind::W3satToQpbo)?;
    let (target, expected) = w3sat_to_qpbo(s)?;
    if &expected != trace {
        return Err(Error::TraceMismatch("trace was produced from a different formula".into()));
    }
    let energy = evaluate(&target, y)?;
    if energy.cmp_finite(trace.big_m).is_lt() {
        Ok(y.as_slice()[..s.num_vars].iter().map(|&l| l == 1).collect())
    } else {
        Ok(vec![true; s.num_vars])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_evaluate;
    use crate::solvers::solve_brute_force;

    fn bits(mask: usize, n: usize) -> Vec<bool> {
        (0..n).map(|i| mask >> i & 1 == 1).collect()
    }

    fn clause(lits: [i64; 3]) -> Clause {
        Clause::new(lits.map(|l| Literal::from_signed(l).unwrap())).unwrap()
    }

    #[test]
    fn clause_polynomials() {
        // x1 ∨ ¬x2 ∨ ¬x3 = x1x2x3 - x2x3 + 1
        let p = clause_to_poly(&clause([1, -2, -3])).unwrap();
        let mut expected = MultilinearPoly::constant(1);
        expected.add_term(&[0, 1, 2], 1).unwrap().add_term(&[1, 2], -1).unwrap();
        assert_eq!(p, expected);

        let p = clause_to_poly(&clause([-1, -2, -3])).unwrap();
        let mut expected = MultilinearPoly::constant(1);
        expected.add_term(&[0, 1, 2], -1).unwrap();
        assert_eq!(p, expected);

        let p = clause_to_poly(&clause([1, 2, 3])).unwrap();
        for v in 0..3 {
            assert_eq!(p.coefficient(&[v]), 1);
        }
        assert_eq!(p.coefficient(&[0, 1]), -1);
        assert_eq!(p.coefficient(&[0, 1, 2]), 1);
        assert_eq!(p.constant_term(), 0);
    }

    #[test]
    fn clause_polynomial_is_truth_value() {
        for lits in [[1, -2, -3], [-1, -2, -3], [1, 2, 3], [-1, 2, 3]] {
            let c = clause(lits);
            let p = clause_to_poly(&c).unwrap();
            for mask in 0..8 {
                let a = bits(mask, 3);
                assert_eq!(poly_evaluate(&p, &a).unwrap(), c.satisfied(&a) as i64);
            }
        }
    }

    #[test]
    fn penalty_values() {
        let c = clause([1, -2, -3]);
        let d = clause_penalty(&c, 7).unwrap();
        assert_eq!(poly_evaluate(&d, &[false, true, true]).unwrap(), 7);
        assert_eq!(poly_evaluate(&d, &[true, true, true]).unwrap(), 0);
        let mut expected = MultilinearPoly::constant(7);
        expected.add(&clause_to_poly(&c).unwrap().scaled(-7).unwrap()).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn invalid_clauses_and_formulas() {
        let lits = [Literal::pos(0), Literal::neg(0), Literal::pos(1)];
        assert!(Clause::new(lits).is_err());
        assert!(W3SatTriv::new(3, vec![], vec![1, -1, 0]).is_err());
        assert!(W3SatTriv::new(2, vec![clause([1, 2, 3])], vec![1, 1]).is_err());
        assert!(W3SatTriv::new(3, vec![], vec![1, 1]).is_err());
    }

    #[test]
    fn single_clause_gives_four_nodes() {
        let s = W3SatTriv::new(3, vec![clause([1, -2, -3])], vec![1, 1, 1]).unwrap();
        let (i, t) = w3sat_to_qpbo(&s).unwrap();
        assert_eq!(i.num_nodes(), 4);
        assert!(i.is_binary());
        assert_eq!(t.aux_nodes, vec![3]);
        assert_eq!(t.big_m, 3);
        t.check_partition(4).unwrap();
    }

    #[test]
    fn unsatisfiable_formula_reaches_m() {
        // all eight sign patterns over three variables: unsatisfiable
        let mut clauses = Vec::new();
        for mask in 0..8usize {
            let lits: Vec<i64> =
                (0..3).map(|v| if mask >> v & 1 == 1 { -(v as i64 + 1) } else { v as i64 + 1 }).collect();
            clauses.push(clause([lits[0], lits[1], lits[2]]));
        }
        let s = W3SatTriv::new(3, clauses, vec![1, 1, 1]).unwrap();
        let (i, t) = w3sat_to_qpbo(&s).unwrap();
        let opt = solve_brute_force(&i).unwrap();
        assert!(opt.value.cmp_finite(3).is_ge());
        assert_eq!(w3sat_sigma(&s, &t, &opt.labeling).unwrap(), vec![true; 3]);
    }
}
