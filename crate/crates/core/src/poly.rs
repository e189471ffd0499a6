//! Multilinear pseudo-Boolean polynomials of degree at most three.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cost::Finite;
use crate::error::{Error, Result};
use crate::instance::{CostTable, EnergyInstance};

pub type VarId = usize;

pub const MAX_DEGREE: usize = 3;

/// A polynomial `Σ_J b_J Π_{i∈J} x_i` over Boolean variables.
///
/// Monomials are stored as sorted variable lists with nonzero coefficients,
/// so the representation of a given function is unique.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultilinearPoly {
    terms: BTreeMap<Vec<VarId>, i64>,
}

impl MultilinearPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::new();
        p.add_term(&[], c).expect("constant term is always valid");
        p
    }

    pub fn var(x: VarId) -> Self {
        let mut p = Self::new();
        p.add_term(&[x], 1).expect("a single variable is always valid");
        p
    }

    /// Adds `coef · Π vars`, merging with an existing monomial. Rejects
    /// repeated variables and monomials above degree three.
    pub fn add_term(&mut self, vars: &[VarId], coef: i64) -> Result<&mut Self> {
        let mut key = vars.to_vec();
        key.sort_unstable();
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!("monomial {vars:?} repeats a variable")));
        }
        if key.len() > MAX_DEGREE {
            return Err(Error::DegreeTooHigh(key.len()));
        }
        if coef == 0 {
            return Ok(self);
        }
        let entry = self.terms.entry(key).or_insert(0);
        *entry = entry.checked_add(coef).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(self)
    }

    pub fn add(&mut self, other: &MultilinearPoly) -> Result<&mut Self> {
        for (vars, &c) in &other.terms {
            self.add_term(vars, c)?;
        }
        Ok(self)
    }

    pub fn scaled(&self, k: i64) -> Result<MultilinearPoly> {
        let mut terms = BTreeMap::new();
        if k != 0 {
            for (vars, &c) in &self.terms {
                terms.insert(vars.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
            }
        }
        Ok(MultilinearPoly { terms })
    }

    /// Product of two polynomials, with `x·x = x` applied.
    pub fn mul(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        let mut out = MultilinearPoly::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let vars: BTreeSet<VarId> = a.iter().chain(b).copied().collect();
                let vars: Vec<VarId> = vars.into_iter().collect();
                out.add_term(&vars, ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[VarId], i64)> + '_ {
        self.terms.iter().map(|(v, &c)| (v.as_slice(), c))
    }

    pub fn coefficient(&self, vars: &[VarId]) -> i64 {
        let mut key = vars.to_vec();
        key.sort_unstable();
        self.terms.get(&key).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i64 {
        self.coefficient(&[])
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flatten().copied().collect()
    }

    /// One more than the largest variable id, or 0 for a constant.
    pub fn num_vars(&self) -> usize {
        self.variables().last().map_or(0, |&v| v + 1)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (vars, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if vars.is_empty() || mag != 1 {
                write!(f, "{mag}")?;
            }
            for v in vars {
                write!(f, "x{v}")?;
            }
        }
        Ok(())
    }
}

/// `Σ_J b_J Π_{i∈J} a_i`, with `a` indexed by variable id.
pub fn poly_evaluate(p: &MultilinearPoly, a: &[bool]) -> Result<i64> {
    let mut total = 0i64;
    for (vars, c) in p.terms() {
        let mut on = true;
        for &v in vars {
            on &= *a.get(v).ok_or(Error::MissingVariable(v))?;
        }
        if on {
            total = total.checked_add(c).ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// Encodes a degree-≤2 polynomial as a binary energy instance with one node
/// per variable id in `0..p.num_vars()`.
pub fn quadratic_poly_to_instance(p: &MultilinearPoly) -> Result<EnergyInstance> {
    quadratic_poly_to_instance_with_vars(p, p.num_vars())
}

/// As [`quadratic_poly_to_instance`], with an explicit node count so that
/// variables absent from `p` still get a node.
pub fn quadratic_poly_to_instance_with_vars(p: &MultilinearPoly, num_vars: usize) -> Result<EnergyInstance> {
    if p.degree() > 2 {
        return Err(Error::DegreeTooHigh(p.degree()));
    }
    if p.num_vars() > num_vars {
        return Err(Error::MissingVariable(p.num_vars() - 1));
    }
    let mut b = EnergyInstance::builder(vec![2; num_vars]);
    for (vars, c) in p.terms() {
        match *vars {
            [] => {
                b.set_constant(c);
            }
            [x] => {
                b.set_unary(x, vec![Finite(0), Finite(c)]);
            }
            [x, y] => {
                b.set_pairwise(x, y, CostTable::from_rows(&[[0, 0], [0, c]]));
            }
            _ => unreachable!("degree checked above"),
        }
    }
    b.build()
}
