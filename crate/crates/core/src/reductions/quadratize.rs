use crate::error::{Error, Result};
use crate::poly::{MultilinearPoly, VarId};

/// The quadratic replacement of `a·x_i x_j x_k` with auxiliary `x_w`:
/// `-|a|·x_w(S-2)` for `a < 0` and `|a|·((x_w-1)(S-1) + x_ix_j + x_ix_k + x_jx_k)`
/// for `a > 0`, where `S = x_i + x_j + x_k`.
pub fn cubic_replacement(a: i64, vars: [VarId; 3], w: VarId) -> Result<MultilinearPoly> {
    let mag = a.checked_abs().ok_or(Error::Overflow)?;
    let [i, j, k] = vars;
    let mut q = MultilinearPoly::new();
    if a < 0 {
        // -x_w(S - 2) = -x_w x_i - x_w x_j - x_w x_k + 2 x_w
        for v in vars {
            q.add_term(&[w, v], -1)?;
        }
        q.add_term(&[w], 2)?;
    } else {
        // (x_w - 1)(S - 1) + pairs = x_w S - x_w - S + 1 + pairs
        for v in vars {
            q.add_term(&[w, v], 1)?;
            q.add_term(&[v], -1)?;
        }
        q.add_term(&[w], -1)?;
        q.add_term(&[], 1)?;
        q.add_term(&[i, j], 1)?.add_term(&[i, k], 1)?.add_term(&[j, k], 1)?;
    }
    q.scaled(mag)
}

/// Replaces every cubic monomial by its quadratic identity, allocating one
/// fresh auxiliary variable per cubic monomial starting at `first_aux` (in
/// monomial order). Returns the quadratic polynomial and the auxiliary ids.
pub fn quadratize_from(p: &MultilinearPoly, first_aux: VarId) -> Result<(MultilinearPoly, Vec<VarId>)> {
    if p.degree() > 3 {
        return Err(Error::DegreeTooHigh(p.degree()));
    }
    if p.num_vars() > first_aux {
        return Err(Error::InvalidInstance(format!(
            "auxiliary id {first_aux} collides with variable {}",
            p.num_vars() - 1
        )));
    }
    let mut out = MultilinearPoly::new();
    let mut aux = Vec::new();
    for (vars, a) in p.terms() {
        if let [i, j, k] = *vars {
            let w = first_aux + aux.len();
            aux.push(w);
            out.add(&cubic_replacement(a, [i, j, k], w)?)?;
        } else {
            out.add_term(vars, a)?;
        }
    }
    Ok((out, aux))
}

/// [`quadratize_from`] with auxiliaries numbered after the last variable.
pub fn quadratize(p: &MultilinearPoly) -> Result<(MultilinearPoly, Vec<VarId>)> {
    quadratize_from(p, p.num_vars())
}
