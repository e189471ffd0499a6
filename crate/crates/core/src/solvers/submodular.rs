use super::flow::{max_flow, FlowNetwork};
use super::{finish, to_i64, Method, SolveResult};
use crate::cost::ExtendedCost;
use crate::error::{Error, Result};
use crate::instance::{Edge, EnergyInstance};

fn require_finite(instance: &EnergyInstance) -> Result<()> {
    if instance.has_infinite() {
        Err(Error::InfiniteEntry)
    } else {
        Ok(())
    }
}

fn require_binary(instance: &EnergyInstance) -> Result<()> {
    match instance.label_counts().iter().position(|&k| k != 2) {
        Some(u) => Err(Error::NotBinary(u, instance.label_count(u))),
        None => Ok(()),
    }
}

fn fin(c: ExtendedCost) -> i128 {
    c.finite().expect("checked finite") as i128
}

/// First edge violating `f(0,1) + f(1,0) ≥ f(0,0) + f(1,1)`.
fn binary_violation(instance: &EnergyInstance) -> Result<Option<Edge>> {
    require_binary(instance)?;
    require_finite(instance)?;
    Ok(instance.edges().find_map(|(e, t)| {
        let lhs = fin(t.get(0, 1)) + fin(t.get(1, 0));
        let rhs = fin(t.get(0, 0)) + fin(t.get(1, 1));
        (lhs < rhs).then_some(e)
    }))
}

pub fn is_submodular_binary(instance: &EnergyInstance) -> Result<bool> {
    Ok(binary_violation(instance)?.is_none())
}

/// `f(i, j+1) + f(i+1, j) ≥ f(i, j) + f(i+1, j+1)` for every edge and every
/// pair of adjacent label indices, under the natural label order.
pub fn is_submodular_lattice(instance: &EnergyInstance) -> Result<bool> {
    require_finite(instance)?;
    Ok(instance.edges().all(|(_, t)| {
        (0..t.rows().saturating_sub(1)).all(|i| {
            (0..t.cols().saturating_sub(1))
                .all(|j| fin(t.get(i, j + 1)) + fin(t.get(i + 1, j)) >= fin(t.get(i, j)) + fin(t.get(i + 1, j + 1)))
        })
    }))
}

/// Exact minimization of a binary submodular instance by one minimum cut.
///
/// Each table is rewritten as
/// `A + (C-A)x_u + (D-C)x_v + (B+C-A-D)(1-x_u)x_v` with `A..D` the entries
/// at `00, 01, 10, 11`; the last coefficient is non-negative exactly when
/// the edge is submodular. Source side means label 0. The cut with the
/// largest source side gives the componentwise smallest minimizer.
pub fn solve_submodular_qpbo(instance: &EnergyInstance) -> Result<SolveResult> {
    if let Some(e) = binary_violation(instance)? {
        return Err(Error::NotSubmodular(e));
    }
    let n = instance.num_nodes();
    let mut linear = vec![0i128; n];
    for (u, lin) in linear.iter_mut().enumerate() {
        let t = instance.unary(u);
        *lin += fin(t[1]) - fin(t[0]);
    }
    let (source, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2, source, sink);
    for (e, t) in instance.edges() {
        let (a, b, c, d) = (fin(t.get(0, 0)), fin(t.get(0, 1)), fin(t.get(1, 0)), fin(t.get(1, 1)));
        linear[e.u()] += c - a;
        linear[e.v()] += d - c;
        let w = b + c - a - d;
        if w > 0 {
            net.add_arc(e.u(), e.v(), to_i64(w)?)?;
        }
    }
    for (u, &c) in linear.iter().enumerate() {
        if c > 0 {
            net.add_arc(source, u, to_i64(c)?)?;
        } else if c < 0 {
            net.add_arc(u, sink, to_i64(-c)?)?;
        }
    }
    let cut = max_flow(&net)?;
    let labels = (0..n).map(|u| usize::from(!cut.source_side[u])).collect();
    finish(instance, labels, Method::Mincut, true)
}
