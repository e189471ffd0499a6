use super::interactions::metric_violation;
use super::submodular::{is_submodular_binary, solve_submodular_qpbo};
use super::{Method, SolveResult};
use crate::cost::ExtendedCost;
use crate::error::{Error, Result};
use crate::instance::{evaluate, CostTable, EnergyInstance, Labeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub result: SolveResult,
    /// Energy of the current labeling after every move attempt, in order.
    pub energies: Vec<ExtendedCost>,
    pub sweeps: usize,
}

/// The binary problem "keep `x_u` (0) or switch to `alpha` (1)".
fn expansion_subproblem(instance: &EnergyInstance, x: &Labeling, alpha: usize) -> Result<EnergyInstance> {
    let mut b = EnergyInstance::builder(vec![2; instance.num_nodes()]);
    for u in 0..instance.num_nodes() {
        let f = instance.unary(u);
        b.set_unary(u, vec![f[x[u]], f[alpha]]);
    }
    for (e, t) in instance.edges() {
        let (a, c) = (x[e.u()], x[e.v()]);
        let table = CostTable::new(2, 2, vec![t.get(a, c), t.get(a, alpha), t.get(alpha, c), t.get(alpha, alpha)])?;
        b.set_pairwise(e.u(), e.v(), table);
    }
    b.set_constant(instance.constant());
    b.build()
}

/// α-expansion from `init` (all zeros by default): sweeps labels in
/// ascending order, solves each move exactly by min-cut and accepts it only
/// if it strictly lowers the energy; stops after a sweep with no accepted
/// move.
pub fn alpha_expansion(instance: &EnergyInstance, init: Option<Labeling>) -> Result<ExpansionResult> {
    if let Some(e) = metric_violation(instance)? {
        return Err(Error::NotMetric(e));
    }
    let k = instance.uniform_label_count().unwrap_or(0);
    let mut x = init.unwrap_or_else(|| Labeling::zeros(instance.num_nodes()));
    let mut energy = evaluate(instance, &x)?;
    let mut energies = Vec::new();
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut improved = false;
        for alpha in 0..k {
            let sub = expansion_subproblem(instance, &x, alpha)?;
            if !is_submodular_binary(&sub)? {
                return Err(Error::Oracle(format!("expansion move for label {alpha} is not submodular")));
            }
            let moves = solve_submodular_qpbo(&sub)?.labeling;
            let candidate =
                Labeling::new((0..instance.num_nodes()).map(|u| if moves[u] == 1 { alpha } else { x[u] }).collect());
            let e = evaluate(instance, &candidate)?;
            if e < energy {
                x = candidate;
                energy = e;
                improved = true;
            }
            energies.push(energy);
        }
        if !improved {
            break;
        }
    }
    Ok(ExpansionResult {
        result: SolveResult { labeling: x, value: energy, method: Method::Alphaexp, exact: false },
        energies,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Finite;
    use crate::instance::Edge;
    use crate::solvers::solve_brute_force;

    fn potts_chain() -> EnergyInstance {
        let mut b = EnergyInstance::builder(vec![3; 4]);
        let potts = CostTable::from_fn(3, 3, |a, c| Finite(if a == c { 0 } else { 2 }));
        for u in 0..3 {
            b.set_pairwise(u, u + 1, potts.clone());
        }
        b.set_unary(0, vec![Finite(5), Finite(0), Finite(5)]);
        b.set_unary(3, vec![Finite(4), Finite(4), Finite(0)]);
        b.build().unwrap()
    }

    #[test]
    fn optimum_start_is_unchanged() {
        let i = potts_chain();
        let opt = solve_brute_force(&i).unwrap();
        let r = alpha_expansion(&i, Some(opt.labeling.clone())).unwrap();
        assert_eq!(r.result.labeling, opt.labeling);
        assert_eq!(r.sweeps, 1);
    }

    #[test]
    fn energies_never_increase_and_ratio_holds() {
        let i = potts_chain();
        let r = alpha_expansion(&i, None).unwrap();
        assert!(r.energies.windows(2).all(|w| w[1] <= w[0]));
        let opt = solve_brute_force(&i).unwrap().value.finite().unwrap();
        assert!(r.result.value.finite().unwrap() <= 2 * opt);
        assert!(!r.result.exact);
    }

    #[test]
    fn non_metric_is_rejected() {
        let mut b = EnergyInstance::builder(vec![3, 3]);
        b.set_pairwise(0, 1, CostTable::from_rows(&[[0, 1, 5], [1, 0, 1], [5, 1, 0]]));
        assert_eq!(alpha_expansion(&b.build().unwrap(), None).unwrap_err(), Error::NotMetric(Edge::new(0, 1)));
    }
}
