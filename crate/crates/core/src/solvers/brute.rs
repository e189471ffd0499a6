use super::{finish, Acc, Method, SolveResult};
use crate::error::{Error, Result};
use crate::instance::{CostTable, EnergyInstance};

pub const DEFAULT_BRUTE_LIMIT: u64 = 1 << 24;

pub fn solve_brute_force(instance: &EnergyInstance) -> Result<SolveResult> {
    solve_brute_force_with_limit(instance, DEFAULT_BRUTE_LIMIT)
}

/// Exhaustive minimization in lexicographic order, keeping only strict
/// improvements, so ties resolve to the lexicographically smallest
/// labeling. The energy is updated incrementally as the odometer turns.
pub fn solve_brute_force_with_limit(instance: &EnergyInstance, limit: u64) -> Result<SolveResult> {
    let configurations = instance.configuration_count();
    if configurations > limit as u128 {
        return Err(Error::BruteForceLimit { configurations, limit });
    }
    let n = instance.num_nodes();
    // Per node: (neighbour, table, whether this node indexes the rows).
    let mut adj: Vec<Vec<(usize, &CostTable, bool)>> = vec![Vec::new(); n];
    for (e, t) in instance.edges() {
        adj[e.u()].push((e.v(), t, true));
        adj[e.v()].push((e.u(), t, false));
    }
    let mut x = vec![0usize; n];

    // Energy is tracked as a count of infinite terms plus a finite sum.
    let mut inf = 0usize;
    let mut sum = 0i128;
    fn add(c: Acc, sign: i128, inf: &mut usize, sum: &mut i128) {
        match c {
            Acc::Fin(v) => *sum += sign * v,
            Acc::Inf if sign > 0 => *inf += 1,
            Acc::Inf => *inf -= 1,
        }
    }
    add(Acc::Fin(instance.constant() as i128), 1, &mut inf, &mut sum);
    for u in 0..n {
        add(instance.unary(u)[0].into(), 1, &mut inf, &mut sum);
    }
    for (_, t) in instance.edges() {
        add(t.get(0, 0).into(), 1, &mut inf, &mut sum);
    }

    let current = |inf: usize, sum: i128| if inf > 0 { Acc::Inf } else { Acc::Fin(sum) };
    let mut best = current(inf, sum);
    let mut best_x = x.clone();

    let set_label = |x: &mut [usize], u: usize, label: usize, inf: &mut usize, sum: &mut i128| {
        let old = x[u];
        add(instance.unary(u)[old].into(), -1, inf, sum);
        add(instance.unary(u)[label].into(), 1, inf, sum);
        for &(v, t, row) in &adj[u] {
            let cost = |a: usize| if row { t.get(a, x[v]) } else { t.get(x[v], a) };
            let (before, after) = (cost(old), cost(label));
            add(before.into(), -1, inf, sum);
            add(after.into(), 1, inf, sum);
        }
        x[u] = label;
    };

    'outer: loop {
        let mut pos = n;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            let next = x[pos] + 1;
            if next < instance.label_count(pos) {
                set_label(&mut x, pos, next, &mut inf, &mut sum);
                break;
            }
            set_label(&mut x, pos, 0, &mut inf, &mut sum);
        }
        let e = current(inf, sum);
        if e < best {
            best = e;
            best_x.copy_from_slice(&x);
        }
    }
    finish(instance, best_x, Method::Brute, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{Finite, Infinite};
    use crate::instance::Labeling;

    #[test]
    fn single_node_picks_cheaper_label() {
        let mut b = EnergyInstance::builder(vec![2]);
        b.set_unary(0, vec![Finite(0), Finite(5)]);
        let r = solve_brute_force(&b.build().unwrap()).unwrap();
        assert_eq!((r.labeling, r.value), (Labeling::new(vec![0]), Finite(0)));
    }

    #[test]
    fn ties_resolve_lexicographically() {
        let mut b = EnergyInstance::builder(vec![2, 2]);
        b.set_pairwise(0, 1, CostTable::from_rows(&[[0, 1], [1, 0]]));
        let r = solve_brute_force(&b.build().unwrap()).unwrap();
        assert_eq!((r.labeling, r.value), (Labeling::new(vec![0, 0]), Finite(0)));
    }

    #[test]
    fn all_infinite_returns_first_labeling() {
        let mut b = EnergyInstance::builder(vec![2, 2]);
        b.set_pairwise(0, 1, CostTable::filled(2, 2, Infinite));
        let r = solve_brute_force(&b.build().unwrap()).unwrap();
        assert_eq!((r.labeling, r.value), (Labeling::new(vec![0, 0]), Infinite));
    }

    #[test]
    fn limit_is_enforced() {
        let i = EnergyInstance::builder(vec![3; 5]).build().unwrap();
        assert_eq!(
            solve_brute_force_with_limit(&i, 100).unwrap_err(),
            Error::BruteForceLimit { configurations: 243, limit: 100 }
        );
    }

    #[test]
    fn empty_instance_has_constant_value() {
        let mut b = EnergyInstance::builder(vec![]);
        b.set_constant(-4);
        assert_eq!(solve_brute_force(&b.build().unwrap()).unwrap().value, Finite(-4));
    }
}
