use std::collections::BTreeSet;

use super::{finish, Acc, Method, SolveResult};
use crate::error::{Error, Result};
use crate::instance::{EnergyInstance, NodeId};

/// Largest factor table (in entries, eliminated variable included) that
/// bucket elimination will build.
pub const DEFAULT_TABLE_LIMIT: u64 = 1 << 22;

/// A table over `scope` (sorted ascending), row-major with the last
/// variable varying fastest.
#[derive(Debug, Clone)]
struct Factor {
    scope: Vec<NodeId>,
    values: Vec<Acc>,
}

fn strides(scope: &[NodeId], counts: &[usize]) -> Vec<usize> {
    let mut s = vec![0; scope.len()];
    let mut acc = 1;
    for (i, &v) in scope.iter().enumerate().rev() {
        s[i] = acc;
        acc *= counts[v];
    }
    s
}

/// Strides of `factor` expressed over the positions of `frame`; zero for
/// frame variables outside the factor.
fn strides_in(frame: &[NodeId], factor: &Factor, counts: &[usize]) -> Vec<usize> {
    let own = strides(&factor.scope, counts);
    frame.iter().map(|v| factor.scope.iter().position(|w| w == v).map_or(0, |i| own[i])).collect()
}

fn index(assignment: &[usize], strides: &[usize]) -> usize {
    assignment.iter().zip(strides).map(|(a, s)| a * s).sum()
}

/// Advances a mixed-radix counter; returns false after the last value.
fn advance(assignment: &mut [usize], frame: &[NodeId], counts: &[usize]) -> bool {
    for i in (0..frame.len()).rev() {
        assignment[i] += 1;
        if assignment[i] < counts[frame[i]] {
            return true;
        }
        assignment[i] = 0;
    }
    false
}

/// Greedy order: repeatedly eliminate a node of minimum current degree
/// (smallest id on ties), connecting its remaining neighbours.
pub fn min_degree_order(instance: &EnergyInstance) -> Vec<NodeId> {
    let n = instance.num_nodes();
    let mut adj: Vec<BTreeSet<NodeId>> = instance.adjacency().into_iter().map(|a| a.into_iter().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n).filter(|&u| alive[u]).min_by_key(|&u| (adj[u].len(), u)).expect("a node remains");
        alive[u] = false;
        let nbrs: Vec<NodeId> = adj[u].iter().copied().collect();
        for &a in &nbrs {
            adj[a].remove(&u);
            for &b in &nbrs {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[u].clear();
        order.push(u);
    }
    order
}

pub fn solve_elimination(instance: &EnergyInstance, order: &[NodeId]) -> Result<SolveResult> {
    solve_elimination_with_limit(instance, order, DEFAULT_TABLE_LIMIT)
}

/// Bucket elimination along `order` followed by a backward pass that fixes
/// each variable to its smallest minimizing label given the later ones.
pub fn solve_elimination_with_limit(instance: &EnergyInstance, order: &[NodeId], limit: u64) -> Result<SolveResult> {
    let n = instance.num_nodes();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidOrder(format!("order has {} entries for {n} nodes", order.len())));
    }
    for &u in order {
        if u >= n || std::mem::replace(&mut seen[u], true) {
            return Err(Error::InvalidOrder(format!("node {u} is missing, repeated or out of range")));
        }
    }
    let counts = instance.label_counts();

    let mut pool: Vec<Factor> = Vec::new();
    for u in 0..n {
        pool.push(Factor { scope: vec![u], values: instance.unary(u).iter().map(|&c| c.into()).collect() });
    }
    for (e, t) in instance.edges() {
        pool.push(Factor { scope: vec![e.u(), e.v()], values: t.costs().iter().map(|&c| c.into()).collect() });
    }

    let mut buckets: Vec<(NodeId, Vec<Factor>)> = Vec::with_capacity(n);
    for &x in order {
        let (bucket, rest): (Vec<Factor>, Vec<Factor>) = pool.into_iter().partition(|f| f.scope.contains(&x));
        pool = rest;
        let frame: Vec<NodeId> =
            bucket.iter().flat_map(|f| f.scope.iter().copied()).collect::<BTreeSet<_>>().into_iter().collect();
        let size = frame.iter().try_fold(1u128, |acc, &v| acc.checked_mul(counts[v] as u128)).unwrap_or(u128::MAX);
        if size > limit as u128 {
            return Err(Error::WidthExceeded { size, limit });
        }
        let scope: Vec<NodeId> = frame.iter().copied().filter(|&v| v != x).collect();
        let out_size: usize = scope.iter().map(|&v| counts[v]).product();
        let mut values = vec![Acc::Inf; out_size];
        let out_frame_strides = strides_in(&frame, &Factor { scope: scope.clone(), values: Vec::new() }, counts);
        let factor_strides: Vec<Vec<usize>> = bucket.iter().map(|f| strides_in(&frame, f, counts)).collect();
        let mut assignment = vec![0usize; frame.len()];
        loop {
            let mut total = Acc::ZERO;
            for (f, s) in bucket.iter().zip(&factor_strides) {
                total = total.add(f.values[index(&assignment, s)]);
            }
            let slot = &mut values[index(&assignment, &out_frame_strides)];
            if total < *slot {
                *slot = total;
            }
            if !advance(&mut assignment, &frame, counts) {
                break;
            }
        }
        pool.push(Factor { scope, values });
        buckets.push((x, bucket));
    }

    let mut labels = vec![0usize; n];
    for (x, bucket) in buckets.iter().rev() {
        let mut best = (Acc::Inf, 0usize);
        for a in 0..counts[*x] {
            labels[*x] = a;
            let mut total = Acc::ZERO;
            for f in bucket {
                let s = strides(&f.scope, counts);
                let idx: usize = f.scope.iter().zip(&s).map(|(&v, st)| labels[v] * st).sum();
                total = total.add(f.values[idx]);
            }
            if a == 0 || total < best.0 {
                best = (total, a);
            }
        }
        labels[*x] = best.1;
    }
    finish(instance, labels, Method::Elim, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{Finite, Infinite};
    use crate::instance::CostTable;
    use crate::solvers::solve_brute_force;

    fn chain() -> EnergyInstance {
        let mut b = EnergyInstance::builder(vec![2, 3, 2]);
        b.set_unary(0, vec![Finite(3), Finite(-1)]);
        b.set_unary(1, vec![Finite(0), Finite(2), Finite(-2)]);
        b.set_pairwise(0, 1, CostTable::from_rows(&[[0, 4, 1], [2, 0, 5]]));
        b.set_pairwise(1, 2, CostTable::from_rows(&[[1, 0], [0, 1], [3, 7]]));
        b.build().unwrap()
    }

    #[test]
    fn chain_matches_brute_force() {
        let i = chain();
        let brute = solve_brute_force(&i).unwrap();
        for order in [vec![0, 1, 2], vec![2, 1, 0], vec![1, 0, 2]] {
            assert_eq!(solve_elimination(&i, &order).unwrap().value, brute.value);
        }
    }

    #[test]
    fn separable_instance_sums_unary_minima() {
        let mut b = EnergyInstance::builder(vec![3, 2]);
        b.set_unary(0, vec![Finite(4), Finite(1), Finite(2)]);
        b.set_unary(1, vec![Infinite, Finite(-3)]);
        let i = b.build().unwrap();
        let r = solve_elimination(&i, &min_degree_order(&i)).unwrap();
        assert_eq!(r.value, Finite(-2));
        assert_eq!(r.labeling.as_slice(), &[1, 1]);
    }

    #[test]
    fn rejects_bad_orders_and_wide_tables() {
        let i = chain();
        assert!(matches!(solve_elimination(&i, &[0, 1]), Err(Error::InvalidOrder(_))));
        assert!(matches!(solve_elimination(&i, &[0, 0, 1]), Err(Error::InvalidOrder(_))));
        assert!(matches!(solve_elimination_with_limit(&i, &[1, 0, 2], 5), Err(Error::WidthExceeded { .. })));
    }

    #[test]
    fn min_degree_prefers_leaves() {
        let i = chain();
        assert_eq!(min_degree_order(&i), vec![0, 1, 2]);
    }
}
