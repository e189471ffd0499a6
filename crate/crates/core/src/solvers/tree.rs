use super::{finish, Acc, Method, SolveResult};
use crate::error::{Error, Result};
use crate::instance::{EnergyInstance, NodeId};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `Ok(())` for a forest, else the first edge (in edge order) that closes a
/// cycle.
fn check_forest(instance: &EnergyInstance) -> Result<()> {
    let mut parent: Vec<usize> = (0..instance.num_nodes()).collect();
    for e in instance.edge_list() {
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a == b {
            return Err(Error::Cycle(e));
        }
        parent[a] = b;
    }
    Ok(())
}

pub fn is_forest(instance: &EnergyInstance) -> bool {
    check_forest(instance).is_ok()
}

/// Min-sum dynamic programming on a forest: each component is rooted at
/// its smallest node, messages flow leaf to root and the argmins are read
/// back root to leaf, preferring the smallest label on ties.
pub fn solve_tree_dp(instance: &EnergyInstance) -> Result<SolveResult> {
    check_forest(instance)?;
    let n = instance.num_nodes();
    let adj = instance.adjacency();

    // Preorder with parent pointers, one component at a time.
    let mut parent: Vec<Option<NodeId>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut preorder = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            preorder.push(u);
            for &v in adj[u].iter().rev() {
                if !visited[v] {
                    visited[v] = true;
                    parent[v] = Some(u);
                    stack.push(v);
                }
            }
        }
    }

    // belief[u][a]: unary of u plus the messages of its children.
    let mut belief: Vec<Vec<Acc>> = (0..n).map(|u| instance.unary(u).iter().map(|&c| c.into()).collect()).collect();
    // choice[u][b]: best label of u given its parent's label b.
    let mut choice: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in preorder.iter().rev() {
        let Some(p) = parent[u] else { continue };
        let mut message = Vec::with_capacity(instance.label_count(p));
        let mut best_labels = Vec::with_capacity(instance.label_count(p));
        for b in 0..instance.label_count(p) {
            let mut best = (Acc::Inf, 0usize);
            for (a, &own) in belief[u].iter().enumerate() {
                let pair = instance.pair_cost(u, p, a, b).expect("tree edge");
                let total = own.add(pair.into());
                if a == 0 || total < best.0 {
                    best = (total, a);
                }
            }
            message.push(best.0);
            best_labels.push(best.1);
        }
        for (slot, m) in belief[p].iter_mut().zip(message) {
            *slot = slot.add(m);
        }
        choice[u] = best_labels;
    }

    let mut labels = vec![0usize; n];
    for &u in &preorder {
        labels[u] = match parent[u] {
            Some(p) => choice[u][labels[p]],
            None => {
                let mut best = (Acc::Inf, 0usize);
                for (a, &v) in belief[u].iter().enumerate() {
                    if a == 0 || v < best.0 {
                        best = (v, a);
                    }
                }
                best.1
            }
        };
    }
    finish(instance, labels, Method::Tree, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Finite;
    use crate::instance::{CostTable, Edge};
    use crate::solvers::solve_brute_force;

    #[test]
    fn single_node_is_unary_argmin() {
        let mut b = EnergyInstance::builder(vec![3]);
        b.set_unary(0, vec![Finite(2), Finite(-1), Finite(-1)]);
        let r = solve_tree_dp(&b.build().unwrap()).unwrap();
        assert_eq!((r.labeling.as_slice(), r.value), (&[1][..], Finite(-1)));
    }

    #[test]
    fn chain_and_star_match_brute_force() {
        let table = CostTable::from_rows(&[[0, 3, -1], [2, 0, 4], [1, -2, 0]]);
        let mut chain = EnergyInstance::builder(vec![3; 4]);
        for u in 0..3 {
            chain.set_pairwise(u, u + 1, table.clone());
            chain.set_unary(u, vec![Finite(u as i64), Finite(-1), Finite(2)]);
        }
        let mut star = EnergyInstance::builder(vec![3; 4]);
        for leaf in 1..4 {
            star.set_pairwise(0, leaf, table.clone());
        }
        for b in [chain, star] {
            let i = b.build().unwrap();
            assert_eq!(solve_tree_dp(&i).unwrap().value, solve_brute_force(&i).unwrap().value);
        }
    }

    #[test]
    fn cycle_is_rejected() {
        let mut b = EnergyInstance::builder(vec![2; 3]);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            b.set_pairwise(u, v, CostTable::from_rows(&[[0, 1], [1, 0]]));
        }
        assert_eq!(solve_tree_dp(&b.build().unwrap()).unwrap_err(), Error::Cycle(Edge::new(1, 2)));
    }
}
