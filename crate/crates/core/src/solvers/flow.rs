use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Arc {
    to: usize,
    cap: i64,
}

/// A directed network with integer capacities. Arcs are stored in pairs
/// (forward, residual reverse) so arc `i ^ 1` is the partner of arc `i`.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: i64,
    /// `true` for nodes on the source side of the minimum cut.
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes && source != sink, "invalid terminals");
        FlowNetwork { source, sink, arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    pub fn num_nodes(&self) -> usize {
        self.out.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> Result<()> {
        if cap < 0 {
            return Err(Error::InvalidInstance(format!("negative capacity {cap} on arc {from}->{to}")));
        }
        if from >= self.num_nodes() || to >= self.num_nodes() {
            return Err(Error::InvalidInstance(format!("arc {from}->{to} references a missing node")));
        }
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
        Ok(())
    }

    /// Forward arcs as `(from, to, capacity)`.
    pub fn arcs(&self) -> Vec<(usize, usize, i64)> {
        self.arcs.chunks(2).map(|pair| (pair[1].to, pair[0].to, pair[0].cap)).collect()
    }
}

fn bfs_levels(net: &FlowNetwork, residual: &[i64]) -> Vec<Option<usize>> {
    let mut level = vec![None; net.num_nodes()];
    level[net.source] = Some(0);
    let mut queue = VecDeque::from([net.source]);
    while let Some(u) = queue.pop_front() {
        for &a in &net.out[u] {
            let v = net.arcs[a].to;
            if residual[a] > 0 && level[v].is_none() {
                level[v] = Some(level[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    level
}

fn augment(
    net: &FlowNetwork,
    residual: &mut [i64],
    level: &[Option<usize>],
    next: &mut [usize],
    u: usize,
    limit: i64,
) -> i64 {
    if u == net.sink {
        return limit;
    }
    while next[u] < net.out[u].len() {
        let a = net.out[u][next[u]];
        let v = net.arcs[a].to;
        if residual[a] > 0 && level[v] == level[u].map(|l| l + 1) {
            let pushed = augment(net, residual, level, next, v, limit.min(residual[a]));
            if pushed > 0 {
                residual[a] -= pushed;
                residual[a ^ 1] += pushed;
                return pushed;
            }
        }
        next[u] += 1;
    }
    0
}

/// Dinic's algorithm. The returned cut keeps every node that cannot reach
/// the sink in the final residual graph on the source side, which is the
/// largest minimum-cut source set.
pub fn max_flow(net: &FlowNetwork) -> Result<MaxFlow> {
    let mut residual: Vec<i64> = net.arcs.iter().map(|a| a.cap).collect();
    let mut value = 0i64;
    loop {
        let level = bfs_levels(net, &residual);
        if level[net.sink].is_none() {
            break;
        }
        let mut next = vec![0usize; net.num_nodes()];
        loop {
            let pushed = augment(net, &mut residual, &level, &mut next, net.source, i64::MAX);
            if pushed == 0 {
                break;
            }
            value = value.checked_add(pushed).ok_or(Error::Overflow)?;
        }
    }

    // Reverse search from the sink over arcs with residual capacity.
    let mut reaches_sink = vec![false; net.num_nodes()];
    reaches_sink[net.sink] = true;
    let mut queue = VecDeque::from([net.sink]);
    while let Some(v) = queue.pop_front() {
        for &a in &net.out[v] {
            // a is v→u; its partner u→v carries residual[a ^ 1].
            let u = net.arcs[a].to;
            if residual[a ^ 1] > 0 && !reaches_sink[u] {
                reaches_sink[u] = true;
                queue.push_back(u);
            }
        }
    }
    Ok(MaxFlow { value, source_side: reaches_sink.iter().map(|r| !r).collect() })
}
