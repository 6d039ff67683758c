use super::{Digraph, VertexSet};
use crate::report::Side;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Components, bridges and cut-vertices of a digraph. Connectivity is weak
/// connectivity: a bridge or cut-vertex is one whose deletion increases the
/// number of weak components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub weak_components: Vec<Vec<usize>>,
    pub strong_components: Vec<Vec<usize>>,
    pub directed_bridges: Vec<(usize, usize)>,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: VertexSet,
    pub is_symmetric: bool,
}

impl StructureReport {
    pub fn is_strongly_connected(&self) -> bool {
        self.strong_components.len() == 1
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.weak_components.len() == 1
    }

    /// Index of the weak component containing `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.weak_components
            .iter()
            .position(|c| c.contains(&v))
            .expect("every vertex lies in a component")
    }
}

pub fn structure_report(d: &Digraph) -> StructureReport {
    let adj = underlying(d);
    let ll = lowlink(&adj);
    let mut directed_bridges = Vec::new();
    let mut bridges = Vec::new();
    for (a, b) in ll.bridges {
        let (a, b) = (a.min(b), a.max(b));
        match (d.has_arc(a, b), d.has_arc(b, a)) {
            (true, true) => bridges.push((a, b)),
            (true, false) => directed_bridges.push((a, b)),
            (false, true) => directed_bridges.push((b, a)),
            (false, false) => unreachable!("underlying edge without an arc"),
        }
    }
    directed_bridges.sort_unstable();
    bridges.sort_unstable();
    StructureReport {
        weak_components: weak_components_of(&adj),
        strong_components: strong_components(d),
        directed_bridges,
        bridges,
        cut_vertices: VertexSet::from_mask(&ll.cut),
        is_symmetric: d.is_symmetric(),
    }
}

/// Loop-free underlying simple graph as adjacency lists.
pub(crate) fn underlying(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if d.has_arc(i, j) || d.has_arc(j, i) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

pub(crate) fn weak_components(d: &Digraph) -> Vec<Vec<usize>> {
    weak_components_of(&underlying(d))
}

fn weak_components_of(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Kosaraju, iterative. Components sorted internally and by first vertex.
pub(crate) fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let out: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbors(v).collect()).collect();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, idx)) = stack.last_mut() {
            if let Some(&u) = out[*v].get(*idx) {
                *idx += 1;
                if !seen[u] {
                    seen[u] = true;
                    stack.push((u, 0));
                }
            } else {
                order.push(*v);
                stack.pop();
            }
        }
    }
    let t = d.transpose();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in t.out_neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    members.push(u);
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps.sort_unstable_by_key(|c| c[0]);
    comps
}

struct LowLink {
    bridges: Vec<(usize, usize)>,
    cut: Vec<bool>,
}

/// Bridges and articulation points of a simple undirected graph.
fn lowlink(adj: &[Vec<usize>]) -> LowLink {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&u) = adj[v].get(*idx) {
                *idx += 1;
                if disc[u] == usize::MAX {
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, v, 0));
                } else if u != parent {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push((p, v));
                    }
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            cut[root] = true;
        }
    }
    LowLink { bridges, cut }
}

/// A vertex pair whose common in- or out-neighbourhood has exactly one member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadViolation {
    pub pair: (usize, usize),
    pub side: Side,
}

/// All violations of quadrangularity, pairs in lexicographic order with the
/// in-side reported before the out-side. Empty iff the digraph is quadrangular.
pub fn quadrangularity_violations(d: &Digraph) -> Vec<QuadViolation> {
    let t = d.transpose();
    let common = |g: &Digraph, i: usize, j: usize| -> u32 {
        g.row(i)
            .iter()
            .zip(g.row(j))
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    };
    let mut out = Vec::new();
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            if common(&t, i, j) == 1 {
                out.push(QuadViolation {
                    pair: (i, j),
                    side: Side::In,
                });
            }
            if common(d, i, j) == 1 {
                out.push(QuadViolation {
                    pair: (i, j),
                    side: Side::Out,
                });
            }
        }
    }
    out
}

/// Largest shortest-dipath distance over ordered pairs; `None` when some
/// vertex cannot reach another.
pub fn diameter(d: &Digraph) -> Option<usize> {
    let n = d.n();
    let mut best = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for u in d.out_neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    best = best.max(dist[u]);
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached < n {
            return None;
        }
    }
    Some(best)
}
