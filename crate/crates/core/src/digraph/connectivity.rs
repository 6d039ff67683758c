use super::structure::weak_components;
use super::Digraph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub vertex: usize,
    pub edge: usize,
    /// Internally vertex-disjoint paths between the requested pair, present
    /// when the vertex connectivity is at least 2.
    pub paths: Option<Vec<Vec<usize>>>,
}

struct Edge {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Unit-capacity max-flow by BFS augmentation.
struct Network {
    adj: Vec<Vec<Edge>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            adj: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add(&mut self, a: usize, b: usize, cap: u32) {
        let ra = self.adj[b].len();
        let rb = self.adj[a].len();
        self.adj[a].push(Edge { to: b, cap, rev: ra });
        self.adj[b].push(Edge { to: a, cap: 0, rev: rb });
    }

    fn max_flow(&mut self, s: usize, t: usize, bound: usize) -> usize {
        let mut flow = 0;
        while flow < bound {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for (k, e) in self.adj[v].iter().enumerate() {
                    if e.cap > 0 && !seen[e.to] {
                        seen[e.to] = true;
                        prev[e.to] = Some((v, k));
                        queue.push_back(e.to);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            while let Some((u, k)) = prev[v] {
                self.adj[u][k].cap -= 1;
                let rev = self.adj[u][k].rev;
                self.adj[v][rev].cap += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

const BIG: u32 = u32::MAX / 4;

/// Split-vertex network: `2v` is v's entry, `2v+1` its exit.
fn vertex_network(d: &Digraph, s: usize, t: usize) -> Network {
    let n = d.n();
    let mut net = Network::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { BIG } else { 1 };
        net.add(2 * v, 2 * v + 1, cap);
    }
    for (a, b) in d.arcs().filter(|(a, b)| a != b) {
        net.add(2 * a + 1, 2 * b, 1);
    }
    net
}

fn vertex_disjoint(d: &Digraph, s: usize, t: usize, bound: usize) -> usize {
    vertex_network(d, s, t).max_flow(2 * s + 1, 2 * t, bound)
}

fn edge_disjoint(d: &Digraph, s: usize, t: usize, bound: usize) -> usize {
    let mut net = Network::new(d.n());
    for (a, b) in d.arcs().filter(|(a, b)| a != b) {
        net.add(a, b, 1);
    }
    net.max_flow(s, t, bound)
}

/// Up to `k` internally disjoint `s`–`t` paths read off a max flow.
fn disjoint_paths(d: &Digraph, s: usize, t: usize, k: usize) -> Vec<Vec<usize>> {
    let mut net = vertex_network(d, s, t);
    net.max_flow(2 * s + 1, 2 * t, k);
    // Saturated forward arcs between split vertices carry the flow.
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); d.n()];
    for a in 0..d.n() {
        for e in &net.adj[2 * a + 1] {
            if e.to % 2 == 0 && e.to / 2 != a && e.cap == 0 && net.adj[e.to][e.rev].cap == 1 {
                used[a].push(e.to / 2);
            }
        }
    }
    let mut paths = Vec::new();
    while let Some(first) = used[s].pop() {
        let mut path = vec![s, first];
        let mut v = first;
        while v != t {
            v = used[v].pop().expect("flow is conserved");
            path.push(v);
        }
        paths.push(path);
    }
    paths.sort();
    paths
}

/// Vertex and edge connectivity of a connected graph on at least three
/// vertices, by max-flow over vertex pairs. If `pair` is given and the
/// vertex connectivity is at least 2, two independent paths joining it are
/// returned as well.
pub fn connectivity_numbers(d: &Digraph, pair: Option<(usize, usize)>) -> Result<Connectivity> {
    if !d.is_symmetric() {
        return Err(Error::input("connectivity requires a symmetric digraph"));
    }
    let n = d.n();
    if n < 3 {
        return Err(Error::input("connectivity requires at least 3 vertices"));
    }
    if weak_components(d).len() != 1 {
        return Err(Error::input("connectivity requires a connected graph"));
    }
    if let Some((s, t)) = pair {
        d.check_vertex(s)?;
        d.check_vertex(t)?;
        if s == t {
            return Err(Error::input("path endpoints must differ"));
        }
    }

    let mut vertex = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !d.has_arc(s, t) {
                vertex = vertex.min(vertex_disjoint(d, s, t, vertex));
            }
        }
    }
    let mut edge = usize::MAX;
    for t in 1..n {
        edge = edge.min(edge_disjoint(d, 0, t, edge));
    }
    let paths = match pair {
        Some((s, t)) if vertex >= 2 => Some(disjoint_paths(d, s, t, 2)),
        _ => None,
    };
    Ok(Connectivity {
        vertex,
        edge,
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families;

    #[test]
    fn cycle_and_complete() {
        let c = connectivity_numbers(&families::cycle(6), None).unwrap();
        assert_eq!((c.vertex, c.edge), (2, 2));
        let k = connectivity_numbers(&families::complete(4), None).unwrap();
        assert_eq!((k.vertex, k.edge), (3, 3));
    }

    #[test]
    fn bowtie_has_a_cut_vertex() {
        let d = Digraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let c = connectivity_numbers(&d, Some((0, 4))).unwrap();
        assert_eq!(c.vertex, 1);
        assert_eq!(c.edge, 2);
        assert!(c.paths.is_none());
    }

    #[test]
    fn two_independent_paths() {
        let d = families::cycle(6);
        let c = connectivity_numbers(&d, Some((0, 3))).unwrap();
        let paths = c.paths.unwrap();
        assert_eq!(paths.len(), 2);
        for p in &paths {
            assert_eq!((p[0], *p.last().unwrap()), (0, 3));
            assert!(p.windows(2).all(|w| d.has_arc(w[0], w[1])));
        }
        let inner: Vec<usize> = paths.iter().flat_map(|p| p[1..p.len() - 1].to_vec()).collect();
        let mut dedup = inner.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(inner.len(), dedup.len());
        // adjacent endpoints: the edge itself is one of the paths
        let adj = connectivity_numbers(&d, Some((0, 1))).unwrap().paths.unwrap();
        assert!(adj.contains(&vec![0, 1]));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(connectivity_numbers(&families::k2(), None).is_err());
        assert!(connectivity_numbers(&families::directed_cycle(4), None).is_err());
        assert!(connectivity_numbers(&Digraph::empty(3).unwrap(), None).is_err());
    }
}
