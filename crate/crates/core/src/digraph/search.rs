//! Small-n backtracking searches: hamiltonian cycles, automorphisms,
//! isomorphisms and induced subgraphs.

use super::structure::underlying;
use super::Digraph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

pub const DEFAULT_HAMILTONIAN_LIMIT: usize = 12;
pub const DEFAULT_AUTOMORPHISM_LIMIT: usize = 10;
const MASK_LIMIT: usize = 64;

fn capacity(what: &'static str, got: usize, limit: usize) -> Error {
    Error::Capacity { what, got, limit }
}

/// A spanning dicycle as a vertex sequence starting at 0, each consecutive
/// pair (and last → first) an arc. On two vertices this is the 2-cycle
/// through both arcs of an edge; on one vertex it is the loop.
pub fn hamiltonian_cycle(d: &Digraph, limit_n: usize) -> Result<Option<Vec<usize>>> {
    let n = d.n();
    let limit = limit_n.min(MASK_LIMIT);
    if n > limit {
        return Err(capacity("vertex count for hamiltonian search", n, limit));
    }
    if n == 1 {
        return Ok(d.has_arc(0, 0).then(|| vec![0]));
    }
    let out: Vec<u64> = (0..n).map(|v| d.row(v)[0] & !(1 << v)).collect();
    let inn: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| u != v && d.has_arc(u, v)).fold(0, |m, u| m | 1 << u))
        .collect();
    if out.iter().chain(&inn).any(|&m| m == 0) {
        return Ok(None);
    }

    struct Search<'a> {
        n: usize,
        out: &'a [u64],
        inn: &'a [u64],
        path: Vec<usize>,
    }

    impl Search<'_> {
        fn feasible(&self, unvisited: u64, last: usize) -> bool {
            let mut rest = unvisited;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.out[w] & (unvisited | 1) == 0 || self.inn[w] & (unvisited | 1 << last) == 0
                {
                    return false;
                }
            }
            true
        }

        fn extend(&mut self, unvisited: u64) -> bool {
            let last = *self.path.last().unwrap();
            if unvisited == 0 {
                return self.out[last] & 1 == 1;
            }
            let mut cand = self.out[last] & unvisited;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let rest = unvisited & !(1 << v);
                if !self.feasible(rest, v) {
                    continue;
                }
                self.path.push(v);
                if self.extend(rest) {
                    return true;
                }
                self.path.pop();
            }
            false
        }
    }

    let mut s = Search {
        n,
        out: &out,
        inn: &inn,
        path: vec![0],
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let found = s.extend(all & !1);
    debug_assert!(!found || s.path.len() == s.n);
    Ok(found.then_some(s.path))
}

/// Backtracking vertex matcher shared by the isomorphism-type searches.
/// Pattern vertices are placed in BFS order so each new vertex usually has
/// an already-placed neighbour to draw candidates from.
struct Matcher<'a> {
    pattern: &'a Digraph,
    target: &'a Digraph,
    exact_degrees: bool,
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Digraph, target: &'a Digraph, exact_degrees: bool) -> Self {
        let adj = underlying(pattern);
        let n = pattern.n();
        let mut order = Vec::with_capacity(n);
        let mut anchor = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for s in 0..n {
            if placed[s] {
                continue;
            }
            placed[s] = true;
            let mut queue = VecDeque::from([(s, None)]);
            while let Some((v, a)) = queue.pop_front() {
                order.push(v);
                anchor.push(a);
                for &u in &adj[v] {
                    if !placed[u] {
                        placed[u] = true;
                        queue.push_back((u, Some(v)));
                    }
                }
            }
        }
        Matcher {
            pattern,
            target,
            exact_degrees,
            order,
            anchor,
            map: vec![usize::MAX; n],
            used: vec![false; target.n()],
        }
    }

    fn compatible(&self, k: usize, c: usize) -> bool {
        let (p, t) = (self.pattern, self.target);
        let v = self.order[k];
        if self.used[c] || p.has_arc(v, v) != t.has_arc(c, c) {
            return false;
        }
        let (po, pi, to, ti) = (p.out_degree(v), p.in_degree(v), t.out_degree(c), t.in_degree(c));
        if self.exact_degrees && (po != to || pi != ti) || to < po || ti < pi {
            return false;
        }
        self.order[..k].iter().all(|&w| {
            let m = self.map[w];
            p.has_arc(v, w) == t.has_arc(c, m) && p.has_arc(w, v) == t.has_arc(m, c)
        })
    }

    /// Calls `visit` on every complete map; stops when it returns `false`.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        self.step(0, visit);
    }

    fn step(&mut self, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[k];
        let candidates: Vec<usize> = match self.anchor[k] {
            Some(u) if self.pattern.has_arc(u, v) => {
                self.target.out_neighbors(self.map[u]).collect()
            }
            Some(u) => self.target.in_neighbors(self.map[u]).collect(),
            None => (0..self.target.n()).collect(),
        };
        for c in candidates {
            if !self.compatible(k, c) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            let go_on = self.step(k + 1, visit);
            self.used[c] = false;
            self.map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// An isomorphism `a → b` as the image of each vertex of `a`.
pub fn find_isomorphism(a: &Digraph, b: &Digraph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return None;
    }
    let mut found = None;
    Matcher::new(a, b, true).run(&mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// An injective map realising `h` as an induced subdigraph of `d`.
pub fn induced_subgraph_search(d: &Digraph, h: &Digraph) -> Option<Vec<usize>> {
    if h.n() > d.n() {
        return None;
    }
    let mut found = None;
    Matcher::new(h, d, false).run(&mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismGroup {
    /// Every automorphism, as the image of each vertex; the identity first.
    pub elements: Vec<Vec<usize>>,
    pub vertex_transitive: bool,
    pub arc_transitive: bool,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn automorphism_group(d: &Digraph, limit_n: usize) -> Result<AutomorphismGroup> {
    let n = d.n();
    if n > limit_n {
        return Err(capacity("vertex count for automorphism search", n, limit_n));
    }
    let mut elements = Vec::new();
    Matcher::new(d, d, true).run(&mut |m| {
        elements.push(m.to_vec());
        true
    });
    elements.sort();
    let vertex_transitive = {
        let mut hit = vec![false; n];
        for g in &elements {
            hit[g[0]] = true;
        }
        hit.iter().all(|&b| b)
    };
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let arc_transitive = match arcs.first() {
        None => true,
        Some(&(a, b)) => {
            let mut orbit: Vec<(usize, usize)> = elements.iter().map(|g| (g[a], g[b])).collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit.len() == arcs.len()
        }
    };
    Ok(AutomorphismGroup {
        elements,
        vertex_transitive,
        arc_transitive,
    })
}
