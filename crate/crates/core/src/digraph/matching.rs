use super::{Digraph, VertexSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Default vertex limit for the exhaustive Hall-condition check.
pub const DEFAULT_HALL_LIMIT: usize = 16;
const HALL_HARD_LIMIT: usize = 24;

/// Hopcroft–Karp. `adj[u]` lists the right vertices adjacent to left vertex
/// `u`, scanned in order, so the witness matching is reproducible. Returns
/// the partner of each left vertex (`NONE` if unmatched).
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Vec<usize> {
    let left = adj.len();
    let mut match_l = vec![NONE; left];
    let mut match_r = vec![NONE; right];
    let mut dist = vec![0usize; left];
    let mut next = vec![0usize; left];

    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        match_l: &mut [usize],
        match_r: &mut [usize],
        dist: &mut [usize],
        next: &mut [usize],
    ) -> bool {
        while next[u] < adj[u].len() {
            let v = adj[u][next[u]];
            next[u] += 1;
            let w = match_r[v];
            if w == NONE
                || (dist[w] == dist[u] + 1 && augment(w, adj, match_l, match_r, dist, next))
            {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = NONE;
        false
    }

    loop {
        let mut queue = VecDeque::new();
        for u in 0..left {
            if match_l[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = NONE;
            }
        }
        let mut free_reached = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_r[v] {
                    NONE => free_reached = true,
                    w if dist[w] == NONE => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !free_reached {
            break;
        }
        next.fill(0);
        for u in 0..left {
            if match_l[u] == NONE {
                augment(u, adj, &mut match_l, &mut match_r, &mut dist, &mut next);
            }
        }
    }
    match_l
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRank {
    pub rank: usize,
    /// `(row, column)` pairs of one maximum matching.
    pub matching: Vec<(usize, usize)>,
}

/// Maximum number of ones in the adjacency matrix with no two in a line.
pub fn term_rank(d: &Digraph) -> TermRank {
    let adj: Vec<Vec<usize>> = (0..d.n()).map(|i| d.out_neighbors(i).collect()).collect();
    let m = hopcroft_karp(&adj, d.n());
    let matching: Vec<(usize, usize)> = m
        .iter()
        .enumerate()
        .filter(|&(_, &j)| j != NONE)
        .map(|(i, &j)| (i, j))
        .collect();
    TermRank {
        rank: matching.len(),
        matching,
    }
}

/// A spanning 1-regular subdigraph, stored as the successor of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFactor {
    pub successor: Vec<usize>,
}

impl CycleFactor {
    /// The dicycles, each starting from its smallest vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.successor.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v);
                v = self.successor[v];
            }
            out.push(cyc);
        }
        out
    }
}

pub fn cycle_factor(d: &Digraph) -> Option<CycleFactor> {
    let tr = term_rank(d);
    (tr.rank == d.n()).then(|| {
        let mut successor = vec![0; d.n()];
        for (i, j) in tr.matching {
            successor[i] = j;
        }
        CycleFactor { successor }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum TwoMatchingPart {
    Edge { a: usize, b: usize },
    Cycle { vertices: Vec<usize> },
}

/// Vertex-disjoint edges and cycles covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoMatching {
    pub parts: Vec<TwoMatchingPart>,
}

fn require_graph(d: &Digraph) -> Result<()> {
    if !d.is_symmetric() {
        return Err(Error::input("operation requires a symmetric digraph"));
    }
    if d.has_loops() {
        return Err(Error::input("operation requires a loop-free graph"));
    }
    Ok(())
}

/// A perfect 2-matching of a loop-free graph. A permutation `P` with
/// `M(D)∘P = P` has no fixed points here, so its 2-cycles are edges and its
/// longer cycles are graph cycles.
pub fn perfect_two_matching(d: &Digraph) -> Result<Option<TwoMatching>> {
    require_graph(d)?;
    Ok(cycle_factor(d).map(|cf| TwoMatching {
        parts: cf
            .cycles()
            .into_iter()
            .map(|c| match c.as_slice() {
                [a, b] => TwoMatchingPart::Edge { a: *a, b: *b },
                _ => TwoMatchingPart::Cycle { vertices: c },
            })
            .collect(),
    }))
}

/// Two-colouring of a loop-free graph, or `None` if it has an odd cycle.
/// Within each component the smallest vertex gets colour 0.
pub fn bipartition(d: &Digraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = d.n();
    let mut colour = vec![NONE; n];
    for s in 0..n {
        if colour[s] != NONE {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in d.out_neighbors(v).chain(d.in_neighbors(v)) {
                if colour[u] == NONE {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if colour[u] == colour[v] {
                    return None;
                }
            }
        }
    }
    let side = |c| (0..n).filter(|&v| colour[v] == c).collect();
    Some((side(0), side(1)))
}

/// A perfect matching of a bipartite graph, as edges `(left, right)`.
pub fn bipartite_perfect_matching(d: &Digraph) -> Result<Option<Vec<(usize, usize)>>> {
    require_graph(d)?;
    let (left, right) =
        bipartition(d).ok_or_else(|| Error::input("graph is not bipartite"))?;
    if left.len() != right.len() {
        return Ok(None);
    }
    let pos: Vec<usize> = {
        let mut p = vec![0; d.n()];
        for (k, &v) in right.iter().enumerate() {
            p[v] = k;
        }
        p
    };
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| d.out_neighbors(u).map(|v| pos[v]).collect())
        .collect();
    let m = hopcroft_karp(&adj, right.len());
    if m.contains(&NONE) {
        return Ok(None);
    }
    Ok(Some(
        left.iter()
            .zip(&m)
            .map(|(&u, &k)| (u, right[k]))
            .collect(),
    ))
}

/// `|S| > |N(S)|`.
pub fn is_hall_violation(d: &Digraph, set: &VertexSet) -> Result<bool> {
    let nb = d.neighborhood(set, super::Direction::Out)?;
    Ok(set.len() > nb.len())
}

/// Every inclusion-minimal `S` with `|S| > |N(S)|`, by exhaustive subset
/// enumeration. Empty iff the Hall condition holds.
pub fn hall_violations(d: &Digraph, max_n: usize) -> Result<Vec<VertexSet>> {
    if !d.is_symmetric() {
        return Err(Error::input("Hall check requires a symmetric digraph"));
    }
    let n = d.n();
    let limit = max_n.min(HALL_HARD_LIMIT);
    if n > limit {
        return Err(Error::Capacity {
            what: "vertex count for the Hall check",
            got: n,
            limit,
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| d.out_neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let total = 1usize << n;
    // covered[S]: S or some subset of S violates.
    let mut violates = vec![false; total];
    let mut covered = vec![false; total];
    let mut neighbourhood = vec![0u32; total];
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        neighbourhood[s] = neighbourhood[s & (s - 1)] | nbr[low];
        violates[s] = s.count_ones() > neighbourhood[s].count_ones();
    }
    let mut minimal = Vec::new();
    for s in 1..total {
        let below = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .any(|v| covered[s & !(1 << v)]);
        covered[s] = violates[s] || below;
        if violates[s] && !below {
            minimal.push(VertexSet::new((0..n).filter(|&v| s >> v & 1 == 1).collect()));
        }
    }
    minimal.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    Ok(minimal)
}
