//! Dense bit-packed digraphs and the combinatorial algorithms run on them.

mod connectivity;
pub mod families;
pub(crate) mod matching;
mod search;
pub(crate) mod structure;

pub use connectivity::{connectivity_numbers, Connectivity};
pub use matching::{
    bipartite_perfect_matching, bipartition, cycle_factor, hall_violations, is_hall_violation,
    perfect_two_matching, term_rank, CycleFactor, TermRank, TwoMatching, TwoMatchingPart,
    DEFAULT_HALL_LIMIT,
};
pub use search::{
    automorphism_group, find_isomorphism, hamiltonian_cycle, induced_subgraph_search,
    AutomorphismGroup, DEFAULT_AUTOMORPHISM_LIMIT, DEFAULT_HAMILTONIAN_LIMIT,
};
pub use structure::{diameter, quadrangularity_violations, structure_report, StructureReport};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A digraph on vertices `0..n` stored as one bitset per row of its
/// adjacency matrix. Loops are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a digraph needs at least one vertex"));
        }
        let words = n.div_ceil(64);
        Ok(Digraph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n)?;
        for (i, j) in arcs {
            if i >= n || j >= n {
                return Err(Error::input(format!(
                    "arc ({i},{j}) out of range for {n} vertices"
                )));
            }
            d.set_arc(i, j, true);
        }
        Ok(d)
    }

    /// Symmetric digraph with both arcs of every listed edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Digraph::from_arcs(n, edges.into_iter().flat_map(|(a, b)| [(a, b), (b, a)]))
    }

    /// Builds from a square 0/1 matrix. Any other entry is rejected.
    pub fn from_matrix<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut d = Digraph::empty(n)?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => d.set_arc(i, j, true),
                    other => {
                        return Err(Error::input(format!(
                            "entry ({i},{j}) is {other}, expected 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(d)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    d.set_arc(i, j, true);
                }
            }
        }
        Ok(d)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set_arc(&mut self, i: usize, j: usize, present: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        if present {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    /// Row `i` of the adjacency matrix as packed words.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn out_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(i))
    }

    pub fn in_neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.has_arc(i, j))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        self.in_neighbors(j).count()
    }

    pub fn arc_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.out_neighbors(i).map(move |j| (i, j)))
    }

    /// Edges `{i, j}` with `i < j` and both arcs present.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs()
            .filter(move |&(i, j)| i < j && self.has_arc(j, i))
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|i| self.has_arc(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(i, j)| self.has_arc(j, i))
    }

    /// Every vertex has in- and out-degree `d`; returns `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.out_degree(0);
        (0..self.n)
            .all(|v| self.out_degree(v) == d && self.in_degree(v) == d)
            .then_some(d)
    }

    pub fn transpose(&self) -> Digraph {
        let mut t = Digraph::empty(self.n).expect("n >= 1");
        for (i, j) in self.arcs() {
            t.set_arc(j, i, true);
        }
        t
    }

    /// The digraph with vertex `v` relabelled `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        check_permutation(perm, self.n)?;
        Digraph::from_arcs(self.n, self.arcs().map(|(i, j)| (perm[i], perm[j])))
    }

    /// The subdigraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph> {
        let mut d = Digraph::empty(vertices.len())?;
        for (a, &i) in vertices.iter().enumerate() {
            self.check_vertex(i)?;
            for (b, &j) in vertices.iter().enumerate() {
                if self.has_arc(i, j) {
                    d.set_arc(a, b, true);
                }
            }
        }
        Ok(d)
    }

    /// Union with a loop at every vertex.
    pub fn with_loops(&self) -> Digraph {
        let mut d = self.clone();
        for i in 0..self.n {
            d.set_arc(i, i, true);
        }
        d
    }

    /// Adjacency matrix as rows of 0/1.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.has_arc(i, j) as u8).collect())
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )))
        }
    }

    /// `N⁻(S)`, `N⁺(S)` or their union.
    pub fn neighborhood(&self, set: &VertexSet, dir: Direction) -> Result<VertexSet> {
        for &v in set.members() {
            self.check_vertex(v)?;
        }
        let mut hit = vec![false; self.n];
        for &v in set.members() {
            if matches!(dir, Direction::Out | Direction::Both) {
                for u in self.out_neighbors(v) {
                    hit[u] = true;
                }
            }
            if matches!(dir, Direction::In | Direction::Both) {
                for u in self.in_neighbors(v) {
                    hit[u] = true;
                }
            }
        }
        Ok(VertexSet::from_mask(&hit))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Digraph(n={})", self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n)
                .map(|j| if self.has_arc(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::input(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::input(format!("{perm:?} is not a permutation")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
    Both,
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        )
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_is_its_own_neighbor() {
        let d = Digraph::from_arcs(1, [(0, 0)]).unwrap();
        let out = d
            .neighborhood(&VertexSet::singleton(0), Direction::Out)
            .unwrap();
        assert_eq!(out.members(), &[0]);
    }

    #[test]
    fn directed_triangle_in_neighborhood() {
        let d = families::directed_cycle(3);
        let inn = d
            .neighborhood(&VertexSet::singleton(0), Direction::In)
            .unwrap();
        assert_eq!(inn.members(), &[2]);
    }

    #[test]
    fn neighborhood_rejects_bad_vertex() {
        let d = families::directed_cycle(3);
        assert!(matches!(
            d.neighborhood(&VertexSet::singleton(3), Direction::Both),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn matrix_rejects_non_binary_and_ragged() {
        assert!(Digraph::from_matrix(&[[0u8, 2], [1, 0]]).is_err());
        assert!(Digraph::from_matrix(&[vec![0u8, 1], vec![1]]).is_err());
        assert!(Digraph::empty(0).is_err());
    }

    #[test]
    fn wide_rows_span_words() {
        let d = Digraph::from_arcs(130, [(0, 129), (129, 64), (5, 5)]).unwrap();
        assert_eq!(d.out_neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(d.in_neighbors(64).collect::<Vec<_>>(), vec![129]);
        assert_eq!(d.arc_count(), 3);
        assert!(d.has_loops());
        assert_eq!(d.transpose().arcs().collect::<Vec<_>>(), vec![(5, 5), (64, 129), (129, 0)]);
    }
}
