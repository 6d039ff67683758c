//! Line digraphs: construction, recognition by the identical-or-orthogonal
//! row/column test, base recovery, and the block structure of the
//! adjacency matrix.

use crate::digraph::{iter_bits, Digraph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A digraph whose arcs may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multidigraph {
    n: usize,
    mult: Vec<u32>,
}

impl Multidigraph {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::input("a multidigraph needs at least one vertex"));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::input(format!("row {i} has the wrong length")));
        }
        Ok(Multidigraph {
            n,
            mult: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(n: usize) -> Self {
        Multidigraph {
            n,
            mult: vec![0; n * n],
        }
    }

    pub fn from_digraph(d: &Digraph) -> Self {
        let mut m = Multidigraph::zeros(d.n());
        for (i, j) in d.arcs() {
            m.mult[i * d.n() + j] = 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub fn add_arc(&mut self, i: usize, j: usize) {
        self.mult[i * self.n + j] += 1;
    }

    pub fn arc_count(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.mult.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

/// A line digraph with the base arc `(tail, head)` behind each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDigraph {
    pub digraph: Digraph,
    pub arcs: Vec<(usize, usize)>,
}

/// Vertices are the arcs of `base` (parallel arcs listed separately, in
/// row-major order); `(a,b) → (c,d)` iff `b = c`.
pub fn line_digraph(base: &Multidigraph) -> Result<LineDigraph> {
    let n = base.n();
    let mut arcs = Vec::with_capacity(base.arc_count());
    for i in 0..n {
        for j in 0..n {
            arcs.extend(std::iter::repeat_n((i, j), base.mult(i, j) as usize));
        }
    }
    if arcs.is_empty() {
        return Err(Error::input("line digraph of an arcless multidigraph"));
    }
    let mut by_tail: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, &(t, _)) in arcs.iter().enumerate() {
        by_tail[t].push(x);
    }
    let mut d = Digraph::empty(arcs.len())?;
    for (x, &(_, h)) in arcs.iter().enumerate() {
        for &y in &by_tail[h] {
            d.set_arc(x, y, true);
        }
    }
    Ok(LineDigraph { digraph: d, arcs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Row,
    Column,
}

/// Two rows (or columns) that are neither identical nor orthogonal.
/// `shared` is a position where both are 1, `differing` one where exactly
/// one of them is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichardsViolation {
    pub axis: Axis,
    pub pair: (usize, usize),
    pub shared: usize,
    pub differing: usize,
}

/// A maximal all-ones block: every one in these rows lies in these columns
/// and vice versa.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Block {
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

/// Groups the nonzero rows of `d` by pattern. Fails if two distinct
/// patterns overlap.
fn row_classes(d: &Digraph, axis: Axis) -> std::result::Result<Vec<Block>, RichardsViolation> {
    let mut index: HashMap<&[u64], usize> = HashMap::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut owner = vec![usize::MAX; d.n()];
    for i in 0..d.n() {
        let row = d.row(i);
        if row.iter().all(|&w| w == 0) {
            continue;
        }
        let next = blocks.len();
        let k = *index.entry(row).or_insert(next);
        if k < next {
            blocks[k].rows.push(i);
            continue;
        }
        let cols: Vec<usize> = iter_bits(row).collect();
        for &c in &cols {
            if owner[c] != usize::MAX {
                let other = blocks[owner[c]].rows[0];
                let differing = (0..d.n())
                    .find(|&j| d.has_arc(other, j) != d.has_arc(i, j))
                    .expect("distinct rows differ somewhere");
                return Err(RichardsViolation {
                    axis,
                    pair: (other, i),
                    shared: c,
                    differing,
                });
            }
            owner[c] = k;
        }
        blocks.push(Block {
            rows: vec![i],
            cols,
        });
    }
    Ok(blocks)
}

/// Maximal all-ones blocks of the adjacency matrix, ordered by first row.
/// Every one lies in exactly one block. Requires rows and columns to be
/// pairwise identical or orthogonal.
pub fn independent_full_submatrices(
    d: &Digraph,
) -> std::result::Result<BlockDecomposition, RichardsViolation> {
    let blocks = row_classes(d, Axis::Row)?;
    row_classes(&d.transpose(), Axis::Column)?;
    Ok(BlockDecomposition { blocks })
}

/// The blocks, if they are all square and cover every row and column, so
/// that filling each block with a unitary of its size yields a unitary.
pub fn square_block_cover(d: &Digraph) -> Option<BlockDecomposition> {
    let dec = independent_full_submatrices(d).ok()?;
    let rows: usize = dec.blocks.iter().map(|b| b.rows.len()).sum();
    let cols: usize = dec.blocks.iter().map(|b| b.cols.len()).sum();
    (dec.blocks.iter().all(Block::is_square) && rows == d.n() && cols == d.n()).then_some(dec)
}

/// A base multidigraph together with the base arc each vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseRecovery {
    pub base: Multidigraph,
    /// `(tail, head)` in the base for each vertex of the recognised digraph.
    pub arc_of_vertex: Vec<(usize, usize)>,
}

/// Recognises a line digraph and reconstructs a base. Base vertices are the
/// blocks, plus a private source for every zero column and a private sink
/// for every zero row, ordered by the smallest original index they contain.
pub fn recognize_line_digraph(d: &Digraph) -> std::result::Result<BaseRecovery, RichardsViolation> {
    let dec = independent_full_submatrices(d)?;
    let n = d.n();

    #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
    enum Kind {
        Block(usize),
        Source(usize),
        Sink(usize),
    }
    let mut head_of = vec![None; n];
    let mut tail_of = vec![None; n];
    let mut keyed: Vec<(usize, Kind)> = Vec::new();
    for (k, b) in dec.blocks.iter().enumerate() {
        for &r in &b.rows {
            head_of[r] = Some(Kind::Block(k));
        }
        for &c in &b.cols {
            tail_of[c] = Some(Kind::Block(k));
        }
        let key = b.rows[0].min(b.cols[0]);
        keyed.push((key, Kind::Block(k)));
    }
    for v in 0..n {
        if tail_of[v].is_none() {
            tail_of[v] = Some(Kind::Source(v));
            keyed.push((v, Kind::Source(v)));
        }
        if head_of[v].is_none() {
            head_of[v] = Some(Kind::Sink(v));
            keyed.push((v, Kind::Sink(v)));
        }
    }
    keyed.sort();
    let position: HashMap<Kind, usize> = keyed
        .iter()
        .enumerate()
        .map(|(p, &(_, k))| (k, p))
        .collect();
    let mut base = Multidigraph::zeros(keyed.len());
    let arc_of_vertex: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let t = position[&tail_of[v].unwrap()];
            let h = position[&head_of[v].unwrap()];
            base.add_arc(t, h);
            (t, h)
        })
        .collect();
    Ok(BaseRecovery {
        base,
        arc_of_vertex,
    })
}
