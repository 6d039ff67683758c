//! Inputs shared by the benchmarks.

use unigraph_core::digraph::families;
use unigraph_core::groups::{cayley_digraph, coset_generating_set, FiniteGroup};
use unigraph_core::Digraph;

/// The Cayley digraph of the coset connection set built from a
/// transposition and an `n`-cycle in `S:n`.
pub fn symmetric_coset_digraph(n: usize) -> Digraph {
    let g = FiniteGroup::symmetric(n).expect("n is small");
    let cycle: String = (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    let s1 = g.parse_element("(1 2)").expect("valid cycle");
    let s2 = g.parse_element(&format!("({cycle})")).expect("valid cycle");
    let t = coset_generating_set(&g, s1, s2).expect("they generate");
    cayley_digraph(&g, &t)
}

/// A fixed pseudo-random digraph with arc density one half.
pub fn scrambled(n: usize, seed: u64) -> Digraph {
    let mut x = seed;
    Digraph::from_fn(n, |_, _| {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        x >> 63 == 1
    })
    .expect("n is positive")
}

pub fn half_shift(n: usize) -> Digraph {
    families::circulant(n, &[1, 1 + n / 2])
}
