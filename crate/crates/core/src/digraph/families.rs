//! Standard digraph families and small named fixtures.

use super::Digraph;

/// `0 → 1 → … → n-1 → 0`.
pub fn directed_cycle(n: usize) -> Digraph {
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// `0 → 1 → … → n-1`.
pub fn directed_path(n: usize) -> Digraph {
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// The undirected cycle `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Digraph {
    Digraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The undirected path on `n` vertices.
pub fn path(n: usize) -> Digraph {
    Digraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `K_n` without loops, adjacency `J - I`.
pub fn complete(n: usize) -> Digraph {
    Digraph::from_fn(n, |i, j| i != j).unwrap()
}

/// The all-ones pattern `J_n`.
pub fn all_ones(n: usize) -> Digraph {
    Digraph::from_fn(n, |_, _| true).unwrap()
}

pub fn identity(n: usize) -> Digraph {
    Digraph::from_fn(n, |i, j| i == j).unwrap()
}

/// `K₂`.
pub fn k2() -> Digraph {
    complete(2)
}

/// `K₂⁺`, `K₂` with a loop at both vertices.
pub fn k2_plus() -> Digraph {
    all_ones(2)
}

/// The star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Digraph {
    Digraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// The claw `K_{1,3}`.
pub fn claw() -> Digraph {
    star(3)
}

/// The 4-vertex graph of a pendant vertex attached to a triangle.
pub fn lambda() -> Digraph {
    Digraph::from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// A 6-vertex bipartite graph that supports a unitary, contains an induced
/// claw, and is hamiltonian.
pub fn claw_counterexample() -> Digraph {
    Digraph::from_matrix(&[
        [0u8, 0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
        [1, 1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0, 0],
        [0, 1, 1, 0, 0, 0],
    ])
    .unwrap()
}

/// `Q_k` with vertices labelled by their binary coordinates.
pub fn hypercube(k: usize) -> Digraph {
    let n = 1usize << k;
    Digraph::from_fn(n, |i, j| (i ^ j).count_ones() == 1).unwrap()
}

/// The circulant `X(Z_n; S)`: arcs `g → g + s`.
pub fn circulant(n: usize, residues: &[usize]) -> Digraph {
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|g| residues.iter().map(move |&s| (g, (g + s) % n))),
    )
    .unwrap()
}

/// `P(n,k)`: vertices are the ordered `k`-tuples of distinct symbols from
/// `0..n`, with arcs `(i₁ … i_k) → (i₂ … i_k i)` for every unused `i`.
/// Vertices are numbered in lexicographic order of the tuples.
pub fn arrangement_digraph(n: usize, k: usize) -> Digraph {
    assert!(1 <= k && k < n, "need 1 <= k < n");
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..n)
                    .filter(|x| !t.contains(x))
                    .map(|x| {
                        let mut u = t.clone();
                        u.push(x);
                        u
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let index = |t: &[usize]| tuples.binary_search_by(|p| p.as_slice().cmp(t)).unwrap();
    let mut arcs = Vec::new();
    for (a, t) in tuples.iter().enumerate() {
        for x in (0..n).filter(|x| !t.contains(x)) {
            let mut next = t[1..].to_vec();
            next.push(x);
            arcs.push((a, index(&next)));
        }
    }
    Digraph::from_arcs(tuples.len(), arcs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_degrees() {
        for k in 1..=5 {
            let q = hypercube(k);
            assert!(q.is_symmetric());
            assert_eq!(q.regular_degree(), Some(k));
        }
    }

    #[test]
    fn arrangement_digraph_shape() {
        let p = arrangement_digraph(4, 2);
        assert_eq!(p.n(), 12);
        assert_eq!(p.regular_degree(), Some(2));
    }

    #[test]
    fn counterexample_is_bipartite_symmetric() {
        let d = claw_counterexample();
        assert!(d.is_symmetric());
        assert!(!d.has_loops());
        assert_eq!(d.edges().count(), 8);
    }
}
