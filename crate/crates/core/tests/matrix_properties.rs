use num_complex::Complex64;
use proptest::prelude::*;
use unigraph_core::digraph::families;
use unigraph_core::matrix::{
    block_double, circulant_spectrum, complementary, dft, hypercube_weighing, nearest_unitary,
    ComplexMatrix, IntMatrix, PermutationMatrix,
};

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// The definition read literally: every quadruple of positions.
fn complementary_brute(p: &[usize], q: &[usize]) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if p[i] == j && p[h] == k && q[i] == k && q[h] != j {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn random_unitary(n: usize, entries: &[(f64, f64)]) -> ComplexMatrix {
    let x = ComplexMatrix::from_fn(n, |i, j| {
        let (re, im) = entries[i * n + j];
        Complex64::new(re, im)
    });
    nearest_unitary(&x).unwrap()
}

fn int_product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Characteristic polynomial of an integer matrix by Faddeev–LeVerrier, in
/// exact integer arithmetic. Coefficients from x^n down to x^0.
fn characteristic_polynomial(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut coeffs = vec![1i128];
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I, then c_{n-k} = -tr(A·M_k)/k
        let prev = *coeffs.last().unwrap();
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum::<i128>();
            }
            next[i][i] += prev;
        }
        m = next;
        let trace: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>()).sum();
        assert_eq!(trace % k as i128, 0);
        coeffs.push(-trace / k as i128);
    }
    coeffs
}

fn circulant_rows(n: usize, residues: &[usize]) -> Vec<Vec<i64>> {
    let d = families::circulant(n, residues);
    (0..n).map(|i| (0..n).map(|j| d.has_arc(i, j) as i64).collect()).collect()
}

fn check_spectrum(n: usize, residues: &[usize]) {
    let eig = circulant_spectrum(n, residues).unwrap();
    assert_eq!(eig.len(), n);
    let rows = circulant_rows(n, residues);
    let poly = characteristic_polynomial(&rows);
    let scale = (residues.len() as f64 + 1.0).powi(n as i32);
    for &lambda in &eig {
        let value = poly
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * lambda + c as f64);
        assert!(value.norm() <= 1e-6 * scale, "p({lambda}) = {value} for n={n} S={residues:?}");
    }
    // Power sums fix the multiset: sum of λ^k equals tr(A^k) for k = 1..n.
    let mut power = rows.clone();
    for k in 1..=n {
        let trace: i64 = (0..n).map(|i| power[i][i]).sum();
        let sum: Complex64 = eig.iter().map(|l| l.powu(k as u32)).sum();
        assert!(
            (sum - trace as f64).norm() <= 1e-6 * (trace.abs() as f64).max(1.0),
            "power sum {k}: {sum} vs {trace} for n={n} S={residues:?}"
        );
        power = int_product(&power, &rows);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complementary_matches_definition(
        (p, q) in (1usize..=5).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let pm = PermutationMatrix::new(p.clone()).unwrap();
        let qm = PermutationMatrix::new(q.clone()).unwrap();
        prop_assert_eq!(complementary(&pm, &qm).unwrap(), complementary_brute(&p, &q));
    }

    #[test]
    fn complementarity_survives_relabelling(
        (p, q, rows, cols) in (1usize..=6).prop_flat_map(|n| {
            (permutation(n), permutation(n), permutation(n), permutation(n))
        })
    ) {
        // Permuting rows by `rows` and columns by `cols` in both matrices.
        let relabel = |m: &[usize]| {
            let mut out = vec![0; m.len()];
            for (i, &j) in m.iter().enumerate() {
                out[rows[i]] = cols[j];
            }
            PermutationMatrix::new(out).unwrap()
        };
        let before = complementary(
            &PermutationMatrix::new(p.clone()).unwrap(),
            &PermutationMatrix::new(q.clone()).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(complementary(&relabel(&p), &relabel(&q)).unwrap(), before);
    }

    #[test]
    fn block_double_keeps_unitarity(
        (n, entries, noise) in (1usize..=6).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n),
                0.0f64..1e-6,
            )
        })
    ) {
        prop_assume!(entries.iter().any(|&(a, b)| a != 0.0 || b != 0.0));
        let mut u = random_unitary(n, &entries);
        u[(0, 0)] += Complex64::new(noise, 0.0);
        let input = u.unitarity_residual();
        let out = block_double(&u, 1.0).unwrap();
        prop_assert!(out.unitarity_residual() <= 4.0 * input + 1e-12);
    }

    #[test]
    fn polar_factor_is_unitary(
        (n, entries) in (1usize..=8).prop_flat_map(|n| {
            (Just(n), proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n))
        })
    ) {
        let x = ComplexMatrix::from_fn(n, |i, j| Complex64::new(entries[i * n + j].0, entries[i * n + j].1));
        if let Some(u) = nearest_unitary(&x) {
            prop_assert!(u.unitarity_residual() <= 1e-10);
        }
    }

    #[test]
    fn circulant_spectra_match_characteristic_polynomial(
        (n, residues) in (2usize..=8).prop_flat_map(|n| {
            (Just(n), proptest::collection::btree_set(0..n, 1..=n.min(4)))
        })
    ) {
        let residues: Vec<usize> = residues.into_iter().collect();
        check_spectrum(n, &residues);
    }
}

#[test]
fn dft_support_is_all_ones() {
    for n in 1..=64 {
        let f = dft(n).unwrap();
        assert_eq!(f.support(1e-9), families::all_ones(n), "n = {n}");
        assert!(f.unitarity_residual() < 1e-12);
    }
}

#[test]
fn half_shift_spectra() {
    for n in [4usize, 6, 8, 10, 12] {
        check_spectrum(n, &[1, 1 + n / 2]);
    }
}

#[test]
fn hypercube_weighing_exact_to_capacity() {
    for k in 2..=12u32 {
        for loops in [false, true] {
            let w = hypercube_weighing(k, loops).unwrap();
            assert_eq!(w.weighing_weight().unwrap(), Some(k as i64 + loops as i64));
            let mut cube = families::hypercube(k as usize);
            if loops {
                cube = cube.with_loops();
            }
            assert_eq!(w.support(), cube);
        }
    }
}

#[test]
fn weighing_weight_rejects_non_orthogonal() {
    let m = IntMatrix::from_rows(&[[1i64, 1], [1, 1]]).unwrap();
    assert_eq!(m.weighing_weight().unwrap(), None);
    assert!(IntMatrix::from_rows(&[[2i64, 0], [0, 2]]).unwrap().weighing_weight().is_err());
}
