use num_complex::Complex64;
use proptest::prelude::*;
use unigraph_core::digraph::{families, perfect_two_matching, structure_report};
use unigraph_core::membership::{
    alternating_projection, certify, necessary_battery, sperner_capacity, BatteryVerdict,
    SolverConfig, SpernerMode, Verdict,
};
use unigraph_core::{ComplexMatrix, Digraph};

fn quick() -> SolverConfig {
    SolverConfig {
        restarts: 5,
        max_iter: 2000,
        ..SolverConfig::default()
    }
}

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| Digraph::from_fn(n, |i, j| bits[i * n + j]).unwrap())
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            Digraph::from_fn(n, |i, j| i != j && bits[i.min(j) * n + i.max(j)]).unwrap()
        })
    })
}

/// `U·U†` by a plain triple loop, apart from the library's own residual.
fn gram_deviation(u: &ComplexMatrix) -> f64 {
    let n = u.n();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                s += u[(i, k)] * u[(j, k)].conj();
            }
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((s - target).norm());
        }
    }
    worst
}

fn in_k2_component(d: &Digraph, comps: &[Vec<usize>], v: usize) -> bool {
    let c = comps.iter().find(|c| c.contains(&v)).unwrap();
    c.len() == 2 && {
        let sub = d.induced(c).unwrap();
        sub == families::k2() || sub == families::k2_plus()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn certificates_are_sound(d in digraph(6)) {
        let cfg = quick();
        let out = certify(&d, &cfg).unwrap();
        prop_assert_eq!(out.verdict == Verdict::Excluded, out.battery.verdict == BatteryVerdict::Excluded);
        if let Some(cert) = &out.certificate {
            prop_assert_eq!(out.verdict, Verdict::Certified);
            prop_assert!(gram_deviation(&cert.matrix) <= cfg.tol);
            let support = Digraph::from_fn(d.n(), |i, j| cert.matrix[(i, j)].norm() >= cfg.min_magnitude).unwrap();
            prop_assert_eq!(support, d.clone());

            // Bridges and cut-vertices only inside K2 / K2+ components.
            let s = structure_report(&d);
            prop_assert!(s.directed_bridges.is_empty());
            for &(a, _) in &s.bridges {
                prop_assert!(in_k2_component(&d, &s.weak_components, a));
            }
            for &v in s.cut_vertices.members() {
                prop_assert!(in_k2_component(&d, &s.weak_components, v));
            }
        } else {
            prop_assert!(out.verdict != Verdict::Certified);
        }
    }

    #[test]
    fn certification_is_deterministic(d in digraph(5), seed in any::<u64>()) {
        let cfg = SolverConfig { seed, ..quick() };
        prop_assert_eq!(certify(&d, &cfg).unwrap(), certify(&d, &cfg).unwrap());
        prop_assert_eq!(
            alternating_projection(&d, &cfg).unwrap(),
            alternating_projection(&d, &cfg).unwrap()
        );
    }

    #[test]
    fn uniform_sperner_is_two_over_n(d in graph(8)) {
        prop_assume!(d.arc_count() > 0);
        prop_assume!(perfect_two_matching(&d).unwrap().is_some());
        let v = sperner_capacity(&d, SpernerMode::Uniform).unwrap();
        prop_assert!((v.value - 2.0 / d.n() as f64).abs() < 1e-15);
    }
}

fn mask_of(d: &Digraph) -> u32 {
    let n = d.n();
    d.arcs().fold(0, |m, (i, j)| m | 1 << (i * n + j))
}

/// Every digraph on at most three vertices that the battery excludes also
/// defeats a long randomized projection search. The search commutes with
/// relabelling and with transposition, so one digraph per class is run.
#[test]
fn exclusions_survive_exhaustive_search() {
    let cfg = SolverConfig {
        restarts: 1000,
        ..SolverConfig::default()
    };
    let relabellings: [&[usize]; 6] = [&[0, 1, 2], &[0, 2, 1], &[1, 0, 2], &[1, 2, 0], &[2, 0, 1], &[2, 1, 0]];
    let (mut excluded, mut searched) = (0, 0);
    for n in 1..=3usize {
        for mask in 0u32..1 << (n * n) {
            let d = Digraph::from_fn(n, |i, j| mask >> (i * n + j) & 1 == 1).unwrap();
            if necessary_battery(&d).verdict != BatteryVerdict::Excluded {
                continue;
            }
            excluded += 1;
            let canonical = relabellings
                .iter()
                .filter(|p| p[..n].iter().all(|&v| v < n))
                .flat_map(|p| {
                    let r = d.relabel(&p[..n]).unwrap();
                    [mask_of(&r), mask_of(&r.transpose())]
                })
                .min()
                .unwrap();
            if canonical == mask {
                searched += 1;
                assert!(alternating_projection(&d, &cfg).unwrap().is_none(), "{d:?}");
            }
        }
    }
    assert!(excluded > 400);
    assert!(searched > 60);
}
