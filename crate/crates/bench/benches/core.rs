use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use unigraph_bench::{half_shift, scrambled, symmetric_coset_digraph};
use unigraph_core::digraph::{families, hamiltonian_cycle, structure_report, term_rank};
use unigraph_core::linedigraph::recognize_line_digraph;
use unigraph_core::matrix::{hypercube_weighing, nearest_unitary};
use unigraph_core::membership::{alternating_projection, certify, necessary_battery, SolverConfig};
use unigraph_core::{Complex64, ComplexMatrix};

fn digraph(c: &mut Criterion) {
    let mut g = c.benchmark_group("digraph");
    for n in [64usize, 256] {
        let d = scrambled(n, 1);
        g.bench_with_input(BenchmarkId::new("structure_report", n), &d, |b, d| {
            b.iter(|| structure_report(black_box(d)))
        });
        g.bench_with_input(BenchmarkId::new("term_rank", n), &d, |b, d| b.iter(|| term_rank(black_box(d))));
    }
    let cube = families::hypercube(4);
    g.bench_function("hamiltonian_q4", |b| b.iter(|| hamiltonian_cycle(black_box(&cube), 16)));
    g.finish();
}

fn linedigraph(c: &mut Criterion) {
    let s5 = symmetric_coset_digraph(5);
    c.bench_function("recognize_s5_coset", |b| b.iter(|| recognize_line_digraph(black_box(&s5))));
}

fn matrices(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrix");
    for k in [6u32, 9] {
        g.bench_with_input(BenchmarkId::new("hypercube_weighing", k), &k, |b, &k| {
            b.iter(|| hypercube_weighing(k, false).unwrap().weighing_weight().unwrap())
        });
    }
    let x = ComplexMatrix::from_fn(16, |i, j| {
        Complex64::new(((i * 7 + j * 3) % 11) as f64 - 5.0, ((i + 2 * j) % 5) as f64)
    });
    g.bench_function("nearest_unitary_16", |b| b.iter(|| nearest_unitary(black_box(&x))));
    g.finish();
}

fn membership(c: &mut Criterion) {
    let mut g = c.benchmark_group("membership");
    let cube = families::hypercube(6);
    g.bench_function("battery_q6", |b| b.iter(|| necessary_battery(black_box(&cube))));
    let z12 = half_shift(12);
    g.bench_function("certify_dft_z12", |b| b.iter(|| certify(black_box(&z12), &SolverConfig::default())));
    let k5 = families::complete(5);
    let cfg = SolverConfig::default();
    g.bench_function("projection_k5", |b| b.iter(|| alternating_projection(black_box(&k5), &cfg)));
    g.finish();
}

criterion_group!(benches, digraph, linedigraph, matrices, membership);
criterion_main!(benches);
