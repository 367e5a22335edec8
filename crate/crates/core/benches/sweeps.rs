//! Sequential vs rayon sweeps on the workloads that fan out: dependence
//! detection, the formal connection of a pair, ideal invariance, and the
//! exhaustive cochain check.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gm_core::aomoto::{
    aomoto_complex, general_position, tilde_omega_pair_with, tilde_omega_s_map, verify_cochain,
    verify_ideal_invariance_with,
};
use gm_core::rational::q;
use gm_core::sweep::{self, Strategy};
use gm_core::{Arrangement, CombinatorialType, IndexSet, OsAlgebra};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

/// Seven planes in 3-space with several coincidences.
fn workload() -> Arrangement {
    let rows = [
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 1, 1, 1],
        [1, 1, 2, 3],
        [2, 1, -1, 0],
        [1, 0, 1, -2],
    ];
    Arrangement::new(3, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

fn dependence(c: &mut Criterion) {
    let a = workload();
    let mut g = c.benchmark_group("dependent_sets");
    for (name, s) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| CombinatorialType::from_arrangement_with(black_box(&a), s)));
    }
    g.finish();
}

fn formal_and_invariance(c: &mut Criterion) {
    let a = workload();
    let t = CombinatorialType::from_arrangement(&a);
    let alg = OsAlgebra::new(&t).unwrap();
    let n = a.n();
    // every dependent set with weight one: a heavy but well-defined formal map
    let weighted: Vec<(IndexSet, usize)> = t.all_dependent().map(|s| (s, 1)).collect();
    let tilde = tilde_omega_pair_with(n, 3, &weighted, Strategy::Sequential).unwrap();
    let mut g = c.benchmark_group("formal_connection");
    for (name, s) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| tilde_omega_pair_with(n, 3, black_box(&weighted), s).unwrap()));
    }
    g.finish();
    let mut g = c.benchmark_group("ideal_invariance");
    for (name, s) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| verify_ideal_invariance_with(&alg, black_box(&tilde), s).unwrap()));
    }
    g.finish();
}

fn cochain_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("cochain_sweep");
    g.sample_size(10);
    for n in [4, 5] {
        let alg = OsAlgebra::new(&general_position(n, 3).unwrap()).unwrap();
        let d = aomoto_complex(&alg, "G").unwrap();
        let sets: Vec<IndexSet> =
            IndexSet::all_subsets(IndexSet::range(n + 1)).filter(|s| (2..=4).contains(&s.len())).collect();
        for (name, s) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(name, n), &sets, |b, sets| {
                b.iter(|| {
                    sweep::map(s, sets, |&set| verify_cochain(&tilde_omega_s_map(n, 3, set).unwrap(), &d).unwrap().passed())
                })
            });
        }
    }
    g.finish();
}

criterion_group!(benches, dependence, formal_and_invariance, cochain_sweep);
criterion_main!(benches);
