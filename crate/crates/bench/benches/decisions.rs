use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use coring_bench::{corings, dense_matrix};
use coring_core::algebra::Algebra;
use coring_core::bimodule::{Bimodule, TensorPresentation};
use coring_core::coring::{coseparability, is_semisimple_coring};
use coring_core::exactlin::{inverse, rank, Field};

fn exact_linear_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("exactlin");
    for n in [8, 16, 32] {
        let m = dense_matrix(n);
        group.bench_with_input(BenchmarkId::new("rank", n), &m, |b, m| b.iter(|| rank(black_box(m))));
        group.bench_with_input(BenchmarkId::new("inverse", n), &m, |b, m| b.iter(|| inverse(black_box(m)).unwrap()));
    }
    group.finish();
}

fn tensor_presentations(c: &mut Criterion) {
    let mut group = c.benchmark_group("tensor");
    for n in [2, 3] {
        let a = Algebra::matrix_algebra(Field::Rationals, n);
        let m = Bimodule::regular(&a);
        group.bench_with_input(BenchmarkId::new("M_n ⊗_M_n M_n", n), &m, |b, m| {
            b.iter(|| TensorPresentation::new(black_box(m), black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn decisions(c: &mut Criterion) {
    let mut group = c.benchmark_group("decisions");
    group.sample_size(10);
    for coring in corings() {
        group.bench_with_input(BenchmarkId::new("check", coring.name()), &coring, |b, x| b.iter(|| x.check()));
        group.bench_with_input(BenchmarkId::new("coseparability", coring.name()), &coring, |b, x| {
            b.iter(|| coseparability(x).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("semisimple", coring.name()), &coring, |b, x| {
            b.iter(|| is_semisimple_coring(x).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_linear_algebra, tensor_presentations, decisions);
criterion_main!(benches);
