//! Parallel-vs-sequential benchmarks for the data-parallel hot paths:
//! batch classification, the constant-orbit-dimension certification sweep,
//! and the spectral cross-check harness. With the default `parallel`
//! feature the Parallel mode runs on rayon; built with
//! `--no-default-features` both modes take the sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use solvlie::classify::{GroupModel, Provenance};
use solvlie::coadjoint::constant_orbit_dim_off_center_annihilator;
use solvlie::exec::ExecMode;
use solvlie::families::{self, DivisionAlgebraName};
use solvlie::matrix::Matrix;
use solvlie::scalar::{rat, ratio};
use solvlie::spectral::crosscheck_random_matrices;
use solvlie::LieAlgebra;

fn bench_models() -> Vec<GroupModel> {
    let mut models = Vec::new();
    for n in 1..=2usize {
        let h = families::heisenberg(n);
        for dz in [0i64, 1, -1, 2] {
            let mut ordered = vec![rat(dz)];
            for j in 0..n {
                ordered.push(ratio(j as i64 + 1, 2));
            }
            for j in 0..n {
                ordered.push(rat(dz) - ratio(j as i64 + 1, 2));
            }
            let d = Matrix::diagonal(&ordered);
            models.push(
                GroupModel::with_provenance(h.clone(), d, Provenance::Heisenberg { n }).unwrap(),
            );
        }
    }
    for (b1, b2, b3) in [(1i64, 2, 3), (-1, 1, 1), (2, -1, 4), (-2, -3, -1)] {
        let a = [rat(1), rat(1), rat(-2)];
        let alg = families::n6n15_algebra(&a).unwrap();
        let b = [rat(b1), rat(b2), rat(b3)];
        let d = families::n6n15_derivation(&alg, &b);
        models.push(GroupModel::with_provenance(alg, d, Provenance::N6n15 { a, b }).unwrap());
    }
    for n in 1..=4usize {
        let d = Matrix::from_fn(n, n, |i, j| rat((i as i64 - j as i64) % 3));
        models
            .push(GroupModel::with_provenance(LieAlgebra::abelian(n), d, Provenance::Axb).unwrap());
    }
    // 16 base models, repeated to a batch of 48
    let mut batch = Vec::new();
    for _ in 0..3 {
        batch.extend(models.clone());
    }
    batch
}

fn bench_batch_classify(c: &mut Criterion) {
    let models = bench_models();
    let mut group = c.benchmark_group("batch_classify");
    group.sample_size(10);
    for (name, mode) in [
        ("parallel", ExecMode::Parallel),
        ("sequential", ExecMode::Sequential),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let out = solvlie::batch_classify(models.clone(), mode);
                assert!(out.iter().all(|r| r.is_ok()));
                out
            })
        });
    }
    group.finish();
}

fn bench_constant_orbit_certification(c: &mut Criterion) {
    let table = families::division_algebra(DivisionAlgebraName::H);
    let alg = families::hk_algebra(&table, 1);
    let mut group = c.benchmark_group("constant_orbit_dim_hk_H");
    group.sample_size(20);
    for (name, mode) in [
        ("parallel", ExecMode::Parallel),
        ("sequential", ExecMode::Sequential),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| constant_orbit_dim_off_center_annihilator(&alg, 8, mode).unwrap())
        });
    }
    group.finish();
}

fn bench_spectral_crosscheck(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_crosscheck_128");
    group.sample_size(10);
    for (name, mode) in [
        ("parallel", ExecMode::Parallel),
        ("sequential", ExecMode::Sequential),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| crosscheck_random_matrices(128, 2..=8, 7, 1e-6, mode))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_batch_classify,
    bench_constant_orbit_certification,
    bench_spectral_crosscheck
);
criterion_main!(benches);
