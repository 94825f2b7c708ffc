//! Serial against data-parallel multiplication, and a depth sweep over the
//! symmetric series. `mul` picks the parallel path when the `parallel`
//! feature is on; the explicit `mul_serial`/`mul_parallel` entries compare
//! the two directly on the same inputs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subdepth::bitmat::BoolMatrix;
use subdepth::intmatrix::Matrix;
use subdepth::young::sym_inclusion_matrix;

fn random_bool_matrix(rng: &mut ChaCha8Rng, n: usize) -> BoolMatrix {
    let mut m = BoolMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, rng.gen_bool(0.3));
        }
    }
    m
}

fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, bits: u64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let value: u64 = rng.gen_range(0..1 << bits.min(63));
            m.set(i, j, BigUint::from(value));
        }
    }
    m
}

fn bool_multiplication(c: &mut Criterion) {
    let mut group = c.benchmark_group("bool_mul");
    for n in [64usize, 256, 512] {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_bool_matrix(&mut rng, n);
        let b = random_bool_matrix(&mut rng, n);
        group.bench_with_input(BenchmarkId::new("serial", n), &n, |bench, _| {
            bench.iter(|| a.mul_serial(&b))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |bench, _| {
            bench.iter(|| a.mul_parallel(&b))
        });
    }
    group.finish();
}

fn bigint_multiplication(c: &mut Criterion) {
    let mut group = c.benchmark_group("int_mul");
    for n in [32usize, 96] {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let a = random_int_matrix(&mut rng, n, 48);
        let b = random_int_matrix(&mut rng, n, 48);
        group.bench_with_input(BenchmarkId::new("serial", n), &n, |bench, _| {
            bench.iter(|| a.mul_serial(&b))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |bench, _| {
            bench.iter(|| a.mul_parallel(&b))
        });
    }
    group.finish();
}

fn depth_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sym_depth");
    for n in [5usize, 7] {
        let matrix = sym_inclusion_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            // Rebuilt every iteration: depth() memoizes inside the value.
            bench.iter(|| sym_inclusion_matrix(n).depth().depth)
        });
        assert_eq!(matrix.depth().depth, 2 * n - 1);
    }
    group.finish();
}

criterion_group!(
    benches,
    bool_multiplication,
    bigint_multiplication,
    depth_sweep
);
criterion_main!(benches);
