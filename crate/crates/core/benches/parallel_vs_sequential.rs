use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use delta3::fractal::{cell_counts, DigitSet};
use delta3::measure::{cdf_many, l_lower_bound, sample_many, ProbVector};
use delta3::rational::rat;
use delta3::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn probs() -> ProbVector {
    ProbVector::rational((1, 10), (2, 10), (3, 10), (4, 10)).unwrap()
}

fn cells(c: &mut Criterion) {
    let mut g = c.benchmark_group("cell_counts");
    let v: DigitSet = "013".parse().unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 12), &12, |b, &n| {
            b.iter(|| cell_counts(black_box(&v), n, exec).unwrap())
        });
    }
    g.finish();
}

fn sampling(c: &mut Criterion) {
    let mut g = c.benchmark_group("sample_many");
    let p = probs();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 100_000), &100_000, |b, &n| {
            b.iter(|| sample_many(black_box(&p), 30, n, 0, exec))
        });
    }
    g.finish();
}

fn cdf_grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("cdf_many");
    let p = probs();
    let xs: Vec<_> = (0..2000).map(|j| rat(3 * j, 2 * 1999)).collect();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, xs.len()), &xs, |b, xs| {
            b.iter(|| cdf_many(black_box(&p), xs, 1e-9, exec).unwrap())
        });
    }
    g.finish();
}

/// The certified bound over a simplex grid, fanned out per point.
fn lbound_sweep(c: &mut Criterion) {
    let d = 20;
    let mut grid = Vec::new();
    for a in 1..d {
        for b in 1..d - a {
            for e in 1..d - a - b {
                grid.push(ProbVector::rational((a, d), (b, d), (e, d), (d - a - b - e, d)).unwrap());
            }
        }
    }
    let mut g = c.benchmark_group("lbound_sweep");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, grid.len()), &grid, |b, grid| {
            b.iter(|| exec.map(grid, |p| l_lower_bound(p, 3, 40)))
        });
    }
    g.finish();
}

criterion_group!(benches, cells, sampling, cdf_grid, lbound_sweep);
criterion_main!(benches);
