use std::hint::black_box;

use ballconv::{ball_hull, circumball, dd_convert, lp_solve, make_norm, Representation, Sense};
use ballconv_bench::{ball_constraints, objective, point_cloud};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn conversion(c: &mut Criterion) {
    let mut group = c.benchmark_group("dd_convert");
    for (dim, count) in [(2, 12), (3, 16), (4, 16)] {
        let input = Representation::V(point_cloud(1, dim, count));
        group.bench_with_input(BenchmarkId::from_parameter(format!("{dim}d_{count}pts")), &input, |b, input| {
            b.iter(|| dd_convert(black_box(input), dim).unwrap())
        });
    }
    group.finish();
}

fn linear_programs(c: &mut Criterion) {
    let mut group = c.benchmark_group("lp_solve");
    for name in ["linf:3", "l1:3", "l1:4", "regular:12"] {
        let norm = make_norm(name).unwrap();
        let constraints = ball_constraints(&norm);
        let obj = objective(2, norm.dim());
        group.bench_function(name, |b| b.iter(|| lp_solve(black_box(&obj), &constraints, Sense::Max).unwrap()));
    }
    group.finish();
}

fn hulls(c: &mut Criterion) {
    let mut group = c.benchmark_group("ball_hull");
    for (name, count) in [("linf:2", 6), ("regular:12", 6), ("l1:3", 5)] {
        let norm = make_norm(name).unwrap();
        let points = point_cloud(4, norm.dim(), count);
        group.bench_function(name, |b| b.iter(|| ball_hull(&norm, black_box(&points)).unwrap()));
    }
    group.finish();
}

fn circumballs(c: &mut Criterion) {
    let mut group = c.benchmark_group("circumball");
    for (name, count) in [("linf:2", 8), ("regular:12", 8), ("linf:3", 8)] {
        let norm = make_norm(name).unwrap();
        let points = point_cloud(5, norm.dim(), count);
        group.bench_function(name, |b| b.iter(|| circumball(&norm, black_box(&points)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, conversion, linear_programs, hulls, circumballs);
criterion_main!(benches);
