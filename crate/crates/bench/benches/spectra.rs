use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use threshold_spectra::graphs::quasi_star;
use threshold_spectra::search::canon::{classes_by_size, SmallGraph};
use threshold_spectra::search::{argmax_rho, enumerate_threshold};
use threshold_spectra::spectra::spectral_radius;
use threshold_spectra::transforms::{certify, TransformSpec};
use threshold_spectra::{Alpha, FamilySpec, LabeledGraph};

fn radius(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_radius");
    let alpha = Alpha::new(3, 4).unwrap();
    for n in [10, 24, 64] {
        let g = quasi_star(n, 2 * n).unwrap().to_labeled();
        group.bench_with_input(BenchmarkId::new("quasi_star", n), &g, |b, g| {
            b.iter(|| spectral_radius(black_box(g), alpha).unwrap().rho)
        });
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let f = FamilySpec::connected_threshold(24, 48).unwrap();
    group.bench_function("enumerate_24_48", |b| {
        b.iter(|| enumerate_threshold(&f).unwrap().count())
    });
    group.bench_function("argmax_24_48", |b| {
        b.iter(|| argmax_rho(&f, Alpha::HALF).unwrap().rho_max)
    });
    group.finish();
}

fn transforms(c: &mut Criterion) {
    let host = threshold_spectra::graphs::l_graph(7, 12).unwrap();
    let spec = TransformSpec::row(7, 2, 5, 3, 1);
    c.bench_function("certify_row_7_12", |b| {
        b.iter(|| {
            certify(black_box(&host), &spec, Alpha::HALF)
                .unwrap()
                .holds()
        })
    });
}

fn canonical(c: &mut Criterion) {
    let g = SmallGraph::from_labeled(&LabeledGraph::path(7));
    c.bench_function("canonical_path_7", |b| b.iter(|| black_box(g).canonical()));
    // The cache is process-wide, so only the first iteration does the work.
    c.bench_function("classes_by_size_6", |b| {
        b.iter(|| classes_by_size(black_box(6)).len())
    });
}

criterion_group!(benches, radius, search, transforms, canonical);
criterion_main!(benches);
