use autcurve::classify::{classify, ClassifyOptions};
use autcurve::group::{Catalog, Standard};
use autcurve::maximality::maximality_verdict;
use autcurve::search::{search_generating_vector, SearchOptions};
use autcurve::{Exec, Signature};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use std::time::Duration;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bench_classify(c: &mut Criterion) {
    let cat = Catalog::bundled();
    let mut group = c.benchmark_group("classify");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    for genus in [3usize, 4] {
        for (name, exec) in MODES {
            let opts = ClassifyOptions { max_order: Some(48), exec, ..ClassifyOptions::default() };
            group.bench_with_input(BenchmarkId::new(name, genus), &genus, |b, &g| {
                b.iter(|| classify(black_box(g), cat, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    // periods 3,3,5 are even permutations, so S5 has no such vector and every branch is exhausted
    let cases = [
        ("S5 0;3,3,5", Standard::Symmetric(5), "0;3,3,5"),
        ("S5 0;2,4,5", Standard::Symmetric(5), "0;2,4,5"),
        ("PSL(2,7) 0;3,3,4", Standard::Psl2(7), "0;3,3,4"),
    ];
    let mut group = c.benchmark_group("generating_vector_search");
    group.sample_size(20);
    for (label, kind, sig) in cases {
        let g = kind.build().unwrap();
        let sig: Signature = sig.parse().unwrap();
        for (name, exec) in MODES {
            let opts = SearchOptions { exec, ..SearchOptions::default() };
            group.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| search_generating_vector(&g, black_box(&sig), &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_maximality(c: &mut Criterion) {
    let cat = Catalog::bundled();
    let cases = [("C5 0;5,5,5", Standard::Cyclic(5), "0;5,5,5"), ("C64 0;8,64,64", Standard::Cyclic(64), "0;8,64,64")];
    let mut group = c.benchmark_group("maximality_verdict");
    group.sample_size(10);
    for (label, kind, sig) in cases {
        let g = kind.build().unwrap();
        let sig: Signature = sig.parse().unwrap();
        for (name, exec) in MODES {
            let opts = SearchOptions { exec, ..SearchOptions::default() };
            group.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| maximality_verdict(&g, black_box(&sig), cat, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_search, bench_maximality);
criterion_main!(benches);
