use charvar_bench::bench_words;
use charvar_core::reduce_trace_word;
use charvar_core::trace::{clear_cache, reduce_by_interpolation};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn rules(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce_trace_word");
    for w in bench_words() {
        group.bench_with_input(BenchmarkId::from_parameter(&w), &w, |b, w| {
            b.iter(|| {
                clear_cache();
                reduce_trace_word(w).unwrap()
            })
        });
    }
    group.finish();
}

fn interpolation(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce_by_interpolation");
    group.sample_size(10);
    let w = "x1 X2 x1 x2".parse().unwrap();
    group.bench_function("x1 X2 x1 x2", |b| b.iter(|| reduce_by_interpolation(&w).unwrap()));
    group.finish();
}

criterion_group!(benches, rules, interpolation);
criterion_main!(benches);
