use charvar_core::poisson::{bracket, jacobi_residual};
use charvar_core::{poly_p, poly_q, Polynomial};
use criterion::{criterion_group, criterion_main, Criterion};

fn poisson(c: &mut Criterion) {
    let (t4, tm4, t5) = (Polynomial::t(4), Polynomial::t(-4), Polynomial::t(5));
    c.bench_function("bracket t4 Q", |b| b.iter(|| bracket(&t4, poly_q())));
    c.bench_function("bracket P Q", |b| b.iter(|| bracket(poly_p(), poly_q())));
    c.bench_function("jacobi t4 t-4 t5", |b| b.iter(|| jacobi_residual(&t4, &tm4, &t5)));
}

criterion_group!(benches, poisson);
criterion_main!(benches);
