use criterion::{black_box, criterion_group, criterion_main, Criterion};
use wres_bench::{case, params, projection_input};
use wres_core::boundary::{compute_case, OperatorType};
use wres_core::oracle::{evaluate_case, Settings};
use wres_core::residue::pi_plus;
use wres_core::symbols::{catalog, compose};

fn exact(c: &mut Criterion) {
    let f = projection_input();
    c.bench_function("pi_plus", |b| b.iter(|| pi_plus(black_box(&f)).unwrap()));
    let d = catalog("D").unwrap();
    let q = catalog("D^-1").unwrap();
    c.bench_function("compose D D^-1 order -1", |b| b.iter(|| compose(&d, &q, black_box(-1)).unwrap()));
    for name in ["aIII", "aV"] {
        let spec = case(OperatorType::TypeI, name);
        c.bench_function(&format!("case {name}"), |b| b.iter(|| compute_case(black_box(&spec)).unwrap()));
    }
    let spec = case(OperatorType::TypeII, "bIV");
    c.bench_function("case bIV", |b| b.iter(|| compute_case(black_box(&spec)).unwrap()));
}

fn numeric(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let p = params();
    let s = Settings::default();
    for (op, name) in [(OperatorType::TypeI, "Phi*"), (OperatorType::TypeII, "bII")] {
        let spec = case(op, name);
        group.bench_function(name, |b| b.iter(|| evaluate_case(black_box(&spec), &p, &s).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, exact, numeric);
criterion_main!(benches);
