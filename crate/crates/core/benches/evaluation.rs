use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dickson_core::dickson::{dickson_eval, DicksonSpec, Method};
use dickson_core::exec::Strategy;
use dickson_core::numtheory::{brewer_sum, is_permutation, BrewerQuery};
use dickson_core::rings::{ExtField, FiniteField, PrimeField, Rationals, Ring};
use dickson_core::verify::{verify_suite, Suite, VerifyConfig};

fn methods(c: &mut Criterion) {
    let f = PrimeField::new(101).unwrap();
    let mut group = c.benchmark_group("eval/fp101");
    for n in [16u64, 128, 512] {
        let spec = DicksonSpec::new(n, 0, 2u64);
        for method in Method::ALL {
            group.bench_with_input(BenchmarkId::new(method.as_str(), n), &n, |b, _| {
                b.iter(|| dickson_eval(&f, &spec, black_box(&3), method).unwrap())
            });
        }
    }
    group.bench_function("matrix/1000000", |b| {
        let spec = DicksonSpec::new(1_000_000, 0, 2u64);
        b.iter(|| dickson_eval(&f, &spec, black_box(&3), Method::Matrix).unwrap())
    });
    group.finish();

    let q = Rationals;
    let (x, a) = (q.parse_elem("3/2").unwrap(), q.parse_elem("-5/7").unwrap());
    let mut group = c.benchmark_group("eval/rat");
    for n in [16u64, 64] {
        let spec = DicksonSpec::new(n, 0, a.clone());
        for method in Method::ALL {
            group.bench_with_input(BenchmarkId::new(method.as_str(), n), &n, |b, _| {
                b.iter(|| dickson_eval(&q, &spec, black_box(&x), method).unwrap())
            });
        }
    }
    group.finish();
}

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn strategies(c: &mut Criterion) {
    let mut group = c.benchmark_group("strategy");
    group.sample_size(10);
    let query = BrewerQuery::new(65_521, 40, 3).unwrap();
    let field = ExtField::new(2, 12).unwrap();
    let a = field.element(5);
    for (name, strategy) in STRATEGIES {
        group.bench_function(BenchmarkId::new("brewer_p65521", name), |b| {
            b.iter(|| brewer_sum(black_box(&query), strategy).unwrap())
        });
        group.bench_function(BenchmarkId::new("permutation_f4096", name), |b| {
            b.iter(|| is_permutation(&field, black_box(7), &a, strategy).unwrap())
        });
        let cfg = VerifyConfig::new(1).with_strategy(strategy);
        group.bench_function(BenchmarkId::new("verify_kindk", name), |b| {
            b.iter(|| verify_suite(Suite::KindK, black_box(&cfg)))
        });
    }
    group.finish();
}

criterion_group!(benches, methods, strategies);
criterion_main!(benches);
