use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hgbern_bench::{DEEP_SIZES, ROUTE_SIZES};
use hgbern_core::contfrac::{convergent_closed, convergent_rec};
use hgbern_core::hbnum::hb_higher_row;
use hgbern_core::{HbKey, Route};

fn routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("route");
    for n in ROUTE_SIZES {
        let key = HbKey::new(3, 1, n).unwrap();
        for route in Route::ALL {
            group.bench_with_input(BenchmarkId::new(route.name(), n), &key, |b, k| {
                b.iter(|| route.evaluate(k).unwrap())
            });
        }
    }
    group.finish();
}

fn deep(c: &mut Criterion) {
    let mut group = c.benchmark_group("deep");
    group.sample_size(20);
    for n in DEEP_SIZES {
        group.bench_with_input(BenchmarkId::new("recurrence-row", n), &n, |b, &n| {
            b.iter(|| hb_higher_row(3, 2, n + 1).unwrap())
        });
        let key = HbKey::new(3, 2, n).unwrap();
        group.bench_with_input(BenchmarkId::new("det", n), &key, |b, k| b.iter(|| Route::Det.evaluate(k).unwrap()));
    }
    for n in [12, 24, 48] {
        group.bench_with_input(BenchmarkId::new("convergent-rec", n), &n, |b, &n| {
            b.iter(|| convergent_rec(3, n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("convergent-closed", n), &n, |b, &n| {
            b.iter(|| convergent_closed(3, n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, routes, deep);
criterion_main!(benches);
