use criterion::{criterion_group, criterion_main, Criterion};
use hgbern_bench::lifted_parameter;
use hgbern_core::congruence::{hb_factorial_congruence, hb_kummer_pair, kummer_classical, kummer_grid};

fn examples(c: &mut Criterion) {
    let small = lifted_parameter(5, 4);
    let large = lifted_parameter(5, 48);
    c.bench_function("pair p=5 m=6 n=2", |b| b.iter(|| hb_kummer_pair(5, &small, 6, 2, 0).unwrap()));
    c.bench_function("pair p=5 m=22 n=2 nu=1", |b| b.iter(|| hb_kummer_pair(5, &large, 22, 2, 1).unwrap()));
    c.bench_function("factorial p=3 n=12", |b| {
        let n = lifted_parameter(3, 5);
        b.iter(|| hb_factorial_congruence(3, &n, 12).unwrap())
    });
}

fn grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("classical grid");
    group.sample_size(10);
    for p in [5u64, 7, 11] {
        let triples = kummer_grid(p, 40);
        group.bench_function(format!("p={p}"), |b| {
            b.iter(|| {
                for &(m, n, nu) in &triples {
                    assert!(kummer_classical(p, m, n, nu).unwrap().holds);
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, examples, grid);
criterion_main!(benches);
