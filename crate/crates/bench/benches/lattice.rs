use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyideal_core::{parse_ring_dsl, RingContext, SubSpace};

fn lattice(c: &mut Criterion) {
    for dsl in ["Z12", "Z4 x Z9", "Z2 x Z2 x Z2", "GF(4)"] {
        let spec = parse_ring_dsl(dsl).unwrap();
        c.bench_function(&format!("context {dsl}"), |b| b.iter(|| RingContext::new(black_box(&spec)).unwrap()));
    }
}

fn hy_queries(c: &mut Criterion) {
    let ctx = RingContext::new(&parse_ring_dsl("Z4 x Z9").unwrap()).unwrap();
    let y = SubSpace::whole(&ctx);
    let n = ctx.lattice().len();
    c.bench_function("hy and strong over lattice", |b| {
        b.iter(|| (0..n).filter(|&i| y.is_hy_idx(i) && y.is_strong_idx(i)).count())
    });
    c.bench_function("relative decisions over lattice", |b| {
        b.iter(|| (0..n).filter(|&i| y.relative_decision(i, false).is_relative()).count())
    });
}

criterion_group!(benches, lattice, hy_queries);
criterion_main!(benches);
