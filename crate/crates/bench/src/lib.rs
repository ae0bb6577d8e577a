//! Criterion benchmarks for hyideal-core; see `benches/`.
