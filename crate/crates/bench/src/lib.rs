//! Criterion benchmarks for the `mckay-core` pipeline live in `benches/`.
