//! Criterion benchmarks for `glinfo-core`. See `benches/`.
