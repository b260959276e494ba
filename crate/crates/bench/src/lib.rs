//! Criterion benchmarks for the reduction passes live in `benches/`.
