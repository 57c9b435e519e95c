//! Criterion benchmarks for the decomposition engines live in `benches/`.
