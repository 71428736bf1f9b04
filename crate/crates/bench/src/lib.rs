//! Criterion benchmarks for the NSGA-II engine live in `benches/`.
