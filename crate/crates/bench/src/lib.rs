//! Criterion benchmarks for `ryser-core`; see `benches/`.
