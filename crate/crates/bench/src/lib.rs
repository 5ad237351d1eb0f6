//! Criterion benchmarks for `steiner-core`; see `benches/`.
