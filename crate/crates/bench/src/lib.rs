//! Criterion benchmarks for the walk engines; see `benches/engines.rs`.
