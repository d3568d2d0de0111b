//! Benchmarks for the core algorithms live in `benches/algorithms.rs`.
