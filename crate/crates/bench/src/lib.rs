//! Benchmarks for the circle-bundles engine; see `benches/engine.rs`.
