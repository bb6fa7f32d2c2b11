//! Criterion benchmarks for `groupoid-core`; see `benches/groupoid.rs`.
