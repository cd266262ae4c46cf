//! Benchmark-only crate; see `benches/ops.rs`.  Nothing is exported.
