//! Criterion benchmarks for logcert live in `benches/`.
