//! Criterion benchmarks for `sympow-core`. Run with `cargo bench -p sympow-bench`.
