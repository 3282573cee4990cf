//! Criterion benchmarks comparing the closed formulas against the
//! determinant oracles. Run with `cargo bench -p triforest-bench`.
