//! Holds the `acceptance` test target. The package sorts after the others, so
//! `cargo test --workspace` runs every other suite before the gate.
