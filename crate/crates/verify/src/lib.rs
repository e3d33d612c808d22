//! Holds the acceptance suite in `tests/acceptance.rs`; it has no library code.
