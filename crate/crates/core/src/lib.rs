//! Finite T0-spaces encoded as 0/1 matrices.
//!
//! A finite poset `(X, ≤)` on points `x_1..x_n` is stored as the matrix
//! `X_M` with entry `(i, j)` equal to 0 exactly when `x_i ≤ x_j`. Homotopy
//! and simple-homotopy questions (beat points, cores, weak beat points) and
//! invariants such as `det X_M`, `rank_bar` and the characteristic polynomial
//! are computed exactly over the integers.
//!
//! ```
//! use fspace::{enumeration::{make_family, Family, FamilySpec}, homotopy::invariants_bundle};
//!
//! let circle = make_family(FamilySpec::new(Family::Circle8, 0)).unwrap();
//! let inv = invariants_bundle(&circle);
//! assert_eq!(inv.abs_det, 1.into());
//! assert_eq!(inv.rank_bar, 0);
//! ```

pub mod canon;
pub mod complexes;
pub mod digraph;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod group_actions;
pub mod homotopy;
pub mod linalg;
pub mod poset;
pub mod subposet_sums;

pub use error::{Error, Result, Violation};
pub use linalg::{IntMatrix, IntPolynomial};
pub use poset::{Poset, ZeroOneMatrix};
