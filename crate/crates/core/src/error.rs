use std::fmt;

use thiserror::Error;

/// A failed membership condition of a candidate poset matrix.
///
/// `condition` is 1 (zero diagonal), 2 (no symmetric off-diagonal zeros) or
/// 3 (zeros are transitive). `cells` are 0-based `(row, col)` witnesses; the
/// `Display` impl renders them 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub cells: Vec<(usize, usize)>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} violated at", self.condition)?;
        for (k, (i, j)) in self.cells.iter().enumerate() {
            let sep = if k == 0 { " " } else { ", " };
            write!(f, "{sep}({},{})", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// Errors raised by the library. Point and element indices are stored 0-based
/// and rendered 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(Violation),

    #[error("matrix is not square: row {} has {len} entries, expected {expected}", .row + 1)]
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("entry ({},{}) is {value}, expected 0 or 1", .row + 1, .col + 1)]
    NonBinaryEntry { row: usize, col: usize, value: i64 },

    #[error("diagonal entry ({},{}) is nonzero", .0 + 1, .0 + 1)]
    NonZeroDiagonal(usize),

    #[error("empty posets are not supported")]
    EmptyPoset,

    #[error("relations contain a cycle through point {}", .0 + 1)]
    Cycle(usize),

    #[error("point index {} out of range for a poset of {n} points", .index + 1)]
    IndexOutOfRange { index: usize, n: usize },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("size {n} exceeds the configured limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },

    #[error("permutations do not form a group: {0}")]
    NotAGroup(String),

    #[error("element g{} is not order preserving on pair ({}, {})", .element + 1, .i + 1, .j + 1)]
    NotOrderPreserving { element: usize, i: usize, j: usize },

    #[error("element g{} fixes point {}, so the action is not free", .element + 1, .point + 1)]
    NotFree { element: usize, point: usize },

    #[error("{n} points cannot split into free orbits of size {group_order}")]
    OrbitSizeMismatch { n: usize, group_order: usize },

    #[error("expected a group of order 2, got order {0}")]
    NotZ2(usize),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl Error {
    /// The variant name, used by front ends to report errors by kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::NonSquare { .. } => "NonSquare",
            Error::NonBinaryEntry { .. } => "NonBinaryEntry",
            Error::NonZeroDiagonal(_) => "NonZeroDiagonal",
            Error::EmptyPoset => "EmptyPoset",
            Error::Cycle(_) => "Cycle",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::Parse { .. } => "Parse",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::NotAGroup(_) => "NotAGroup",
            Error::NotOrderPreserving { .. } => "NotOrderPreserving",
            Error::NotFree { .. } => "NotFree",
            Error::OrbitSizeMismatch { .. } => "OrbitSizeMismatch",
            Error::NotZ2(_) => "NotZ2",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::InternalInvariantViolation(_) => "InternalInvariantViolation",
        }
    }

    /// Whether the error stems from malformed input rather than a mathematical
    /// property of well-formed input. The CLI maps this to its exit status.
    pub fn is_format_error(&self) -> bool {
        matches!(
            self,
            Error::NonSquare { .. } | Error::NonBinaryEntry { .. } | Error::Parse { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
