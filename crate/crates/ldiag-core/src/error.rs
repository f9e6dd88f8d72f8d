//! Error types shared across the crate.

use thiserror::Error;

/// Rejections raised when constructing or slicing diagrams.
///
/// Row/column indices in messages are 1-based, matching the on-disk
/// matrix text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// The input grid is not rectangular.
    #[error("ragged grid: row {row} has {got} entries, expected {expected}")]
    Ragged {
        row: usize,
        got: usize,
        expected: usize,
    },

    /// A row carries no line at all, so the matrix is not packed.
    #[error("not packed: row {0} is all zeros")]
    ZeroRow(usize),

    /// A column carries no line at all, so the matrix is not packed.
    #[error("not packed: column {0} is all zeros")]
    ZeroColumn(usize),

    /// A row or column selection index points outside the matrix.
    #[error("selection index {index} out of range ({len} available)")]
    SelectionOutOfRange { index: usize, len: usize },

    /// A row or column selection is not strictly increasing.
    #[error("selection must be strictly increasing")]
    UnorderedSelection,

    /// Enumeration was asked for a weight beyond the configured cap.
    #[error("weight {weight} exceeds the enumeration bound {bound}")]
    WeightBoundExceeded { weight: u64, bound: u64 },
}

/// Failures while reading the text formats (matrices, polynomials,
/// compositions).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: expected a matrix or the empty-diagram literal \"e\"")]
    EmptyMatrix,

    #[error("row {row} of the matrix text is empty")]
    EmptyRow { row: usize },

    #[error("invalid matrix entry {text:?}")]
    InvalidEntry { text: String },

    #[error(transparent)]
    Diagram(#[from] DiagramError),

    #[error("invalid polynomial term {text:?}")]
    InvalidPolyTerm { text: String },

    #[error("invalid composition part {text:?}: parts are positive integers")]
    InvalidPart { text: String },
}

/// A placement that does not fit the pair of diagrams it is applied to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid placement: {0}")]
pub struct PlacementError(pub String);

/// Rejections from the Hopf-structure layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    /// The deformation parameter `t` selects a coproduct and must be 0 or 1.
    #[error("t = {0} is not supported: the coproduct is defined for t in {{0, 1}}")]
    UnsupportedT(i64),

    /// The requested structure is not one of the two verified Hopf points.
    #[error("structure (qc={qc}, qs={qs}, t={t}) is not a verified Hopf structure; only (0,0,0) and (1,1,1) are")]
    UnverifiedStructure { qc: i64, qs: i64, t: i64 },
}
