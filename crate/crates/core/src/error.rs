//! Error types: hard failures ([`Error`]) and data-model violations
//! ([`Violation`], collected exhaustively by validation).

use thiserror::Error;

/// Failure of a single operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown attribute index {index} (system has {count} attributes)")]
    UnknownAttribute { index: usize, count: usize },

    #[error("unknown attribute {name:?}")]
    UnknownAttributeName { name: String },

    #[error("row index {index} out of range (relation has {count} rows)")]
    RowOutOfRange { index: usize, count: usize },

    #[error("column index {index} out of range (relation has {count} columns)")]
    ColumnOutOfRange { index: usize, count: usize },

    #[error("{name} must lie in (0, 1], got {value}")]
    ThresholdOutOfRange { name: &'static str, value: String },

    #[error("cannot parse {input:?} as a fraction")]
    InvalidFraction { input: String },

    #[error("descriptor already binds attribute index {attribute}")]
    ConflictingTerms { attribute: usize },

    #[error("granule has an empty extension")]
    EmptyGranule,

    #[error("expected descriptors of length {expected}, found one of length {found}")]
    MixedLevels { expected: usize, found: usize },

    #[error("object set must be non-empty")]
    EmptyObjectSet,

    #[error("target-confidence threshold is required for partial-match support")]
    MissingTargetThreshold,

    #[error("invalid mining configuration: {0}")]
    InvalidConfig(String),
}

/// A single violated data-model invariant, with its location.
///
/// Validation routines return every violation found, not just the first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("universe {universe}: duplicate object id {id:?} at row {row}")]
    DuplicateObjectId {
        universe: String,
        id: String,
        row: usize,
    },

    #[error("universe {universe}: duplicate attribute name {name:?}")]
    DuplicateAttribute { universe: String, name: String },

    #[error("universe {universe}: empty cell at row {row}, column {column} ({attribute})")]
    EmptyCell {
        universe: String,
        row: usize,
        column: usize,
        attribute: String,
    },

    #[error("universe {universe}: row {row} has {found} cells, expected {expected}")]
    RowWidth {
        universe: String,
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("universe {universe} has no objects")]
    EmptyUniverse { universe: String },

    #[error("universe {universe} has no attributes")]
    NoAttributes { universe: String },

    #[error(
        "relation is {rows}x{cols} but the universes have {source} and {target} objects"
    )]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        source: usize,
        target: usize,
    },

    #[error("relation pair ({row}, {col}) out of range for a {rows}x{cols} relation")]
    PairOutOfRange {
        row: u32,
        col: u32,
        rows: usize,
        cols: usize,
    },

    #[error("relation representations disagree at ({row}, {col})")]
    InconsistentRelation { row: u32, col: u32 },
}
