//! Error type shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

/// Everything that can go wrong, from malformed input data to I/O failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a point must have at least one coordinate")]
    EmptyPoint,

    #[error("coordinate {index} is not finite")]
    NonFiniteCoordinate { index: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dataset must contain at least one point")]
    EmptyDataset,

    #[error("{kind} labels have length {got}, but the dataset has {expected} points")]
    LabelLengthMismatch {
        kind: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("operation requires binary labels, but the dataset carries none")]
    MissingBinaryLabels,

    #[error("operation requires identity labels, but the dataset carries none")]
    MissingIdentityLabels,

    #[error("centroid of an empty point set is undefined")]
    EmptyCentroid,

    #[error("need 1 <= k <= n, got k = {k} with n = {n}")]
    InvalidK { k: usize, n: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("assignment is not a partition of the dataset: {0}")]
    NotAPartition(String),

    #[error("cannot split a cluster whose members carry a single label")]
    PureClusterSplit,

    #[error("pooled mean requires a non-empty point set on both sides")]
    PooledMeanEmptySide,

    #[error("identity {identity} has {points} points, fewer than k = {k}")]
    IdentityTooSmall {
        identity: usize,
        points: usize,
        k: usize,
    },

    #[error("evaluation requires at least two distinct identities")]
    TooFewIdentities,

    #[error("identity {identity} needs at least two points for leave-one-out, has {points}")]
    IdentityTooSmallForLoo { identity: usize, points: usize },

    #[error("{path}: row {row}, column {column}: {message}")]
    CsvCell {
        path: PathBuf,
        row: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    MalformedFile { path: PathBuf, message: String },

    #[error("projection dimension must be 2 or 3, got {0}")]
    BadProjectionDims(usize),

    #[error("data spans only {nonzero} nonzero principal directions, fewer than the requested {dims}")]
    RankDeficient { nonzero: usize, dims: usize },

    #[error("timing requires at least one repetition")]
    NoRepetitions,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{path}: {source}")]
    ModelParse {
        path: PathBuf,
        source: serde_json::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
