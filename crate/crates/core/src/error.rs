use thiserror::Error;

use crate::polygon::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong when building or combining mosaics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {0} appears more than once")]
    DuplicateLabel(Label),
    #[error("diagonal ({0}, {1}) joins adjacent vertices of a {2}-gon")]
    AdjacentDiagonal(usize, usize, usize),
    #[error("diagonal ({0}, {1}) does not fit a {2}-gon")]
    InvalidDiagonal(usize, usize, usize),
    #[error("diagonals ({0}, {1}) and ({2}, {3}) cross")]
    CrossingDiagonals(usize, usize, usize, usize),
    #[error("{count} diagonals exceed the maximum {max} for a {n}-gon")]
    TooManyDiagonals { count: usize, max: usize, n: usize },
    #[error("{what}: {value} is outside the supported range {range}")]
    Range {
        what: &'static str,
        value: i64,
        range: String,
    },
    #[error("polygons do not share side count and label arrangement")]
    MismatchedPolygons,
    #[error("expected a polygon with exactly one diagonal, found {0}")]
    ExpectedSingleDiagonal(usize),
    #[error("label {0} is not a side of the polygon")]
    UnknownLabel(Label),
    #[error("label {0} would appear on both glued polygons")]
    LabelCollision(Label),
    #[error("composition plan attaches {attached} polygons to a base with {sides} sides")]
    ArityMismatch { attached: usize, sides: usize },
    #[error("relabeling is not a bijection on the polygon's labels")]
    NonBijective,
    #[error("diagonal ({0}, {1}) is not present")]
    NoSuchDiagonal(usize, usize),
    #[error("no side carries the distinguished label {0}")]
    NoInfinitySide(Label),
    #[error("cell is not part of this complex")]
    UnknownCell,
    #[error("subset of size {size} is not allowed for n = {n} (need 2..={max})")]
    BadSubsetSize { size: usize, n: usize, max: usize },
    #[error("label subset contains {0}, which is not a side label")]
    BadSubsetLabel(Label),
    #[error("not a closed surface: {0}")]
    NotASurface(String),
    #[error("generators {0} and {1} do not satisfy the SI condition")]
    NotSi(usize, usize),
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("malformed complex data: {0}")]
    MalformedExport(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, value: impl TryInto<i64>, range: impl Into<String>) -> Self {
        Error::Range {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            range: range.into(),
        }
    }
}
