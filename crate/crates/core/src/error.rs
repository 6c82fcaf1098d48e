use thiserror::Error;

use crate::grid::Axis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("side length must be at least 1, got {0}")]
    InvalidSideLength(i64),
    #[error("vertex index {index} out of range for a grid with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("line index {value} out of range for axis {axis} (expected 0..={max})")]
    LineOutOfRange { axis: Axis, value: i64, max: i64 },
    #[error("coordinates ({0}, {1}, {2}) are not a vertex of this grid")]
    NotAVertex(i64, i64, i64),
    #[error("prefix size {target} outside the available range {min}..={max}")]
    PrefixOutOfRange { target: usize, min: usize, max: usize },
    #[error("the supplied set does not power-dominate the grid")]
    NotPowerDominating,
    #[error("vertex set belongs to a grid with {found} vertices, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
