use thiserror::Error;

use crate::gmodule::ModuleError;
use crate::group::GroupError;
use crate::zlinalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("refusing to build {coords} ambient coordinates (limit {limit})")]
    MemoryGuard { coords: u128, limit: u128 },
    #[error("the symmetric group action needs degree >= 1")]
    DegreeTooLow,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("transfer argument {0} is not in the subgroup")]
    ArgumentNotInSubgroup(usize),
    #[error("cochains live over different spaces")]
    SpaceMismatch,
    #[error("catalog: {0}")]
    Catalog(String),
}

impl Error {
    /// Resource limits rather than invalid input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::DegreeCapExceeded { .. } | Error::MemoryGuard { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
