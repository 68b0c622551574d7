use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least {min}, got {degree}")]
    Degree { degree: u32, min: u32 },

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("invalid column profile: {0}")]
    InvalidProfile(String),

    #[error("invalid local cycle data: {0}")]
    InvalidCycle(String),

    #[error("invalid combinatorial type: {0}")]
    InvalidType(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
