use num_bigint::BigUint;
use thiserror::Error;

use crate::optimizer::OptimalDesignResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("comparison depth {depth} outside 0..={strength}")]
    DepthOutOfRange { depth: usize, strength: usize },

    #[error("level {level} outside 0..={levels}")]
    LevelOutOfRange { level: usize, levels: usize },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("singular design: {0}")]
    SingularDesign(String),

    #[error("enumeration of {pairs} pairs exceeds the cap of {cap}")]
    CapExceeded { pairs: BigUint, cap: u64 },

    #[error(
        "no candidate design passed the equivalence check (best max V/p = {:.12})",
        .0.certificate.max_normalized_variance
    )]
    CertificationFailed(Box<OptimalDesignResult>),
}
