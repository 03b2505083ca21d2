use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at specialization: {0}")]
    PoleAtSpecialization(String),

    #[error("the parameter d cannot be specialized to 0")]
    SpecializationZeroD,

    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("degenerate diagonal entry for ({m}, {k}) in the triangular Jack solve")]
    DegenerateDiagonal { m: Partition, k: Partition },

    #[error("normalization constant vanishes for {0}")]
    ZeroNormalization(Partition),

    #[error("pole in Pieri coefficient: {0}")]
    PoleInCoefficient(String),

    #[error(
        "vanishing system for the interpolation polynomial of {0} is singular or inconsistent"
    )]
    SingularVanishingSystem(Partition),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for the failures that only arise from specializing `d`.
    pub fn is_specialization_singularity(&self) -> bool {
        matches!(
            self,
            Error::PoleAtSpecialization(_)
                | Error::ZeroNormalization(_)
                | Error::PoleInCoefficient(_)
                | Error::SpecializationZeroD
        )
    }
}
