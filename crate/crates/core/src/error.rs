use thiserror::Error;

/// Errors produced by the algebra, geometry and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(i64, u64),

    #[error("modulus mismatch: F_{left} vs F_{right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("{0} is not a prime usable as a field modulus")]
    InvalidModulus(u64),

    #[error("value {0} has no image in the field (denominator vanishes)")]
    NotRepresentable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("characteristic {characteristic} is too small for degree {degree}")]
    CharacteristicTooSmall { characteristic: u64, degree: usize },

    #[error("zero form has no multiplicity profile")]
    ZeroForm,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("points coincide")]
    CoincidentPoints,

    #[error("planes coincide")]
    CoincidentPlanes,

    #[error("vector violates the Plücker relation")]
    PluckerRelation,

    #[error("surface contains the line")]
    SurfaceContainsLine,

    #[error("line lies on all planes through curve")]
    LineOnAllPlanes,

    #[error("class is not a congruence class: {0}")]
    NotCongruence(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A randomized construction could not reach general position.
    #[error("genericity condition failed ({attempts} attempt(s)): {condition}")]
    NonGeneric { condition: String, attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Error {
    Error::OutOfRange { what, detail: detail.into() }
}
