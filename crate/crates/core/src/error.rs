use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OpucError {
    #[error("divisor constant term {modulus:e} is below the division floor")]
    DivisionBySmallConstantTerm { modulus: f64 },

    #[error("cannot divide by z: constant term {modulus:e} is not structurally zero")]
    NonZeroConstantTerm { modulus: f64 },

    #[error(
        "Schur parameter at index {index} has modulus {modulus} (finite Blaschke termination)"
    )]
    UnimodularParameter { index: usize, modulus: f64 },

    #[error("series exhausted: need {needed} coefficients, have {available}")]
    SeriesExhausted { needed: usize, available: usize },

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("numerical pole: denominator modulus {modulus:e}")]
    NumericalPoleDetected { modulus: f64 },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("quadrature budget exceeded: degree {degree} needs more than {grid} grid points")]
    QuadratureBudgetExceeded { degree: usize, grid: usize },

    #[error("resolution exceeded: requested {requested} moments from a {grid}-point grid")]
    ResolutionExceeded { requested: usize, grid: usize },

    #[error("log singularity: boundary sample {index} is not positive")]
    LogSingularity { index: usize },

    #[error("polynomial has degenerate leading coefficient")]
    DegenerateLeadingCoefficient,

    #[error("reflection coefficient {index} has modulus {modulus} >= 1")]
    InvalidCoefficient { index: usize, modulus: f64 },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("measure total mass {mass} differs from 2*pi")]
    MassNormalization { mass: f64 },
}

pub type Result<T> = std::result::Result<T, OpucError>;
