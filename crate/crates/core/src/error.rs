use thiserror::Error;

use crate::poly::UniPoly;

/// Everything that can go wrong in the library.
///
/// Variants fall into three families, matching the CLI exit codes:
/// malformed input (2), a violated mathematical precondition (3) and an
/// exhausted enumeration budget (4).
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operands live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("operation needs a prime field, got {0}")]
    WrongField(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("2x2 matrix is singular")]
    Singular2x2,
    #[error("element is not a unit (gcd with modulus is {gcd})")]
    NotUnit { gcd: UniPoly },
    #[error("element does not generate the algebra")]
    NotGenerator,
    #[error("modulus must be monic, separable and of odd degree >= 3: {0}")]
    BadModulus(String),
    #[error("pencil is not stable (determinant form has zero discriminant)")]
    Unstable,
    #[error("pencil members are not symmetric or not independent: {0}")]
    BadPencil(String),
    #[error("field too small: no nondegenerate member among the rational members of the pencil")]
    FieldTooSmall,
    #[error("no cyclic vector found for a stable pencil")]
    InternalNoCyclicVector,
    #[error("square-class witness does not certify the element")]
    BadWitness,
    #[error("subspace is not totally isotropic for both members")]
    NotIsotropic,
    #[error("chain M_j collapsed: dim M_{step} = {dim} < {expected}")]
    ChainCollapse {
        step: usize,
        dim: usize,
        expected: usize,
    },
    #[error("invalid Mumford representation: {0}")]
    BadDivisor(String),
    #[error("enumeration of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::WrongField(_) => "WrongField",
            Error::InvalidField(_) => "InvalidField",
            Error::NotSquare { .. } => "NotSquare",
            Error::DimMismatch(_) => "DimMismatch",
            Error::Singular => "Singular",
            Error::Singular2x2 => "Singular2x2",
            Error::NotUnit { .. } => "NotUnit",
            Error::NotGenerator => "NotGenerator",
            Error::BadModulus(_) => "BadModulus",
            Error::Unstable => "Unstable",
            Error::BadPencil(_) => "BadPencil",
            Error::FieldTooSmall => "FieldTooSmall",
            Error::InternalNoCyclicVector => "InternalNoCyclicVector",
            Error::BadWitness => "BadWitness",
            Error::NotIsotropic => "NotIsotropic",
            Error::ChainCollapse { .. } => "ChainCollapse",
            Error::BadDivisor(_) => "BadDivisor",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::Invalid(_) => "Invalid",
        }
    }

    /// Process exit code: 2 validation, 3 precondition, 4 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_)
            | Error::InvalidField(_)
            | Error::FieldMismatch(..)
            | Error::NotSquare { .. }
            | Error::DimMismatch(_)
            | Error::BadPencil(_)
            | Error::BadDivisor(_) => 2,
            Error::BudgetExceeded { .. } => 4,
            _ => 3,
        }
    }
}
