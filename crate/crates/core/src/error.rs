use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input could not be understood.
    Input,
    /// The input is well formed but outside what is supported (caps, ranks, non-dominant weights).
    Unsupported,
    /// An internal consistency check failed. These signal bugs and must never be silenced.
    Internal,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("total rank {rank} exceeds the configured cap {cap}")]
    UnsupportedRank { rank: usize, cap: usize },
    #[error("Weyl group of order {order} exceeds the configured cap {cap}")]
    GroupTooLarge { order: u128, cap: u128 },
    #[error("representation of dimension {dim} exceeds the configured cap {cap}")]
    RepTooLarge { dim: u128, cap: u128 },
    #[error("weight is not dominant: {0}")]
    NonDominant(String),
    #[error("non-integral value where an integer was required: {0}")]
    NonIntegral(String),
    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid diagram involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid painting: {0}")]
    InvalidPainting(String),
    #[error("unknown real form preset {0:?}")]
    UnknownPreset(String),
    #[error("real root {0} found; the Vogan diagram must describe a maximally compact Cartan")]
    RealRoot(String),
    #[error("restricted compact roots do not form a root system: {0}")]
    NotARootSystem(String),
    #[error("lambda - w(lambda) has no nonnegative integral decomposition: {0}")]
    NonIntegralDecomposition(String),
    #[error("w(lambda+rho_G) is singular on the compact root {0}")]
    SingularRestriction(String),
    #[error("signed sum {sum} is not divisible by 2^{r}")]
    InexactDivision { sum: String, r: u32 },
    #[error("the Cartan involution is not inner (dim a = {dim_a}); the weight-space trace needs equal rank")]
    NotEqualRank { dim_a: usize },
    #[error("theta moves the highest weight; the intertwiner recipe needs theta(lambda) = lambda")]
    ThetaMovesHighestWeight,
    #[error("intertwiner check failed: {0}")]
    IntertwinerInconsistent(String),
    #[error("explicit representation check failed: {0}")]
    RepresentationInconsistent(String),
    #[error("structure constants are inconsistent: {0}")]
    StructureConstants(String),
    #[error("signature violates parity or range: {0}")]
    SignatureOutOfRange(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            InvalidType(_) | RankMismatch { .. } | UnknownPreset(_) => ErrorClass::Input,
            UnsupportedRank { .. }
            | GroupTooLarge { .. }
            | RepTooLarge { .. }
            | NonDominant(_)
            | NonIntegral(_)
            | InvalidInvolution(_)
            | InvalidPainting(_)
            | NotEqualRank { .. }
            | ThetaMovesHighestWeight => ErrorClass::Unsupported,
            RealRoot(_)
            | NotARootSystem(_)
            | NonIntegralDecomposition(_)
            | SingularRestriction(_)
            | InexactDivision { .. }
            | IntertwinerInconsistent(_)
            | RepresentationInconsistent(_)
            | StructureConstants(_)
            | SignatureOutOfRange(_) => ErrorClass::Internal,
        }
    }
}
