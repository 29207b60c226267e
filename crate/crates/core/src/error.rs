use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} outside the supported range 2..=64")]
    FieldOutOfRange(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("no Lie type row for family {family} with rank {rank}")]
    InvalidLieRow { family: String, rank: u32 },
    #[error("family {0} is stored as data only; exact orders are unsupported")]
    TwistedUnsupported(String),
    #[error("{family} requires {requirement}")]
    FieldRestriction {
        family: String,
        requirement: &'static str,
    },
    #[error("matrix dimension {0} outside the supported range 2..=4")]
    UnsupportedDimension(usize),
    #[error("matrix does not have determinant 1")]
    NotSpecialLinear,
    #[error("malformed matrix: {0}")]
    MatrixParse(String),
    #[error("group order {predicted} exceeds enumeration cap {cap}")]
    EnumerationCap { predicted: u128, cap: u128 },
    #[error("{needed} pair multiplications exceed the work cap {cap}")]
    WorkCap { needed: u128, cap: u128 },
    #[error("element sets belong to different groups")]
    SpecMismatch,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{0} has a nontrivial center; the statement is for simple groups")]
    SimpleRequired(String),
    #[error("bad gate configuration: {0}")]
    Gates(String),
}

impl Error {
    /// Resource caps map to their own exit status in the CLI.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::EnumerationCap { .. } | Error::WorkCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
