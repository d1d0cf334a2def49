use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// A decoder that simply finds no codeword is *not* an error: the decoders
/// report that as `Ok(None)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base field modulus {0} is not a prime")]
    NotPrime(u32),
    #[error("unsupported field parameters: {0}")]
    Unsupported(String),
    #[error("modulus must have degree {expected}, got {got}")]
    ModulusDegree { expected: usize, got: usize },
    #[error("modulus is not monic")]
    ModulusNotMonic,
    #[error("modulus is reducible over F_{0}")]
    ModulusReducible(u32),
    #[error("digit {digit} out of range for base field F_{q}")]
    DigitOutOfRange { digit: u32, q: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("field of size {size} exceeds the enumeration guard of {limit} elements")]
    FieldTooLarge { size: u128, limit: u128 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("kernel of the zero polynomial is the whole field")]
    ZeroPolynomial,
    #[error("elements are linearly dependent over F_q")]
    Dependent,
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("{0}")]
    Domain(String),
    #[error("not MRD: N(eta) = {norm} equals (-1)^(nk) = {forbidden} in F_{q}")]
    NotMrd { norm: u32, forbidden: u32, q: u32 },
    #[error("budget exceeded: {needed} exceeds the cap of {limit}")]
    Budget { needed: u128, limit: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
