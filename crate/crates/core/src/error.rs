use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("value {value} is not a canonical element of F_{p}")]
    ValueOutOfField { value: u64, p: u32 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: F_{left} vs F_{right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("ambient dimension {0} is not of the form 2n")]
    OddAmbientDimension(usize),

    /// Generators `first` and `second` (0-based positions in the input list)
    /// pair to a nonzero value under the symplectic form.
    #[error("generators {first} and {second} do not commute (symplectic form = {value})")]
    NotIsotropic {
        first: usize,
        second: usize,
        value: u32,
    },

    #[error("stabilizer dimension {dim} exceeds n = {n}")]
    DimensionExceedsN { dim: usize, n: usize },

    /// The search budget ran out; every logical operator has weight > `lower_bound`.
    #[error("search budget exhausted: d > {lower_bound}")]
    ResourceLimit { lower_bound: usize },

    #[error("vector is not in the normalizer S^perp")]
    NotLogical,

    #[error("no stabilizer element cancels the logical on the erased region")]
    NotCleanable,

    #[error("sets are not disjoint: qubit {0} is in both")]
    DisjointnessViolated(usize),

    #[error("k = {k} must satisfy 0 <= k <= n = {n}")]
    InvalidK { k: usize, n: usize },

    #[error("unknown catalog code '{0}'")]
    UnknownCode(String),

    #[error("qubit index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongLength {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: Pauli letters are only valid for p = 2")]
    LetterRequiresP2 { line: usize },

    /// Isotropy failure reported against input line numbers (1-based).
    #[error("generators on lines {first_line} and {second_line} do not commute")]
    NotIsotropicLines {
        first_line: usize,
        second_line: usize,
    },

    #[error("n = {n} exceeds the cap of {cap} for exhaustive enumeration")]
    CapExceeded { n: usize, cap: usize },
}
