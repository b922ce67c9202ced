use thiserror::Error;

/// Errors for precondition violations and malformed inputs.
///
/// Expected negative outcomes of verification routines (a Hadamard condition
/// that fails, a strong-regularity counterexample) are not errors; they are
/// returned as structured values by the routine that found them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidSignedPerm(String),

    #[error("matrix is neither symmetric nor skew-symmetric")]
    NeitherSymmetricNorSkew,

    #[error("matrices neither commute nor anticommute")]
    NeitherCommuteNorAnticommute,

    #[error("pair is neither amicable nor anti-amicable")]
    NeitherAmicableNorAntiAmicable,

    #[error("m = {m} is outside the supported range {min}..={max}")]
    MOutOfRange { m: usize, min: usize, max: usize },

    #[error("index {index} is out of range for m = {m} (basis has {limit} elements)")]
    IndexOutOfRange { m: usize, index: usize, limit: usize },

    #[error("truth table has length {got}, expected {expected}")]
    TableLength { got: usize, expected: usize },

    #[error("truth table entry at {index} is {value}, expected 0 or 1")]
    TableEntry { index: usize, value: u8 },

    #[error("Cayley graph requires f(0) = 0")]
    NonzeroAtOrigin,

    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("vertices {a} and {b} are not adjacent in the sigma Cayley graph (m = {m})")]
    NotRedClique { m: usize, a: usize, b: usize },

    #[error("matrix has an entry outside {{-1, +1}} at ({row}, {col})")]
    NotSignMatrix { row: usize, col: usize },

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("checkpoint file is malformed: {0}")]
    BadCheckpoint(String),

    #[error("transversal index {index} is out of range (total {total})")]
    TransversalIndex { index: u64, total: u128 },
}
