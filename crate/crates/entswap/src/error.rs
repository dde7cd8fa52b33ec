use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("qubit position {pos} out of range for {n} qubits")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("amplitude list has length {got}, expected {expected}")]
    BadAmplitudeCount { got: usize, expected: usize },

    #[error("non-finite amplitude at index {0}")]
    NonFiniteAmplitude(usize),

    #[error("state vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("permutation images are not a bijection on 0..{0}")]
    BadPermutation(usize),

    #[error("basis is not orthonormal (vectors {0} and {1})")]
    NonOrthonormalBasis(usize, usize),

    #[error("pauli word has length {got}, state has {expected} qubits")]
    WordLengthMismatch { got: usize, expected: usize },

    #[error("bell pairing positions {0} and {1} are invalid for {2} qubits")]
    BadPairing(usize, usize, usize),

    #[error("transformed basis vector {0} matches no basis element up to phase")]
    NoBasisImage(usize),

    #[error("no pauli word consistent with the known indices maps {initial} to {outcome}")]
    DecodeNoCandidate { initial: usize, outcome: usize },

    #[error("{count} pauli words consistent with the known indices map {initial} to {outcome}")]
    DecodeAmbiguous {
        initial: usize,
        outcome: usize,
        count: usize,
    },

    #[error("{party} does not own qubit {position} of group {group}")]
    NotOwner {
        party: &'static str,
        group: usize,
        position: usize,
    },

    #[error("message length {msg} does not match pad positions {positions}")]
    PadMismatch { msg: usize, positions: usize },

    #[error("pad positions must be distinct and below n = {0}")]
    BadPadPositions(usize),

    #[error("message symbol {0} outside the alphabet 0..=3")]
    BadSymbol(u8),

    #[error("protocol state error: {0}")]
    ProtocolState(String),
}

pub type Result<T> = std::result::Result<T, Error>;
