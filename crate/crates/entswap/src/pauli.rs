//! The four Pauli operators, words of them, and their action on joint states.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::StateVector;

/// One of the four Pauli operators, numbered `[σ0 σ1 σ2 σ3] = [I X Y Z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_index(i: u8) -> Option<Pauli> {
        Self::ALL.get(i as usize).copied()
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// The 2×2 matrix of the operator, row-major.
    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let o = Complex64::ZERO;
        let l = Complex64::ONE;
        let i = Complex64::i();
        match self {
            Pauli::I => [[l, o], [o, l]],
            Pauli::X => [[o, l], [l, o]],
            Pauli::Y => [[o, -i], [i, o]],
            Pauli::Z => [[l, o], [o, -l]],
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A tensor product of Pauli operators, one factor per qubit position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliWord(pub Vec<Pauli>);

impl PauliWord {
    pub fn from_indices(indices: &[u8]) -> Option<PauliWord> {
        indices
            .iter()
            .map(|&i| Pauli::from_index(i))
            .collect::<Option<Vec<_>>>()
            .map(PauliWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `4^arity` words in lexicographic order.
    pub fn enumerate(arity: usize) -> Vec<PauliWord> {
        let count = 4usize.pow(arity as u32);
        (0..count)
            .map(|code| {
                let letters = (0..arity)
                    .rev()
                    .map(|pos| Pauli::ALL[(code >> (2 * pos)) & 3])
                    .collect();
                PauliWord(letters)
            })
            .collect()
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Applies `σ` to the qubit at `pos`, identity elsewhere.
///
/// Implemented by index arithmetic over amplitude pairs; no matrices are
/// materialized, so the ±1 and ±i entries stay exact.
pub fn apply_local(s: &StateVector, pos: usize, sigma: Pauli) -> Result<StateVector> {
    let n = s.num_qubits();
    if pos >= n {
        return Err(Error::PositionOutOfRange { pos, n });
    }
    let bit = 1usize << (n - 1 - pos);
    let mut amps = s.amplitudes().to_vec();
    let i = Complex64::i();
    for idx in 0..s.dim() {
        if idx & bit != 0 {
            continue;
        }
        let lo = idx;
        let hi = idx | bit;
        let (a0, a1) = (amps[lo], amps[hi]);
        let (b0, b1) = match sigma {
            Pauli::I => (a0, a1),
            Pauli::X => (a1, a0),
            Pauli::Y => (-i * a1, i * a0),
            Pauli::Z => (a0, -a1),
        };
        amps[lo] = b0;
        amps[hi] = b1;
    }
    Ok(StateVector::from_parts_unchecked(n, amps))
}

/// Applies a Pauli word, one factor per qubit position.
pub fn apply_word(s: &StateVector, word: &PauliWord) -> Result<StateVector> {
    if word.len() != s.num_qubits() {
        return Err(Error::WordLengthMismatch {
            got: word.len(),
            expected: s.num_qubits(),
        });
    }
    let mut out = s.clone();
    for (pos, &sigma) in word.0.iter().enumerate() {
        out = apply_local(&out, pos, sigma)?;
    }
    Ok(out)
}
