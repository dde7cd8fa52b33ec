//! Bell and GHZ bases, arbitrary Bell pairings inside a larger register, and
//! verification of the Hadamard-basis expansions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::{StateVector, EPS, FRAC_1_SQRT_2};
use crate::report::Report;

/// `b_ij = (|0 i⟩ + (-1)^j |1 ī⟩)/√2`.
pub fn bell_state(i: u8, j: u8) -> StateVector {
    let (i, j) = (i & 1, j & 1);
    let mut amps = vec![Complex64::ZERO; 4];
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[i as usize] = s;
    amps[2 + (1 - i) as usize] = if j == 0 { s } else { -s };
    StateVector::new(2, amps).expect("bell state is normalized")
}

/// `b_{e1 e2 e3} = (|0 e1 e2⟩ + (-1)^{e3} |1 ē1 ē2⟩)/√2`.
pub fn ghz_state(e1: u8, e2: u8, e3: u8) -> StateVector {
    let (e1, e2, e3) = (e1 & 1, e2 & 1, e3 & 1);
    let mut amps = vec![Complex64::ZERO; 8];
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[(2 * e1 + e2) as usize] = s;
    amps[4 + (2 * (1 - e1) + (1 - e2)) as usize] = if e3 == 0 { s } else { -s };
    StateVector::new(3, amps).expect("ghz state is normalized")
}

/// GHZ labels `(e1, e2, e3)` in canonical basis order.
///
/// The ordering is fixed so that every three-letter Pauli word permutes the
/// basis by XOR-ing the index with a constant mask, with the masks falling
/// into the standard row layout of the three-qubit action table: index bits
/// are `(e1, e2 ^ e3, e2)`.
pub const GHZ_LABELS: [(u8, u8, u8); 8] = [
    (0, 0, 0),
    (0, 1, 1),
    (0, 0, 1),
    (0, 1, 0),
    (1, 0, 0),
    (1, 1, 1),
    (1, 0, 1),
    (1, 1, 0),
];

/// Index of `ghz_state(e1, e2, e3)` within the canonical GHZ basis.
pub fn ghz_index(e1: u8, e2: u8, e3: u8) -> usize {
    let (e1, e2, e3) = (e1 as usize & 1, e2 as usize & 1, e3 as usize & 1);
    (e1 << 2) | ((e2 ^ e3) << 1) | e2
}

/// Which family an entangled basis belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Bell,
    Ghz,
}

/// An ordered orthonormal basis of a 2- or 3-qubit space.
#[derive(Clone, Debug)]
pub struct EntangledBasis {
    kind: BasisKind,
    states: Vec<StateVector>,
}

impl EntangledBasis {
    /// The Bell basis `(b_00, b_01, b_10, b_11)`, indexed by `2i + j`.
    pub fn bell() -> Self {
        let states = (0..4u8).map(|k| bell_state(k >> 1, k & 1)).collect();
        Self {
            kind: BasisKind::Bell,
            states,
        }
    }

    /// The GHZ basis in canonical order (see [`GHZ_LABELS`]).
    pub fn ghz() -> Self {
        let states = GHZ_LABELS
            .iter()
            .map(|&(e1, e2, e3)| ghz_state(e1, e2, e3))
            .collect();
        Self {
            kind: BasisKind::Ghz,
            states,
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, index: usize) -> &StateVector {
        &self.states[index]
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }
}

/// Two distinct qubit positions within an `n`-qubit register, holding a Bell
/// pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BellPairing {
    pub first: usize,
    pub second: usize,
}

impl BellPairing {
    pub fn new(first: usize, second: usize, num_qubits: usize) -> Result<Self> {
        if first == second || first >= num_qubits || second >= num_qubits {
            return Err(Error::BadPairing(first, second, num_qubits));
        }
        Ok(Self { first, second })
    }
}

/// The four Bell states regarded as living on a pairing inside an `n`-qubit
/// register; the measurement module builds its projectors from this.
#[derive(Clone, Debug)]
pub struct PairedBellBasis {
    pub pairing: BellPairing,
    pub num_qubits: usize,
    states: Vec<StateVector>,
}

impl PairedBellBasis {
    pub fn state(&self, index: usize) -> &StateVector {
        &self.states[index]
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }
}

/// The Bell basis on positions `(pairing.first, pairing.second)` of an
/// `n`-qubit register, `n ∈ {2, 4}`.
pub fn bell_basis_on(pairing: BellPairing, num_qubits: usize) -> Result<PairedBellBasis> {
    if !(num_qubits == 2 || num_qubits == 4) {
        return Err(Error::BadPairing(pairing.first, pairing.second, num_qubits));
    }
    BellPairing::new(pairing.first, pairing.second, num_qubits)?;
    Ok(PairedBellBasis {
        pairing,
        num_qubits,
        states: (0..4u8).map(|k| bell_state(k >> 1, k & 1)).collect(),
    })
}

/// The product basis `h_a ⊗ h_b ⊗ …` over `n` qubits, indexed by the radix-2
/// value of `(a, b, …)`.
pub fn hadamard_product_basis(num_qubits: usize) -> Vec<StateVector> {
    let dim = 1usize << num_qubits;
    (0..dim)
        .map(|idx| {
            let mut s = StateVector::hadamard(((idx >> (num_qubits - 1)) & 1) as u8);
            for pos in (0..num_qubits - 1).rev() {
                s = s.tensor(&StateVector::hadamard(((idx >> pos) & 1) as u8));
            }
            s
        })
        .collect()
}

// Frozen expected coefficients in the Hadamard product basis:
// (label, nonzero coefficient positions with signs).
const BELL_HADAMARD_ROWS: [(&str, [(usize, f64); 2]); 4] = [
    ("b_00", [(0b00, 1.0), (0b11, 1.0)]),
    ("b_01", [(0b01, 1.0), (0b10, 1.0)]),
    ("b_10", [(0b00, 1.0), (0b11, -1.0)]),
    ("b_11", [(0b01, -1.0), (0b10, 1.0)]),
];

type SignedTerms = [(usize, f64); 4];

const GHZ_HADAMARD_ROWS: [((u8, u8, u8), SignedTerms); 8] = [
    (
        (0, 0, 0),
        [(0b000, 1.0), (0b011, 1.0), (0b101, 1.0), (0b110, 1.0)],
    ),
    (
        (0, 0, 1),
        [(0b100, 1.0), (0b111, 1.0), (0b001, 1.0), (0b010, 1.0)],
    ),
    (
        (0, 1, 0),
        [(0b000, 1.0), (0b011, -1.0), (0b101, -1.0), (0b110, 1.0)],
    ),
    (
        (0, 1, 1),
        [(0b100, 1.0), (0b111, -1.0), (0b001, -1.0), (0b010, 1.0)],
    ),
    (
        (1, 0, 0),
        [(0b000, 1.0), (0b011, -1.0), (0b101, 1.0), (0b110, -1.0)],
    ),
    (
        (1, 0, 1),
        [(0b100, 1.0), (0b111, -1.0), (0b001, 1.0), (0b010, -1.0)],
    ),
    (
        (1, 1, 0),
        [(0b000, 1.0), (0b011, 1.0), (0b101, -1.0), (0b110, -1.0)],
    ),
    (
        (1, 1, 1),
        [(0b100, 1.0), (0b111, 1.0), (0b001, -1.0), (0b010, -1.0)],
    ),
];

/// Expands every Bell and GHZ state in the Hadamard product basis and checks
/// the coefficients against the frozen expected rows (±1/√2 for Bell,
/// ±1/2 for GHZ).
pub fn verify_hadamard_expansions() -> Report {
    let mut report = Report::new("hadamard");

    let h2 = hadamard_product_basis(2);
    for (k, (label, terms)) in BELL_HADAMARD_ROWS.iter().enumerate() {
        let state = bell_state((k >> 1) as u8, (k & 1) as u8);
        let coeffs = state.expand_in_basis(&h2).expect("orthonormal basis");
        let mut expected = vec![Complex64::ZERO; 4];
        for &(idx, sign) in terms {
            expected[idx] = Complex64::new(sign * FRAC_1_SQRT_2, 0.0);
        }
        let dev = max_deviation(&coeffs, &expected);
        report.check_deviation(format!("bell expansion {label}"), dev, EPS);
    }

    let h3 = hadamard_product_basis(3);
    for ((e1, e2, e3), terms) in GHZ_HADAMARD_ROWS {
        let state = ghz_state(e1, e2, e3);
        let coeffs = state.expand_in_basis(&h3).expect("orthonormal basis");
        let mut expected = vec![Complex64::ZERO; 8];
        for (idx, sign) in terms {
            expected[idx] = Complex64::new(sign * 0.5, 0.0);
        }
        let dev = max_deviation(&coeffs, &expected);
        report.check_deviation(format!("ghz expansion b_{e1}{e2}{e3}"), dev, EPS);
    }

    report
}

fn max_deviation(got: &[Complex64], expected: &[Complex64]) -> f64 {
    got.iter()
        .zip(expected)
        .map(|(g, e)| (g - e).norm())
        .fold(0.0, f64::max)
}
