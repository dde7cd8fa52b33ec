//! Finite-dimensional complex vector algebra for small qubit registers.
//!
//! States are dense vectors of `2^n` amplitudes. The leftmost symbol of a ket
//! label is the most significant index bit, so `|01⟩` is index 1 and `|10⟩`
//! is index 2.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for all normalization, orthonormality and equality checks.
pub const EPS: f64 = 1e-10;

pub type Amplitude = Complex64;

pub const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// A normalized state of `n` qubits, stored as `2^n` complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Amplitude>,
}

impl StateVector {
    /// Builds a state from raw amplitudes, checking length, finiteness and
    /// unit norm.
    pub fn new(num_qubits: usize, amps: Vec<Amplitude>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if amps.len() != dim {
            return Err(Error::BadAmplitudeCount {
                got: amps.len(),
                expected: dim,
            });
        }
        for (idx, a) in amps.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFiniteAmplitude(idx));
            }
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > EPS {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { num_qubits, amps })
    }

    /// The computational basis ket `|index⟩` of an `n`-qubit register.
    pub fn basis_ket(num_qubits: usize, index: usize) -> Self {
        let dim = 1usize << num_qubits;
        assert!(index < dim, "ket index out of range");
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Self { num_qubits, amps }
    }

    /// Single-qubit canonical ket `|b⟩`.
    pub fn ket(bit: u8) -> Self {
        Self::basis_ket(1, bit as usize & 1)
    }

    /// Single-qubit Hadamard vector `h_b = (|0⟩ + (-1)^b |1⟩)/√2`.
    pub fn hadamard(bit: u8) -> Self {
        let sign = if bit & 1 == 0 { 1.0 } else { -1.0 };
        Self {
            num_qubits: 1,
            amps: vec![
                Complex64::new(FRAC_1_SQRT_2, 0.0),
                Complex64::new(sign * FRAC_1_SQRT_2, 0.0),
            ],
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amp(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub(crate) fn from_parts_unchecked(num_qubits: usize, amps: Vec<Amplitude>) -> Self {
        Self { num_qubits, amps }
    }

    /// Tensor product; `self` supplies the leading (most significant) qubits.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let dim_b = other.dim();
        let mut amps = Vec::with_capacity(self.dim() * dim_b);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        StateVector {
            num_qubits: self.num_qubits + other.num_qubits,
            amps,
        }
    }

    /// Inner product `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Amplitude> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Relabels qubit positions: the bit at position `k` moves to position
    /// `p.image(k)`.
    pub fn permute_qubits(&self, p: &QubitPermutation) -> Result<StateVector> {
        if p.len() != self.num_qubits {
            return Err(Error::DimensionMismatch(p.len(), self.num_qubits));
        }
        let n = self.num_qubits;
        let mut amps = vec![Complex64::ZERO; self.dim()];
        for (idx, a) in self.amps.iter().enumerate() {
            let mut target = 0usize;
            for k in 0..n {
                let bit = (idx >> (n - 1 - k)) & 1;
                target |= bit << (n - 1 - p.image(k));
            }
            amps[target] = *a;
        }
        Ok(StateVector {
            num_qubits: n,
            amps,
        })
    }

    /// If `self = c · other` for a unit-modulus scalar `c` within `tol`,
    /// returns `c`.
    ///
    /// The candidate phase is fixed from the first amplitude of `other` with
    /// modulus above `tol`, then every component is checked.
    pub fn equal_up_to_phase(&self, other: &StateVector, tol: f64) -> Option<Amplitude> {
        if self.dim() != other.dim() {
            return None;
        }
        let pivot = other.amps.iter().position(|a| a.norm() > tol)?;
        let c = self.amps[pivot] / other.amps[pivot];
        if (c.norm() - 1.0).abs() > tol {
            return None;
        }
        let ok = self
            .amps
            .iter()
            .zip(&other.amps)
            .all(|(a, b)| (a - c * b).norm() <= tol);
        ok.then_some(c)
    }

    /// Coefficients of `self` in an orthonormal basis: `c_k = ⟨basis_k|self⟩`.
    pub fn expand_in_basis(&self, basis: &[StateVector]) -> Result<Vec<Amplitude>> {
        for (i, v) in basis.iter().enumerate() {
            if v.dim() != self.dim() {
                return Err(Error::DimensionMismatch(v.dim(), self.dim()));
            }
            for (j, w) in basis.iter().enumerate().skip(i) {
                let expected = if i == j { 1.0 } else { 0.0 };
                if (v.inner(w)?.norm() - expected).abs() > EPS {
                    return Err(Error::NonOrthonormalBasis(i, j));
                }
            }
        }
        basis.iter().map(|v| v.inner(self)).collect()
    }
}

/// A bijection on qubit positions `{0, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitPermutation {
    images: Vec<usize>,
}

impl QubitPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::BadPermutation(n));
            }
            seen[im] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Transposition of positions `a` and `b`.
    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        assert!(a < n && b < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (k, &im) in self.images.iter().enumerate() {
            images[im] = k;
        }
        Self { images }
    }
}
