//! Projective measurement in entangled bases, with seeded randomness.

use num_complex::Complex64;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bases::{BellPairing, EntangledBasis};
use crate::error::{Error, Result};
use crate::hilbert::{QubitPermutation, StateVector};

/// Probabilities below this are clamped to zero before sampling.
const PROB_FLOOR: f64 = 1e-12;

/// Deterministic random source; identical seeds reproduce identical outcome
/// sequences.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_f64(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform draw from `0..n`.
    pub fn next_index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Uniform symbol in `0..=3`.
    pub fn next_symbol(&mut self) -> u8 {
        self.rng.gen_range(0..4u8)
    }

    pub fn next_bit(&mut self) -> u8 {
        self.rng.gen_range(0..2u8)
    }
}

/// Result of a projective measurement.
#[derive(Clone, Debug)]
pub struct MeasurementOutcome {
    pub basis_index: usize,
    pub probability: f64,
    pub post_state: StateVector,
}

/// Inverse-CDF sample over clamped probabilities; one uniform draw per
/// measurement.
fn sample(probs: &[f64], rng: &mut RandomSource) -> usize {
    let clamped: Vec<f64> = probs
        .iter()
        .map(|&p| if p < PROB_FLOOR { 0.0 } else { p })
        .collect();
    let total: f64 = clamped.iter().sum();
    let draw = rng.next_f64() * total;
    let mut cumulative = 0.0;
    let mut last_nonzero = 0;
    for (k, &p) in clamped.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        last_nonzero = k;
        cumulative += p;
        if draw < cumulative {
            return k;
        }
    }
    last_nonzero
}

/// Measures the whole state in `basis`; the post state is the matched basis
/// element carrying the projection phase.
pub fn measure_full(
    s: &StateVector,
    basis: &EntangledBasis,
    rng: &mut RandomSource,
) -> Result<MeasurementOutcome> {
    if basis.state(0).dim() != s.dim() {
        return Err(Error::DimensionMismatch(basis.state(0).dim(), s.dim()));
    }
    let coeffs: Vec<Complex64> = basis
        .states()
        .iter()
        .map(|b| b.inner(s))
        .collect::<Result<_>>()?;
    let probs: Vec<f64> = coeffs.iter().map(|c| c.norm_sqr()).collect();
    let k = sample(&probs, rng);
    let phase = coeffs[k] / coeffs[k].norm();
    let amps = basis
        .state(k)
        .amplitudes()
        .iter()
        .map(|a| phase * a)
        .collect();
    Ok(MeasurementOutcome {
        basis_index: k,
        probability: probs[k],
        post_state: StateVector::from_parts_unchecked(s.num_qubits(), amps),
    })
}

/// Measures the qubit pair `(pairing.first, pairing.second)` of a 4-qubit
/// state in the Bell basis, leaving the complementary pair in the projected
/// post state.
pub fn measure_bell_pair(
    s: &StateVector,
    pairing: BellPairing,
    rng: &mut RandomSource,
) -> Result<MeasurementOutcome> {
    let n = s.num_qubits();
    if n != 4 {
        return Err(Error::DimensionMismatch(s.dim(), 16));
    }
    BellPairing::new(pairing.first, pairing.second, n)?;
    let complement: Vec<usize> = (0..n)
        .filter(|&p| p != pairing.first && p != pairing.second)
        .collect();
    // Slot order (first, second, complement…) mapped back onto the register.
    let placement = QubitPermutation::new(vec![
        pairing.first,
        pairing.second,
        complement[0],
        complement[1],
    ])?;

    let mut probs = vec![0.0f64; 4];
    let mut posts: Vec<Vec<Complex64>> = vec![vec![Complex64::ZERO; s.dim()]; 4];
    for b in 0..4u8 {
        let bell = crate::bases::bell_state(b >> 1, b & 1);
        for c in 0..4usize {
            let v = bell
                .tensor(&StateVector::basis_ket(2, c))
                .permute_qubits(&placement)?;
            let coeff = v.inner(s)?;
            probs[b as usize] += coeff.norm_sqr();
            for (dst, src) in posts[b as usize].iter_mut().zip(v.amplitudes()) {
                *dst += coeff * src;
            }
        }
    }

    let k = sample(&probs, rng);
    let norm = probs[k].sqrt();
    let amps = posts[k].iter().map(|a| a / norm).collect();
    Ok(MeasurementOutcome {
        basis_index: k,
        probability: probs[k],
        post_state: StateVector::from_parts_unchecked(n, amps),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{bell_state, ghz_index, ghz_state};
    use crate::hilbert::EPS;
    use crate::pauli::{apply_word, PauliWord};
    use crate::swap::z_state;

    #[test]
    fn basis_element_measures_deterministically() {
        let basis = EntangledBasis::bell();
        for seed in 0..5 {
            let mut rng = RandomSource::new(seed);
            let out = measure_full(&bell_state(1, 0), &basis, &mut rng).unwrap();
            assert_eq!(out.basis_index, 2);
            assert!((out.probability - 1.0).abs() < EPS);
        }
    }

    #[test]
    fn ghz_basis_element_measures_to_its_index() {
        let basis = EntangledBasis::ghz();
        let mut rng = RandomSource::new(9);
        let out = measure_full(&ghz_state(1, 0, 1), &basis, &mut rng).unwrap();
        assert_eq!(out.basis_index, ghz_index(1, 0, 1));
    }

    #[test]
    fn word_application_measures_to_permuted_index() {
        let basis = EntangledBasis::ghz();
        let word = PauliWord::from_indices(&[0, 1, 0]).unwrap();
        let s = apply_word(&ghz_state(0, 0, 0), &word).unwrap();
        let mut rng = RandomSource::new(3);
        let out = measure_full(&s, &basis, &mut rng).unwrap();
        assert_eq!(out.basis_index, 4);
        assert!((out.probability - 1.0).abs() < EPS);
    }

    #[test]
    fn probabilities_sum_to_one() {
        let basis = EntangledBasis::ghz();
        let s = StateVector::hadamard(0)
            .tensor(&StateVector::hadamard(1))
            .tensor(&StateVector::ket(0));
        let total: f64 = basis
            .states()
            .iter()
            .map(|b| b.inner(&s).unwrap().norm_sqr())
            .sum();
        assert!((total - 1.0).abs() < EPS);
    }

    #[test]
    fn cross_pairing_measurement_is_uniform_quarter() {
        let s = z_state(0, 0, 0, 0);
        let pairing = BellPairing {
            first: 0,
            second: 2,
        };
        let mut rng = RandomSource::new(11);
        let out = measure_bell_pair(&s, pairing, &mut rng).unwrap();
        assert!((out.probability - 0.25).abs() < EPS);
        assert!((out.post_state.inner(&out.post_state).unwrap().re - 1.0).abs() < EPS);
    }

    #[test]
    fn sequential_cross_measurements_obey_parity_law() {
        for t in 0..16usize {
            let (i0, j0, i1, j1) = (
                ((t >> 3) & 1) as u8,
                ((t >> 2) & 1) as u8,
                ((t >> 1) & 1) as u8,
                (t & 1) as u8,
            );
            for seed in 0..8 {
                let mut rng = RandomSource::new(seed);
                let s = z_state(i0, j0, i1, j1);
                let first = measure_bell_pair(
                    &s,
                    BellPairing {
                        first: 0,
                        second: 2,
                    },
                    &mut rng,
                )
                .unwrap();
                let second = measure_bell_pair(
                    &first.post_state,
                    BellPairing {
                        first: 1,
                        second: 3,
                    },
                    &mut rng,
                )
                .unwrap();
                let (a, b) = (
                    (first.basis_index >> 1) as u8,
                    (first.basis_index & 1) as u8,
                );
                let (c, d) = (
                    (second.basis_index >> 1) as u8,
                    (second.basis_index & 1) as u8,
                );
                assert_eq!(a ^ c, i0 ^ i1);
                assert_eq!(b ^ d, j0 ^ j1);
                assert!((second.probability - 1.0).abs() < EPS);
            }
        }
    }

    #[test]
    fn identical_seeds_reproduce_outcomes() {
        let s = z_state(1, 0, 0, 1);
        let pairing = BellPairing {
            first: 0,
            second: 2,
        };
        let run = |seed| {
            let mut rng = RandomSource::new(seed);
            (0..6)
                .map(|_| {
                    measure_bell_pair(&s, pairing, &mut rng)
                        .unwrap()
                        .basis_index
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(run(42), run(42));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let basis = EntangledBasis::bell();
        let mut rng = RandomSource::new(0);
        assert!(measure_full(&StateVector::ket(0), &basis, &mut rng).is_err());
        assert!(measure_bell_pair(
            &StateVector::ket(0),
            BellPairing {
                first: 0,
                second: 1
            },
            &mut rng
        )
        .is_err());
    }
}
