//! The two product families of Bell pairs on four qubits and the
//! change-of-basis identities between them that make entanglement swapping
//! work.

use num_complex::Complex64;

use crate::bases::bell_state;
use crate::hilbert::{QubitPermutation, StateVector, EPS};
use crate::report::Report;

/// `z_{i0 j0 i1 j1}`: Bell pairs on positions (0,1) and (2,3).
pub fn z_state(i0: u8, j0: u8, i1: u8, j1: u8) -> StateVector {
    bell_state(i0, j0).tensor(&bell_state(i1, j1))
}

/// `y_{i0 j0 i1 j1}`: Bell pairs on positions (0,2) and (1,3), obtained from
/// the z family by swapping the middle qubits.
pub fn y_state(i0: u8, j0: u8, i1: u8, j1: u8) -> StateVector {
    z_state(i0, j0, i1, j1)
        .permute_qubits(&QubitPermutation::swap(4, 1, 2))
        .expect("permutation length matches")
}

fn labels(t: usize) -> (u8, u8, u8, u8) {
    (
        ((t >> 3) & 1) as u8,
        ((t >> 2) & 1) as u8,
        ((t >> 1) & 1) as u8,
        (t & 1) as u8,
    )
}

/// The four expansion terms of one family member in the other family:
/// label tuple and sign, per the swapping identities.
fn expansion_terms(i0: u8, j0: u8, i1: u8, j1: u8) -> [((u8, u8, u8, u8), f64); 4] {
    let bar = |b: u8| 1 - b;
    [
        ((i0, j0, i1, j1), 1.0),
        ((i0, bar(j0), i1, bar(j1)), if i0 == 0 { 1.0 } else { -1.0 }),
        ((bar(i0), j0, bar(i1), j1), if j1 == 0 { 1.0 } else { -1.0 }),
        (
            (bar(i0), bar(j0), bar(i1), bar(j1)),
            if (i0 + j1).is_multiple_of(2) {
                1.0
            } else {
                -1.0
            },
        ),
    ]
}

/// Expands every z state in the y family and every y state in the z family,
/// checking that exactly four coefficients are nonzero, each ±1/2 with the
/// stated sign pattern, and that the change-of-basis matrix is symmetric and
/// involutive.
pub fn verify_swap_identities() -> Report {
    let mut report = Report::new("swap");

    for direction in 0..2 {
        for t in 0..16usize {
            let (i0, j0, i1, j1) = labels(t);
            let subject = if direction == 0 {
                z_state(i0, j0, i1, j1)
            } else {
                y_state(i0, j0, i1, j1)
            };
            let terms = expansion_terms(i0, j0, i1, j1);
            let mut dev: f64 = 0.0;
            for u in 0..16usize {
                let (a, b, c, d) = labels(u);
                let partner = if direction == 0 {
                    y_state(a, b, c, d)
                } else {
                    z_state(a, b, c, d)
                };
                let coeff = partner.inner(&subject).expect("equal dimensions");
                let expected = terms
                    .iter()
                    .find(|(lbl, _)| *lbl == (a, b, c, d))
                    .map_or(0.0, |&(_, sign)| 0.5 * sign);
                dev = dev.max((coeff - Complex64::new(expected, 0.0)).norm());
            }
            let name = if direction == 0 {
                format!("z_{i0}{j0}{i1}{j1} in y family")
            } else {
                format!("y_{i0}{j0}{i1}{j1} in z family")
            };
            report.check_deviation(name, dev, EPS);
        }
    }

    // Change-of-basis matrix M[a][b] = ⟨y_a|z_b⟩ is symmetric and squares to
    // the identity.
    let mut m = [[0.0f64; 16]; 16];
    let mut imag_dev: f64 = 0.0;
    for (a, row) in m.iter_mut().enumerate() {
        let (p, q, r, s) = labels(a);
        let ya = y_state(p, q, r, s);
        for (b, cell) in row.iter_mut().enumerate() {
            let (p, q, r, s) = labels(b);
            let c = ya.inner(&z_state(p, q, r, s)).unwrap();
            *cell = c.re;
            imag_dev = imag_dev.max(c.im.abs());
        }
    }
    report.check_deviation("change-of-basis matrix is real", imag_dev, EPS);
    let mut sym_dev: f64 = 0.0;
    let mut inv_dev: f64 = 0.0;
    for a in 0..16 {
        for b in 0..16 {
            sym_dev = sym_dev.max((m[a][b] - m[b][a]).abs());
            let prod: f64 = (0..16).map(|k| m[a][k] * m[k][b]).sum();
            let expected = if a == b { 1.0 } else { 0.0 };
            inv_dev = inv_dev.max((prod - expected).abs());
        }
    }
    report.check_deviation("change-of-basis matrix is symmetric", sym_dev, EPS);
    report.check_deviation("change-of-basis matrix is involutive", inv_dev, EPS);

    report.note(
        "sign pattern on (same, flipped-j, flipped-i, flipped-all) labels is \
         (+1, (-1)^i0, (-1)^j1, (-1)^(i0+j1)); a commonly quoted variant with \
         (-1)^j1, (-1)^j0, (-1)^(j0+j1) fails the numerical expansion",
    );
    report
}
