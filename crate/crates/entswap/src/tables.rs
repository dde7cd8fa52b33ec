//! Action tables: the permutations that Pauli words induce on the Bell and
//! GHZ bases, derived by brute force, plus the decoding queries the protocols
//! rely on.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::bases::EntangledBasis;
use crate::error::{Error, Result};
use crate::hilbert::EPS;
use crate::pauli::{apply_word, Pauli, PauliWord};
use crate::report::Report;

/// Row labels for the two-letter table, as XOR masks: the permutation with
/// label `l` maps index `k` to `k ^ LABEL_MASKS_2[l]`.
pub const LABEL_MASKS_2: [usize; 4] = [0, 2, 3, 1];

/// Row labels for the three-letter table; the low two mask bits follow the
/// two-letter layout and the high bit is kept in place.
pub const LABEL_MASKS_3: [usize; 8] = [0, 2, 3, 1, 4, 6, 7, 5];

/// A permutation of basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPermutation {
    images: Vec<usize>,
}

impl BasisPermutation {
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

    pub fn from_xor_mask(mask: usize, len: usize) -> Self {
        Self {
            images: (0..len).map(|k| k ^ mask).collect(),
        }
    }

    pub fn apply(&self, index: usize) -> usize {
        self.images[index]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, then: &BasisPermutation) -> BasisPermutation {
        BasisPermutation {
            images: self.images.iter().map(|&k| then.images[k]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &im)| k == im)
    }

    /// If the permutation is `k ↦ k ^ m` for a fixed mask `m`, returns `m`.
    pub fn xor_mask(&self) -> Option<usize> {
        let mask = self.images[0];
        self.images
            .iter()
            .enumerate()
            .all(|(k, &im)| im == k ^ mask)
            .then_some(mask)
    }
}

/// The derived action of one Pauli word: a basis permutation together with
/// the unit phase picked up at each basis index.
#[derive(Clone, Debug)]
pub struct ActionEntry {
    pub permutation: BasisPermutation,
    pub phases: Vec<Complex64>,
}

/// Map from every Pauli word of a fixed arity to its basis action.
#[derive(Clone, Debug)]
pub struct ActionTable {
    arity: usize,
    entries: BTreeMap<PauliWord, ActionEntry>,
}

/// One row of the grouped table: a labeled permutation and its preimage words
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: usize,
    pub permutation: BasisPermutation,
    pub words: Vec<PauliWord>,
}

impl ActionTable {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, word: &PauliWord) -> Option<&ActionEntry> {
        self.entries.get(word)
    }

    pub fn words(&self) -> impl Iterator<Item = (&PauliWord, &ActionEntry)> {
        self.entries.iter()
    }

    /// Groups the words by permutation, ordered by row label.
    ///
    /// Every permutation in the image is an index XOR; labels are assigned via
    /// [`LABEL_MASKS_2`] / [`LABEL_MASKS_3`].
    pub fn rows(&self) -> Vec<TableRow> {
        let masks: &[usize] = match self.arity {
            2 => &LABEL_MASKS_2,
            3 => &LABEL_MASKS_3,
            _ => unreachable!("tables exist only for arity 2 and 3"),
        };
        let mut rows: Vec<TableRow> = masks
            .iter()
            .map(|&mask| TableRow {
                label: 0,
                permutation: BasisPermutation::from_xor_mask(mask, masks.len()),
                words: Vec::new(),
            })
            .collect();
        for (label, row) in rows.iter_mut().enumerate() {
            row.label = label;
        }
        for (word, entry) in &self.entries {
            let mask = entry
                .permutation
                .xor_mask()
                .expect("derived permutations are XOR translations");
            let label = masks
                .iter()
                .position(|&m| m == mask)
                .expect("mask within range");
            rows[label].words.push(word.clone());
        }
        rows
    }
}

/// Applies `word` to every element of `basis` and locates the image element,
/// recording the permutation and the per-index phases.
///
/// Errors if some transformed vector matches no basis element up to phase,
/// which would signal a broken basis or operator.
pub fn derive_action(word: &PauliWord, basis: &EntangledBasis) -> Result<ActionEntry> {
    let mut images = Vec::with_capacity(basis.len());
    let mut phases = Vec::with_capacity(basis.len());
    for (k, state) in basis.states().iter().enumerate() {
        let transformed = apply_word(state, word)?;
        let hit = basis.states().iter().enumerate().find_map(|(k2, target)| {
            transformed
                .equal_up_to_phase(target, EPS)
                .map(|phase| (k2, phase))
        });
        match hit {
            Some((k2, phase)) => {
                images.push(k2);
                phases.push(phase);
            }
            None => return Err(Error::NoBasisImage(k)),
        }
    }
    Ok(ActionEntry {
        permutation: BasisPermutation::new(images)?,
        phases,
    })
}

/// The action of all 16 two-letter Pauli words on the Bell basis.
pub fn build_a2() -> ActionTable {
    build(2, &EntangledBasis::bell())
}

/// The action of all 64 three-letter Pauli words on the GHZ basis.
pub fn build_a3() -> ActionTable {
    build(3, &EntangledBasis::ghz())
}

fn build(arity: usize, basis: &EntangledBasis) -> ActionTable {
    let entries = PauliWord::enumerate(arity)
        .into_iter()
        .map(|word| {
            let entry = derive_action(&word, basis).expect("bases and operators are consistent");
            (word, entry)
        })
        .collect();
    ActionTable { arity, entries }
}

/// Restricts a three-letter table to words whose second and third letters are
/// in `{σ0, σ2}`; 16 words, two per permutation.
pub fn restrict_to_s(a3: &ActionTable) -> ActionTable {
    assert_eq!(a3.arity, 3);
    let entries = a3
        .entries
        .iter()
        .filter(|(word, _)| {
            matches!(word.0[1], Pauli::I | Pauli::Y) && matches!(word.0[2], Pauli::I | Pauli::Y)
        })
        .map(|(w, e)| (w.clone(), e.clone()))
        .collect();
    ActionTable { arity: 3, entries }
}

/// Finds the unique word in `table` that is consistent with the known letter
/// positions and maps basis index `initial` to `outcome`; returns the full
/// word.
///
/// `known[pos] = Some(σ)` pins a position; `None` leaves it free.
pub fn decode_partner(
    table: &ActionTable,
    initial: usize,
    outcome: usize,
    known: &[Option<Pauli>],
) -> Result<PauliWord> {
    assert_eq!(known.len(), table.arity);
    let mut candidates = table.entries.iter().filter(|(word, entry)| {
        word.0
            .iter()
            .zip(known)
            .all(|(&letter, k)| k.is_none_or(|pin| pin == letter))
            && entry.permutation.apply(initial) == outcome
    });
    let first = candidates
        .next()
        .ok_or(Error::DecodeNoCandidate { initial, outcome })?;
    let rest = candidates.count();
    if rest > 0 {
        return Err(Error::DecodeAmbiguous {
            initial,
            outcome,
            count: rest + 1,
        });
    }
    Ok(first.0.clone())
}

// Frozen reference rows for the three-letter table: row label, then the eight
// preimage words in lexicographic order.
pub const A3_REFERENCE_ROWS: [(usize, [&str; 8]); 8] = [
    (0, ["000", "033", "111", "122", "212", "221", "303", "330"]),
    (1, ["003", "030", "112", "121", "211", "222", "300", "333"]),
    (2, ["001", "032", "110", "123", "213", "220", "302", "331"]),
    (3, ["002", "031", "113", "120", "210", "223", "301", "332"]),
    (4, ["010", "023", "101", "132", "202", "231", "313", "320"]),
    (5, ["013", "020", "102", "131", "201", "232", "310", "323"]),
    (6, ["011", "022", "100", "133", "203", "230", "312", "321"]),
    (7, ["012", "021", "103", "130", "200", "233", "311", "322"]),
];

// Frozen reference rows for the restriction to S, keyed by row label.
pub const S_REFERENCE_ROWS: [(usize, [&str; 2]); 8] = [
    (0, ["000", "122"]),
    (1, ["222", "300"]),
    (2, ["220", "302"]),
    (3, ["002", "120"]),
    (4, ["202", "320"]),
    (5, ["020", "102"]),
    (6, ["022", "100"]),
    (7, ["200", "322"]),
];

fn word_list(words: &[&str]) -> Vec<PauliWord> {
    words
        .iter()
        .map(|w| {
            let digits: Vec<u8> = w.bytes().map(|b| b - b'0').collect();
            PauliWord::from_indices(&digits).expect("reference words are valid")
        })
        .collect()
}

/// Derives both tables and checks their structure against the frozen
/// reference rows and the diagonal identities of the two-letter case.
pub fn verify_tables() -> Report {
    let mut report = Report::new("tables");

    let a2 = build_a2();
    let rows2 = a2.rows();
    report.check("a2 image has exactly 4 permutations", rows2.len() == 4, 0.0);
    report.check(
        "a2 every preimage has exactly 4 words",
        rows2.iter().all(|r| r.words.len() == 4),
        0.0,
    );
    // Diagonal identities: the word (i, β(i)) realizes a fixed row for every i.
    // Pairing of argument row to result row: β0 → row 0, β3 → row 1,
    // β1 → row 2, β2 → row 3.
    let pairing = [(0usize, 0usize), (3, 1), (1, 2), (2, 3)];
    let mut diag_ok = true;
    for (arg_label, result_label) in pairing {
        let arg = BasisPermutation::from_xor_mask(LABEL_MASKS_2[arg_label], 4);
        for i in 0..4u8 {
            let j = arg.apply(i as usize) as u8;
            let word = PauliWord::from_indices(&[i, j]).unwrap();
            let entry = a2.entry(&word).unwrap();
            if entry.permutation.xor_mask() != Some(LABEL_MASKS_2[result_label]) {
                diag_ok = false;
            }
        }
    }
    report.check("a2 diagonal identities hold for all i", diag_ok, 0.0);
    let identity_words: Vec<String> = rows2[0].words.iter().map(|w| w.to_string()).collect();
    report.check(
        "a2 identity row is {00, 11, 22, 33}",
        identity_words == ["00", "11", "22", "33"],
        0.0,
    );
    report.note(
        "a2 word sets follow the diagonal rule (i, β(i)); listings that print the same \
         four words {00,01,02,03} in every row are transcription errors",
    );

    let a3 = build_a3();
    let rows3 = a3.rows();
    report.check("a3 image has exactly 8 permutations", rows3.len() == 8, 0.0);
    for (label, expected_words) in A3_REFERENCE_ROWS {
        let row = &rows3[label];
        let ok = row.permutation.xor_mask() == Some(LABEL_MASKS_3[label])
            && row.words == word_list(&expected_words);
        report.check(format!("a3 row {label} matches reference"), ok, 0.0);
    }

    let s = restrict_to_s(&a3);
    let rows_s = s.rows();
    for (label, expected_words) in S_REFERENCE_ROWS {
        let ok = rows_s[label].words == word_list(&expected_words);
        report.check(format!("s row {label} matches reference"), ok, 0.0);
    }
    // Within each S row, any single known letter position identifies the word.
    let mut unique_ok = true;
    for row in &rows_s {
        for pos in 0..3 {
            if row.words[0].0[pos] == row.words[1].0[pos] {
                unique_ok = false;
            }
        }
    }
    report.check(
        "s single-known-letter uniqueness (8 rows × 3 positions)",
        unique_ok,
        0.0,
    );

    let phase_dev = a2
        .words()
        .chain(a3.words())
        .flat_map(|(_, e)| e.phases.iter())
        .map(|p| (p.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    report.check_deviation("all recorded phases are unit modulus", phase_dev, EPS);

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_word_acts_trivially() {
        let entry = derive_action(
            &PauliWord::from_indices(&[0, 0]).unwrap(),
            &EntangledBasis::bell(),
        )
        .unwrap();
        assert!(entry.permutation.is_identity());
        for p in &entry.phases {
            assert!((p - Complex64::ONE).norm() < EPS);
        }
    }

    #[test]
    fn x_on_second_qubit_of_bell_basis() {
        let entry = derive_action(
            &PauliWord::from_indices(&[0, 1]).unwrap(),
            &EntangledBasis::bell(),
        )
        .unwrap();
        assert_eq!(entry.permutation.images(), &[2, 3, 0, 1]);
    }

    #[test]
    fn zz_word_fixes_ghz_basis() {
        let entry = derive_action(
            &PauliWord::from_indices(&[0, 3, 3]).unwrap(),
            &EntangledBasis::ghz(),
        )
        .unwrap();
        assert!(entry.permutation.is_identity());
    }

    #[test]
    fn x_on_middle_qubit_of_ghz_basis_maps_0_to_4() {
        let entry = derive_action(
            &PauliWord::from_indices(&[0, 1, 0]).unwrap(),
            &EntangledBasis::ghz(),
        )
        .unwrap();
        assert_eq!(entry.permutation.apply(0), 4);
    }

    #[test]
    fn a2_rows_group_into_klein_four_action() {
        let rows = build_a2().rows();
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert_eq!(row.words.len(), 4);
            // each permutation is an involution
            assert!(row.permutation.compose(&row.permutation).is_identity());
        }
        // closed under composition
        for a in &rows {
            for b in &rows {
                let c = a.permutation.compose(&b.permutation);
                assert!(rows.iter().any(|r| r.permutation == c));
            }
        }
    }

    #[test]
    fn a3_permutations_are_involutions_closed_under_composition() {
        let rows = build_a3().rows();
        assert_eq!(rows.len(), 8);
        for row in &rows {
            assert_eq!(row.words.len(), 8);
            assert!(row.permutation.compose(&row.permutation).is_identity());
        }
        for a in &rows {
            for b in &rows {
                let c = a.permutation.compose(&b.permutation);
                assert!(rows.iter().any(|r| r.permutation == c));
            }
        }
    }

    #[test]
    fn a2_second_letter_injective_for_fixed_first() {
        let a2 = build_a2();
        for i in 0..4u8 {
            for k in 0..4usize {
                let mut outcomes: Vec<usize> = (0..4u8)
                    .map(|j| {
                        let word = PauliWord::from_indices(&[i, j]).unwrap();
                        a2.entry(&word).unwrap().permutation.apply(k)
                    })
                    .collect();
                outcomes.sort_unstable();
                outcomes.dedup();
                assert_eq!(outcomes.len(), 4);
            }
        }
    }

    #[test]
    fn a3_third_letter_injective_for_fixed_first_two() {
        let a3 = build_a3();
        for i in 0..4u8 {
            for j in 0..4u8 {
                for ell in 0..8usize {
                    let mut outcomes: Vec<usize> = (0..4u8)
                        .map(|k| {
                            let word = PauliWord::from_indices(&[i, j, k]).unwrap();
                            a3.entry(&word).unwrap().permutation.apply(ell)
                        })
                        .collect();
                    outcomes.sort_unstable();
                    outcomes.dedup();
                    assert_eq!(outcomes.len(), 4);
                }
            }
        }
    }

    #[test]
    fn decode_second_letter_from_outcome() {
        let a2 = build_a2();
        let word = decode_partner(&a2, 0, 2, &[Some(Pauli::I), None]).unwrap();
        assert_eq!(word.0[1], Pauli::X);
        let word = decode_partner(&a2, 3, 3, &[Some(Pauli::I), None]).unwrap();
        assert_eq!(word.0[1], Pauli::I);
    }

    #[test]
    fn decode_pair_from_s_table() {
        let s = restrict_to_s(&build_a3());
        // Bob knows his letter is σ0; outcome 5 from initial 0.
        let word = decode_partner(&s, 0, 5, &[None, Some(Pauli::I), None]).unwrap();
        assert_eq!(word.to_string(), "200");
    }

    #[test]
    fn decode_error_paths() {
        let a2 = build_a2();
        // No candidate: identity on both letters cannot move the index.
        assert!(matches!(
            decode_partner(&a2, 0, 2, &[Some(Pauli::I), Some(Pauli::I)]),
            Err(Error::DecodeNoCandidate { .. })
        ));
        // Ambiguous: nothing known, four words realize each permutation.
        assert!(matches!(
            decode_partner(&a2, 0, 2, &[None, None]),
            Err(Error::DecodeAmbiguous { .. })
        ));
    }

    #[test]
    fn verify_tables_passes() {
        let report = verify_tables();
        assert!(report.passed(), "{report}");
    }
}
