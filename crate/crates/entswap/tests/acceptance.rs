//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use num_complex::Complex64;

use entswap::bases::{verify_hadamard_expansions, EntangledBasis, GHZ_LABELS};
use entswap::hilbert::{StateVector, EPS};
use entswap::measure::RandomSource;
use entswap::pauli::{apply_local, Pauli, PauliWord};
use entswap::protocol::{
    run_bidirectional, run_controlled, run_key_agreement, run_multidirectional, run_qsdc,
    MessageWord, PadSpec,
};
use entswap::swap::verify_swap_identities;
use entswap::tables::{
    build_a2, build_a3, restrict_to_s, verify_tables, BasisPermutation, A3_REFERENCE_ROWS,
    LABEL_MASKS_2, S_REFERENCE_ROWS,
};

fn conclude(criterion: &str, passed: bool, detail: &str) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("[{verdict}] {criterion}: {detail}");
    assert!(passed, "{criterion}: {detail}");
}

/// Criterion 1: the single-qubit action grid. All sixteen operator/vector
/// combinations, phases included.
///
/// Reference phases follow the defining matrices: the second operator fixes
/// the diagonal states, and the third sends |0> to i|1>, |1> to -i|0>, h0 to
/// -i h1 and h1 to i h0. Published listings of this grid sometimes carry the
/// conjugate phases on that row; the matrices are authoritative here.
#[test]
fn criterion_1_pauli_action_grid() {
    let inputs = [
        StateVector::ket(0),
        StateVector::ket(1),
        StateVector::hadamard(0),
        StateVector::hadamard(1),
    ];
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    // expected[op][input] = (index into `inputs`, phase)
    let expected: [[(usize, Complex64); 4]; 4] = [
        [(0, one), (1, one), (2, one), (3, one)],
        [(1, one), (0, one), (2, one), (3, -one)],
        [(1, i), (0, -i), (3, -i), (2, i)],
        [(0, one), (1, -one), (3, one), (2, one)],
    ];
    let mut max_dev: f64 = 0.0;
    for (op_idx, sigma) in Pauli::ALL.into_iter().enumerate() {
        for (in_idx, input) in inputs.iter().enumerate() {
            let got = apply_local(input, 0, sigma).unwrap();
            let (target, phase) = expected[op_idx][in_idx];
            for k in 0..2 {
                let dev = (got.amp(k) - phase * inputs[target].amp(k)).norm();
                max_dev = max_dev.max(dev);
            }
        }
    }
    conclude(
        "criterion 1 (pauli action grid)",
        max_dev < EPS,
        &format!("16 operator/vector entries, max deviation {max_dev:.3e}"),
    );
}

/// Criterion 2: the 4 Bell and 8 GHZ expansions in the Hadamard product
/// basis against frozen coefficient rows.
#[test]
fn criterion_2_hadamard_expansions() {
    let report = verify_hadamard_expansions();
    let count = report.checks.len();
    conclude(
        "criterion 2 (hadamard expansions)",
        report.passed() && count == 12,
        &format!(
            "{count} expansions checked, first failure: {:?}",
            report.first_failure()
        ),
    );
}

/// Criterion 3: structure of the two-letter table — image of size 4, four
/// words per preimage, and the diagonal composition rule. The annotation
/// about divergent printed word listings lives in the verification report.
#[test]
fn criterion_3_a2_structure() {
    let a2 = build_a2();
    let rows = a2.rows();
    let mut ok = rows.len() == 4 && rows.iter().all(|r| r.words.len() == 4);

    let beta: Vec<BasisPermutation> = LABEL_MASKS_2
        .iter()
        .map(|&m| BasisPermutation::from_xor_mask(m, 4))
        .collect();
    // A2(sigma_{i, beta_p(i)}) = beta_r for pairings (p, r).
    for (p, r) in [(0usize, 0usize), (3, 1), (1, 2), (2, 3)] {
        for i in 0..4usize {
            let j = beta[p].apply(i);
            let word = PauliWord::from_indices(&[i as u8, j as u8]).unwrap();
            let entry = a2.entry(&word).unwrap();
            ok &= entry.permutation == beta[r];
        }
    }
    let report = verify_tables();
    ok &= report.passed();
    conclude(
        "criterion 3 (two-letter table structure)",
        ok,
        "image size 4, preimages of size 4, diagonal rule for all 16 pairs",
    );
}

/// Criterion 4: the three-letter table equals the frozen reference rows,
/// its restriction equals the frozen two-row-per-label reference, and a
/// single known letter determines the word in the restriction.
#[test]
fn criterion_4_a3_exactness() {
    let a3 = build_a3();
    let rows = a3.rows();
    let mut ok = rows.len() == 8;
    for (label, expected_words) in A3_REFERENCE_ROWS {
        let row = rows.iter().find(|r| r.label == label).unwrap();
        let got: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
        ok &= got == expected_words;
    }
    let s = restrict_to_s(&a3);
    let s_rows = s.rows();
    ok &= s_rows.len() == 8;
    for (label, expected_words) in S_REFERENCE_ROWS {
        let row = s_rows.iter().find(|r| r.label == label).unwrap();
        let got: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
        ok &= got == expected_words;
    }
    // Single-known-letter uniqueness, 8 rows x 3 positions.
    for row in &s_rows {
        for pos in 0..3 {
            for word in &row.words {
                let matches = row.words.iter().filter(|w| w.0[pos] == word.0[pos]).count();
                ok &= matches == 1;
            }
        }
    }
    conclude(
        "criterion 4 (three-letter table exactness)",
        ok,
        "8 rows and restriction match frozen references; 8x3 uniqueness holds",
    );
}

/// Criterion 5: swapping identities in both directions — exactly four
/// coefficients of magnitude 1/2 with the derived sign pattern.
#[test]
fn criterion_5_swap_identities() {
    let report = verify_swap_identities();
    let family = report
        .checks
        .iter()
        .filter(|c| c.name.contains("family"))
        .count();
    conclude(
        "criterion 5 (swapping identities)",
        report.passed() && family == 32,
        &format!(
            "{family} expansions plus basis-matrix checks, first failure: {:?}",
            report.first_failure()
        ),
    );
}

/// Criterion 6: exact round trips for the four message protocols, with
/// zero decode failures.
#[test]
fn criterion_6_protocol_round_trips() {
    let mut meta = RandomSource::new(777);
    let mut ok = true;

    // Direct protocol: randomized i, k, J, n <= 16.
    for seed in 0..100u64 {
        let n = 1 + meta.next_index(16);
        let m = 1 + meta.next_index(n);
        let mut all: Vec<usize> = (0..n).collect();
        for idx in (1..n).rev() {
            let j = meta.next_index(idx + 1);
            all.swap(idx, j);
        }
        let mut positions = all[..m].to_vec();
        positions.sort_unstable();
        let pad = PadSpec::new(n, positions).unwrap();
        let msg = MessageWord::random(m, &mut meta);
        let sigma_i = Pauli::ALL[meta.next_index(4)];
        let k = meta.next_index(4);
        let out = run_qsdc(&msg, sigma_i, k, &pad, seed).unwrap();
        ok &= out.decoded == msg;
    }

    // Bidirectional.
    for seed in 0..100u64 {
        let m = 1 + meta.next_index(16);
        let msg_a = MessageWord::random(m, &mut meta);
        let msg_b = MessageWord::random(m, &mut meta);
        let k = meta.next_index(4);
        let out = run_bidirectional(&msg_a, &msg_b, k, seed).unwrap();
        ok &= out.decoded_by_alice == msg_b && out.decoded_by_bob == msg_a;
    }

    // Multidirectional: exhaustive 128-case grid.
    for i_a in 0..4u8 {
        let bits_a = ((i_a >> 1) & 1, i_a & 1);
        for bit_b in 0..2u8 {
            for bit_c in 0..2u8 {
                for ell in 0..8usize {
                    let out = run_multidirectional(bits_a, bit_b, bit_c, ell, 3).unwrap();
                    ok &= out.alice_view == (bit_b, bit_c)
                        && out.bob_view == (bits_a, bit_c)
                        && out.claire_view == (bits_a, bit_b);
                }
            }
        }
    }

    // Controlled: granted runs plus withheld-grant runs.
    for seed in 0..50u64 {
        let m = 1 + meta.next_index(6);
        let n = m + meta.next_index(4);
        let mut all: Vec<usize> = (0..n).collect();
        for idx in (1..n).rev() {
            let j = meta.next_index(idx + 1);
            all.swap(idx, j);
        }
        let mut positions = all[..m].to_vec();
        positions.sort_unstable();
        let pad = PadSpec::new(n, positions).unwrap();
        let msg_a = MessageWord::random(m, &mut meta);
        let msg_b = MessageWord::random(m, &mut meta);
        let ell = meta.next_index(8);
        let out = run_controlled(&msg_a, &msg_b, ell, &pad, true, seed).unwrap();
        ok &= out.decoded_by_alice.as_ref() == Some(&msg_b)
            && out.decoded_by_bob.as_ref() == Some(&msg_a);
        let withheld = run_controlled(&msg_a, &msg_b, ell, &pad, false, seed).unwrap();
        ok &= withheld.decoded_by_alice.is_none() && withheld.decoded_by_bob.is_none();
    }

    conclude(
        "criterion 6 (protocol round trips)",
        ok,
        "100 direct + 100 bidirectional + 128 multidirectional + 50 controlled (+withheld) exact recoveries",
    );
}

/// Criterion 7: key agreement statistics over 200 blocks x 20 seeds.
#[test]
fn criterion_7_key_agreement() {
    let mut ok = true;
    let mut category_counts = [0usize; 4];
    let mut anticorrelated = 0usize;
    for seed in 0..20u64 {
        let out = run_key_agreement(200, seed).unwrap();
        ok &= out.key_alice == out.key_bob;
        let expected: usize = out
            .blocks
            .iter()
            .map(|b| if b.correlated { 4 } else { 2 })
            .sum();
        ok &= out.key_alice.len() == expected;
        for block in out.blocks.iter().filter(|b| !b.correlated) {
            let (i0, j0, i1, j1) = block.labels;
            let (o1, o2) = block.outcomes;
            let (a, b) = ((o1 >> 1) as u8, (o1 & 1) as u8);
            let (c, d) = ((o2 >> 1) as u8, (o2 & 1) as u8);
            ok &= a ^ c == i0 ^ i1 && b ^ d == j0 ^ j1;
            // The parity law pins two of the four outcome bits; the free
            // pair (a xor i0, b xor j0) should be uniform over 4 values.
            category_counts[(((a ^ i0) << 1) | (b ^ j0)) as usize] += 1;
            anticorrelated += 1;
        }
    }
    let n = anticorrelated as f64;
    let tol = 5.0 * (n * 0.25 * 0.75).sqrt();
    for count in category_counts {
        ok &= (count as f64 - n / 4.0).abs() <= tol;
    }
    conclude(
        "criterion 7 (key agreement)",
        ok && anticorrelated > 0,
        &format!(
            "keys equal over 20 seeds x 200 blocks; {anticorrelated} anticorrelated blocks, outcome counts {category_counts:?} within 5-sigma of uniform"
        ),
    );
}

/// Criterion 8: identical seeds give byte-identical transcripts, at the
/// library level and through the installed binary.
#[test]
fn criterion_8_determinism() {
    let mut ok = true;

    let pad = PadSpec::full(6);
    let msg = MessageWord::parse("123012").unwrap();
    let a = run_qsdc(&msg, Pauli::X, 2, &pad, 42).unwrap();
    let b = run_qsdc(&msg, Pauli::X, 2, &pad, 42).unwrap();
    ok &= a.transcript.render() == b.transcript.render();

    let a = run_bidirectional(&msg, &msg, 1, 42).unwrap();
    let b = run_bidirectional(&msg, &msg, 1, 42).unwrap();
    ok &= a.transcript.render() == b.transcript.render();

    let a = run_controlled(&msg, &msg, 5, &pad, true, 42).unwrap();
    let b = run_controlled(&msg, &msg, 5, &pad, true, 42).unwrap();
    ok &= a.transcript.render() == b.transcript.render();

    let a = run_key_agreement(50, 42).unwrap();
    let b = run_key_agreement(50, 42).unwrap();
    ok &= a.transcript.render() == b.transcript.render() && a.key_alice == b.key_alice;

    // Through the binary: identical stdout bytes for repeated invocations.
    let bin = env!("CARGO_BIN_EXE_entswap");
    let invoke = |args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .env_remove("ENTSWAP_SEED")
            .output()
            .expect("binary runs")
    };
    for args in [
        vec!["run", "keyagree", "--m", "10", "--seed", "9"],
        vec!["run", "qsdc", "--msg", "3210", "--seed", "9"],
        vec!["verify", "all"],
        vec!["tables", "a3", "--format", "records"],
    ] {
        let first = invoke(&args);
        let second = invoke(&args);
        ok &= first.status.success() && first.stdout == second.stdout;
    }

    conclude(
        "criterion 8 (determinism)",
        ok,
        "library transcripts and binary outputs byte-identical under repeated seeds",
    );
}

/// The GHZ labels used throughout agree with the defining formula: the
/// basis is orthonormal and each element matches its label's construction.
#[test]
fn ghz_labels_are_consistent() {
    let ghz = EntangledBasis::ghz();
    let mut ok = ghz.len() == 8;
    for (idx, &(e1, e2, e3)) in GHZ_LABELS.iter().enumerate() {
        ok &= ghz
            .state(idx)
            .equal_up_to_phase(&entswap::bases::ghz_state(e1, e2, e3), EPS)
            .is_some();
    }
    assert!(ok);
}
