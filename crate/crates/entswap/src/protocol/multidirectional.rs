//! Three-party exchange over a shared GHZ state: Alice contributes two bits,
//! Bob and Claire one each, and a single joint measurement lets every party
//! deduce the other two inputs.

use crate::bases::EntangledBasis;
use crate::error::{Error, Result};
use crate::measure::RandomSource;
use crate::pauli::{Pauli, PauliWord};
use crate::tables::{build_a3, decode_partner, restrict_to_s};

use super::registry::Registry;
use super::transcript::{Event, Party, Transcript};

pub struct MultidirectionalOutput {
    /// (Bob's bit, Claire's bit) as decoded by Alice.
    pub alice_view: (u8, u8),
    /// (Alice's two bits, Claire's bit) as decoded by Bob.
    pub bob_view: ((u8, u8), u8),
    /// (Alice's two bits, Bob's bit) as decoded by Claire.
    pub claire_view: ((u8, u8), u8),
    pub outcome: usize,
    pub transcript: Transcript,
}

fn bit_to_sigma(bit: u8) -> Pauli {
    if bit & 1 == 0 {
        Pauli::I
    } else {
        Pauli::Y
    }
}

fn sigma_to_bit(sigma: Pauli) -> u8 {
    match sigma {
        Pauli::I => 0,
        Pauli::Y => 1,
        _ => unreachable!("restricted positions carry only σ0 or σ2"),
    }
}

/// Runs the multidirectional protocol from the GHZ basis element `ghz_index`.
///
/// A reference copy of the shared state is kept untouched; only the working
/// copy is transformed and measured.
pub fn run_multidirectional(
    bits_a: (u8, u8),
    bit_b: u8,
    bit_c: u8,
    ghz_index: usize,
    seed: u64,
) -> Result<MultidirectionalOutput> {
    if ghz_index > 7 {
        return Err(Error::ProtocolState(format!(
            "ghz index {ghz_index} out of range"
        )));
    }
    let mut rng = RandomSource::new(seed);
    let mut transcript = Transcript::new();
    let mut registry = Registry::new();
    let ghz = EntangledBasis::ghz();
    let table_s = restrict_to_s(&build_a3());

    let owners = vec![Party::Alice, Party::Bob, Party::Claire];
    let initial = ghz.state(ghz_index).clone();
    let reference = registry.add_group(initial.clone(), owners.clone());
    let working = registry.add_group(initial.clone(), owners);

    let i_a = (bits_a.0 & 1) * 2 + (bits_a.1 & 1);
    let sigma_a = Pauli::ALL[i_a as usize];
    let sigma_b = bit_to_sigma(bit_b);
    let sigma_c = bit_to_sigma(bit_c);
    registry.apply(&mut transcript, Party::Alice, working, 0, sigma_a)?;
    registry.apply(&mut transcript, Party::Bob, working, 1, sigma_b)?;
    registry.apply(&mut transcript, Party::Claire, working, 2, sigma_c)?;

    let outcome = registry
        .measure_full(&mut transcript, working, &ghz, "ghz", &mut rng)?
        .basis_index;

    // Each party pins its own letter; the restricted table makes the other
    // two unique.
    let decode = |known: [Option<Pauli>; 3]| -> Result<PauliWord> {
        decode_partner(&table_s, ghz_index, outcome, &known)
    };
    let word = decode([Some(sigma_a), None, None])?;
    let alice_view = (sigma_to_bit(word.0[1]), sigma_to_bit(word.0[2]));
    let word = decode([None, Some(sigma_b), None])?;
    let i = word.0[0].index();
    let bob_view = (((i >> 1) & 1, i & 1), sigma_to_bit(word.0[2]));
    let word = decode([None, None, Some(sigma_c)])?;
    let i = word.0[0].index();
    let claire_view = (((i >> 1) & 1, i & 1), sigma_to_bit(word.0[1]));

    transcript.push(Event::Decode {
        actor: Party::Alice,
        symbols: format!("{}{}", alice_view.0, alice_view.1),
    });
    transcript.push(Event::Decode {
        actor: Party::Bob,
        symbols: format!("{}{}{}", bob_view.0 .0, bob_view.0 .1, bob_view.1),
    });
    transcript.push(Event::Decode {
        actor: Party::Claire,
        symbols: format!("{}{}{}", claire_view.0 .0, claire_view.0 .1, claire_view.1),
    });

    // The untouched copy still holds the initial state.
    debug_assert!(registry
        .state(reference)
        .equal_up_to_phase(&initial, crate::hilbert::EPS)
        .is_some());

    Ok(MultidirectionalOutput {
        alice_view,
        bob_view,
        claire_view,
        outcome,
        transcript,
    })
}
