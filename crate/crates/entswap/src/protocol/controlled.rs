//! Controlled bidirectional exchange: Alice and Bob encode on their qubits of
//! shared GHZ triples and hand them to Claire, who measures and broadcasts
//! outcomes only if she authorizes the transaction.

use crate::bases::EntangledBasis;
use crate::error::Result;
use crate::measure::RandomSource;
use crate::pauli::Pauli;
use crate::tables::{build_a3, decode_partner};

use super::registry::Registry;
use super::transcript::{Event, Party, Transcript};
use super::{pad_message, unpad_message, MessageWord, PadSpec};

pub struct ControlledOutput {
    /// Bob's word as decoded by Alice; absent when the grant is withheld.
    pub decoded_by_alice: Option<MessageWord>,
    /// Alice's word as decoded by Bob; absent when the grant is withheld.
    pub decoded_by_bob: Option<MessageWord>,
    pub transcript: Transcript,
}

/// Runs the controlled protocol over `pad.total_len()` GHZ triples `b_ell`.
///
/// Claire owns position 0 of every triple and never applies an operator;
/// without her grant no measurement happens and nothing is decoded.
pub fn run_controlled(
    msg_a: &MessageWord,
    msg_b: &MessageWord,
    ghz_index: usize,
    pad: &PadSpec,
    grant: bool,
    seed: u64,
) -> Result<ControlledOutput> {
    let mut rng = RandomSource::new(seed);
    let mut transcript = Transcript::new();
    let mut registry = Registry::new();
    let ghz = EntangledBasis::ghz();
    let a3 = build_a3();

    let padded_a = pad_message(msg_a, pad, &mut rng)?;
    let padded_b = pad_message(msg_b, pad, &mut rng)?;
    let n = pad.total_len();

    let initial = ghz.state(ghz_index).clone();
    let groups: Vec<usize> = (0..n)
        .map(|_| {
            registry.add_group(
                initial.clone(),
                vec![Party::Claire, Party::Alice, Party::Bob],
            )
        })
        .collect();

    for ((&g, &a), &b) in groups
        .iter()
        .zip(padded_a.symbols())
        .zip(padded_b.symbols())
    {
        registry.apply(&mut transcript, Party::Alice, g, 1, Pauli::ALL[a as usize])?;
        registry.apply(&mut transcript, Party::Bob, g, 2, Pauli::ALL[b as usize])?;
    }
    for &g in &groups {
        registry.send(&mut transcript, Party::Alice, Party::Claire, g, &[1])?;
        registry.send(&mut transcript, Party::Bob, Party::Claire, g, &[2])?;
    }

    if !grant {
        return Ok(ControlledOutput {
            decoded_by_alice: None,
            decoded_by_bob: None,
            transcript,
        });
    }

    let mut outcomes = Vec::with_capacity(n);
    for &g in &groups {
        let outcome = registry.measure_full(&mut transcript, g, &ghz, "ghz", &mut rng)?;
        outcomes.push(outcome.basis_index);
    }
    let payload = format!(
        "outcomes:{}",
        outcomes
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    for to in [Party::Alice, Party::Bob] {
        transcript.push(Event::ClassicalSend {
            from: Party::Claire,
            to,
            payload: payload.clone(),
        });
    }

    // Each correspondent pins Claire's identity letter and its own symbol;
    // the remaining letter is unique because the third letter is injective
    // for a fixed first pair.
    let mut decoded_b = Vec::with_capacity(n);
    let mut decoded_a = Vec::with_capacity(n);
    for ((&outcome, &a), &b) in outcomes
        .iter()
        .zip(padded_a.symbols())
        .zip(padded_b.symbols())
    {
        let word = decode_partner(
            &a3,
            ghz_index,
            outcome,
            &[Some(Pauli::I), Some(Pauli::ALL[a as usize]), None],
        )?;
        decoded_b.push(word.0[2].index());
        let word = decode_partner(
            &a3,
            ghz_index,
            outcome,
            &[Some(Pauli::I), None, Some(Pauli::ALL[b as usize])],
        )?;
        decoded_a.push(word.0[1].index());
    }
    let decoded_by_alice = unpad_message(&MessageWord::new(decoded_b)?, pad);
    let decoded_by_bob = unpad_message(&MessageWord::new(decoded_a)?, pad);
    transcript.push(Event::Decode {
        actor: Party::Alice,
        symbols: decoded_by_alice.to_string(),
    });
    transcript.push(Event::Decode {
        actor: Party::Bob,
        symbols: decoded_by_bob.to_string(),
    });

    Ok(ControlledOutput {
        decoded_by_alice: Some(decoded_by_alice),
        decoded_by_bob: Some(decoded_by_bob),
        transcript,
    })
}
