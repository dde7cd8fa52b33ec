//! Simultaneous two-way exchange: each side encodes on its own half of a
//! shared Bell pair, the halves are exchanged, and a single Bell measurement
//! per pair tells each side the other's symbol.

use crate::bases::{bell_state, EntangledBasis};
use crate::error::{Error, Result};
use crate::measure::RandomSource;
use crate::pauli::Pauli;
use crate::tables::{build_a2, decode_partner};

use super::registry::Registry;
use super::transcript::{Event, Party, Transcript};
use super::MessageWord;

pub struct BidirectionalOutput {
    /// Bob's word as decoded by Alice.
    pub decoded_by_alice: MessageWord,
    /// Alice's word as decoded by Bob.
    pub decoded_by_bob: MessageWord,
    pub transcript: Transcript,
}

/// Runs the bidirectional protocol over `|msg_a| = |msg_b|` shared pairs
/// `b_k`.
///
/// The pair is measured once after the exchange and the outcome is visible
/// to both parties.
pub fn run_bidirectional(
    msg_a: &MessageWord,
    msg_b: &MessageWord,
    bell_index: usize,
    seed: u64,
) -> Result<BidirectionalOutput> {
    if msg_a.len() != msg_b.len() {
        return Err(Error::ProtocolState(format!(
            "message lengths differ: {} vs {}",
            msg_a.len(),
            msg_b.len()
        )));
    }
    let mut rng = RandomSource::new(seed);
    let mut transcript = Transcript::new();
    let mut registry = Registry::new();
    let bell = EntangledBasis::bell();
    let a2 = build_a2();

    let shared = bell_state((bell_index >> 1) as u8, (bell_index & 1) as u8);
    let groups: Vec<usize> = (0..msg_a.len())
        .map(|_| registry.add_group(shared.clone(), vec![Party::Alice, Party::Bob]))
        .collect();

    for ((&g, &ia), &jb) in groups.iter().zip(msg_a.symbols()).zip(msg_b.symbols()) {
        registry.apply(&mut transcript, Party::Alice, g, 0, Pauli::ALL[ia as usize])?;
        registry.apply(&mut transcript, Party::Bob, g, 1, Pauli::ALL[jb as usize])?;
    }
    for &g in &groups {
        registry.send(&mut transcript, Party::Alice, Party::Bob, g, &[0])?;
        registry.send(&mut transcript, Party::Bob, Party::Alice, g, &[1])?;
    }

    let mut decoded_by_alice = Vec::with_capacity(msg_a.len());
    let mut decoded_by_bob = Vec::with_capacity(msg_a.len());
    for ((&g, &ia), &jb) in groups.iter().zip(msg_a.symbols()).zip(msg_b.symbols()) {
        let outcome = registry.measure_full(&mut transcript, g, &bell, "bell", &mut rng)?;
        let sigma_a = Pauli::ALL[ia as usize];
        let sigma_b = Pauli::ALL[jb as usize];
        let word = decode_partner(&a2, bell_index, outcome.basis_index, &[Some(sigma_a), None])?;
        decoded_by_alice.push(word.0[1].index());
        let word = decode_partner(&a2, bell_index, outcome.basis_index, &[None, Some(sigma_b)])?;
        decoded_by_bob.push(word.0[0].index());
    }
    let decoded_by_alice = MessageWord::new(decoded_by_alice)?;
    let decoded_by_bob = MessageWord::new(decoded_by_bob)?;
    transcript.push(Event::Decode {
        actor: Party::Alice,
        symbols: decoded_by_alice.to_string(),
    });
    transcript.push(Event::Decode {
        actor: Party::Bob,
        symbols: decoded_by_bob.to_string(),
    });

    Ok(BidirectionalOutput {
        decoded_by_alice,
        decoded_by_bob,
        transcript,
    })
}
