//! Secure direct communication: Alice encodes symbols on her halves of
//! shared Bell pairs, Bob completes the word on his halves and reads the
//! symbols off Bell measurements.

use crate::bases::{bell_state, EntangledBasis};
use crate::error::Result;
use crate::measure::RandomSource;
use crate::pauli::Pauli;
use crate::tables::{build_a2, decode_partner};

use super::registry::Registry;
use super::transcript::{Event, Party, Transcript};
use super::{pad_message, unpad_message, MessageWord, PadSpec};

pub struct QsdcOutput {
    pub decoded: MessageWord,
    pub transcript: Transcript,
}

/// Runs the direct-communication protocol.
///
/// `sigma_i` is the fixed operator Bob applies to his qubits; `bell_index`
/// is the shared Bell state `b_k`; `pad` carries `|msg|` message positions
/// inside `pad.total_len()` pairs.
pub fn run_qsdc(
    msg: &MessageWord,
    sigma_i: Pauli,
    bell_index: usize,
    pad: &PadSpec,
    seed: u64,
) -> Result<QsdcOutput> {
    let mut rng = RandomSource::new(seed);
    let mut transcript = Transcript::new();
    let mut registry = Registry::new();
    let bell = EntangledBasis::bell();
    let a2 = build_a2();

    let padded = pad_message(msg, pad, &mut rng)?;
    let n = pad.total_len();

    // Shared pairs b_k: Bob keeps position 0, Alice holds position 1.
    let shared = bell_state((bell_index >> 1) as u8, (bell_index & 1) as u8);
    let groups: Vec<usize> = (0..n)
        .map(|_| registry.add_group(shared.clone(), vec![Party::Bob, Party::Alice]))
        .collect();

    // Alice codifies the padded word on her halves and sends them over.
    for (&g, &symbol) in groups.iter().zip(padded.symbols()) {
        let sigma = Pauli::from_index(symbol).expect("symbol in 0..=3");
        registry.apply(&mut transcript, Party::Alice, g, 1, sigma)?;
    }
    for &g in &groups {
        registry.send(&mut transcript, Party::Alice, Party::Bob, g, &[1])?;
    }

    // Bob completes each word with his fixed operator, measures, decodes.
    let mut decoded_padded = Vec::with_capacity(n);
    for &g in &groups {
        registry.apply(&mut transcript, Party::Bob, g, 0, sigma_i)?;
        let outcome = registry.measure_full(&mut transcript, g, &bell, "bell", &mut rng)?;
        let word = decode_partner(&a2, bell_index, outcome.basis_index, &[Some(sigma_i), None])?;
        decoded_padded.push(word.0[1].index());
    }
    let decoded_padded = MessageWord::new(decoded_padded)?;
    let decoded = unpad_message(&decoded_padded, pad);
    transcript.push(Event::Decode {
        actor: Party::Bob,
        symbols: decoded.to_string(),
    });

    Ok(QsdcOutput {
        decoded,
        transcript,
    })
}
