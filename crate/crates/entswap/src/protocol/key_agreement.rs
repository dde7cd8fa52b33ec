//! Key agreement from entanglement swapping: Alice ships pairs of Bell
//! states, optionally swapping their middle qubits; Bob measures in one of
//! two pairings; matching choices yield four key bits per block, mismatched
//! choices still yield two parity bits.

use crate::bases::BellPairing;
use crate::error::Result;
use crate::hilbert::QubitPermutation;
use crate::measure::RandomSource;
use crate::swap::z_state;

use super::registry::Registry;
use super::transcript::{Event, Party, Transcript};

/// Per-block record: choices, initial labels and Bob's two Bell outcomes.
#[derive(Clone, Copy, Debug)]
pub struct BlockStat {
    /// Alice swapped the middle qubits.
    pub alice_swap: bool,
    /// Bob measured the cross pairing (0,2), (1,3).
    pub bob_cross: bool,
    pub correlated: bool,
    /// Alice's initial Bell labels (i0, j0, i1, j1).
    pub labels: (u8, u8, u8, u8),
    /// Bob's two Bell outcome indices.
    pub outcomes: (usize, usize),
}

pub struct KeyAgreementOutput {
    pub key_alice: Vec<u8>,
    pub key_bob: Vec<u8>,
    pub blocks: Vec<BlockStat>,
    pub transcript: Transcript,
}

/// Runs `block_count` blocks of the key agreement protocol.
pub fn run_key_agreement(block_count: usize, seed: u64) -> Result<KeyAgreementOutput> {
    let mut rng = RandomSource::new(seed);
    let mut transcript = Transcript::new();
    let mut registry = Registry::new();

    // Phase 1: Alice prepares, optionally swaps, and sends; Bob measures.
    let mut blocks = Vec::with_capacity(block_count);
    for _ in 0..block_count {
        let k0 = rng.next_index(4);
        let k1 = rng.next_index(4);
        let labels = (
            (k0 >> 1) as u8,
            (k0 & 1) as u8,
            (k1 >> 1) as u8,
            (k1 & 1) as u8,
        );
        let state = z_state(labels.0, labels.1, labels.2, labels.3);
        let group = registry.add_group(state, vec![Party::Alice; 4]);

        let alice_swap = rng.next_bit() == 1;
        if alice_swap {
            registry.permute(group, &QubitPermutation::swap(4, 1, 2))?;
        }
        registry.send(
            &mut transcript,
            Party::Alice,
            Party::Bob,
            group,
            &[0, 1, 2, 3],
        )?;

        let bob_cross = rng.next_bit() == 1;
        let (first, second) = if bob_cross {
            ((0, 2), (1, 3))
        } else {
            ((0, 1), (2, 3))
        };
        let o1 = registry
            .measure_pair(
                &mut transcript,
                group,
                BellPairing {
                    first: first.0,
                    second: first.1,
                },
                "bell",
                &mut rng,
            )?
            .basis_index;
        let o2 = registry
            .measure_pair(
                &mut transcript,
                group,
                BellPairing {
                    first: second.0,
                    second: second.1,
                },
                "bell",
                &mut rng,
            )?
            .basis_index;

        blocks.push(BlockStat {
            alice_swap,
            bob_cross,
            correlated: alice_swap == bob_cross,
            labels,
            outcomes: (o1, o2),
        });
    }

    // Phase 2: the chosen operations are exchanged classically.
    let alice_ops: Vec<&str> = blocks
        .iter()
        .map(|b| if b.alice_swap { "A1" } else { "A0" })
        .collect();
    let bob_ops: Vec<&str> = blocks
        .iter()
        .map(|b| if b.bob_cross { "B1" } else { "B0" })
        .collect();
    transcript.push(Event::ClassicalSend {
        from: Party::Alice,
        to: Party::Bob,
        payload: format!("actions:{}", alice_ops.join(",")),
    });
    transcript.push(Event::ClassicalSend {
        from: Party::Bob,
        to: Party::Alice,
        payload: format!("actions:{}", bob_ops.join(",")),
    });

    // Phase 3: key assembly, blocks in order. Correlated blocks contribute
    // the four bits of Bob's two outcomes (which Alice reconstructs from her
    // labels); anticorrelated blocks contribute the two outcome parities.
    let mut key_alice = Vec::new();
    let mut key_bob = Vec::new();
    for block in &blocks {
        let (i0, j0, i1, j1) = block.labels;
        let (o1, o2) = block.outcomes;
        let (a, b) = ((o1 >> 1) as u8, (o1 & 1) as u8);
        let (c, d) = ((o2 >> 1) as u8, (o2 & 1) as u8);
        if block.correlated {
            key_alice.extend_from_slice(&[i0, j0, i1, j1]);
            key_bob.extend_from_slice(&[a, b, c, d]);
        } else {
            key_alice.extend_from_slice(&[i0 ^ i1, j0 ^ j1]);
            key_bob.extend_from_slice(&[a ^ c, b ^ d]);
        }
    }
    let render = |key: &[u8]| key.iter().map(|b| b.to_string()).collect::<String>();
    transcript.push(Event::Decode {
        actor: Party::Alice,
        symbols: render(&key_alice),
    });
    transcript.push(Event::Decode {
        actor: Party::Bob,
        symbols: render(&key_bob),
    });

    Ok(KeyAgreementOutput {
        key_alice,
        key_bob,
        blocks,
        transcript,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_agree_and_have_expected_length() {
        for seed in 0..10 {
            let out = run_key_agreement(40, seed).unwrap();
            assert_eq!(out.key_alice, out.key_bob);
            let expected: usize = out
                .blocks
                .iter()
                .map(|b| if b.correlated { 4 } else { 2 })
                .sum();
            assert_eq!(out.key_alice.len(), expected);
        }
    }

    #[test]
    fn correlated_blocks_reproduce_alice_labels() {
        let out = run_key_agreement(60, 5).unwrap();
        for block in out.blocks.iter().filter(|b| b.correlated) {
            let (i0, j0, i1, j1) = block.labels;
            assert_eq!(block.outcomes.0, (2 * i0 + j0) as usize);
            assert_eq!(block.outcomes.1, (2 * i1 + j1) as usize);
        }
    }

    #[test]
    fn anticorrelated_blocks_obey_parity_law() {
        let out = run_key_agreement(120, 8).unwrap();
        let mut seen = 0;
        for block in out.blocks.iter().filter(|b| !b.correlated) {
            let (i0, j0, i1, j1) = block.labels;
            let (o1, o2) = block.outcomes;
            let (a, b) = ((o1 >> 1) as u8, (o1 & 1) as u8);
            let (c, d) = ((o2 >> 1) as u8, (o2 & 1) as u8);
            assert_eq!(a ^ c, i0 ^ i1);
            assert_eq!(b ^ d, j0 ^ j1);
            seen += 1;
        }
        assert!(seen > 0);
    }

    #[test]
    fn replay_is_byte_identical() {
        let a = run_key_agreement(25, 31).unwrap();
        let b = run_key_agreement(25, 31).unwrap();
        assert_eq!(a.transcript.render(), b.transcript.render());
        assert_eq!(a.key_alice, b.key_alice);
    }
}
