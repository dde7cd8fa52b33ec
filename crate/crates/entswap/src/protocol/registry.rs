//! Joint-state bookkeeping for entangled qubit groups.
//!
//! Each group holds one joint state vector; "sending a qubit" transfers
//! ownership metadata only, never amplitudes.

use crate::bases::{BellPairing, EntangledBasis};
use crate::error::{Error, Result};
use crate::hilbert::{QubitPermutation, StateVector};
use crate::measure::{measure_bell_pair, measure_full, MeasurementOutcome, RandomSource};
use crate::pauli::{apply_local, Pauli};

use super::transcript::{Event, Party, Transcript};

struct Group {
    state: StateVector,
    owners: Vec<Party>,
}

/// All entangled groups of one protocol run, with per-qubit ownership.
pub struct Registry {
    groups: Vec<Group>,
}

impl Registry {
    pub fn new() -> Self {
        Self { groups: Vec::new() }
    }

    pub fn add_group(&mut self, state: StateVector, owners: Vec<Party>) -> usize {
        assert_eq!(state.num_qubits(), owners.len());
        self.groups.push(Group { state, owners });
        self.groups.len() - 1
    }

    pub fn state(&self, group: usize) -> &StateVector {
        &self.groups[group].state
    }

    pub fn owner(&self, group: usize, position: usize) -> Party {
        self.groups[group].owners[position]
    }

    fn check_owner(&self, party: Party, group: usize, position: usize) -> Result<()> {
        if self.groups[group].owners[position] != party {
            return Err(Error::NotOwner {
                party: party.name(),
                group,
                position,
            });
        }
        Ok(())
    }

    /// A party applies a Pauli to a qubit it owns.
    pub fn apply(
        &mut self,
        transcript: &mut Transcript,
        party: Party,
        group: usize,
        position: usize,
        sigma: Pauli,
    ) -> Result<()> {
        self.check_owner(party, group, position)?;
        let next = apply_local(&self.groups[group].state, position, sigma)?;
        self.groups[group].state = next;
        transcript.push(Event::LocalOp {
            actor: party,
            group,
            position,
            pauli: sigma.index(),
        });
        Ok(())
    }

    /// Transfers ownership of the listed qubits over a quantum channel.
    pub fn send(
        &mut self,
        transcript: &mut Transcript,
        from: Party,
        to: Party,
        group: usize,
        positions: &[usize],
    ) -> Result<()> {
        for &pos in positions {
            self.check_owner(from, group, pos)?;
        }
        for &pos in positions {
            self.groups[group].owners[pos] = to;
        }
        transcript.push(Event::QuantumSend {
            from,
            to,
            group,
            positions: positions.to_vec(),
        });
        Ok(())
    }

    /// Physically reorders the qubits of a group (the entanglement-swapping
    /// move); ownership follows the qubits.
    pub fn permute(&mut self, group: usize, p: &QubitPermutation) -> Result<()> {
        let g = &mut self.groups[group];
        g.state = g.state.permute_qubits(p)?;
        let owners = g.owners.clone();
        for (k, owner) in owners.into_iter().enumerate() {
            g.owners[p.image(k)] = owner;
        }
        Ok(())
    }

    /// Joint measurement of a whole group in an entangled basis.
    pub fn measure_full(
        &mut self,
        transcript: &mut Transcript,
        group: usize,
        basis: &EntangledBasis,
        basis_name: &'static str,
        rng: &mut RandomSource,
    ) -> Result<MeasurementOutcome> {
        let outcome = measure_full(&self.groups[group].state, basis, rng)?;
        self.groups[group].state = outcome.post_state.clone();
        transcript.push(Event::Measurement {
            group,
            basis: basis_name,
            outcome: outcome.basis_index,
            probability: outcome.probability,
        });
        Ok(outcome)
    }

    /// Bell measurement of one qubit pair inside a 4-qubit group.
    pub fn measure_pair(
        &mut self,
        transcript: &mut Transcript,
        group: usize,
        pairing: BellPairing,
        basis_name: &'static str,
        rng: &mut RandomSource,
    ) -> Result<MeasurementOutcome> {
        let outcome = measure_bell_pair(&self.groups[group].state, pairing, rng)?;
        self.groups[group].state = outcome.post_state.clone();
        transcript.push(Event::Measurement {
            group,
            basis: basis_name,
            outcome: outcome.basis_index,
            probability: outcome.probability,
        });
        Ok(outcome)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::new()
    }
}
