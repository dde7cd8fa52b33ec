//! Desk-scale simulation of entanglement-based communication protocols.
//!
//! The crate builds small multi-qubit states, derives the permutation action
//! of Pauli words on the Bell and GHZ bases, verifies the entanglement
//! swapping identities, and runs five communication protocols (direct,
//! bidirectional, multidirectional, controlled, and key agreement) as
//! deterministic seeded state machines with replayable transcripts.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod bases;
pub mod error;
pub mod hilbert;
pub mod measure;
pub mod pauli;
pub mod protocol;
pub mod report;
pub mod swap;
pub mod tables;

pub use error::{Error, Result};
