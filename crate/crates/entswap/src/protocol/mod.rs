//! The five entanglement-based communication protocols as deterministic,
//! seeded multi-party state machines.

mod bidirectional;
mod controlled;
mod key_agreement;
mod multidirectional;
mod qsdc;
mod registry;
mod transcript;

pub use bidirectional::{run_bidirectional, BidirectionalOutput};
pub use controlled::{run_controlled, ControlledOutput};
pub use key_agreement::{run_key_agreement, BlockStat, KeyAgreementOutput};
pub use multidirectional::{run_multidirectional, MultidirectionalOutput};
pub use qsdc::{run_qsdc, QsdcOutput};
pub use registry::Registry;
pub use transcript::{Event, Party, Transcript};

use std::fmt;

use crate::error::{Error, Result};
use crate::measure::RandomSource;

/// A word over the alphabet `{0,1,2,3}`; each symbol carries two classical
/// bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MessageWord(Vec<u8>);

impl MessageWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 3) {
            return Err(Error::BadSymbol(bad));
        }
        Ok(Self(symbols))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Parses a radix-4 digit string such as `"1302"`.
    pub fn parse(text: &str) -> Result<Self> {
        let symbols = text
            .bytes()
            .map(|b| {
                if b.is_ascii_digit() {
                    Ok(b - b'0')
                } else {
                    Err(Error::BadSymbol(b))
                }
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(symbols)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// A seeded-random word of the given length.
    pub fn random(len: usize, rng: &mut RandomSource) -> Self {
        Self((0..len).map(|_| rng.next_symbol()).collect())
    }
}

impl fmt::Display for MessageWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Padding layout: a total length `n` and the ordered positions `J` that
/// carry message symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadSpec {
    n: usize,
    positions: Vec<usize>,
}

impl PadSpec {
    pub fn new(n: usize, positions: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; n];
        for &p in &positions {
            if p >= n || seen[p] {
                return Err(Error::BadPadPositions(n));
            }
            seen[p] = true;
        }
        Ok(Self { n, positions })
    }

    /// Pad covering every position: the padded word equals the message.
    pub fn full(n: usize) -> Self {
        Self {
            n,
            positions: (0..n).collect(),
        }
    }

    pub fn total_len(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

/// Inserts `msg` at the pad positions, in order, filling every other
/// position with a seeded-random symbol.
pub fn pad_message(
    msg: &MessageWord,
    pad: &PadSpec,
    rng: &mut RandomSource,
) -> Result<MessageWord> {
    if msg.len() != pad.positions.len() {
        return Err(Error::PadMismatch {
            msg: msg.len(),
            positions: pad.positions.len(),
        });
    }
    let mut symbols: Vec<Option<u8>> = vec![None; pad.n];
    for (&pos, &sym) in pad.positions.iter().zip(msg.symbols()) {
        symbols[pos] = Some(sym);
    }
    let symbols = symbols
        .into_iter()
        .map(|s| s.unwrap_or_else(|| rng.next_symbol()))
        .collect();
    Ok(MessageWord(symbols))
}

/// Reads back the message symbols at the pad positions.
pub fn unpad_message(padded: &MessageWord, pad: &PadSpec) -> MessageWord {
    MessageWord(
        pad.positions
            .iter()
            .map(|&pos| padded.symbols()[pos])
            .collect(),
    )
}
