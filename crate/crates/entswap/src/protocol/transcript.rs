//! Ordered, replayable record of everything that happens in a protocol run.

use std::fmt;

/// A communicating party.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Party {
    Alice,
    Bob,
    Claire,
}

impl Party {
    pub fn name(self) -> &'static str {
        match self {
            Party::Alice => "alice",
            Party::Bob => "bob",
            Party::Claire => "claire",
        }
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One channel event, local operation, measurement or decode.
#[derive(Clone, Debug, PartialEq)]
pub enum Event {
    QuantumSend {
        from: Party,
        to: Party,
        group: usize,
        positions: Vec<usize>,
    },
    ClassicalSend {
        from: Party,
        to: Party,
        payload: String,
    },
    LocalOp {
        actor: Party,
        group: usize,
        position: usize,
        pauli: u8,
    },
    Measurement {
        group: usize,
        basis: &'static str,
        outcome: usize,
        probability: f64,
    },
    Decode {
        actor: Party,
        symbols: String,
    },
}

/// Events in causal order; one line per event when serialized.
#[derive(Clone, Debug, Default)]
pub struct Transcript {
    events: Vec<Event>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, event: Event) {
        self.events.push(event);
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn has_measurements(&self) -> bool {
        self.events
            .iter()
            .any(|e| matches!(e, Event::Measurement { .. }))
    }

    /// Line-delimited rendering: one flat `key=value` record per event.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (step, event) in self.events.iter().enumerate() {
            match event {
                Event::QuantumSend {
                    from,
                    to,
                    group,
                    positions,
                } => {
                    let pos: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
                    out.push_str(&format!(
                        "event=quantum-send step={step} from={from} to={to} group={group} positions={}\n",
                        pos.join(",")
                    ));
                }
                Event::ClassicalSend { from, to, payload } => {
                    out.push_str(&format!(
                        "event=classical-send step={step} from={from} to={to} payload={payload}\n"
                    ));
                }
                Event::LocalOp {
                    actor,
                    group,
                    position,
                    pauli,
                } => {
                    out.push_str(&format!(
                        "event=local-op step={step} actor={actor} group={group} position={position} pauli={pauli}\n"
                    ));
                }
                Event::Measurement {
                    group,
                    basis,
                    outcome,
                    probability,
                } => {
                    out.push_str(&format!(
                        "event=measurement step={step} group={group} basis={basis} outcome={outcome} prob={probability:.12}\n"
                    ));
                }
                Event::Decode { actor, symbols } => {
                    out.push_str(&format!(
                        "event=decode step={step} actor={actor} symbols={symbols}\n"
                    ));
                }
            }
        }
        out
    }
}
