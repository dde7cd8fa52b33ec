//! Controlled exchange: Alice and Bob encode on their qubits of shared GHZ
//! triples, but Claire holds the third qubit and the messages go through
//! only if she measures and broadcasts the outcomes.

use entswap::protocol::{run_controlled, MessageWord, PadSpec};

fn main() {
    let msg_a = MessageWord::parse("102").unwrap();
    let msg_b = MessageWord::parse("231").unwrap();
    let pad = PadSpec::full(3);

    let withheld = run_controlled(&msg_a, &msg_b, 4, &pad, false, 5).unwrap();
    println!(
        "grant withheld: alice decoded {:?}, bob decoded {:?}",
        withheld.decoded_by_alice, withheld.decoded_by_bob
    );

    let granted = run_controlled(&msg_a, &msg_b, 4, &pad, true, 5).unwrap();
    println!(
        "grant given:    alice decoded {}, bob decoded {}",
        granted.decoded_by_alice.unwrap(),
        granted.decoded_by_bob.unwrap()
    );
    println!("\ntranscript:\n{}", granted.transcript.render());
}
