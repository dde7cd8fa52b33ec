//! Bidirectional exchange: both parties encode on their halves of shared
//! Bell pairs, swap qubits, and a single joint measurement per pair lets
//! each recover the other's word.

use entswap::protocol::{run_bidirectional, MessageWord};

fn main() {
    let msg_a = MessageWord::parse("0123").unwrap();
    let msg_b = MessageWord::parse("3210").unwrap();
    let out = run_bidirectional(&msg_a, &msg_b, 2, 7).unwrap();
    println!("alice sent {msg_a}, decoded {}", out.decoded_by_alice);
    println!("bob   sent {msg_b}, decoded {}", out.decoded_by_bob);
    println!("\ntranscript:\n{}", out.transcript.render());
}
