//! Three-party exchange over a GHZ state: Alice contributes two bits, Bob
//! and Claire one bit each; one joint measurement reveals to every party
//! the inputs of the other two.

use entswap::protocol::run_multidirectional;

fn main() {
    let out = run_multidirectional((1, 0), 1, 0, 0, 11).unwrap();
    println!(
        "alice learns  bob={} claire={}",
        out.alice_view.0, out.alice_view.1
    );
    println!(
        "bob learns    alice={}{} claire={}",
        out.bob_view.0 .0, out.bob_view.0 .1, out.bob_view.1
    );
    println!(
        "claire learns alice={}{} bob={}",
        out.claire_view.0 .0, out.claire_view.0 .1, out.claire_view.1
    );
    println!("\ntranscript:\n{}", out.transcript.render());
}
