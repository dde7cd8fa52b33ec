//! Print the action of each Pauli operator on the canonical and Hadamard
//! basis vectors, phases included.

use entswap::hilbert::{StateVector, EPS};
use entswap::pauli::{apply_local, Pauli};

fn main() {
    let inputs = [
        ("|0>", StateVector::ket(0)),
        ("|1>", StateVector::ket(1)),
        ("h0", StateVector::hadamard(0)),
        ("h1", StateVector::hadamard(1)),
    ];
    for sigma in Pauli::ALL {
        for (name, input) in &inputs {
            let out = apply_local(input, 0, sigma).unwrap();
            // Identify the result as phase x (one of the four inputs).
            let described = inputs.iter().find_map(|(target_name, target)| {
                out.equal_up_to_phase(target, EPS).map(|phase| {
                    let phase = match (phase.re, phase.im) {
                        (re, _) if (re - 1.0).abs() < EPS => "",
                        (re, _) if (re + 1.0).abs() < EPS => "-",
                        (_, im) if (im - 1.0).abs() < EPS => "i ",
                        _ => "-i ",
                    };
                    format!("{phase}{target_name}")
                })
            });
            println!(
                "sigma_{} {:4} -> {}",
                sigma.index(),
                name,
                described.unwrap()
            );
        }
        println!();
    }
}
