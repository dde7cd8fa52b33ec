//! Expand one member of the z-family of Bell-pair products in the y-family
//! (the mid-swap rearrangement) and run the full 32-expansion verification.

use entswap::hilbert::EPS;
use entswap::swap::{verify_swap_identities, y_state, z_state};

fn main() {
    let subject = z_state(0, 1, 1, 0);
    println!("z_0110 expanded over the y family:");
    for t in 0..16usize {
        let (a, b, c, d) = (
            ((t >> 3) & 1) as u8,
            ((t >> 2) & 1) as u8,
            ((t >> 1) & 1) as u8,
            (t & 1) as u8,
        );
        let coeff = y_state(a, b, c, d).inner(&subject).unwrap();
        if coeff.norm() > EPS {
            println!("  {:+.4} y_{}{}{}{}", coeff.re, a, b, c, d);
        }
    }
    println!();
    println!("{}", verify_swap_identities());
}
