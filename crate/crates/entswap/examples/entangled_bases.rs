//! Expand the Bell and GHZ basis elements in the Hadamard product basis and
//! run the built-in verification of the frozen expansion coefficients.

use entswap::bases::{
    hadamard_product_basis, verify_hadamard_expansions, EntangledBasis, GHZ_LABELS,
};
use entswap::hilbert::EPS;

fn main() {
    let bell = EntangledBasis::bell();
    let h2 = hadamard_product_basis(2);
    for k in 0..4 {
        let coeffs = bell.state(k).expand_in_basis(&h2).unwrap();
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > EPS)
            .map(|(idx, c)| format!("{:+.4} h{}{}", c.re, idx >> 1, idx & 1))
            .collect();
        println!("b_{} = {}", k, terms.join(" "));
    }
    println!();

    let ghz = EntangledBasis::ghz();
    let h3 = hadamard_product_basis(3);
    for (k, (e1, e2, e3)) in GHZ_LABELS.iter().enumerate() {
        let coeffs = ghz.state(k).expand_in_basis(&h3).unwrap();
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > EPS)
            .map(|(idx, c)| {
                format!(
                    "{:+.4} h{}{}{}",
                    c.re,
                    (idx >> 2) & 1,
                    (idx >> 1) & 1,
                    idx & 1
                )
            })
            .collect();
        println!("b_({e1}{e2}{e3}) = {}", terms.join(" "));
    }
    println!();

    println!("{}", verify_hadamard_expansions());
}
