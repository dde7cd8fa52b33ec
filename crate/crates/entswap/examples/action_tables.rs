//! Derive the permutation actions of Pauli words on the Bell and GHZ bases
//! and print the resulting tables, grouped by induced permutation.

use entswap::tables::{build_a2, build_a3, restrict_to_s, verify_tables};

fn main() {
    let a2 = build_a2();
    println!("two-letter words on the Bell basis:");
    for row in a2.rows() {
        let words: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
        println!(
            "  row {}: perm {:?}  preimage {{{}}}",
            row.label,
            row.permutation.images(),
            words.join(", ")
        );
    }

    let a3 = build_a3();
    println!("\nthree-letter words on the GHZ basis:");
    for row in a3.rows() {
        let words: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
        println!("  row {}: preimage {{{}}}", row.label, words.join(", "));
    }

    let s = restrict_to_s(&a3);
    println!("\nrestriction with letters 1 and 2 drawn from {{sigma_0, sigma_2}}:");
    for row in s.rows() {
        let words: Vec<String> = row.words.iter().map(|w| w.to_string()).collect();
        println!("  row {}: {{{}}}", row.label, words.join(", "));
    }

    println!("\n{}", verify_tables());
}
