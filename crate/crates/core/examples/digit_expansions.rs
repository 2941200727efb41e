//! Periods of m/p in base b, and the digit-sum identities that tie them to
//! the class number of Q(√−p).
//!
//!     cargo run --example digit_expansions

use power_residues::digits::{
    alternating_digit_check, digit_period, digit_split_counts, nonresidue_digit_sums,
    residue_digit_sums,
};
use power_residues::modular::ResidueSystem;

fn show(p: u64, b: u64, m: u64) {
    let d = digit_period(p, b, m).unwrap();
    let digits: String = d.digits.iter().map(|x| x.to_string()).collect();
    println!("{m}/{p} in base {b}: period {digits} (length {})", d.len());
}

fn main() {
    show(7, 10, 1);
    show(79, 10, 1);

    // 10 is a primitive root mod 7: even minus odd digit sums is 11·h(−7)
    let c = alternating_digit_check(7, 10).unwrap();
    println!("1/7: {} − {} = {}", c.even_sum, c.odd_sum, c.predicted);

    // 10 is a nonresidue of order 2 mod 11
    let s = nonresidue_digit_sums(&ResidueSystem::new(11, 2, Some(2)).unwrap(), 10).unwrap();
    println!(
        "p = 11, numerators {:?}: odd-position sums {:?}, total {}",
        s.numerators, s.partial_sums, s.lhs
    );

    // 10 is a residue of order 13 mod 79
    let s = residue_digit_sums(&ResidueSystem::new(79, 2, Some(3)).unwrap(), 10).unwrap();
    println!(
        "p = 79, numerators {:?}: digit sums {:?}, total {}",
        s.numerators, s.partial_sums, s.lhs
    );

    // small against large digits for an even base of order (p−1)/2
    let split = digit_split_counts(31, 10).unwrap();
    println!(
        "1/31: {} digits below 5, {} digits 5 or above, difference {}",
        split.low, split.high, split.predicted
    );
}
