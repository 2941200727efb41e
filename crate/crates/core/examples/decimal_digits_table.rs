//! Sixth-power classes read off the decimal expansion of 1/p, for the primes
//! p ≡ 7 (mod 12) below 1000 where 10 has order (p − 1)/2.
//!
//!     cargo run --example decimal_digits_table

use power_residues::deviation::{classify_digit_sixth, Criterion};
use power_residues::digits::digit_period;
use power_residues::scanner::{scan_sixth, BaseSpec, GeneratorSpec};

fn main() {
    let rows = scan_sixth(7, 1000, BaseSpec::Digit10, &GeneratorSpec::Smallest, None).unwrap();
    println!(
        "{} primes; criterion B for {}",
        rows.len(),
        rows.iter().filter(|r| r.verdict == Criterion::B).count()
    );
    for r in rows.iter().filter(|r| r.verdict != Criterion::B) {
        let sign = if r.is_main_type() {
            "main".to_string()
        } else {
            r.sign.to_string()
        };
        println!(
            "{:>4}  h6 = {:>4}  h2 = {:>3}  {}  {sign}",
            r.p, r.h6, r.h2, r.verdict
        );
    }

    // the sums behind one row: every third digit of the period of 1/151
    let period = digit_period(151, 10, 1).unwrap();
    let sums: Vec<u64> = (0..3)
        .map(|j| period.digits.iter().skip(j).step_by(3).sum())
        .collect();
    let report = classify_digit_sixth(151).unwrap();
    println!(
        "1/151: digit sums {sums:?}, T = {:?}",
        report
            .deviation
            .entries
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );
}
