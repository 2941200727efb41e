//! Sixth power residues below 500 for b = 2 and b = p + 1: which primes get
//! a definite answer from h2 and h6 alone.
//!
//!     cargo run --example sixth_power_table

use power_residues::deviation::Criterion;
use power_residues::scanner::{example_primitive_roots, scan_sixth, BaseSpec};

fn main() {
    let gens = example_primitive_roots();
    let two = scan_sixth(7, 500, BaseSpec::Fixed(2), &gens, None).unwrap();
    let plus = scan_sixth(7, 500, BaseSpec::PPlusOne, &gens, None).unwrap();
    let label = |r: &power_residues::scanner::ScanRow| {
        if r.is_main_type() {
            "main".to_string()
        } else {
            r.sign.to_string()
        }
    };
    println!(
        "{:>4} {:>3} {:>4} {:>4} {:>4} {:>3}   {:<14} {:<14}",
        "p", "g", "c6", "c2", "h6", "h2", "b = 2", "b = p+1"
    );
    let mut both = 0;
    for (a, b) in two.iter().zip(&plus) {
        if a.verdict == Criterion::B && b.verdict == Criterion::B {
            both += 1;
            continue;
        }
        println!(
            "{:>4} {:>3} {:>4} {:>4} {:>4} {:>3}   {:<14} {:<14}",
            a.p,
            a.g,
            a.c6_sq.to_string(),
            a.c2_sq.to_string(),
            a.h6,
            a.h2,
            format!("{} {}", a.verdict, label(a)),
            format!("{} {}", b.verdict, label(b)),
        );
    }
    println!("{both} of {} primes: criterion B for both bases", two.len());
}
