//! How quadratic residues mod p spread over [0, p], and what h(−p) has to do
//! with it.
//!
//!     cargo run --example quadratic_residues -- 103

use power_residues::deviation::{class_sum_difference, quadratic_interval_counts};

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(103);
    let counts = match quadratic_interval_counts(p) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("p = {p}, h(-p) = {}", counts.h2);
    println!("residues minus nonresidues below p/2: {:>4}", counts.half);
    println!("residues minus nonresidues below p/6: {:>4}", counts.sixth);
    println!(
        "residues in (p/6,p/3) minus (2p/3,5p/6): {:>4}",
        counts.mid1
    );
    println!("residues in (p/3,p/2) minus (p/2,2p/3): {:>4}", counts.mid2);
    println!(
        "sum of residues minus sum of nonresidues: {}",
        class_sum_difference(p).unwrap()
    );

    // the half-interval excess is always positive and a multiple of h
    println!();
    println!("{:>6} {:>4} {:>6}", "p", "h", "half/h");
    for p in [7u64, 11, 19, 23, 31, 43, 47, 59, 67, 71] {
        let c = quadratic_interval_counts(p).unwrap();
        println!("{p:>6} {:>4} {:>6}", c.h2, c.half / c.h2);
    }
}
