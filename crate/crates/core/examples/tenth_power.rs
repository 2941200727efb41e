//! Tenth power residues with b = p + 1: the strict criterion, the heuristic
//! one, and where the heuristic goes wrong.
//!
//!     cargo run --release --example tenth_power -- 100000

use power_residues::deviation::classify_tenth;
use power_residues::render::decimal6;
use power_residues::scanner::scan_tenth;

fn main() {
    let p_max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_000);

    let r = classify_tenth(31, None).unwrap();
    println!(
        "p = 31: h2 = {}, h10 = {}, sign = {}",
        r.h2, r.h10, r.actual_sign
    );
    println!(
        "  |T|^2 = {} ≥ {}",
        decimal6(&r.norm_sq),
        decimal6(&r.lower_bound)
    );

    let scan = scan_tenth(p_max, None).unwrap();
    let strict = scan.rows.iter().filter(|r| r.strict_b).count();
    let predicted = scan.rows.iter().filter(|r| r.prob_main).count();
    let main = scan.rows.iter().filter(|r| r.is_main_type()).count();
    println!("{} primes up to {p_max}", scan.rows.len());
    println!("  strict criterion applies: {strict}");
    println!("  main type predicted: {predicted}, main type actual: {main}");
    for r in scan.rows.iter().filter(|r| r.is_false_prediction()) {
        println!(
            "  wrong prediction at p = {}: h2 = {}, h10 = {}, sign = {}",
            r.p, r.h2, r.h10, r.sign
        );
    }
}
