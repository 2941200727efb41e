//! Relative class numbers h2, h6, h10 from generalized Bernoulli numbers.
//!
//!     cargo run --example class_numbers -- 2000

use power_residues::characters::odd_characters;
use power_residues::class_numbers::ClassNumberRecord;
use power_residues::modular::{primes_up_to, ResidueSystem};

fn main() {
    let limit: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(400);

    // Bernoulli numbers live in Q(ζ_q); here is p = 79, q = 6.
    let system = ResidueSystem::new(79, 6, Some(3)).unwrap();
    for chi in odd_characters(&system) {
        println!("p = 79, t = {}: B_χ = {}", chi.t(), chi.bernoulli());
    }
    println!();

    println!("{:>6} {:>5} {:>8} {:>10}", "p", "h2", "h6", "h10");
    for p in primes_up_to(limit)
        .into_iter()
        .filter(|p| p % 4 == 3 && *p > 3)
    {
        let r = ClassNumberRecord::compute(p).unwrap();
        if r.h6.is_none() && r.h10.is_none() {
            continue;
        }
        let opt = |x: Option<num_bigint::BigInt>| x.map_or("-".to_string(), |v| v.to_string());
        println!("{p:>6} {:>5} {:>8} {:>10}", r.h2, opt(r.h6), opt(r.h10));
    }
}
