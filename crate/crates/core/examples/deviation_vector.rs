//! A single b-deviation vector in detail: coset sums, the scalar products
//! with odd characters, and the sign pattern.
//!
//!     cargo run --example deviation_vector -- 163 164

use num_rational::BigRational;
use power_residues::characters::{odd_characters, scalar_product};
use power_residues::cyclotomic::CycloRational;
use power_residues::deviation::{class_partition, classify_by_norm, deviation_vector};
use power_residues::modular::ResidueSystem;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer argument"));
    let p = args.next().unwrap_or(163);
    let b = args.next().unwrap_or(p + 1);

    let system = match ResidueSystem::new(p, 6, None) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("p = {p}, b = {b}, g = {}", system.g());
    for (j, class) in class_partition(&system).iter().enumerate() {
        let head: Vec<String> = class.iter().take(8).map(|k| k.to_string()).collect();
        println!(
            "C{} = {{{}, ...}} ({} elements)",
            j + 1,
            head.join(", "),
            class.len()
        );
    }

    let t = deviation_vector(&system, b).unwrap();
    println!("S = {:?}", t.sums);
    println!(
        "T = ({})",
        t.entries
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "T / ΣT = ({})",
        t.normalized()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // ⟨T, χ⟩ = (b − χ(b))·B_χ̄ / 2 for every odd χ
    let half = BigRational::new(1.into(), 2.into());
    for chi in odd_characters(&system) {
        let lhs = scalar_product(&t.as_cyclo(), &chi).unwrap();
        let c = CycloRational::from_integer(6, b as i64).unwrap() - chi.eval(b as i128).unwrap();
        let rhs = (c * chi.conjugate().bernoulli()).scale(&half);
        println!(
            "t = {}: <T,χ> = {lhs}  {}",
            chi.t(),
            if lhs == rhs {
                "(matches)"
            } else {
                "(MISMATCH)"
            }
        );
    }

    let v = classify_by_norm(&t);
    println!(
        "|T|^2 = {}, sign = {}, criterion = {}",
        t.norm_squared(),
        v.sign,
        v.applied
    );
}
