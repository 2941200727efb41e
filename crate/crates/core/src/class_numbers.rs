//! Relative class numbers `h₂⁻`, `h₆⁻`, `h₁₀⁻` of the imaginary subfields
//! of degree 2, 6 and 10 of the `p`-th cyclotomic field.
//!
//! Each value is computed as an exact rational from generalized Bernoulli
//! numbers and then certified to be a positive integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::characters::bernoulli_from_coset_sums;
use crate::cyclotomic::CycloRational;
use crate::error::{Error, Result};
use crate::modular::ResidueSystem;

/// Every Bernoulli number `B_χ` of a system, from one sweep over `1..p`.
/// Entry `i` belongs to the character with `t = 2i + 1`.
pub fn all_bernoulli(system: &ResidueSystem) -> Vec<CycloRational> {
    let sums = system.coset_sums(|k| k as i128);
    (1..system.q())
        .step_by(2)
        .map(|t| bernoulli_from_coset_sums(&sums, system.p(), t))
        .collect()
}

pub(crate) fn certify_positive_integer(value: &BigRational, what: &str) -> Result<BigInt> {
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::Inconsistent(format!(
            "{what} = {value} is not a positive integer"
        )));
    }
    Ok(value.to_integer())
}

/// `h₂⁻ = −B_χ₂`, from the real character's Bernoulli number.
pub fn h2_from_bernoulli(b2: &CycloRational) -> Result<BigInt> {
    certify_positive_integer(&-b2.as_rational()?, "h2")
}

/// `h₆⁻ = |B_χ₂|·B_χ₆·B_χ̄₆ / 4`.
pub fn h6_from_bernoulli(b2: &CycloRational, b6: &CycloRational) -> Result<BigInt> {
    let value = b2.as_rational()?.abs() * b6.abs_squared()? / BigInt::from(4);
    certify_positive_integer(&value, "h6")
}

/// `h₁₀⁻ = h₂⁻·|B_χ₁₀|²·|B_χ₁₀³|² / 16`. The two squared moduli are
/// irrational individually; their product is rational.
pub fn h10_from_bernoulli(
    b2: &CycloRational,
    b10: &CycloRational,
    b30: &CycloRational,
) -> Result<BigInt> {
    let product = b10
        .mul_conjugate()
        .try_mul(&b30.mul_conjugate())?
        .as_rational()?;
    let value = b2.as_rational()?.abs() * product / BigInt::from(16);
    certify_positive_integer(&value, "h10")
}

fn require(p: u64, residue: u64, modulus: u64) -> Result<()> {
    if p % modulus == residue {
        Ok(())
    } else {
        Err(Error::Congruence {
            p,
            residue,
            modulus,
        })
    }
}

/// Class number of `Q(√−p)` for `p ≡ 3 (mod 4)`, `p > 3`.
pub fn h2_minus(p: u64) -> Result<BigInt> {
    require(p, 3, 4)?;
    let system = ResidueSystem::new(p, 2, None)?;
    h2_from_bernoulli(&all_bernoulli(&system)[0])
}

/// `h₆⁻` for `p ≡ 7 (mod 12)`, `p > 7`. The value does not depend on `g`.
pub fn h6_minus(p: u64) -> Result<BigInt> {
    require(p, 7, 12)?;
    let system = ResidueSystem::new(p, 6, None)?;
    let b = all_bernoulli(&system);
    h6_from_bernoulli(&b[1], &b[0])
}

/// `h₁₀⁻` for `p ≡ 11 (mod 20)`, `p > 11`.
pub fn h10_minus(p: u64) -> Result<BigInt> {
    require(p, 11, 20)?;
    let system = ResidueSystem::new(p, 10, None)?;
    let b = all_bernoulli(&system);
    h10_from_bernoulli(&b[2], &b[0], &b[1])
}

/// The relative class numbers that exist for a given prime `p ≡ 3 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassNumberRecord {
    pub p: u64,
    pub h2: BigInt,
    /// Present iff `p ≡ 7 (mod 12)` and `p > 7`.
    pub h6: Option<BigInt>,
    /// Present iff `p ≡ 11 (mod 20)` and `p > 11`.
    pub h10: Option<BigInt>,
}

impl ClassNumberRecord {
    pub fn compute(p: u64) -> Result<Self> {
        require(p, 3, 4)?;
        let mut h2 = None;
        let mut h6 = None;
        let mut h10 = None;
        if p % 12 == 7 && p > 7 {
            let b = all_bernoulli(&ResidueSystem::new(p, 6, None)?);
            h2 = Some(h2_from_bernoulli(&b[1])?);
            h6 = Some(h6_from_bernoulli(&b[1], &b[0])?);
        }
        if p % 20 == 11 && p > 11 {
            let b = all_bernoulli(&ResidueSystem::new(p, 10, None)?);
            let h2_here = h2_from_bernoulli(&b[2])?;
            if let Some(prev) = &h2 {
                if *prev != h2_here {
                    return Err(Error::Inconsistent(format!(
                        "h2({p}) differs between q = 6 and q = 10"
                    )));
                }
            }
            h2 = Some(h2_here);
            h10 = Some(h10_from_bernoulli(&b[2], &b[0], &b[1])?);
        }
        let h2 = match h2 {
            Some(h) => h,
            None => h2_minus(p)?,
        };
        debug_assert!(!h2.is_zero());
        Ok(ClassNumberRecord { p, h2, h6, h10 })
    }
}
