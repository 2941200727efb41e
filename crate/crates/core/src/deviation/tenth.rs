//! `q = 10`, `b = p + 1`: five-entry deviation vectors.
//!
//! Here `c_χ = p` for every odd `χ`, `ΣT = −p·h₂⁻/2` and
//!
//! ```text
//! ‖T‖² = p²/5 · (B_χ₂²/4 + (|B_χ₁₀|² + |B_χ₁₀³|²)/2)
//!      ≥ p²/5 · ((h₂⁻)²/4 + 4·√(h₁₀⁻/h₂⁻)).
//! ```
//!
//! The bound gives `‖T‖² ≥ (ΣT)²`, hence a sign pattern other than the main
//! type, once `16·h₁₀⁻ ≥ (h₂⁻)⁵`. The converse heuristic predicts the main
//! type when `4096·h₁₀⁻ < (h₂⁻)⁵`; it is not a theorem.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed};

use super::{
    criterion_from_norm, deviation_vector, rat, Criterion, CriterionVerdict, DeviationVector,
    SignVector,
};
use crate::class_numbers::{all_bernoulli, h10_from_bernoulli, h2_from_bernoulli};
use crate::error::{Error, Result};
use crate::modular::{check_prime_and_conductor, ResidueSystem};

/// Decimal digits kept by the rational under-approximation of `√(h₁₀⁻/h₂⁻)`.
const SQRT_DIGITS: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TenthReport {
    pub p: u64,
    pub g: u64,
    pub deviation: DeviationVector,
    pub h2: BigInt,
    pub h10: BigInt,
    /// `16·h₁₀⁻ ≥ (h₂⁻)⁵`.
    pub strict_b_applies: bool,
    /// `4096·h₁₀⁻ < (h₂⁻)⁵`.
    pub probabilistic_main: bool,
    pub actual_sign: SignVector,
    pub is_main_type: bool,
    pub norm_sq: BigRational,
    /// `p²/5·((h₂⁻)²/4 + 4s)` with `s ≤ √(h₁₀⁻/h₂⁻)` rational, so the value
    /// never exceeds the exact bound.
    pub lower_bound: BigRational,
    /// The strongest criterion implied by `‖T‖²` and `ΣT`.
    pub verdict: CriterionVerdict,
}

impl TenthReport {
    /// The heuristic predicted the main type and was wrong.
    pub fn is_false_prediction(&self) -> bool {
        self.probabilistic_main && !self.is_main_type
    }
}

/// Largest `s = m/10^d` with `s² ≤ r`, for `r ≥ 0`.
fn sqrt_floor(r: &BigRational, digits: u32) -> BigRational {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r * rat(&scale * &scale)).floor().to_integer();
    BigRational::new(scaled.sqrt(), scale)
}

/// Runs the tenth-power analysis for `p ≡ 11 (mod 20)`, `p > 11`, with the
/// given primitive root or the smallest one.
pub fn classify_tenth(p: u64, g: Option<u64>) -> Result<TenthReport> {
    check_prime_and_conductor(p, 10)?;
    let system = ResidueSystem::new(p, 10, g)?;
    let bern = all_bernoulli(&system);
    let h2 = h2_from_bernoulli(&bern[2])?;
    let h10 = h10_from_bernoulli(&bern[2], &bern[0], &bern[1])?;

    let deviation = deviation_vector(&system, p + 1)?;
    let norm_sq = deviation.norm_squared();
    let total = deviation.sum();
    let pr = rat(p);
    let h2r = rat(h2.clone());

    if total != -(&pr * &h2r) / rat(2) {
        return Err(Error::Inconsistent(format!("p = {p}: ΣT = {total}")));
    }
    let b2 = bern[2].as_rational()?;
    let moduli = bern[0]
        .mul_conjugate()
        .try_add(&bern[1].mul_conjugate())?
        .as_rational()?;
    let by_bernoulli = &pr * &pr / rat(5) * (&b2 * &b2 / rat(4) + moduli / rat(2));
    if norm_sq != by_bernoulli {
        return Err(Error::Inconsistent(format!(
            "p = {p}: ‖T‖² = {norm_sq}, Bernoulli form gives {by_bernoulli}"
        )));
    }

    // exact form of the lower bound: X ≥ 0 and X² ≥ 16·h₁₀/h₂
    let ratio = BigRational::new(h10.clone(), h2.clone());
    let x = rat(5) * &norm_sq / (&pr * &pr) - &h2r * &h2r / rat(4);
    if x.is_negative() || &x * &x < rat(16) * &ratio {
        return Err(Error::Inconsistent(format!(
            "p = {p}: ‖T‖² below the arithmetic-geometric bound"
        )));
    }
    let lower_bound =
        &pr * &pr / rat(5) * (&h2r * &h2r / rat(4) + rat(4) * sqrt_floor(&ratio, SQRT_DIGITS));
    debug_assert!(lower_bound <= norm_sq);

    let h2_5 = Pow::pow(&h2, 5u32);
    let strict_b_applies = BigInt::from(16) * &h10 >= h2_5;
    let probabilistic_main = BigInt::from(4096) * &h10 < h2_5;

    let applied = criterion_from_norm(5, &norm_sq, &total);
    if strict_b_applies && applied != Criterion::B {
        return Err(Error::Inconsistent(format!(
            "p = {p}: strict criterion holds but ‖T‖² < (ΣT)²"
        )));
    }
    let p_sq = &pr * &pr;
    let actual_sign = deviation.sign();
    let verdict = CriterionVerdict::new(
        applied,
        actual_sign.clone(),
        SignVector::main_type(5),
        vec![p_sq.clone(), p_sq.clone()],
        p_sq,
    );
    Ok(TenthReport {
        p,
        g: system.g(),
        h2,
        h10,
        strict_b_applies,
        probabilistic_main,
        is_main_type: verdict.is_main_type,
        actual_sign,
        norm_sq,
        lower_bound,
        verdict,
        deviation,
    })
}
