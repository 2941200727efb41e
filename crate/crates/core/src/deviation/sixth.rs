//! `q = 6`: predicting the sign pattern of a three-entry deviation vector
//! from `h₂⁻` and `h₆⁻`.
//!
//! With `‖T‖² = (c₂²·h₂²/4 + 2|c₆|²·h₆/h₂)/3` and `ΣT = −c₂·h₂/2`:
//!
//! * `|c₆|²h₆ ≥ c₂²h₂³/4`  ⇒ `‖T‖² ≥ (ΣT)²`, the main type is impossible (B);
//! * `|c₆|²h₆ < c₂²h₂³/16` ⇒ `‖T‖² < (ΣT)²/2`, the sign is the main type (C2);
//! * otherwise at least two positions agree with the main type (C1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{deviation_vector, rat, Criterion, CriterionVerdict, DeviationVector, SignVector};
use crate::characters::{odd_characters, OddCharacter};
use crate::class_numbers::{all_bernoulli, h2_from_bernoulli, h6_from_bernoulli};
use crate::cyclotomic::CycloRational;
use crate::digits::digit_period;
use crate::error::{Error, Result};
use crate::modular::{
    check_prime_and_conductor, is_primitive_root, order_mod, pow_mod, smallest_primitive_root,
    theta_unchecked, ResidueSystem,
};

/// Everything computed for one `(p, b, g)` in the sixth-power setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixthReport {
    pub p: u64,
    pub g: u64,
    /// `None` for the interval statistic.
    pub b: Option<u64>,
    pub deviation: DeviationVector,
    pub h2: BigInt,
    pub h6: BigInt,
    pub norm_sq: BigRational,
    pub verdict: CriterionVerdict,
}

impl SixthReport {
    /// `h₆⁻/(h₂⁻)³`.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.h6.clone(), &self.h2 * &self.h2 * &self.h2)
    }
}

/// Corollary thresholds on exact rationals. Ties follow the inequality
/// directions literally: `≥` for B, `<` for C1/C2.
fn sixth_criterion(
    c6_sq: &BigRational,
    c2_sq: &BigRational,
    h2: &BigInt,
    h6: &BigInt,
) -> Criterion {
    let lhs = c6_sq * rat(h6.clone());
    let rhs = c2_sq * rat(h2 * h2 * h2);
    if lhs >= &rhs / rat(4) {
        Criterion::B
    } else if lhs < &rhs / rat(16) {
        Criterion::C2
    } else {
        Criterion::C1
    }
}

/// Shared path for the plain and the interval statistic: `c_of(χ)` supplies
/// the factor with `⟨T, χ⟩ = c_χ·B_χ̄/2`.
fn analyze(
    system: &ResidueSystem,
    deviation: DeviationVector,
    c_of: impl Fn(&OddCharacter<'_>) -> Result<CycloRational>,
) -> Result<SixthReport> {
    let p = system.p();
    let chars = odd_characters(system);
    let bern = all_bernoulli(system);
    let h2 = h2_from_bernoulli(&bern[1])?;
    let h6 = h6_from_bernoulli(&bern[1], &bern[0])?;
    let c6_sq = c_of(&chars[0])?.abs_squared()?;
    let c2 = c_of(&chars[1])?.as_rational()?;
    let c2_sq = &c2 * &c2;
    let h2r = rat(h2.clone());

    let total = deviation.sum();
    let predicted_total = -(&c2 * &h2r) / rat(2);
    if total != predicted_total {
        return Err(Error::Inconsistent(format!(
            "p = {p}: ΣT = {total}, expected {predicted_total}"
        )));
    }
    let norm_sq = deviation.norm_squared();
    let predicted_norm =
        (&c2_sq * &h2r * &h2r / rat(4) + rat(2) * &c6_sq * rat(h6.clone()) / &h2r) / rat(3);
    if norm_sq != predicted_norm {
        return Err(Error::Inconsistent(format!(
            "p = {p}: ‖T‖² = {norm_sq}, expected {predicted_norm}"
        )));
    }

    let applied = sixth_criterion(&c6_sq, &c2_sq, &h2, &h6);
    let by_norm = super::criterion_from_norm(3, &norm_sq, &total);
    if !total.is_zero() && applied != by_norm {
        return Err(Error::Inconsistent(format!(
            "p = {p}: class-number criterion {applied} disagrees with norm criterion {by_norm}"
        )));
    }
    let main = SignVector::of(&vec![total.clone(); 3]);
    let verdict = CriterionVerdict::new(applied, deviation.sign(), main, vec![c6_sq], c2_sq);
    Ok(SixthReport {
        p,
        g: system.g(),
        b: deviation.b,
        deviation,
        h2,
        h6,
        norm_sq,
        verdict,
    })
}

fn plain_constant(b: u64) -> impl Fn(&OddCharacter<'_>) -> Result<CycloRational> {
    move |chi| CycloRational::from_integer(6, b as i64)?.try_sub(&chi.eval(b as i128)?)
}

fn sixth_system(p: u64, g: Option<u64>) -> Result<ResidueSystem> {
    check_prime_and_conductor(p, 6)?;
    ResidueSystem::new(p, 6, g)
}

/// Applies the sixth-power criteria to the `b`-deviation vector for `p ≡ 7
/// (mod 12)`, `p > 7`, with classes ordered by `g` (smallest primitive root
/// if `None`).
pub fn classify_sixth(p: u64, b: u64, g: Option<u64>) -> Result<SixthReport> {
    let system = sixth_system(p, g)?;
    let deviation = deviation_vector(&system, b)?;
    analyze(&system, deviation, plain_constant(b))
}

/// Same criteria for `|C_j∩[0,p/6]| − |C_j∩[5p/6,p]| = T⁽²⁾ + T⁽³⁾ − T⁽⁶⁾`,
/// where `c_χ` becomes `−1 − χ(2) − χ(3) + χ(6)`. The main type is
/// `(−1,−1,−1)` when `c_χ₂ = 2` and `(1,1,1)` when `c_χ₂ = −2`.
pub fn classify_sixth_interval(p: u64, g: Option<u64>) -> Result<SixthReport> {
    let system = sixth_system(p, g)?;
    let f = |k: u64| {
        1 + theta_unchecked(2, k, p) as i128 + theta_unchecked(3, k, p) as i128
            - theta_unchecked(6, k, p) as i128
    };
    let all = system.coset_sums(f);
    let sums: Vec<i128> = (0..3).map(|j| all[2 * j]).collect();
    // the expected value 1 + E₂ + E₃ − E₆ vanishes
    let deviation = DeviationVector::from_sums(&system, None, sums, BigRational::zero());
    analyze(&system, deviation, |chi| {
        let mut c = CycloRational::from_integer(6, -1)?;
        c = c
            .try_sub(&chi.eval(2)?)?
            .try_sub(&chi.eval(3)?)?
            .try_add(&chi.eval(6)?)?;
        Ok(c)
    })
}

/// A primitive root `g` with `g² ≡ b (mod p)`, for `b` of order `(p−1)/2` and
/// `p ≡ 3 (mod 4)`. Then `g^{2(j−1)}H = b^{j−1}H`.
fn root_squaring_to(p: u64, b: u64) -> Result<u64> {
    let g0 = smallest_primitive_root(p)?;
    let target = b % p;
    let mut x = 1u64;
    let mut e = 0u64;
    while x != target {
        x = x * g0 % p;
        e += 1;
    }
    let half = (p - 1) / 2;
    [e / 2, e / 2 + half]
        .into_iter()
        .map(|m| pow_mod(g0, m, p))
        .find(|&g| is_primitive_root(g, p) && g * g % p == target)
        .ok_or_else(|| Error::Inconsistent(format!("no primitive square root of {b} mod {p}")))
}

/// The criteria for `b = 10` when 10 has order `(p−1)/2`, with classes
/// `C_j = 10^{j−1}H` so that `S_j = Σ_k a_{j+3k}` over the period of `1/p`.
pub fn classify_digit_sixth(p: u64) -> Result<SixthReport> {
    const B: u64 = 10;
    check_prime_and_conductor(p, 6)?;
    let d = order_mod(B as i128, p)?;
    if d != (p - 1) / 2 {
        return Err(Error::Precondition(format!(
            "10 has order {d} mod {p}; order (p−1)/2 = {} required",
            (p - 1) / 2
        )));
    }
    let g = root_squaring_to(p, B)?;
    let report = classify_sixth(p, B, Some(g))?;
    let period = digit_period(p, B, 1)?;
    let digit_sums: Vec<i128> = (0..3)
        .map(|j| {
            period
                .digits
                .iter()
                .skip(j)
                .step_by(3)
                .map(|&a| a as i128)
                .sum()
        })
        .collect();
    if digit_sums != report.deviation.sums {
        return Err(Error::Inconsistent(format!(
            "p = {p}: digit sums {digit_sums:?} differ from class sums {:?}",
            report.deviation.sums
        )));
    }
    Ok(report)
}
