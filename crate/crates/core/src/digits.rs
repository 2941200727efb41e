//! Periods of base-`b` expansions of `m/p` and the digit-sum identities
//! they satisfy.
//!
//! The `k`-th digit of `m/p` is `θ_b(m·b^{k−1} mod p)`, so digits are
//! generated with one modular multiplication each. Plain long division is
//! kept alongside as an independent derivation.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::class_numbers::{all_bernoulli, h2_from_bernoulli};
use crate::error::{Error, Result};
use crate::modular::{legendre, mul_mod, order_mod, pow_mod, theta_unchecked, ResidueSystem};

/// The repeating block of `numerator/p` in base `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitPeriod {
    pub p: u64,
    pub b: u64,
    pub numerator: u64,
    /// `a_1, …, a_d` with `d` the order of `b` mod `p`.
    pub digits: Vec<u64>,
}

impl DigitPeriod {
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// `a_1 + a_3 + …` (one-based odd positions).
    pub fn odd_position_sum(&self) -> u64 {
        self.digits.iter().step_by(2).sum()
    }

    /// `a_2 + a_4 + …`.
    pub fn even_position_sum(&self) -> u64 {
        self.digits.iter().skip(1).step_by(2).sum()
    }
}

fn check_base(p: u64, b: u64) -> Result<()> {
    if b < 2 {
        return Err(Error::BaseTooSmall(b));
    }
    if b % p == 0 {
        return Err(Error::Divisible {
            p,
            value: b as i128,
        });
    }
    Ok(())
}

fn check_numerator(p: u64, numerator: u64) -> Result<()> {
    if numerator == 0 || numerator >= p {
        return Err(Error::OutOfRange(format!(
            "numerator {numerator} for p = {p}"
        )));
    }
    Ok(())
}

/// Period of `numerator/p` in base `b`, from `a_k = θ_b(numerator·b^{k−1})`.
pub fn digit_period(p: u64, b: u64, numerator: u64) -> Result<DigitPeriod> {
    check_base(p, b)?;
    check_numerator(p, numerator)?;
    let d = order_mod(b as i128, p)?;
    let bm = b % p;
    let mut x = numerator;
    let digits = (0..d)
        .map(|_| {
            let a = theta_unchecked(b, x, p);
            x = mul_mod(x, bm, p);
            a
        })
        .collect();
    Ok(DigitPeriod {
        p,
        b,
        numerator,
        digits,
    })
}

/// The first `count` base-`b` digits of `numerator/p` by schoolbook long
/// division.
pub fn long_division(p: u64, b: u64, numerator: u64, count: usize) -> Result<Vec<u64>> {
    check_base(p, b)?;
    check_numerator(p, numerator)?;
    let mut r = numerator as u128;
    Ok((0..count)
        .map(|_| {
            r *= b as u128;
            let digit = r / p as u128;
            r %= p as u128;
            digit as u64
        })
        .collect())
}

fn quadratic_system(p: u64, g: Option<u64>) -> Result<ResidueSystem> {
    ResidueSystem::new(p, 2, g)
}

fn h2_of(system: &ResidueSystem) -> Result<BigInt> {
    h2_from_bernoulli(&all_bernoulli(system)[0])
}

/// Even-minus-odd digit sums of the period of `1/p` for a primitive root `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingDigitCheck {
    pub even_sum: u64,
    pub odd_sum: u64,
    /// `(b+1)·h₂⁻`.
    pub predicted: BigInt,
}

/// `(a_2 + a_4 + …) − (a_1 + a_3 + …) = (b+1)·h₂⁻` for `p ≡ 3 (mod 4)` and
/// `b` a primitive root mod `p`.
pub fn alternating_digit_check(p: u64, b: u64) -> Result<AlternatingDigitCheck> {
    let system = quadratic_system(p, None)?;
    check_base(p, b)?;
    if !crate::modular::is_primitive_root(b, p) {
        return Err(Error::NotPrimitiveRoot { p, g: b });
    }
    let period = digit_period(p, b, 1)?;
    let (even_sum, odd_sum) = (period.even_position_sum(), period.odd_position_sum());
    let predicted = BigInt::from(b + 1) * h2_of(&system)?;
    if BigInt::from(even_sum) - BigInt::from(odd_sum) != predicted {
        return Err(Error::Inconsistent(format!(
            "p = {p}, b = {b}: {even_sum} − {odd_sum} ≠ {predicted}"
        )));
    }
    Ok(AlternatingDigitCheck {
        even_sum,
        odd_sum,
        predicted,
    })
}

/// Both sides of a digit-sum identity, plus the per-numerator sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitSumCheck {
    pub numerators: Vec<u64>,
    pub partial_sums: Vec<u64>,
    pub lhs: u64,
    pub rhs: BigRational,
}

fn digit_sum_identity(
    system: &ResidueSystem,
    b: u64,
    count: u64,
    partial: impl Fn(&DigitPeriod) -> u64,
    rhs: BigRational,
) -> Result<DigitSumCheck> {
    let p = system.p();
    let g2 = mul_mod(system.g(), system.g(), p);
    let numerators: Vec<u64> = (0..count).map(|j| pow_mod(g2, j, p)).collect();
    let partial_sums = numerators
        .iter()
        .map(|&m| digit_period(p, b, m).map(|d| partial(&d)))
        .collect::<Result<Vec<u64>>>()?;
    let lhs: u64 = partial_sums.iter().sum();
    if BigRational::from_integer(lhs.into()) != rhs {
        return Err(Error::Inconsistent(format!(
            "p = {p}, b = {b}: digit sum {lhs} ≠ {rhs}"
        )));
    }
    Ok(DigitSumCheck {
        numerators,
        partial_sums,
        lhs,
        rhs,
    })
}

fn half_expected(p: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(b - 1) * BigInt::from(p - 1), BigInt::from(4))
}

/// For a quadratic nonresidue `b` of order `d`: the odd-position digit sums of
/// `b_j/p`, `b_j = g^{2j} mod p`, `j < (p−1)/d`, add up to
/// `(b−1)(p−1)/4 − (b+1)·h₂⁻/2`.
pub fn nonresidue_digit_sums(system: &ResidueSystem, b: u64) -> Result<DigitSumCheck> {
    let p = system.p();
    if system.q() != 2 {
        return Err(Error::Precondition(format!(
            "digit-sum identities need q = 2, got q = {}",
            system.q()
        )));
    }
    check_base(p, b)?;
    if legendre(b as i128, p) != -1 {
        return Err(Error::Precondition(format!(
            "b = {b} is a quadratic residue mod {p}; the full-digit-sum identity applies instead"
        )));
    }
    let d = order_mod(b as i128, p)?;
    let h = h2_of(system)?;
    let rhs = half_expected(p, b) - BigRational::new(BigInt::from(b + 1) * h, BigInt::from(2));
    digit_sum_identity(system, b, (p - 1) / d, DigitPeriod::odd_position_sum, rhs)
}

/// For a quadratic residue `b` of order `d`: the full digit sums of `b_j/p`,
/// `j < (p−1)/(2d)`, add up to `(b−1)(p−1)/4 − (b−1)·h₂⁻/2`.
pub fn residue_digit_sums(system: &ResidueSystem, b: u64) -> Result<DigitSumCheck> {
    let p = system.p();
    if system.q() != 2 {
        return Err(Error::Precondition(format!(
            "digit-sum identities need q = 2, got q = {}",
            system.q()
        )));
    }
    check_base(p, b)?;
    if legendre(b as i128, p) != 1 {
        return Err(Error::Precondition(format!(
            "b = {b} is a quadratic nonresidue mod {p}; the odd-position identity applies instead"
        )));
    }
    let d = order_mod(b as i128, p)?;
    let h = h2_of(system)?;
    let rhs = half_expected(p, b) - BigRational::new(BigInt::from(b - 1) * h, BigInt::from(2));
    digit_sum_identity(system, b, (p - 1) / (2 * d), DigitPeriod::digit_sum, rhs)
}

/// Low-versus-high digit counts in the period of `1/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitSplitCheck {
    /// `#{k : a_k ≤ b/2 − 1}`.
    pub low: u64,
    /// `#{k : a_k ≥ b/2}`.
    pub high: u64,
    /// `(2 − χ₂(2))·h₂⁻`.
    pub predicted: BigInt,
}

/// For even `b` of order `(p−1)/2`: `low − high = (2 − (2/p))·h₂⁻`,
/// independent of `b`.
pub fn digit_split_counts(p: u64, b: u64) -> Result<DigitSplitCheck> {
    let system = quadratic_system(p, None)?;
    check_base(p, b)?;
    if b % 2 != 0 {
        return Err(Error::Precondition(format!("b = {b} must be even")));
    }
    let d = order_mod(b as i128, p)?;
    if d != (p - 1) / 2 {
        return Err(Error::Precondition(format!(
            "b = {b} has order {d} mod {p}; order (p−1)/2 = {} required",
            (p - 1) / 2
        )));
    }
    let period = digit_period(p, b, 1)?;
    let low = period.digits.iter().filter(|&&a| a < b / 2).count() as u64;
    let high = period.len() as u64 - low;
    let predicted = BigInt::from(2 - legendre(2, p) as i64) * h2_of(&system)?;
    if BigInt::from(low) - BigInt::from(high) != predicted {
        return Err(Error::Inconsistent(format!(
            "p = {p}, b = {b}: {low} − {high} ≠ {predicted}"
        )));
    }
    Ok(DigitSplitCheck {
        low,
        high,
        predicted,
    })
}
