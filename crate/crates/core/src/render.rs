//! Text renderings of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// `num/den`, or just `num` for integers.
pub fn rational(x: &BigRational) -> String {
    x.to_string()
}

/// Parses `num/den` or `num`.
pub fn parse_rational(field: &str, value: &str) -> Result<BigRational> {
    value.parse::<BigRational>().map_err(|_| Error::Parse {
        field: field.into(),
        value: value.into(),
    })
}

fn ten_pow(e: u32) -> BigInt {
    Pow::pow(BigInt::from(10u32), e)
}

/// `x · 10^e` for any integer `e`.
fn shift(x: &BigRational, e: i64) -> BigRational {
    let f = BigRational::from_integer(ten_pow(e.unsigned_abs() as u32));
    if e >= 0 {
        x * f
    } else {
        x / f
    }
}

/// Nearest integer, ties to even.
fn round_half_even(x: &BigRational) -> BigInt {
    let floor = x.floor();
    let frac = x - &floor;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let f = floor.to_integer();
    if frac > half || (frac == half && f.is_odd()) {
        f + 1
    } else {
        f
    }
}

/// Decimal rendering with `sig` significant digits, rounding half to even.
/// Magnitudes in `[1e-4, 10^sig)` print positionally (`0.250000`), others in
/// scientific form (`3.90625e-5`-style, always with `sig` digits).
pub fn decimal(x: &BigRational, sig: u32) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return format!("{:.*}", sig as usize - 1, 0.0);
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let a = x.abs();
    // exponent estimate from digit counts, then corrected
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while shift(&a, -e) >= BigRational::from_integer(10.into()) {
        e += 1;
    }
    while shift(&a, -e) < BigRational::one() {
        e -= 1;
    }
    let mut m = round_half_even(&shift(&a, sig as i64 - 1 - e));
    if m == ten_pow(sig) {
        m = ten_pow(sig - 1);
        e += 1;
    }
    let digits = m.to_string();
    if (-4..sig as i64).contains(&e) {
        if e >= 0 {
            let (int, frac) = digits.split_at(e as usize + 1);
            if frac.is_empty() {
                format!("{sign}{int}")
            } else {
                format!("{sign}{int}.{frac}")
            }
        } else {
            format!("{sign}0.{}{digits}", "0".repeat((-e - 1) as usize))
        }
    } else {
        let (lead, rest) = digits.split_at(1);
        let mantissa = if rest.is_empty() {
            lead.to_string()
        } else {
            format!("{lead}.{rest}")
        };
        format!("{sign}{mantissa}e{e}")
    }
}

/// Six significant digits, the default for human-readable output.
pub fn decimal6(x: &BigRational) -> String {
    decimal(x, 6)
}
