//! Coset sums `S_j`, the `b`-deviation vector `T`, sign vectors, and the
//! norm criteria that predict the sign pattern of `T` from class numbers.
//!
//! The selected classes are `C_j = g^{2(j−1)}H` for `j = 1..n`; each is a
//! coset of `H` inside the squares, and `−C_j` is the remaining class of its
//! pair. `T_j = S_j − E_b` with `S_j = Σ_{k∈C_j} θ_b(k)` and
//! `E_b = (b−1)(p−1)/(2q)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cyclotomic::CycloRational;
use crate::error::{Error, Result};
use crate::modular::{theta_unchecked, ResidueSystem};

pub mod quadratic;
pub mod sixth;
pub mod tenth;

pub use quadratic::{class_sum_difference, quadratic_interval_counts, QuadraticIntervalCounts};
pub use sixth::{classify_digit_sixth, classify_sixth, classify_sixth_interval, SixthReport};
pub use tenth::{classify_tenth, TenthReport};

pub(crate) fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// The classes `C_1, …, C_n` as ascending sets of representatives.
pub fn class_partition(system: &ResidueSystem) -> Vec<Vec<u64>> {
    (0..system.n())
        .map(|j| system.coset(2 * j as u32))
        .collect()
}

/// `E_b = (b−1)(p−1)/(2q)`.
pub fn expected_value(p: u64, q: u32, b: u64) -> BigRational {
    BigRational::new(
        BigInt::from(b - 1) * BigInt::from(p - 1),
        BigInt::from(2 * q as u64),
    )
}

/// A deviation vector `(T_1, …, T_n)` together with the sums it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeviationVector {
    pub p: u64,
    pub q: u32,
    pub g: u64,
    /// The base for a plain `b`-deviation vector; `None` for a linear
    /// combination of several of them (the interval statistic).
    pub b: Option<u64>,
    /// `S_j`.
    pub sums: Vec<i128>,
    /// `T_j = S_j − E`.
    pub entries: Vec<BigRational>,
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

/// Per-coset `Σ θ_b(k)` over all `q` cosets `g^r H`.
fn theta_coset_sums(system: &ResidueSystem, b: u64) -> Vec<i128> {
    let p = system.p();
    system.coset_sums(|k| theta_unchecked(b, k, p) as i128)
}

/// The `b`-deviation vector of the selected classes.
pub fn deviation_vector(system: &ResidueSystem, b: u64) -> Result<DeviationVector> {
    check_base(system.p(), b)?;
    let all = theta_coset_sums(system, b);
    let sums: Vec<i128> = (0..system.n()).map(|j| all[2 * j]).collect();
    Ok(DeviationVector::from_sums(
        system,
        Some(b),
        sums,
        expected_value(system.p(), system.q(), b),
    ))
}

/// `T_C` for all `q` classes `C = g^r H`, `r = 0..q`, in that order.
pub fn deviation_all_classes(system: &ResidueSystem, b: u64) -> Result<Vec<BigRational>> {
    check_base(system.p(), b)?;
    let e = expected_value(system.p(), system.q(), b);
    Ok(theta_coset_sums(system, b)
        .into_iter()
        .map(|s| rat(s) - &e)
        .collect())
}

impl DeviationVector {
    pub fn from_sums(
        system: &ResidueSystem,
        b: Option<u64>,
        sums: Vec<i128>,
        expected: BigRational,
    ) -> Self {
        let entries = sums.iter().map(|&s| rat(s) - &expected).collect();
        DeviationVector {
            p: system.p(),
            q: system.q(),
            g: system.g(),
            b,
            sums,
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn sum(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// `‖T‖² = Σ T_j²`.
    pub fn norm_squared(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, t| acc + t * t)
    }

    pub fn sign(&self) -> SignVector {
        SignVector::of(&self.entries)
    }

    /// Entries as elements of `Q(ζ_q)`, for scalar products with characters.
    pub fn as_cyclo(&self) -> Vec<CycloRational> {
        self.entries
            .iter()
            .map(|t| CycloRational::from_rational(self.q, t.clone()).expect("supported conductor"))
            .collect()
    }

    /// `T_j / ΣT`; the result sums to exactly 1. Errors when `ΣT = 0`.
    pub fn normalized(&self) -> Result<Vec<BigRational>> {
        let s = self.sum();
        if s.is_zero() {
            return Err(Error::Inconsistent("deviation vector sums to zero".into()));
        }
        Ok(self.entries.iter().map(|t| t / &s).collect())
    }
}

/// Componentwise signs in `{−1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn of(entries: &[BigRational]) -> Self {
        SignVector(
            entries
                .iter()
                .map(|x| {
                    if x.is_positive() {
                        1
                    } else if x.is_negative() {
                        -1
                    } else {
                        0
                    }
                })
                .collect(),
        )
    }

    pub fn constant(n: usize, s: i8) -> Self {
        SignVector(vec![s; n])
    }

    /// The all-(−1) pattern.
    pub fn main_type(n: usize) -> Self {
        Self::constant(n, -1)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_zero(&self) -> bool {
        self.0.contains(&0)
    }

    /// Positions where both vectors carry the same sign. A zero never
    /// agrees with a nonzero main type.
    pub fn agreement(&self, other: &SignVector) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a == b).count()
    }

    /// `-1|-1|1`, the CSV rendering.
    pub fn to_csv_field(&self) -> String {
        self.0
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn parse_csv_field(field: &str) -> Result<Self> {
        let bad = || Error::Parse {
            field: "sign".into(),
            value: field.into(),
        };
        if field.is_empty() {
            return Ok(SignVector(Vec::new()));
        }
        field
            .split('|')
            .map(|s| match s {
                "-1" => Ok(-1),
                "0" => Ok(0),
                "1" => Ok(1),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<i8>>>()
            .map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which norm criterion applies.
///
/// `Ck(k)` means `‖T‖² < (ΣT)²/k` with `k` the largest such value in
/// `1..n`, so the sign vector agrees with the main type in at least `k+1`
/// positions. `C1` and `C2` are the `k = 1, 2` cases; for `n = 3`, `C2`
/// forces the main type. `B` means `‖T‖² ≥ (ΣT)²`, which rules the main type
/// out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    B,
    C1,
    C2,
    Ck(u32),
    None,
}

impl Criterion {
    pub fn from_k(k: u32) -> Self {
        match k {
            1 => Criterion::C1,
            2 => Criterion::C2,
            k => Criterion::Ck(k),
        }
    }

    /// The guaranteed number of positions agreeing with the main type.
    pub fn min_agreement(&self) -> usize {
        match self {
            Criterion::C1 => 2,
            Criterion::C2 => 3,
            Criterion::Ck(k) => *k as usize + 1,
            Criterion::B | Criterion::None => 0,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::B => write!(f, "B"),
            Criterion::C1 => write!(f, "C1"),
            Criterion::C2 => write!(f, "C2"),
            Criterion::Ck(k) => write!(f, "C{k}"),
            Criterion::None => write!(f, "NONE"),
        }
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(Criterion::B),
            "NONE" => Ok(Criterion::None),
            _ => s
                .strip_prefix('C')
                .and_then(|k| k.parse::<u32>().ok())
                .filter(|&k| k >= 1)
                .map(Criterion::from_k)
                .ok_or_else(|| Error::Parse {
                    field: "verdict".into(),
                    value: s.into(),
                }),
        }
    }
}

/// Strongest criterion implied by `‖T‖²` for a vector with `n` entries whose
/// entries sum to `total`.
pub fn criterion_from_norm(n: usize, norm_sq: &BigRational, total: &BigRational) -> Criterion {
    if n < 2 || total.is_zero() {
        return Criterion::None;
    }
    let s2 = total * total;
    if *norm_sq >= s2 {
        return Criterion::B;
    }
    let k = (1..n as u32)
        .rev()
        .find(|&k| norm_sq * BigInt::from(k) < s2)
        .expect("k = 1 holds whenever norm < total²");
    Criterion::from_k(k)
}

/// A criterion together with the sign vector it makes claims about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub applied: Criterion,
    pub sign: SignVector,
    pub main_type: SignVector,
    pub is_main_type: bool,
    /// Set when some `T_j` is exactly zero.
    pub has_zero: bool,
    /// `|c_χ|²` of the non-real characters (one entry for `n = 3`).
    pub c_sq: Vec<BigRational>,
    /// `c_χ₂²`.
    pub c2_sq: BigRational,
}

impl CriterionVerdict {
    pub fn new(
        applied: Criterion,
        sign: SignVector,
        main_type: SignVector,
        c_sq: Vec<BigRational>,
        c2_sq: BigRational,
    ) -> Self {
        CriterionVerdict {
            is_main_type: sign == main_type,
            has_zero: sign.has_zero(),
            applied,
            sign,
            main_type,
            c_sq,
            c2_sq,
        }
    }

    pub fn agreement(&self) -> usize {
        self.sign.agreement(&self.main_type)
    }

    /// Whether the computed sign vector is consistent with every claim the
    /// criteria make: at least one agreeing position always; `B` excludes the
    /// main type; `Ck` guarantees `k+1` agreeing positions.
    pub fn is_sound(&self) -> bool {
        if self.applied == Criterion::None {
            return true;
        }
        let agree = self.agreement();
        agree >= 1
            && match self.applied {
                Criterion::B => !self.is_main_type,
                other => agree >= other.min_agreement(),
            }
    }
}

/// Classifies any deviation-like vector purely from its own norm and sum.
pub fn classify_by_norm(t: &DeviationVector) -> CriterionVerdict {
    let total = t.sum();
    let applied = criterion_from_norm(t.n(), &t.norm_squared(), &total);
    let main = SignVector::of(&vec![total.clone(); t.n()]);
    CriterionVerdict::new(applied, t.sign(), main, Vec::new(), BigRational::zero())
}
