//! Exact arithmetic in `Q(ζ_q)` for even `q ≤ 12`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(q)−1}` with
//! rational coefficients, always reduced modulo the cyclotomic polynomial
//! `Φ_q`, so equal field elements have identical coefficient vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficients of `Φ_q`, lowest degree first, leading 1 omitted.
fn cyclotomic_tail(q: u32) -> Option<&'static [i64]> {
    match q {
        2 => Some(&[1]),             // x + 1
        4 => Some(&[1, 0]),          // x² + 1
        6 => Some(&[1, -1]),         // x² − x + 1
        8 => Some(&[1, 0, 0, 0]),    // x⁴ + 1
        10 => Some(&[1, -1, 1, -1]), // x⁴ − x³ + x² − x + 1
        12 => Some(&[1, 0, -1, 0]),  // x⁴ − x² + 1
        _ => None,
    }
}

/// Euler's totient of a supported conductor.
pub fn phi(q: u32) -> Result<usize> {
    cyclotomic_tail(q)
        .map(|t| t.len())
        .ok_or(Error::UnsupportedConductor(q))
}

trait Coeff: Clone + Zero + for<'a> std::ops::SubAssign<&'a Self> {
    fn times(&self, t: i64) -> Self;
}

impl Coeff for BigInt {
    fn times(&self, t: i64) -> Self {
        self * t
    }
}

impl Coeff for BigRational {
    fn times(&self, t: i64) -> Self {
        self * BigInt::from(t)
    }
}

/// Reduce an exponent-indexed vector in place: `out[i]` collects the
/// coefficient of `ζ^i` for `i < φ(q)`. The input holds the coefficients of
/// `ζ^0 … ζ^{len−1}` where `len` may be anything.
fn reduce_in_place<T: Coeff>(q: u32, coeffs: &mut Vec<T>) {
    let tail = cyclotomic_tail(q).expect("conductor checked by caller");
    let deg = tail.len();
    let q = q as usize;
    // ζ^q = 1
    if coeffs.len() > q {
        for i in q..coeffs.len() {
            let c = std::mem::replace(&mut coeffs[i], T::zero());
            if !c.is_zero() {
                let slot = &mut coeffs[i % q];
                *slot = slot.clone() + c;
            }
        }
        coeffs.truncate(q);
    }
    // ζ^top = −Σ tail[i] ζ^{top−deg+i}
    for top in (deg..coeffs.len()).rev() {
        let c = std::mem::replace(&mut coeffs[top], T::zero());
        if c.is_zero() {
            continue;
        }
        for (i, &t) in tail.iter().enumerate() {
            if t != 0 {
                coeffs[top - deg + i] -= &c.times(t);
            }
        }
    }
    coeffs.resize(deg, T::zero());
}

/// An exact element of the `q`-th cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloRational {
    q: u32,
    coeffs: Vec<BigRational>,
}

impl CycloRational {
    pub fn zero(q: u32) -> Result<Self> {
        Ok(CycloRational {
            q,
            coeffs: vec![BigRational::zero(); phi(q)?],
        })
    }

    pub fn one(q: u32) -> Result<Self> {
        Self::from_rational(q, BigRational::one())
    }

    pub fn from_rational(q: u32, r: BigRational) -> Result<Self> {
        let mut z = Self::zero(q)?;
        z.coeffs[0] = r;
        Ok(z)
    }

    pub fn from_integer(q: u32, n: i64) -> Result<Self> {
        Self::from_rational(q, BigRational::from_integer(n.into()))
    }

    /// `ζ_q^e`, with `e` taken mod `q`.
    pub fn root_of_unity(q: u32, e: i64) -> Result<Self> {
        let mut sums = vec![0i128; q as usize];
        sums[e.rem_euclid(q as i64) as usize] = 1;
        Self::from_exponent_sums(q, &sums, &BigInt::one())
    }

    /// `(1/den)·Σ_e sums[e]·ζ^e`, reduced. `sums` may have any length; the
    /// exponent of `sums[e]` is `e`.
    ///
    /// Reduction happens on integers, so this is the cheap way to turn a
    /// per-coset accumulator into a field element.
    pub fn from_exponent_sums(q: u32, sums: &[i128], den: &BigInt) -> Result<Self> {
        phi(q)?;
        let mut ints: Vec<BigInt> = sums.iter().map(|&s| BigInt::from(s)).collect();
        if ints.is_empty() {
            ints.push(BigInt::zero());
        }
        reduce_in_place(q, &mut ints);
        let coeffs = ints
            .into_iter()
            .map(|c| BigRational::new(c, den.clone()))
            .collect();
        Ok(CycloRational { q, coeffs })
    }

    /// Builds from power-basis coefficients of any length (reduced here).
    pub fn from_coeffs(q: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        phi(q)?;
        let mut coeffs = coeffs;
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        reduce_in_place(q, &mut coeffs);
        Ok(CycloRational { q, coeffs })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Reduced power-basis coefficients; length `φ(q)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The constant coefficient, provided every other coefficient vanishes.
    pub fn as_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.q, other.q))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloRational { q: self.q, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloRational { q: self.q, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_in_place(self.q, &mut prod);
        Ok(CycloRational {
            q: self.q,
            coeffs: prod,
        })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloRational {
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Image under `ζ ↦ ζ^a`; `a` must be coprime to `q`.
    pub fn galois(&self, a: i64) -> Self {
        let q = self.q as i64;
        debug_assert_eq!(num_integer::gcd(a.rem_euclid(q), q), 1);
        let mut spread = vec![BigRational::zero(); self.q as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                spread[(a * i as i64).rem_euclid(q) as usize] += c;
            }
        }
        reduce_in_place(self.q, &mut spread);
        CycloRational {
            q: self.q,
            coeffs: spread,
        }
    }

    /// Complex conjugation, `ζ ↦ ζ^{q−1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// `z·z̄` as a field element. Lies in the maximal real subfield, which is
    /// `Q` only for `q ∈ {2, 4, 6}`.
    pub fn mul_conjugate(&self) -> Self {
        self.try_mul(&self.conjugate()).expect("same conductor")
    }

    /// `|z|² = z·z̄`, which must be rational.
    pub fn abs_squared(&self) -> Result<BigRational> {
        let r = self.mul_conjugate().as_rational()?;
        if r.is_negative() {
            return Err(Error::Inconsistent(format!("|z|² = {r} is negative")));
        }
        Ok(r)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// polynomials: finds `u` with `u·z ≡ 1 (mod Φ_q)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Inconsistent("inverse of zero".into()));
        }
        let tail = cyclotomic_tail(self.q).expect("constructed with a supported q");
        let mut modulus: Vec<BigRational> = tail
            .iter()
            .map(|&t| BigRational::from_integer(t.into()))
            .collect();
        modulus.push(BigRational::one());
        let (g, u) = poly::ext_gcd_left(&self.coeffs, &modulus);
        // Φ_q is irreducible, so the gcd is a nonzero constant.
        if g.len() != 1 || g[0].is_zero() {
            return Err(Error::Inconsistent("non-constant gcd with Φ_q".into()));
        }
        let inv = g[0].recip();
        let u: Vec<BigRational> = u.into_iter().map(|c| c * &inv).collect();
        Self::from_coeffs(self.q, u)
    }

    /// Evaluation at `ζ = exp(2πi/q)`, as `(re, im)` floats. For numeric
    /// cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let w = 2.0 * std::f64::consts::PI / self.q as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (i, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let a = w * i as f64;
                (re + c * a.cos(), im + c * a.sin())
            })
    }
}

mod poly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(mut a: Vec<BigRational>) -> Vec<BigRational> {
        while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        if a.is_empty() {
            a.push(BigRational::zero());
        }
        a
    }

    fn is_zero(a: &[BigRational]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (vec![BigRational::zero()], r);
        }
        let mut quot = vec![BigRational::zero(); r.len() - db];
        while !is_zero(&r) && r.len() > db {
            let shift = r.len() - 1 - db;
            let c = r[r.len() - 1].clone() / &lead;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            quot[shift] = c;
            r = trim(r);
            if r.len() == 1 && db == 0 {
                break;
            }
        }
        (trim(quot), r)
    }

    /// Returns `(g, u)` with `u·a ≡ g (mod m)` and `g = gcd(a, m)`.
    pub(super) fn ext_gcd_left(
        a: &[BigRational],
        m: &[BigRational],
    ) -> (Vec<BigRational>, Vec<BigRational>) {
        let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
        let (mut s0, mut s1) = (
            vec![BigRational::zero()],
            vec![BigRational::from_integer(1.into())],
        );
        while !is_zero(&r1) {
            let (quot, rem) = divmod(&r0, &r1);
            let s2 = sub(&s0, &mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        (r0, s0)
    }
}

impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    if i == 1 {
                        write!(f, "ζ{}", self.q)?;
                    } else {
                        write!(f, "ζ{}^{i}", self.q)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloRational[q={}]({})", self.q, self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&CycloRational> for &CycloRational {
            type Output = CycloRational;
            /// Panics on conductor mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &CycloRational) -> CycloRational {
                self.$inner(rhs).expect("conductor mismatch")
            }
        }
        impl $tr for CycloRational {
            type Output = CycloRational;
            fn $method(self, rhs: CycloRational) -> CycloRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        CycloRational {
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        -&self
    }
}
