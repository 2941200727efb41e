//! Arithmetic modulo a prime: primality, primitive roots, the carry
//! function `θ_b`, multiplicative orders and the discrete-log index table.

use crate::error::{Error, Result};

/// Conductors with `n = q/2` odd. Only for these do the classes
/// `C_j = g^{2(j−1)}H`, `j = 1..n`, pick exactly one class from each pair
/// `{C, −C}`.
pub const SUPPORTED_CONDUCTORS: [u32; 3] = [2, 6, 10];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for the whole `u64` range.
///
/// Miller-Rabin with the first twelve prime bases is exact below 3.3·10²⁴.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `≤ limit`, by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The representative `(k)_p ∈ {0, …, p−1}` of `k` mod `p`.
#[inline]
pub fn rep_mod(k: i128, p: u64) -> u64 {
    k.rem_euclid(p as i128) as u64
}

/// `θ_b(k) = (b·(k)_p − (bk)_p) / p`, the carry produced when the digit
/// generator multiplies `k` by `b`. Always in `0..b`.
pub fn theta(b: u64, k: i128, p: u64) -> Result<u64> {
    if b < 2 {
        return Err(Error::BaseTooSmall(b));
    }
    if b % p == 0 {
        return Err(Error::Divisible {
            p,
            value: b as i128,
        });
    }
    Ok(theta_unchecked(b, rep_mod(k, p), p))
}

/// `θ_b(k)` for `k` already reduced into `0..p`.
#[inline]
pub(crate) fn theta_unchecked(b: u64, k: u64, p: u64) -> u64 {
    let bk = b as u128 * k as u128;
    ((bk - bk % p as u128) / p as u128) as u64
}

/// Multiplicative order of `b` modulo the prime `p`.
pub fn order_mod(b: i128, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let value = b;
    let b = rep_mod(b, p);
    if b == 0 {
        return Err(Error::Divisible { p, value });
    }
    let mut d = p - 1;
    for f in prime_factors(p - 1) {
        while d % f == 0 && pow_mod(b, d / f, p) == 1 {
            d /= f;
        }
    }
    Ok(d)
}

pub fn is_primitive_root(g: u64, p: u64) -> bool {
    let g = g % p;
    g != 0
        && prime_factors(p - 1)
            .iter()
            .all(|&f| pow_mod(g, (p - 1) / f, p) != 1)
}

/// The least `g ≥ 2` generating `(Z/pZ)^×` (for `p = 2` this is 1).
pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .ok_or_else(|| Error::Inconsistent(format!("no primitive root found mod {p}")))
}

/// Legendre symbol `(k/p)` by Euler's criterion, for odd prime `p`.
pub fn legendre(k: i128, p: u64) -> i8 {
    match pow_mod(rep_mod(k, p), (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Check `p ≡ q+1 (mod 2q)` and the other preconditions shared by every
/// `(p, q)` context, without building the index table.
pub fn check_prime_and_conductor(p: u64, q: u32) -> Result<()> {
    if !SUPPORTED_CONDUCTORS.contains(&q) {
        return Err(Error::UnsupportedConductor(q));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let modulus = 2 * q as u64;
    if p % modulus != q as u64 + 1 {
        return Err(Error::Congruence {
            p,
            residue: q as u64 + 1,
            modulus,
        });
    }
    if p <= q as u64 + 1 {
        return Err(Error::TooSmall {
            p,
            bound: q as u64 + 1,
        });
    }
    Ok(())
}

/// The arithmetic context `(p, g, q)` together with the discrete-log table
/// `k ↦ ind_g(k) mod q`.
///
/// Immutable once built; share freely across threads.
#[derive(Clone, Debug)]
pub struct ResidueSystem {
    p: u64,
    g: u64,
    q: u32,
    /// `index[k]` for `k ∈ 1..p`; `index[0]` is unused.
    index: Vec<u8>,
}

impl ResidueSystem {
    /// Builds the context, using the smallest primitive root when `g` is `None`.
    ///
    /// Requires `p` prime, `q ∈ {2, 6, 10}`, `p ≡ q+1 (mod 2q)` and
    /// `p > q+1`; a supplied `g` must be a primitive root mod `p`.
    pub fn new(p: u64, q: u32, g: Option<u64>) -> Result<Self> {
        check_prime_and_conductor(p, q)?;
        let g = match g {
            Some(g) => {
                if !is_primitive_root(g, p) {
                    return Err(Error::NotPrimitiveRoot { p, g });
                }
                g % p
            }
            None => smallest_primitive_root(p)?,
        };
        let mut index = vec![0u8; p as usize];
        let mut x = 1u64;
        let mut e = 0u32;
        for _ in 0..p - 1 {
            index[x as usize] = e as u8;
            x = x * g % p;
            e += 1;
            if e == q {
                e = 0;
            }
        }
        Ok(ResidueSystem { p, g, q, index })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `n = q/2`, the number of odd characters and of selected classes.
    pub fn n(&self) -> usize {
        self.q as usize / 2
    }

    /// `ind_g(k) mod q`. Panics if `p | k`.
    #[inline]
    pub fn index(&self, k: i128) -> u32 {
        let r = rep_mod(k, self.p);
        assert!(r != 0, "index of a multiple of p = {}", self.p);
        self.index[r as usize] as u32
    }

    /// `ind_g(k) mod q`, or an error if `p | k`.
    pub fn try_index(&self, k: i128) -> Result<u32> {
        if rep_mod(k, self.p) == 0 {
            return Err(Error::Divisible {
                p: self.p,
                value: k,
            });
        }
        Ok(self.index(k))
    }

    /// The dense table, indexed by `k ∈ 0..p` (entry 0 meaningless).
    pub fn index_table(&self) -> &[u8] {
        &self.index
    }

    /// Per-coset weighted sums: entry `r` is `Σ weight(k)` over the `k ∈ 1..p`
    /// with `ind(k) ≡ r (mod q)`.
    pub fn coset_sums<F>(&self, mut weight: F) -> Vec<i128>
    where
        F: FnMut(u64) -> i128,
    {
        let mut acc = vec![0i128; self.q as usize];
        for k in 1..self.p {
            acc[self.index[k as usize] as usize] += weight(k);
        }
        acc
    }

    /// The elements of the coset `g^r·H`, ascending.
    pub fn coset(&self, r: u32) -> Vec<u64> {
        let r = r % self.q;
        (1..self.p)
            .filter(|&k| self.index[k as usize] as u32 == r)
            .collect()
    }
}
