//! Odd Dirichlet characters mod `p` that are trivial on the index-`q`
//! subgroup `H`, and their generalized Bernoulli numbers.

use num_bigint::BigInt;

use crate::cyclotomic::CycloRational;
use crate::error::{Error, Result};
use crate::modular::ResidueSystem;

/// The character with `χ(g) = ζ_q^t`, `t` odd.
///
/// Which of a conjugate pair is called `χ` versus `χ̄` depends on the
/// primitive root of the underlying system.
#[derive(Clone, Copy, Debug)]
pub struct OddCharacter<'a> {
    system: &'a ResidueSystem,
    t: u32,
}

impl PartialEq for OddCharacter<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.system, other.system) && self.t == other.t
    }
}

/// The `n = q/2` odd characters, ordered by `t = 1, 3, …, q−1`.
pub fn odd_characters(system: &ResidueSystem) -> Vec<OddCharacter<'_>> {
    (1..system.q())
        .step_by(2)
        .map(|t| OddCharacter { system, t })
        .collect()
}

impl<'a> OddCharacter<'a> {
    /// The character with exponent `t`; `t` must be odd and below `q`.
    pub fn new(system: &'a ResidueSystem, t: u32) -> Result<Self> {
        if t % 2 == 0 || t >= system.q() {
            return Err(Error::OutOfRange(format!(
                "character exponent t = {t} for q = {}",
                system.q()
            )));
        }
        Ok(OddCharacter { system, t })
    }

    pub fn system(&self) -> &'a ResidueSystem {
        self.system
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Order of `χ` as a group element: `q / gcd(t, q)`.
    pub fn order(&self) -> u32 {
        self.system.q() / num_integer::gcd(self.t, self.system.q())
    }

    /// `χ = χ̄`, i.e. `χ` is the Legendre symbol.
    pub fn is_real(&self) -> bool {
        2 * self.t == self.system.q()
    }

    pub fn conjugate(&self) -> OddCharacter<'a> {
        OddCharacter {
            system: self.system,
            t: self.system.q() - self.t,
        }
    }

    /// `χ^m` restricted to odd `m`.
    pub fn pow(&self, m: u32) -> Result<OddCharacter<'a>> {
        OddCharacter::new(self.system, self.t * m % self.system.q())
    }

    /// `e` with `χ(k) = ζ_q^e`.
    pub fn exponent(&self, k: i128) -> Result<u32> {
        Ok(self.t * self.system.try_index(k)? % self.system.q())
    }

    /// `χ(k)`; errors if `p | k`.
    pub fn eval(&self, k: i128) -> Result<CycloRational> {
        CycloRational::root_of_unity(self.system.q(), self.exponent(k)? as i64)
    }

    /// `χ(C_j)` for the selected class `C_j = g^{2(j−1)}H`, `j ∈ 1..=n`.
    pub fn on_class(&self, j: usize) -> CycloRational {
        let e = (self.t as i64) * 2 * (j as i64 - 1);
        CycloRational::root_of_unity(self.system.q(), e).expect("system conductor is supported")
    }

    /// The vector `(χ(C_1), …, χ(C_n))`.
    pub fn as_vector(&self) -> Vec<CycloRational> {
        (1..=self.system.n()).map(|j| self.on_class(j)).collect()
    }

    /// `B_χ = (1/p)·Σ_{k=1}^{p−1} χ(k)·k`.
    pub fn bernoulli(&self) -> CycloRational {
        let sums = self.system.coset_sums(|k| k as i128);
        bernoulli_from_coset_sums(&sums, self.system.p(), self.t)
    }
}

/// `B_χ` for the character with exponent `t`, given the per-coset class sums
/// `Σ_{ind(k) ≡ r} k` for `r ∈ 0..q`.
///
/// All characters of one system share the same sums, so a single `O(p)` sweep
/// feeds every Bernoulli number.
pub fn bernoulli_from_coset_sums(sums: &[i128], p: u64, t: u32) -> CycloRational {
    let q = sums.len();
    let mut by_exponent = vec![0i128; q];
    for (r, s) in sums.iter().enumerate() {
        by_exponent[(t as usize * r) % q] += s;
    }
    CycloRational::from_exponent_sums(q as u32, &by_exponent, &BigInt::from(p))
        .expect("coset sums come from a supported system")
}

/// `⟨z, χ⟩ = Σ_j z_j·conj(χ(C_j))`.
pub fn scalar_product(z: &[CycloRational], chi: &OddCharacter<'_>) -> Result<CycloRational> {
    let n = chi.system.n();
    if z.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: z.len(),
        });
    }
    let mut acc = CycloRational::zero(chi.system.q())?;
    for (j, zj) in z.iter().enumerate() {
        acc = acc.try_add(&zj.try_mul(&chi.on_class(j + 1).conjugate())?)?;
    }
    Ok(acc)
}
