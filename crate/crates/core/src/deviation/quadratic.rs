//! The `q = 2` case: how quadratic residues spread over subintervals of
//! `[0, p]`, and class sums.

use num_bigint::BigInt;

use crate::class_numbers::{all_bernoulli, h2_from_bernoulli};
use crate::error::{Error, Result};
use crate::modular::{legendre, theta_unchecked, ResidueSystem};

/// Residue-minus-nonresidue counts on subintervals, for `p ≡ 3 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticIntervalCounts {
    pub p: u64,
    pub h2: i64,
    /// `|C∩[0,p/2]| − |N∩[0,p/2]|`.
    pub half: i64,
    /// `|C∩[0,p/6]| − |N∩[0,p/6]|`.
    pub sixth: i64,
    /// `|C∩[p/6,p/3]| − |C∩[2p/3,5p/6]|`.
    pub mid1: i64,
    /// `|C∩[p/3,p/2]| − |C∩[p/2,2p/3]|`.
    pub mid2: i64,
}

/// Computes the four counts twice, once by counting residues in intervals
/// and once from `θ`-combinations summed over `C`, and checks them against
/// the class-number predictions:
///
/// * `half = h` for `p ≡ 7 (mod 8)` and `3h` for `p ≡ 3 (mod 8)`;
/// * `sixth = −h` if `(2/p) = (3/p) = −1`, else `h`;
/// * `mid1 = −c₁·h/2`, `c₁ = −2 + χ(2) + 2χ(3) − χ(6)`;
/// * `mid2 = −c₂·h/2`, `c₂ = −1 + 2χ(2) − χ(3)`.
pub fn quadratic_interval_counts(p: u64) -> Result<QuadraticIntervalCounts> {
    let system = ResidueSystem::new(p, 2, None)?;
    let h = i64::try_from(h2_from_bernoulli(&all_bernoulli(&system)[0])?)
        .map_err(|_| Error::Inconsistent("h2 overflows i64".into()))?;
    let in_c = |k: u64| system.index(k as i128) == 0;

    // direct counting; none of the cut points k·p/6 is an integer
    let (mut half, mut sixth, mut mid1, mut mid2) = (0i64, 0i64, 0i64, 0i64);
    for k in 1..p {
        let six_k = 6 * k;
        let (c, sign) = if in_c(k) { (true, 1) } else { (false, -1) };
        if 2 * k < p {
            half += sign;
        }
        if six_k < p {
            sixth += sign;
        }
        if c {
            if p < six_k && six_k < 2 * p {
                mid1 += 1;
            }
            if 4 * p < six_k && six_k < 5 * p {
                mid1 -= 1;
            }
            if 2 * p < six_k && six_k < 3 * p {
                mid2 += 1;
            }
            if 3 * p < six_k && six_k < 4 * p {
                mid2 -= 1;
            }
        }
    }

    // θ route, over C only
    let th = |b: u64, k: u64| theta_unchecked(b, k, p) as i64;
    let (mut s2, mut f, mut g1, mut g2) = (0i64, 0i64, 0i64, 0i64);
    for k in (1..p).filter(|&k| in_c(k)) {
        s2 += th(2, k);
        f += 1 + th(2, k) + th(3, k) - th(6, k);
        g1 += -th(2, k) - 2 * th(3, k) + th(6, k);
        g2 += -2 * th(2, k) + th(3, k);
    }
    let half_theta = (p as i64 - 1) / 2 - 2 * s2;
    let by_theta = (half_theta, f, g1, g2);
    if by_theta != (half, sixth, mid1, mid2) {
        return Err(Error::Inconsistent(format!(
            "p = {p}: interval counts {:?} differ from θ-combinations {by_theta:?}",
            (half, sixth, mid1, mid2)
        )));
    }

    let chi = |k: i128| legendre(k, p) as i64;
    let predicted = (
        if p % 8 == 3 { 3 * h } else { h },
        if chi(2) == -1 && chi(3) == -1 { -h } else { h },
        -(-2 + chi(2) + 2 * chi(3) - chi(6)) * h / 2,
        -(-1 + 2 * chi(2) - chi(3)) * h / 2,
    );
    if predicted != (half, sixth, mid1, mid2) {
        return Err(Error::Inconsistent(format!(
            "p = {p}: interval counts {:?} differ from class-number prediction {predicted:?}",
            (half, sixth, mid1, mid2)
        )));
    }
    Ok(QuadraticIntervalCounts {
        p,
        h2: h,
        half,
        sixth,
        mid1,
        mid2,
    })
}

/// `Σ_{k∈C} k − Σ_{k∈N} k`, checked against `−p·h₂⁻`.
pub fn class_sum_difference(p: u64) -> Result<BigInt> {
    let system = ResidueSystem::new(p, 2, None)?;
    let sums = system.coset_sums(|k| k as i128);
    let diff = BigInt::from(sums[0] - sums[1]);
    let h = h2_from_bernoulli(&all_bernoulli(&system)[0])?;
    if diff != -BigInt::from(p) * &h {
        return Err(Error::Inconsistent(format!(
            "p = {p}: class sum difference {diff} ≠ −p·{h}"
        )));
    }
    Ok(diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::primes_up_to;

    #[test]
    fn worked_examples() {
        assert_eq!(quadratic_interval_counts(7).unwrap().half, 1);
        // residues mod 11: {1, 3, 4, 5, 9}; four lie below 5.5
        assert_eq!(quadratic_interval_counts(11).unwrap().half, 3);
        let c = quadratic_interval_counts(23).unwrap();
        // (2/23) = 1, so the sign is +
        assert_eq!(c.sixth, c.h2);
        assert!(matches!(
            quadratic_interval_counts(13),
            Err(Error::Congruence { .. })
        ));
        assert!(matches!(
            quadratic_interval_counts(3),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn class_sums() {
        assert_eq!(class_sum_difference(7).unwrap(), BigInt::from(-7));
        assert_eq!(class_sum_difference(11).unwrap(), BigInt::from(-11));
        assert_eq!(class_sum_difference(79).unwrap(), BigInt::from(-395));
        assert!(class_sum_difference(13).is_err());
    }

    #[test]
    fn small_range_holds() {
        for p in primes_up_to(600)
            .into_iter()
            .filter(|p| p % 4 == 3 && *p > 3)
        {
            let c = quadratic_interval_counts(p).unwrap();
            assert!(c.half > 0);
            class_sum_difference(p).unwrap();
        }
    }
}
