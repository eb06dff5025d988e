//! Closed-form bound tables, in exact big-integer arithmetic.
//!
//! * [`minkowski_bound`]: the Minkowski–Schur upper bound on the order of a
//!   finite subgroup of `GL_n(Z)`, `∏ p^{d_p}` over primes `p` with
//!   `⌊n/(p−1)⌋ > 0`, where `d_p = Σ_{i≥0} ⌊n/(pⁱ(p−1))⌋`.
//! * [`collins_value`]: the exact Jordan constant of `GL_n` over an
//!   algebraically closed field of characteristic zero, for the `n` where a
//!   closed form is available (`n = 2..6`, `n ≥ 20`). The range
//!   `7 ≤ n ≤ 19` is deliberately absent.
//! * [`symmetric_lower_bound`]: `(n+1)!`, coming from `Sym_{n+1}` acting on
//!   its `n`-dimensional standard representation, valid for `n ≥ 4`.
//!
//! The Jordan constant of rank-bounded reductive groups is not computed
//! here.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{GroupError, Result};

/// Which closed form produced a [`BoundEntry`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundRule {
    MinkowskiProduct,
    CollinsSmallN,
    Collins60R,
    CollinsFactorial,
    SymmetricLower,
}

impl BoundRule {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundRule::MinkowskiProduct => "minkowski-product",
            BoundRule::CollinsSmallN => "collins-small-n",
            BoundRule::Collins60R => "collins-60r",
            BoundRule::CollinsFactorial => "collins-factorial",
            BoundRule::SymmetricLower => "symmetric-lower",
        }
    }
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub n: u32,
    pub value: BigUint,
    pub rule: BoundRule,
    /// `p ↦ d_p`, only for Minkowski entries.
    pub prime_exponents: Option<BTreeMap<u64, u32>>,
}

/// Serre's multiplicative bound for finite subgroups of the plane Cremona
/// group: their orders divide `2¹⁰·3⁴·5²·7`. Recorded as a constant only.
pub const CREMONA_PLANE_MULTIPLICATIVE_BOUND: u64 = 1024 * 81 * 25 * 7;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn minkowski_bound(n: u32) -> Result<BoundEntry> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("minkowski: n must be at least 1".into()));
    }
    let n64 = n as u64;
    let mut exponents = BTreeMap::new();
    let mut value = BigUint::one();
    // ⌊n/(p−1)⌋ > 0 iff p ≤ n + 1
    for p in (2..=n64 + 1).filter(|&p| is_prime(p)) {
        let mut d = 0u32;
        let mut denom = p - 1;
        while denom <= n64 {
            d += (n64 / denom) as u32;
            denom *= p;
        }
        value *= BigUint::from(p).pow(d);
        exponents.insert(p, d);
    }
    Ok(BoundEntry {
        n,
        value,
        rule: BoundRule::MinkowskiProduct,
        prime_exponents: Some(exponents),
    })
}

pub fn collins_value(n: u32) -> Result<BoundEntry> {
    let entry = |value: BigUint, rule| BoundEntry {
        n,
        value,
        rule,
        prime_exponents: None,
    };
    match n {
        0 | 1 => Err(GroupError::NotApplicable { n, min: 2 }),
        2..=6 => {
            let v: u64 = [60, 360, 25_920, 25_920, 6_531_840][(n - 2) as usize];
            Ok(entry(BigUint::from(v), BoundRule::CollinsSmallN))
        }
        7..=19 => Err(GroupError::NotTabulated(n)),
        63 | 65 | 67 | 69 => Ok(entry(factorial(n + 1), BoundRule::CollinsFactorial)),
        20..=62 | 64 | 66 | 68 | 70 => {
            let r = n / 2;
            Ok(entry(
                BigUint::from(60u32).pow(r) * factorial(r),
                BoundRule::Collins60R,
            ))
        }
        _ => Ok(entry(factorial(n + 1), BoundRule::CollinsFactorial)),
    }
}

pub fn symmetric_lower_bound(n: u32) -> Result<BoundEntry> {
    if n < 4 {
        return Err(GroupError::NotApplicable { n, min: 4 });
    }
    Ok(BoundEntry {
        n,
        value: factorial(n + 1),
        rule: BoundRule::SymmetricLower,
        prime_exponents: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minkowski_exponents_for_n_2() {
        let e = minkowski_bound(2).unwrap();
        let exps = e.prime_exponents.unwrap();
        assert_eq!(exps.get(&2), Some(&3));
        assert_eq!(exps.get(&3), Some(&1));
        assert_eq!(exps.len(), 2);
        assert_eq!(e.value, BigUint::from(24u32));
    }

    #[test]
    fn minkowski_value_is_product_of_stored_exponents() {
        for n in 1..40 {
            let e = minkowski_bound(n).unwrap();
            let product = e
                .prime_exponents
                .as_ref()
                .unwrap()
                .iter()
                .fold(BigUint::one(), |acc, (&p, &d)| acc * BigUint::from(p).pow(d));
            assert_eq!(product, e.value);
        }
    }

    #[test]
    fn collins_rules() {
        assert_eq!(collins_value(3).unwrap().value, BigUint::from(360u32));
        assert_eq!(collins_value(21).unwrap().rule, BoundRule::Collins60R);
        assert_eq!(
            collins_value(21).unwrap().value,
            BigUint::from(60u32).pow(10u32) * factorial(10)
        );
        assert_eq!(collins_value(71).unwrap().value, factorial(72));
        assert_eq!(collins_value(63).unwrap().rule, BoundRule::CollinsFactorial);
        assert_eq!(collins_value(64).unwrap().rule, BoundRule::Collins60R);
        assert_eq!(collins_value(10).unwrap_err(), GroupError::NotTabulated(10));
        assert!(collins_value(1).is_err());
    }

    #[test]
    fn symmetric_lower() {
        assert_eq!(symmetric_lower_bound(4).unwrap().value, BigUint::from(120u32));
        assert_eq!(
            symmetric_lower_bound(3).unwrap_err(),
            GroupError::NotApplicable { n: 3, min: 4 }
        );
    }

    #[test]
    fn cremona_constant() {
        assert_eq!(CREMONA_PLANE_MULTIPLICATIVE_BOUND, 14_515_200);
    }
}
