//! The finite groups `Q_K = μ_n × K × K̂` with the twisted product
//! `(α, g, ℓ)(α′, g′, ℓ′) = (αα′ℓ′(g), g + g′, ℓℓ′)`.
//!
//! `K = ⊕ Z/dᵢ` is given by invariant factors `d₁ | d₂ | … | d_r`, so
//! `n = ∏ dᵢ` and the exponent is `m = d_r`. Roots of unity are stored as
//! exponents of a fixed primitive root: `μ_n` as `Z/n`, and a character
//! value in `μ_m` is pushed into `μ_n` by multiplying its exponent by
//! `n/m`. Characters are identified with `K` through the pairing
//! `⟨a, g⟩ = Σ aᵢ gᵢ (m/dᵢ) mod m`; any identification gives an isomorphic
//! group.

use std::fmt;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::subgroup::{ElemSet, SubgroupSet};

/// Invariant factors of the abelian group `K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZarhinParams {
    invariant_factors: Vec<usize>,
}

impl ZarhinParams {
    pub fn new(invariant_factors: Vec<usize>) -> Result<Self> {
        if invariant_factors.is_empty() {
            return Err(GroupError::InvalidParameter(
                "zarhin: at least one invariant factor is required".into(),
            ));
        }
        if let Some(d) = invariant_factors.iter().find(|&&d| d < 2) {
            return Err(GroupError::InvalidParameter(format!(
                "zarhin: invariant factor {d} must be at least 2"
            )));
        }
        if let Some(w) = invariant_factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(GroupError::InvalidParameter(format!(
                "zarhin: invariant factor {} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(ZarhinParams { invariant_factors })
    }

    pub fn invariant_factors(&self) -> &[usize] {
        &self.invariant_factors
    }

    /// `|K|`
    pub fn n(&self) -> usize {
        self.invariant_factors.iter().product()
    }

    /// Exponent of `K`.
    pub fn m(&self) -> usize {
        *self.invariant_factors.last().expect("non-empty")
    }

    /// Every invariant-factor chain with `2 ≤ |K| ≤ max_n`, ordered by
    /// `|K|` then chain.
    pub fn all_up_to(max_n: usize) -> Vec<ZarhinParams> {
        fn extend(prefix: &mut Vec<usize>, product: usize, max_n: usize, out: &mut Vec<Vec<usize>>) {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            let last = prefix.last().copied().unwrap_or(1);
            let mut d = last.max(2);
            while product * d <= max_n {
                if d % last == 0 {
                    prefix.push(d);
                    extend(prefix, product * d, max_n, out);
                    prefix.pop();
                }
                d += 1;
            }
        }
        let mut chains = Vec::new();
        extend(&mut Vec::new(), 1, max_n, &mut chains);
        let mut params: Vec<ZarhinParams> = chains
            .into_iter()
            .map(|c| ZarhinParams { invariant_factors: c })
            .collect();
        params.sort_by(|a, b| (a.n(), &a.invariant_factors).cmp(&(b.n(), &b.invariant_factors)));
        params
    }

    fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut v = vec![0; self.invariant_factors.len()];
        for (slot, &d) in v.iter_mut().zip(&self.invariant_factors).rev() {
            *slot = x % d;
            x /= d;
        }
        v
    }

    fn encode(&self, v: &[usize]) -> usize {
        v.iter()
            .zip(&self.invariant_factors)
            .fold(0, |acc, (&x, &d)| acc * d + x % d)
    }

    /// `⟨a, g⟩ ∈ Z/m`
    pub fn pairing(&self, a: &[usize], g: &[usize]) -> usize {
        let m = self.m();
        a.iter()
            .zip(g)
            .zip(&self.invariant_factors)
            .map(|((&ai, &gi), &d)| ai * gi % d * (m / d))
            .sum::<usize>()
            % m
    }
}

impl fmt::Display for ZarhinParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Index of `(e, g, a)` is `(e·n + g)·n + a` with `g`, `a` in mixed radix.
pub fn zarhin_index(params: &ZarhinParams, e: usize, g: &[usize], a: &[usize]) -> Elem {
    let n = params.n();
    ((e % n * n + params.encode(g)) * n + params.encode(a)) as Elem
}

/// Build `Q_K` as a Cayley table of order `n³`.
pub fn zarhin_group(params: &ZarhinParams, caps: &Caps) -> Result<FiniteGroup> {
    let n = params.n();
    let order = n
        .checked_pow(3)
        .filter(|&o| o <= caps.closure)
        .ok_or(GroupError::CapExceeded {
            what: "zarhin group order",
            cap: caps.closure,
        })?;
    let scale = n / params.m();
    let ks: Vec<Vec<usize>> = (0..n).map(|x| params.decode(x)).collect();
    // twist[a'][g] = (n/m)·⟨a', g⟩ mod n
    let mut twist = vec![0usize; n * n];
    for a in 0..n {
        for g in 0..n {
            twist[a * n + g] = scale * params.pairing(&ks[a], &ks[g]) % n;
        }
    }
    let add = |x: usize, y: usize| -> usize {
        let s: Vec<usize> = ks[x].iter().zip(&ks[y]).map(|(p, q)| p + q).collect();
        params.encode(&s)
    };
    let mut sum = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            sum[x * n + y] = add(x, y);
        }
    }
    let split = |i: usize| (i / (n * n), i / n % n, i % n);
    let mut table = Vec::with_capacity(order * order);
    for i in 0..order {
        let (e1, g1, a1) = split(i);
        for j in 0..order {
            let (e2, g2, a2) = split(j);
            let e = (e1 + e2 + twist[a2 * n + g1]) % n;
            table.push(((e * n + sum[g1 * n + g2]) * n + sum[a1 * n + a2]) as Elem);
        }
    }
    let labels = (0..order)
        .map(|i| {
            let (e, g, a) = split(i);
            format!("({e};{:?};{:?})", ks[g], ks[a])
        })
        .collect();
    FiniteGroup::from_table_unvalidated(order, table)?.with_labels(labels)
}

/// The central copy `{(e, 0, 0)}` of `μ_n` inside `Q_K`.
pub fn zarhin_roots_of_unity(params: &ZarhinParams, q: &FiniteGroup) -> SubgroupSet {
    let n = params.n();
    let zero = vec![0; params.invariant_factors().len()];
    let mut bits = ElemSet::empty(q.order());
    for e in 0..n {
        bits.insert(zarhin_index(params, e, &zero, &zero));
    }
    SubgroupSet::from_bits(q.order(), bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(ZarhinParams::new(vec![]).is_err());
        assert!(ZarhinParams::new(vec![1]).is_err());
        assert!(ZarhinParams::new(vec![2, 3]).is_err());
        let p = ZarhinParams::new(vec![2, 4]).unwrap();
        assert_eq!((p.n(), p.m()), (8, 4));
    }

    #[test]
    fn chains_up_to_eight() {
        let all: Vec<String> = ZarhinParams::all_up_to(8).iter().map(|p| p.to_string()).collect();
        assert_eq!(all, ["2", "3", "2,2", "4", "5", "6", "7", "2,2,2", "2,4", "8"]);
    }

    #[test]
    fn identity_and_order() {
        let p = ZarhinParams::new(vec![2]).unwrap();
        let q = zarhin_group(&p, &Caps::default()).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.identity(), zarhin_index(&p, 0, &[0], &[0]));
        assert!(!q.is_abelian());
        FiniteGroup::from_table(8, q.table().to_vec(), &Caps::default()).unwrap();
    }

    #[test]
    fn pairing_is_nondegenerate() {
        for p in ZarhinParams::all_up_to(8) {
            let n = p.n();
            for g in 1..n {
                let gv = p.decode(g);
                assert!((0..n).any(|a| p.pairing(&p.decode(a), &gv) != 0), "{p}");
            }
        }
    }
}
