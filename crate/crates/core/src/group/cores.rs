use num_bigint::BigUint;
use num_traits::pow;

use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::subgroup::{ElemSet, SubgroupSet};

/// Normal core of `q` in `p`: the intersection of all conjugates `gQg⁻¹`.
///
/// The result is cross-checked against the kernel of `p` acting on the
/// left cosets of `q`; the two constructions must agree.
pub fn normal_core(p: &FiniteGroup, q: &SubgroupSet) -> SubgroupSet {
    let by_conjugates = conjugate_intersection(p, q, p.elements());
    let by_action = coset_action_kernel(p, q);
    assert_eq!(
        by_conjugates, by_action,
        "normal core disagrees with the coset-action kernel"
    );
    by_conjugates
}

/// `⋂ gQg⁻¹` over the given elements `g`.
fn conjugate_intersection(
    p: &FiniteGroup,
    q: &SubgroupSet,
    by: impl Iterator<Item = Elem>,
) -> SubgroupSet {
    let mut bits = q.bits().clone();
    for g in by {
        bits.intersect_with(q.conjugate(p, g).bits());
        if bits.len() == 1 {
            break;
        }
    }
    SubgroupSet::from_bits(p.order(), bits)
}

/// Kernel of the action of `p` on the left cosets `xQ` by left
/// multiplication: `g` acts trivially iff `x⁻¹gx ∈ Q` for every `x`.
pub fn coset_action_kernel(p: &FiniteGroup, q: &SubgroupSet) -> SubgroupSet {
    // one representative per left coset suffices
    let mut covered = ElemSet::empty(p.order());
    let mut reps = Vec::new();
    for x in p.elements() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for &m in q.members() {
            covered.insert(p.mul(x, m));
        }
    }
    let mut bits = ElemSet::empty(p.order());
    for g in p.elements() {
        if reps.iter().all(|&x| q.contains(p.mul(p.mul(p.inv(x), g), x))) {
            bits.insert(g);
        }
    }
    SubgroupSet::from_bits(p.order(), bits)
}

/// Outcome of intersecting the conjugates of a normal abelian subgroup
/// `A ⊴ L` over a group `F` in which `L` is normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateIntersection {
    /// `M = ⋂_{g∈F} gAg⁻¹`
    pub intersection: SubgroupSet,
    pub index_in_l: usize,
    /// `[L : A]`
    pub l_index_of_a: usize,
    /// `[F : L]`
    pub f_index_of_l: usize,
    /// `[L : A]^[F : L]`
    pub bound: BigUint,
    pub is_abelian: bool,
    pub is_normal_in_f: bool,
}

impl ConjugateIntersection {
    pub fn bound_holds(&self) -> bool {
        BigUint::from(self.index_in_l) <= self.bound
    }
}

/// Intersect the `F`-conjugates of `a`, where `a` is normal abelian in
/// `l` and `l` is normal in `f` (all given as subgroups of `f`).
///
/// Because `A ⊴ L`, conjugating by one representative per coset of `L`
/// already yields every conjugate.
pub fn intersect_conjugates(
    f: &FiniteGroup,
    a: &SubgroupSet,
    l: &SubgroupSet,
) -> Result<ConjugateIntersection> {
    if !l.is_normal(f) {
        return Err(GroupError::NotNormal {
            sub: "L",
            ambient: "F",
        });
    }
    if !a.is_subgroup_of(l) {
        return Err(GroupError::NotContained {
            inner: "A",
            outer: "L",
        });
    }
    if !a.is_normal_in(f, l) {
        return Err(GroupError::NotNormal {
            sub: "A",
            ambient: "L",
        });
    }
    if !a.is_abelian(f) {
        return Err(GroupError::NotAbelian("A"));
    }
    let mut covered = ElemSet::empty(f.order());
    let mut transversal = Vec::new();
    for g in f.elements() {
        if covered.contains(g) {
            continue;
        }
        transversal.push(g);
        for &x in l.members() {
            covered.insert(f.mul(g, x));
        }
    }
    let m = conjugate_intersection(f, a, transversal.iter().copied());
    let l_index_of_a = l.order() / a.order();
    let f_index_of_l = f.order() / l.order();
    Ok(ConjugateIntersection {
        index_in_l: l.order() / m.order(),
        l_index_of_a,
        f_index_of_l,
        bound: pow(BigUint::from(l_index_of_a), f_index_of_l),
        is_abelian: m.is_abelian(f),
        is_normal_in_f: m.is_normal(f),
        intersection: m,
    })
}
