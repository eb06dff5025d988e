use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};

/// Fixed-size membership bitset over the elements of one group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(order: usize) -> Self {
        ElemSet {
            words: vec![0; order.div_ceil(64)],
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for x in 0..order {
            s.insert(x as Elem);
        }
        s
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.words[x as usize >> 6] >> (x & 63) & 1 == 1
    }

    /// Returns `true` if `x` was not present.
    #[inline]
    pub fn insert(&mut self, x: Elem) -> bool {
        let w = &mut self.words[x as usize >> 6];
        let bit = 1u64 << (x & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some((i as u32) * 64 + t)
            })
        })
    }
}

/// A subgroup of some parent [`FiniteGroup`], stored as its sorted member
/// indices. Operations take the parent group explicitly.
#[derive(Debug, Clone)]
pub struct SubgroupSet {
    parent_order: usize,
    members: Vec<Elem>,
    bits: ElemSet,
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.parent_order == other.parent_order && self.members == other.members
    }
}

impl Eq for SubgroupSet {}

impl Hash for SubgroupSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent_order.hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the sorted member sequence.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl SubgroupSet {
    /// Validate that `members` form a subgroup of `g`.
    pub fn from_members(g: &FiniteGroup, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut bits = ElemSet::empty(g.order());
        for x in members {
            if x as usize >= g.order() {
                return Err(GroupError::NotSubgroup(format!("element {x} out of range")));
            }
            bits.insert(x);
        }
        if !bits.contains(g.identity()) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        let members: Vec<Elem> = bits.iter().collect();
        for &a in &members {
            if !bits.contains(g.inv(a)) {
                return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !bits.contains(g.mul(a, b)) {
                    return Err(GroupError::NotSubgroup(format!("product of {a} and {b} missing")));
                }
            }
        }
        Ok(SubgroupSet {
            parent_order: g.order(),
            members,
            bits,
        })
    }

    /// Trusted constructor for sets already known to be closed.
    pub(crate) fn from_bits(parent_order: usize, bits: ElemSet) -> Self {
        SubgroupSet {
            parent_order,
            members: bits.iter().collect(),
            bits,
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut bits = ElemSet::empty(g.order());
        bits.insert(g.identity());
        Self::from_bits(g.order(), bits)
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_bits(g.order(), ElemSet::full(g.order()))
    }

    /// The subgroup generated by `gens`.
    pub fn generated_by(g: &FiniteGroup, gens: &[Elem]) -> Self {
        let mut closure = Generated::new(g);
        for &x in gens {
            closure.add(g, x);
        }
        closure.into_subgroup(g)
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn bits(&self) -> &ElemSet {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// `[G : self]` in the parent.
    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    /// `[other : self]`, requiring `self ≤ other`.
    pub fn index_in(&self, other: &SubgroupSet) -> Result<usize> {
        if !self.is_subgroup_of(other) {
            return Err(GroupError::NotContained {
                inner: "subgroup",
                outer: "ambient subgroup",
            });
        }
        Ok(other.order() / self.order())
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self::from_bits(self.parent_order, bits)
    }

    pub fn conjugate(&self, g: &FiniteGroup, by: Elem) -> SubgroupSet {
        let mut bits = ElemSet::empty(self.parent_order);
        for &x in &self.members {
            bits.insert(g.conj(by, x));
        }
        Self::from_bits(self.parent_order, bits)
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, &a)| self.members[i + 1..].iter().all(|&b| g.commute(a, b)))
    }

    /// Normal in the whole parent group.
    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.is_normal_in(g, &SubgroupSet::whole(g))
    }

    /// Normal in `ambient`, which must contain `self`.
    pub fn is_normal_in(&self, g: &FiniteGroup, ambient: &SubgroupSet) -> bool {
        self.is_subgroup_of(ambient)
            && ambient
                .members
                .iter()
                .all(|&t| self.members.iter().all(|&x| self.contains(g.conj(t, x))))
    }

    pub fn normalizer(&self, g: &FiniteGroup) -> SubgroupSet {
        let mut bits = ElemSet::empty(g.order());
        for t in g.elements() {
            if self.members.iter().all(|&x| self.contains(g.conj(t, x))) {
                bits.insert(t);
            }
        }
        Self::from_bits(g.order(), bits)
    }

    /// Elements of the parent commuting with every member.
    pub fn centralizer(&self, g: &FiniteGroup) -> SubgroupSet {
        let mut bits = ElemSet::empty(g.order());
        for t in g.elements() {
            if self.members.iter().all(|&x| g.commute(t, x)) {
                bits.insert(t);
            }
        }
        Self::from_bits(g.order(), bits)
    }

    /// Center of this subgroup (as a subgroup of the parent).
    pub fn center(&self, g: &FiniteGroup) -> SubgroupSet {
        let mut bits = ElemSet::empty(g.order());
        for &t in &self.members {
            if self.members.iter().all(|&x| g.commute(t, x)) {
                bits.insert(t);
            }
        }
        Self::from_bits(g.order(), bits)
    }

    /// The subgroup as a group in its own right. Element `i` of the result
    /// is `members()[i]` of the parent, so the embedding is monotone.
    pub fn to_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let k = self.members.len();
        let mut pos = vec![u32::MAX; g.order()];
        for (i, &x) in self.members.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[g.mul(a, b) as usize]);
            }
        }
        let sub = FiniteGroup::from_table_unvalidated(k, table)
            .expect("closed subset of a group is a group");
        match g.labels() {
            Some(labels) => sub
                .with_labels(self.members.iter().map(|&x| labels[x as usize].clone()).collect())
                .expect("label count matches"),
            None => sub,
        }
    }

    /// Map a subgroup of `self.to_group()` back into the parent.
    pub fn lift(&self, inner: &SubgroupSet) -> SubgroupSet {
        let mut bits = ElemSet::empty(self.parent_order);
        for &x in inner.members() {
            bits.insert(self.members[x as usize]);
        }
        Self::from_bits(self.parent_order, bits)
    }

    /// Pull a subgroup of the parent contained in `self` into the
    /// numbering of `self.to_group()`.
    pub fn restrict(&self, outer: &SubgroupSet) -> Result<SubgroupSet> {
        if !outer.is_subgroup_of(self) {
            return Err(GroupError::NotContained {
                inner: "subgroup",
                outer: "ambient subgroup",
            });
        }
        let mut bits = ElemSet::empty(self.order());
        for &x in outer.members() {
            let i = self.members.binary_search(&x).expect("contained");
            bits.insert(i as Elem);
        }
        Ok(Self::from_bits(self.order(), bits))
    }
}

/// Incremental subgroup closure: add generators one at a time, skipping
/// those already inside.
pub(crate) struct Generated {
    gens: Vec<Elem>,
    elements: Vec<Elem>,
    bits: ElemSet,
}

impl Generated {
    pub fn new(g: &FiniteGroup) -> Self {
        let mut bits = ElemSet::empty(g.order());
        bits.insert(g.identity());
        Generated {
            gens: Vec::new(),
            elements: vec![g.identity()],
            bits,
        }
    }

    pub fn from_subgroup(h: &SubgroupSet, gens: &[Elem]) -> Self {
        Generated {
            gens: gens.to_vec(),
            elements: h.members().to_vec(),
            bits: h.bits().clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    /// Returns `false` if `x` was already a member.
    pub fn add(&mut self, g: &FiniteGroup, x: Elem) -> bool {
        if self.bits.contains(x) {
            return false;
        }
        self.gens.push(x);
        // old elements are closed under the old generators, so they only
        // need the new one; new elements need every generator
        let old_len = self.elements.len();
        for i in 0..old_len {
            let y = g.mul(self.elements[i], x);
            if self.bits.insert(y) {
                self.elements.push(y);
            }
        }
        let mut head = old_len;
        while head < self.elements.len() {
            let e = self.elements[head];
            for k in 0..self.gens.len() {
                let y = g.mul(e, self.gens[k]);
                if self.bits.insert(y) {
                    self.elements.push(y);
                }
            }
            head += 1;
        }
        true
    }

    pub fn into_subgroup(self, g: &FiniteGroup) -> SubgroupSet {
        SubgroupSet::from_bits(g.order(), self.bits)
    }

    pub fn to_subgroup(&self, g: &FiniteGroup) -> SubgroupSet {
        SubgroupSet::from_bits(g.order(), self.bits.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::group::closure::close_generators;
    use crate::group::perm::Permutation;

    fn sym(n: usize) -> FiniteGroup {
        let cycle: Vec<u32> = (0..n as u32).collect();
        let gens = vec![
            Permutation::from_cycles(n, &[cycle]).unwrap(),
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
        ];
        close_generators(n, &gens, &Caps::default()).unwrap().group
    }

    #[test]
    fn bitset_basics() {
        let mut s = ElemSet::empty(130);
        assert!(s.insert(129));
        assert!(!s.insert(129));
        s.insert(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn generated_subgroups_respect_lagrange() {
        let g = sym(4);
        for a in g.elements() {
            for b in g.elements().step_by(5) {
                let h = SubgroupSet::generated_by(&g, &[a, b]);
                assert_eq!(24 % h.order(), 0);
                SubgroupSet::from_members(&g, h.members().iter().copied()).unwrap();
            }
        }
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let g = sym(3);
        assert!(SubgroupSet::from_members(&g, [1]).is_err());
        assert!(SubgroupSet::from_members(&g, [0, 1, 2]).is_err());
        assert!(SubgroupSet::from_members(&g, [0, 99]).is_err());
    }

    #[test]
    fn to_group_and_back() {
        let g = sym(4);
        let h = SubgroupSet::generated_by(&g, &[1]);
        let hg = h.to_group(&g);
        assert_eq!(hg.order(), 4);
        assert!(hg.is_abelian());
        let inner = SubgroupSet::whole(&hg);
        assert_eq!(h.lift(&inner), h);
        assert_eq!(h.restrict(&h).unwrap(), inner);
    }

    #[test]
    fn center_and_normality() {
        let g = sym(3);
        let whole = SubgroupSet::whole(&g);
        assert!(whole.center(&g).is_trivial());
        let a3 = SubgroupSet::from_members(&g, g.elements().filter(|&x| g.element_order(x) != 2))
            .unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal(&g));
        let inv = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let t = SubgroupSet::generated_by(&g, &[inv]);
        assert!(!t.is_normal(&g));
        assert_eq!(t.normalizer(&g), t);
    }
}
