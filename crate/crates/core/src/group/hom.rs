use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::subgroup::{ElemSet, SubgroupSet};

/// A map between two groups, checked to respect multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHomomorphism {
    source_order: usize,
    target_order: usize,
    map: Vec<Elem>,
}

impl GroupHomomorphism {
    /// Check `map(xy) = map(x)map(y)` for every pair.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y as usize >= target.order()) {
            return Err(GroupError::NotHomomorphism);
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b) as usize] != target.mul(map[a as usize], map[b as usize]) {
                    return Err(GroupError::NotHomomorphism);
                }
            }
        }
        Ok(Self::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(source: &FiniteGroup, target: &FiniteGroup, map: Vec<Elem>) -> Self {
        GroupHomomorphism {
            source_order: source.order(),
            target_order: target.order(),
            map,
        }
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn kernel(&self, source: &FiniteGroup, target: &FiniteGroup) -> SubgroupSet {
        let e = target.identity();
        let mut bits = ElemSet::empty(source.order());
        for x in source.elements() {
            if self.map[x as usize] == e {
                bits.insert(x);
            }
        }
        SubgroupSet::from_bits(source.order(), bits)
    }

    pub fn image(&self, target: &FiniteGroup) -> SubgroupSet {
        let mut bits = ElemSet::empty(target.order());
        for &y in &self.map {
            bits.insert(y);
        }
        SubgroupSet::from_bits(target.order(), bits)
    }

    pub fn is_surjective(&self, target: &FiniteGroup) -> bool {
        self.image(target).order() == self.target_order
    }

    pub fn is_bijective(&self, target: &FiniteGroup) -> bool {
        self.source_order == self.target_order && self.is_surjective(target)
    }
}
