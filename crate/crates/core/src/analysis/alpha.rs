use std::collections::HashSet;

use crate::analysis::normal::enumerate_normal_subgroups;
use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::finite::FiniteGroup;
use crate::group::subgroup::{ElemSet, SubgroupSet};

/// `α(G)`: the least index of a normal abelian subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalAbelianIndex {
    pub alpha: usize,
    /// A largest normal abelian subgroup; the lexicographically least one
    /// among those of maximal order.
    pub witness: SubgroupSet,
}

pub fn min_normal_abelian_index(g: &FiniteGroup, caps: &Caps) -> Result<NormalAbelianIndex> {
    if g.is_abelian() {
        return Ok(NormalAbelianIndex {
            alpha: 1,
            witness: SubgroupSet::whole(g),
        });
    }
    let normals = enumerate_normal_subgroups(g, caps)?;
    // sorted by (order, members): the last order block holds the largest
    let witness = normals
        .into_iter()
        .filter(|n| n.is_abelian(g))
        .fold(None::<SubgroupSet>, |best, n| match best {
            Some(b) if b.order() >= n.order() => Some(b),
            _ => Some(n),
        })
        .expect("the trivial subgroup is normal and abelian");
    Ok(NormalAbelianIndex {
        alpha: witness.index(),
        witness,
    })
}

/// Least index of any abelian subgroup, normal or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianIndex {
    pub index: usize,
    /// An abelian subgroup of maximal order (the first one met by the
    /// deterministic search).
    pub witness: SubgroupSet,
}

struct Descent<'a> {
    g: &'a FiniteGroup,
    centralizers: Vec<ElemSet>,
    visited: HashSet<ElemSet>,
    best: ElemSet,
    best_len: usize,
}

impl Descent<'_> {
    /// `a` is abelian and `c` is its centralizer inside the current branch;
    /// every abelian subgroup containing `a` lies in `c`.
    fn descend(&mut self, a: ElemSet, a_len: usize, c: ElemSet, c_len: usize) {
        if c_len == a_len {
            if a_len > self.best_len {
                self.best = a;
                self.best_len = a_len;
            }
            return;
        }
        let mut branches: Vec<(usize, u32, ElemSet)> = c
            .iter()
            .filter(|&x| !a.contains(x))
            .map(|x| {
                let mut next_c = c.clone();
                next_c.intersect_with(&self.centralizers[x as usize]);
                (next_c.len(), x, next_c)
            })
            .collect();
        // most promising first, ties by element index
        branches.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
        for (next_c_len, x, next_c) in branches {
            if next_c_len <= self.best_len {
                // sorted descending, nothing later can do better
                break;
            }
            let next_a = self.adjoin(&a, x);
            if !self.visited.insert(next_a.clone()) {
                continue;
            }
            let next_len = next_a.len();
            self.descend(next_a, next_len, next_c, next_c_len);
        }
    }

    /// `⟨A, x⟩` for `x` centralizing `A`: the union of the cosets `A·xᵏ`.
    fn adjoin(&self, a: &ElemSet, x: u32) -> ElemSet {
        let g = self.g;
        let members: Vec<u32> = a.iter().collect();
        let mut out = a.clone();
        let mut power = x;
        while !a.contains(power) {
            for &m in &members {
                out.insert(g.mul(m, power));
            }
            power = g.mul(power, x);
        }
        out
    }
}

/// `min [G : A]` over all abelian subgroups `A`, found by descending through
/// centralizers from the center instead of enumerating the lattice.
pub fn min_abelian_index(g: &FiniteGroup, caps: &Caps) -> Result<AbelianIndex> {
    if g.order() > caps.lattice {
        return Err(GroupError::CapExceeded {
            what: "abelian subgroup search group order",
            cap: caps.lattice,
        });
    }
    if g.is_abelian() {
        return Ok(AbelianIndex {
            index: 1,
            witness: SubgroupSet::whole(g),
        });
    }
    let n = g.order();
    let centralizers: Vec<ElemSet> = g
        .elements()
        .map(|x| {
            let mut s = ElemSet::empty(n);
            for y in g.elements() {
                if g.commute(x, y) {
                    s.insert(y);
                }
            }
            s
        })
        .collect();
    let mut center = ElemSet::full(n);
    for c in &centralizers {
        center.intersect_with(c);
    }
    let center_len = center.len();
    let mut search = Descent {
        g,
        centralizers,
        visited: HashSet::new(),
        best: center.clone(),
        best_len: center_len,
    };
    search.descend(center, center_len, ElemSet::full(n), n);
    let witness = SubgroupSet::from_bits(n, search.best);
    Ok(AbelianIndex {
        index: witness.index(),
        witness,
    })
}
