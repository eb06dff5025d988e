//! Conjugacy classes of subgroups.
//!
//! Every subgroup is generated by its cyclic subgroups of prime-power
//! order, so starting from the trivial subgroup and repeatedly joining a
//! class representative with one such cyclic subgroup reaches every class.
//! Joining only representatives is enough because
//! `⟨gHg⁻¹, C⟩ = g⟨H, g⁻¹Cg⟩g⁻¹`. A new subgroup is recognised by looking
//! it up in the set of all conjugates of the classes found so far.

use std::collections::HashSet;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::subgroup::{ElemSet, Generated, SubgroupSet};

/// One conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    /// The conjugate with the lexicographically least member sequence.
    pub representative: SubgroupSet,
    /// Number of conjugates.
    pub class_size: usize,
    pub is_normal: bool,
    pub is_abelian: bool,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

fn is_prime_power(mut n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Distinct cyclic subgroups of prime-power order, each with its least
/// generator, ordered by (order, generator).
pub(crate) fn prime_power_cyclics(g: &FiniteGroup) -> Vec<(Elem, SubgroupSet)> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        if !is_prime_power(g.element_order(x)) {
            continue;
        }
        let c = SubgroupSet::generated_by(g, &[x]);
        if seen.insert(c.bits().clone()) {
            out.push((x, c));
        }
    }
    out.sort_by_key(|(x, c)| (c.order(), *x));
    out
}

struct Found {
    subgroup: SubgroupSet,
    gens: Vec<Elem>,
    class_size: usize,
}

/// Exactly one representative per conjugacy class of subgroups of `g`,
/// sorted by (order, representative).
pub fn enumerate_subgroup_classes(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupClass>> {
    if g.order() > caps.lattice {
        return Err(GroupError::CapExceeded {
            what: "subgroup lattice group order",
            cap: caps.lattice,
        });
    }
    let cyclics = prime_power_cyclics(g);
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let trivial = SubgroupSet::trivial(g);
    seen.insert(trivial.bits().clone());
    let mut found = vec![Found {
        subgroup: trivial,
        gens: Vec::new(),
        class_size: 1,
    }];

    let mut head = 0;
    while head < found.len() {
        for (c, _) in &cyclics {
            let rep = &found[head];
            if rep.subgroup.contains(*c) {
                continue;
            }
            let mut join = Generated::from_subgroup(&rep.subgroup, &rep.gens);
            join.add(g, *c);
            let joined = join.to_subgroup(g);
            if seen.contains(joined.bits()) {
                continue;
            }
            let gens = join.gens().to_vec();
            found.push(new_class(g, joined, &gens, &mut seen));
        }
        head += 1;
    }

    let mut classes: Vec<SubgroupClass> = found
        .into_iter()
        .map(|f| SubgroupClass {
            is_normal: f.class_size == 1,
            is_abelian: f.subgroup.is_abelian(g),
            class_size: f.class_size,
            representative: f.subgroup,
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.order(), &a.representative).cmp(&(b.order(), &b.representative))
    });
    Ok(classes)
}

/// Register every conjugate of `h` and return the canonical representative.
fn new_class(g: &FiniteGroup, h: SubgroupSet, gens: &[Elem], seen: &mut HashSet<ElemSet>) -> Found {
    let mut conjugates: HashSet<ElemSet> = HashSet::new();
    let mut best: Option<(SubgroupSet, Elem)> = None;
    for t in g.elements() {
        let c = h.conjugate(g, t);
        if !conjugates.insert(c.bits().clone()) {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, t));
        }
    }
    let class_size = conjugates.len();
    seen.extend(conjugates);
    let (subgroup, t) = best.expect("at least one conjugate");
    Found {
        gens: gens.iter().map(|&x| g.conj(t, x)).collect(),
        subgroup,
        class_size,
    }
}
