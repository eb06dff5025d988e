use std::collections::HashSet;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::finite::FiniteGroup;
use crate::group::subgroup::{ElemSet, Generated, SubgroupSet};

/// Normal closure of each conjugacy class, deduplicated.
fn class_closures(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for class in g.conjugacy_classes() {
        if class.contains(&g.identity()) {
            continue;
        }
        let mut closure = Generated::new(g);
        for &x in &class {
            closure.add(g, x);
        }
        let n = closure.into_subgroup(g);
        if seen.insert(n.bits().clone()) {
            out.push(n);
        }
    }
    out
}

/// `NM` for normal subgroups `N` and `M`, built as the union of the right
/// cosets `Nm`.
fn normal_product(g: &FiniteGroup, n: &SubgroupSet, m: &SubgroupSet) -> SubgroupSet {
    let mut bits = n.bits().clone();
    for &y in m.members() {
        if bits.contains(y) {
            continue;
        }
        for &x in n.members() {
            bits.insert(g.mul(x, y));
        }
    }
    SubgroupSet::from_bits(g.order(), bits)
}

/// Every normal subgroup of `g`, sorted by (order, members).
///
/// Each normal subgroup is the join of the normal closures of its
/// conjugacy classes, so the class closures and their iterated products
/// give the complete list without touching the full subgroup lattice.
pub fn enumerate_normal_subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    if g.order() > caps.normal_lattice {
        return Err(GroupError::CapExceeded {
            what: "normal subgroup group order",
            cap: caps.normal_lattice,
        });
    }
    let closures = class_closures(g);
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut normals = vec![SubgroupSet::trivial(g)];
    seen.insert(normals[0].bits().clone());
    for c in &closures {
        if seen.insert(c.bits().clone()) {
            normals.push(c.clone());
        }
    }
    let mut head = 0;
    while head < normals.len() {
        for c in &closures {
            if c.is_subgroup_of(&normals[head]) {
                continue;
            }
            let p = normal_product(g, &normals[head], c);
            if seen.insert(p.bits().clone()) {
                normals.push(p);
            }
        }
        head += 1;
    }
    normals.sort_by(|a, b| (a.order(), a).cmp(&(b.order(), b)));
    Ok(normals)
}
