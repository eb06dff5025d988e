use crate::analysis::lattice::enumerate_subgroup_classes;
use crate::caps::Caps;
use crate::error::Result;
use crate::group::finite::FiniteGroup;
use crate::group::iso::are_isomorphic;
use crate::group::subgroup::{Generated, SubgroupSet};

/// One isomorphism class of simple nonabelian subgroups.
#[derive(Debug, Clone)]
pub struct SimpleClass {
    /// First subgroup of this type in lattice order.
    pub representative: SubgroupSet,
    pub group: FiniteGroup,
}

/// Every nontrivial conjugacy class generates the whole group.
pub fn is_simple(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return false;
    }
    g.conjugacy_classes()
        .into_iter()
        .filter(|c| !c.contains(&g.identity()))
        .all(|class| {
            let mut closure = Generated::new(g);
            for &x in &class {
                closure.add(g, x);
            }
            closure.len() == g.order()
        })
}

/// Simple nonabelian subgroups of `g`, one per isomorphism type, sorted by
/// order.
pub fn simple_nonabelian_classes(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SimpleClass>> {
    let mut out: Vec<SimpleClass> = Vec::new();
    for class in enumerate_subgroup_classes(g, caps)? {
        if class.is_abelian {
            continue;
        }
        let kg = class.representative.to_group(g);
        if !is_simple(&kg) {
            continue;
        }
        let mut duplicate = false;
        for seen in out.iter().filter(|s| s.group.order() == kg.order()) {
            if are_isomorphic(&seen.group, &kg, caps)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            out.push(SimpleClass {
                representative: class.representative,
                group: kg,
            });
        }
    }
    Ok(out)
}
