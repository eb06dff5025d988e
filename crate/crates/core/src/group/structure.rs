use std::collections::BTreeMap;

use num_integer::Integer;

use crate::group::finite::FiniteGroup;
use crate::group::subgroup::SubgroupSet;

/// Basic structural facts about a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub order: usize,
    pub is_abelian: bool,
    pub center: SubgroupSet,
    /// lcm of element orders
    pub exponent: usize,
    /// element order -> number of elements of that order
    pub order_counts: BTreeMap<usize, usize>,
}

pub fn structure_report(g: &FiniteGroup) -> StructureReport {
    let mut order_counts = BTreeMap::new();
    let mut exponent = 1;
    for o in g.element_orders() {
        *order_counts.entry(o).or_insert(0) += 1;
        exponent = exponent.lcm(&o);
    }
    let center = SubgroupSet::whole(g).center(g);
    StructureReport {
        order: g.order(),
        is_abelian: center.order() == g.order(),
        center,
        exponent,
        order_counts,
    }
}
