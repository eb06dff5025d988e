use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::hom::GroupHomomorphism;
use crate::group::subgroup::{ElemSet, SubgroupSet};

/// `G1 × G2` with element `(i, j)` at index `i·|G2| + j`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup, caps: &Caps) -> Result<FiniteGroup> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1
        .checked_mul(n2)
        .filter(|&n| n <= caps.closure)
        .ok_or(GroupError::CapExceeded {
            what: "direct product",
            cap: caps.closure,
        })?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (a1, a2) = ((a / n2) as Elem, (a % n2) as Elem);
        for b in 0..n {
            let (b1, b2) = ((b / n2) as Elem, (b % n2) as Elem);
            table.push(g1.mul(a1, b1) * n2 as Elem + g2.mul(a2, b2));
        }
    }
    let group = FiniteGroup::from_table_unvalidated(n, table)?;
    match (g1.labels(), g2.labels()) {
        (None, None) => Ok(group),
        _ => {
            let labels = (0..n)
                .map(|a| {
                    format!(
                        "({}, {})",
                        g1.label((a / n2) as Elem),
                        g2.label((a % n2) as Elem)
                    )
                })
                .collect();
            group.with_labels(labels)
        }
    }
}

/// The two coordinate subgroups `G1 × 1` and `1 × G2` of a direct product
/// built by [`direct_product`].
pub fn product_factors(g1: &FiniteGroup, g2: &FiniteGroup) -> (SubgroupSet, SubgroupSet) {
    let n2 = g2.order();
    let n = g1.order() * n2;
    let mut left = ElemSet::empty(n);
    let mut right = ElemSet::empty(n);
    for i in g1.elements() {
        left.insert(i * n2 as Elem + g2.identity());
    }
    for j in g2.elements() {
        right.insert(g1.identity() * n2 as Elem + j);
    }
    (SubgroupSet::from_bits(n, left), SubgroupSet::from_bits(n, right))
}

/// Coordinate projections of a direct product built by [`direct_product`].
pub fn product_projections(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    product: &FiniteGroup,
) -> (GroupHomomorphism, GroupHomomorphism) {
    let n2 = g2.order() as Elem;
    let p1 = product.elements().map(|a| a / n2).collect();
    let p2 = product.elements().map(|a| a % n2).collect();
    (
        GroupHomomorphism::new_unchecked(product, g1, p1),
        GroupHomomorphism::new_unchecked(product, g2, p2),
    )
}

/// `N ⋊ H` on pairs `(n, h)` (index `n·|H| + h`) with
/// `(n, h)(n′, h′) = (n·action[h](n′), hh′)`.
///
/// `action[h]` is the image list of an automorphism of `N`; the assignment
/// `h ↦ action[h]` must be a homomorphism. Both are validated.
pub fn semidirect_product(
    n_group: &FiniteGroup,
    h_group: &FiniteGroup,
    action: &[Vec<Elem>],
    caps: &Caps,
) -> Result<FiniteGroup> {
    let (nn, nh) = (n_group.order(), h_group.order());
    if action.len() != nh {
        return Err(GroupError::InvalidParameter(format!(
            "action has {} entries, complement has order {}",
            action.len(),
            nh
        )));
    }
    for (h, phi) in action.iter().enumerate() {
        let bijective = phi.len() == nn && {
            let mut seen = ElemSet::empty(nn);
            phi.iter().all(|&x| (x as usize) < nn && seen.insert(x))
        };
        if !bijective {
            return Err(GroupError::ActionNotAutomorphism(h));
        }
        for a in n_group.elements() {
            for b in n_group.elements() {
                if phi[n_group.mul(a, b) as usize] != n_group.mul(phi[a as usize], phi[b as usize])
                {
                    return Err(GroupError::ActionNotAutomorphism(h));
                }
            }
        }
    }
    for h1 in h_group.elements() {
        for h2 in h_group.elements() {
            let composed = &action[h_group.mul(h1, h2) as usize];
            let (p1, p2) = (&action[h1 as usize], &action[h2 as usize]);
            if n_group
                .elements()
                .any(|x| composed[x as usize] != p1[p2[x as usize] as usize])
            {
                return Err(GroupError::ActionNotHomomorphism);
            }
        }
    }
    let n = nn
        .checked_mul(nh)
        .filter(|&n| n <= caps.closure)
        .ok_or(GroupError::CapExceeded {
            what: "semidirect product",
            cap: caps.closure,
        })?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (a_n, a_h) = ((a / nh) as Elem, (a % nh) as Elem);
        let phi = &action[a_h as usize];
        for b in 0..n {
            let (b_n, b_h) = ((b / nh) as Elem, (b % nh) as Elem);
            let first = n_group.mul(a_n, phi[b_n as usize]);
            table.push(first * nh as Elem + h_group.mul(a_h, b_h));
        }
    }
    FiniteGroup::from_table_unvalidated(n, table)
}

/// The copies `N × 1` (normal) and `1 × H` (complement) inside a
/// semidirect product built by [`semidirect_product`].
pub fn semidirect_parts(n_group: &FiniteGroup, h_group: &FiniteGroup) -> (SubgroupSet, SubgroupSet) {
    product_factors(n_group, h_group)
}
