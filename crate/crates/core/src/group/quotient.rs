use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::hom::GroupHomomorphism;
use crate::group::subgroup::SubgroupSet;

/// `G / N` together with the projection `G → G/N`.
///
/// Each coset is represented by its least element index; cosets are
/// numbered in increasing order of that representative, so the identity
/// coset is the one containing `G`'s identity.
pub fn quotient_group(g: &FiniteGroup, n: &SubgroupSet) -> Result<(FiniteGroup, GroupHomomorphism)> {
    if n.parent_order() != g.order() {
        return Err(GroupError::NotSubgroup("subgroup belongs to another group".into()));
    }
    if !n.is_normal(g) {
        return Err(GroupError::NotNormal {
            sub: "N",
            ambient: "G",
        });
    }
    let mut coset_of = vec![Elem::MAX; g.order()];
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != Elem::MAX {
            continue;
        }
        let id = reps.len() as Elem;
        reps.push(x);
        for &m in n.members() {
            coset_of[g.mul(x, m) as usize] = id;
        }
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b) as usize]);
        }
    }
    let mut q = FiniteGroup::from_table_unvalidated(k, table)?;
    if g.labels().is_some() {
        q = q.with_labels(reps.iter().map(|&r| format!("{}N", g.label(r))).collect())?;
    }
    let proj = GroupHomomorphism::new_unchecked(g, &q, coset_of);
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn cyclic(n: usize) -> FiniteGroup {
        let t = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as Elem))
            .collect();
        FiniteGroup::from_table(n, t, &Caps::default()).unwrap()
    }

    #[test]
    fn quotient_of_cyclic() {
        let g = cyclic(12);
        let n = SubgroupSet::generated_by(&g, &[4]);
        let (q, proj) = quotient_group(&g, &n).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.element_order(proj.apply(1)), 4);
        assert_eq!(proj.kernel(&g, &q), n);
        GroupHomomorphism::new(&g, &q, proj.map().to_vec()).unwrap();
    }

    #[test]
    fn extremes() {
        let g = cyclic(6);
        let (q, _) = quotient_group(&g, &SubgroupSet::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        let (q, proj) = quotient_group(&g, &SubgroupSet::trivial(&g)).unwrap();
        assert_eq!(q.order(), 6);
        assert!(proj.is_bijective(&q));
    }
}
