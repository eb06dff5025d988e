use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analysis::alpha::min_normal_abelian_index;
use crate::analysis::lattice::{enumerate_subgroup_classes, SubgroupClass};
use crate::caps::Caps;
use crate::error::Result;
use crate::group::finite::FiniteGroup;
use crate::group::subgroup::SubgroupSet;

/// Jordan constant of a finite group with the subgroup pair realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub order: usize,
    /// `J_G = max α(K)` over subgroups `K`.
    pub jordan_constant: usize,
    /// Largest order of a finite subgroup, i.e. `|G|`.
    pub bound_constant: usize,
    /// A subgroup `K` with `α(K) = J_G`.
    pub witness_subgroup: SubgroupSet,
    /// Normal abelian `A ⊴ K` with `[K : A] = J_G`.
    pub witness_abelian: SubgroupSet,
    pub subgroup_class_count: usize,
    /// Wall-clock time of the computation; not part of any serialized report.
    pub elapsed: Duration,
}

struct ClassAlpha {
    alpha: usize,
    subgroup: SubgroupSet,
    abelian: SubgroupSet,
}

fn class_alpha(g: &FiniteGroup, class: &SubgroupClass, caps: &Caps) -> Result<ClassAlpha> {
    let k = &class.representative;
    if class.is_abelian {
        return Ok(ClassAlpha {
            alpha: 1,
            subgroup: k.clone(),
            abelian: k.clone(),
        });
    }
    let kg = k.to_group(g);
    let r = min_normal_abelian_index(&kg, caps)?;
    Ok(ClassAlpha {
        alpha: r.alpha,
        subgroup: k.clone(),
        abelian: k.lift(&r.witness),
    })
}

/// `J_G` from a precomputed class list.
///
/// Classes are evaluated in parallel; the winner is the largest `α`, then
/// the largest subgroup, then the lexicographically least subgroup, so the
/// result does not depend on scheduling.
pub fn jordan_constant_from_classes(
    g: &FiniteGroup,
    classes: &[SubgroupClass],
    caps: &Caps,
) -> Result<AnalysisReport> {
    let start = Instant::now();
    let alphas: Vec<ClassAlpha> = classes
        .par_iter()
        .map(|c| class_alpha(g, c, caps))
        .collect::<Result<_>>()?;
    let best = alphas
        .into_iter()
        .reduce(|best, c| {
            let better = c.alpha > best.alpha
                || (c.alpha == best.alpha
                    && (c.subgroup.order() > best.subgroup.order()
                        || (c.subgroup.order() == best.subgroup.order()
                            && c.subgroup < best.subgroup)));
            if better {
                c
            } else {
                best
            }
        })
        .expect("the trivial subgroup is always a class");
    Ok(AnalysisReport {
        order: g.order(),
        jordan_constant: best.alpha,
        bound_constant: g.order(),
        witness_subgroup: best.subgroup,
        witness_abelian: best.abelian,
        subgroup_class_count: classes.len(),
        elapsed: start.elapsed(),
    })
}

/// Jordan constant of `g`: the largest minimal normal-abelian index over all
/// subgroups, with witnesses.
pub fn jordan_constant(g: &FiniteGroup, caps: &Caps) -> Result<AnalysisReport> {
    let start = Instant::now();
    let classes = enumerate_subgroup_classes(g, caps)?;
    let mut report = jordan_constant_from_classes(g, &classes, caps)?;
    report.elapsed = start.elapsed();
    Ok(report)
}
