//! Isomorphism testing by backtracking over generator images.
//!
//! A small generating set of the source is fixed; each generator may only
//! map to target elements with the same invariant (element order,
//! conjugacy class size, number of square roots). After each assignment
//! the partial map is extended over the subgroup generated so far and
//! rejected as soon as it stops being a well-defined injective
//! homomorphism.

use std::collections::HashMap;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::closure::close_generators;
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::hom::GroupHomomorphism;
use crate::group::perm::Permutation;
use crate::group::subgroup::{ElemSet, Generated};

type Invariant = (usize, usize, usize);

fn element_invariants(g: &FiniteGroup) -> Vec<Invariant> {
    let orders = g.element_orders();
    let mut class_size = vec![0usize; g.order()];
    for class in g.conjugacy_classes() {
        for &x in &class {
            class_size[x as usize] = class.len();
        }
    }
    let mut roots = vec![0usize; g.order()];
    for x in g.elements() {
        roots[g.mul(x, x) as usize] += 1;
    }
    (0..g.order())
        .map(|i| (orders[i], class_size[i], roots[i]))
        .collect()
}

struct Search<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    gens: Vec<Elem>,
    candidates: Vec<Vec<Elem>>,
    nodes: u64,
    budget: u64,
    limit: usize,
    found: Vec<Vec<Elem>>,
}

impl Search<'_> {
    /// Extend `gens[i] ↦ images[i]` over `⟨gens[..images.len()]⟩`.
    fn extend(&self, images: &[Elem]) -> Option<Vec<Elem>> {
        let (s, t) = (self.source, self.target);
        let gens = &self.gens[..images.len()];
        let mut map = vec![Elem::MAX; s.order()];
        let mut used = ElemSet::empty(t.order());
        map[s.identity() as usize] = t.identity();
        used.insert(t.identity());
        let mut queue = vec![s.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            let mx = map[x as usize];
            for (&g, &img) in gens.iter().zip(images) {
                let y = s.mul(x, g);
                let my = t.mul(mx, img);
                let slot = &mut map[y as usize];
                if *slot == Elem::MAX {
                    if !used.insert(my) {
                        return None;
                    }
                    *slot = my;
                    queue.push(y);
                } else if *slot != my {
                    return None;
                }
            }
            head += 1;
        }
        Some(map)
    }

    fn run(&mut self, images: &mut Vec<Elem>) -> Result<()> {
        let depth = images.len();
        for ci in 0..self.candidates[depth].len() {
            let cand = self.candidates[depth][ci];
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(GroupError::CapExceeded {
                    what: "isomorphism search nodes",
                    cap: self.budget as usize,
                });
            }
            images.push(cand);
            if let Some(map) = self.extend(images) {
                if images.len() == self.gens.len() {
                    self.found.push(map);
                } else {
                    self.run(images)?;
                }
            }
            images.pop();
            if self.found.len() >= self.limit {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// All isomorphisms `source → target`, up to `limit` of them, as image lists.
pub fn isomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    limit: usize,
    caps: &Caps,
) -> Result<Vec<Vec<Elem>>> {
    if source.order() != target.order() {
        return Ok(Vec::new());
    }
    let inv_s = element_invariants(source);
    let inv_t = element_invariants(target);
    let mut profile_s = inv_s.clone();
    let mut profile_t = inv_t.clone();
    profile_s.sort_unstable();
    profile_t.sort_unstable();
    if profile_s != profile_t {
        return Ok(Vec::new());
    }
    let mut buckets: HashMap<Invariant, Vec<Elem>> = HashMap::new();
    for (x, inv) in inv_t.iter().enumerate() {
        buckets.entry(*inv).or_default().push(x as Elem);
    }

    // greedy generating set: rare invariants first, then large orders
    let mut order: Vec<Elem> = source.elements().collect();
    order.sort_by_key(|&x| {
        let inv = inv_s[x as usize];
        (buckets[&inv].len(), std::cmp::Reverse(inv.0), x)
    });
    let mut closure = Generated::new(source);
    for &x in &order {
        if closure.len() == source.order() {
            break;
        }
        closure.add(source, x);
    }
    let gens = closure.gens().to_vec();
    let candidates = gens
        .iter()
        .map(|&g| buckets[&inv_s[g as usize]].clone())
        .collect();

    if gens.is_empty() {
        return Ok(vec![vec![target.identity()]]);
    }
    let mut search = Search {
        source,
        target,
        gens,
        candidates,
        nodes: 0,
        budget: caps.isomorphism_nodes,
        limit,
        found: Vec::new(),
    };
    search.run(&mut Vec::new())?;
    Ok(search.found)
}

/// Decide whether two groups are isomorphic; on success return a witness
/// bijective homomorphism `g1 → g2`.
pub fn are_isomorphic(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    caps: &Caps,
) -> Result<Option<GroupHomomorphism>> {
    Ok(isomorphisms(g1, g2, 1, caps)?
        .pop()
        .map(|map| GroupHomomorphism::new_unchecked(g1, g2, map)))
}

/// Every automorphism of `h` as a permutation of its element indices,
/// sorted by image list.
pub fn automorphisms(h: &FiniteGroup, caps: &Caps) -> Result<Vec<Permutation>> {
    if h.order() > caps.automorphism {
        return Err(GroupError::CapExceeded {
            what: "automorphism group input order",
            cap: caps.automorphism,
        });
    }
    let maps = isomorphisms(h, h, caps.closure + 1, caps)?;
    if maps.len() > caps.closure {
        return Err(GroupError::CapExceeded {
            what: "automorphism count",
            cap: caps.closure,
        });
    }
    let mut perms: Vec<Permutation> = maps
        .into_iter()
        .map(|m| Permutation::from_images(m).expect("isomorphism is a bijection"))
        .collect();
    perms.sort();
    Ok(perms)
}

/// `Aut(h)` as a permutation group on the elements of `h`.
pub fn automorphism_group(h: &FiniteGroup, caps: &Caps) -> Result<FiniteGroup> {
    let all = automorphisms(h, caps)?;
    // greedy generators, in sorted order, until the closure has them all
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = close_generators(h.order(), &gens, caps)?;
    for p in &all {
        if current.group.order() == all.len() {
            break;
        }
        if current.elements.contains(p) {
            continue;
        }
        gens.push(p.clone());
        current = close_generators(h.order(), &gens, caps)?;
    }
    debug_assert_eq!(current.group.order(), all.len());
    Ok(current.group)
}
