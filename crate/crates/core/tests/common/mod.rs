//! Brute-force oracles. They read only the Cayley table and share no code
//! with the enumeration engine.
#![allow(dead_code)]

use std::collections::BTreeSet;

use jordan_kit_core::FiniteGroup;

pub type Members = Vec<u32>;

fn closure_of(g: &FiniteGroup, gens: &[u32]) -> Members {
    let n = g.order();
    let mut seen = vec![false; n];
    let e = g.identity();
    seen[e as usize] = true;
    let mut stack = vec![e];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    (0..n as u32).filter(|&x| seen[x as usize]).collect()
}

/// Every subgroup, found by adjoining one element at a time to subgroups
/// already known. Each subgroup is reached because it is generated by a
/// chain `⟨x₁⟩ ⊂ ⟨x₁,x₂⟩ ⊂ …`.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Members> {
    let mut known: BTreeSet<Members> = BTreeSet::new();
    let mut frontier: Vec<(Members, Vec<u32>)> = vec![(vec![g.identity()], vec![])];
    known.insert(vec![g.identity()]);
    while let Some((h, gens)) = frontier.pop() {
        let mut inside = vec![false; g.order()];
        for &x in &h {
            inside[x as usize] = true;
        }
        for x in g.elements() {
            if inside[x as usize] {
                continue;
            }
            let mut ext = gens.clone();
            ext.push(x);
            let k = closure_of(g, &ext);
            // ⟨H, hx⟩ = ⟨H, x⟩
            for &h0 in &h {
                inside[g.mul(h0, x) as usize] = true;
            }
            if known.insert(k.clone()) {
                frontier.push((k, ext));
            }
        }
    }
    known.into_iter().collect()
}

pub fn conjugate(g: &FiniteGroup, h: &[u32], by: u32) -> Members {
    let mut v: Members = h.iter().map(|&x| g.conj(by, x)).collect();
    v.sort_unstable();
    v
}

pub fn is_normal(g: &FiniteGroup, h: &[u32], within: &[u32]) -> bool {
    let set: BTreeSet<u32> = h.iter().copied().collect();
    within
        .iter()
        .all(|&t| h.iter().all(|&x| set.contains(&g.conj(t, x))))
}

pub fn is_abelian(g: &FiniteGroup, h: &[u32]) -> bool {
    h.iter().all(|&a| h.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Number of conjugacy classes of subgroups.
pub fn subgroup_class_count(g: &FiniteGroup, subs: &[Members]) -> usize {
    let mut seen: BTreeSet<Members> = BTreeSet::new();
    let mut classes = 0;
    for h in subs {
        if seen.contains(h) {
            continue;
        }
        classes += 1;
        for x in g.elements() {
            seen.insert(conjugate(g, h, x));
        }
    }
    classes
}

/// Normal subgroups as unions of conjugacy classes that contain the
/// identity and happen to be closed.
pub fn normal_subgroups_by_classes(g: &FiniteGroup) -> Vec<Members> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Members> = Vec::new();
    for x in g.elements() {
        if class_of[x as usize] != usize::MAX {
            continue;
        }
        let mut c: BTreeSet<u32> = BTreeSet::new();
        for t in g.elements() {
            c.insert(g.conj(t, x));
        }
        for &y in &c {
            class_of[y as usize] = classes.len();
        }
        classes.push(c.into_iter().collect());
    }
    let id_class = class_of[g.identity() as usize];
    let others: Vec<usize> = (0..classes.len()).filter(|&c| c != id_class).collect();
    assert!(others.len() < 24, "too many classes for subset enumeration");
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut members: Members = classes[id_class].clone();
        for (bit, &c) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                members.extend(&classes[c]);
            }
        }
        if !n.is_multiple_of(members.len()) {
            continue;
        }
        let set: BTreeSet<u32> = members.iter().copied().collect();
        if members
            .iter()
            .all(|&a| members.iter().all(|&b| set.contains(&g.mul(a, b))))
        {
            out.push(set.into_iter().collect());
        }
    }
    out.sort_by(|a: &Members, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// α(K) from a list that contains every subgroup of `K`.
pub fn alpha(g: &FiniteGroup, k: &[u32], subs: &[Members]) -> usize {
    let kset: BTreeSet<u32> = k.iter().copied().collect();
    subs.iter()
        .filter(|a| a.iter().all(|x| kset.contains(x)))
        .filter(|a| is_abelian(g, a) && is_normal(g, a, k))
        .map(|a| k.len() / a.len())
        .min()
        .expect("trivial subgroup qualifies")
}

pub fn jordan(g: &FiniteGroup, subs: &[Members]) -> usize {
    subs.iter().map(|k| alpha(g, k, subs)).max().unwrap()
}

pub fn min_abelian_index(g: &FiniteGroup, subs: &[Members]) -> usize {
    subs.iter()
        .filter(|a| is_abelian(g, a))
        .map(|a| g.order() / a.len())
        .min()
        .unwrap()
}

/// Permutation groups on {0..n} straight from the definition, as a check
/// on the family constructors: every permutation of the right parity.
pub fn symmetric_by_definition(n: usize, even_only: bool) -> FiniteGroup {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let parity = |p: &[usize]| {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    };
    let mut all: Vec<Vec<usize>> = perms(n)
        .into_iter()
        .filter(|p| !even_only || parity(p) == 0)
        .collect();
    all.sort();
    let idx = |p: &Vec<usize>| all.binary_search(p).unwrap() as u32;
    let mut table = Vec::with_capacity(all.len() * all.len());
    for a in &all {
        for b in &all {
            let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
            table.push(idx(&c));
        }
    }
    FiniteGroup::from_table(all.len(), table, &Default::default()).unwrap()
}
