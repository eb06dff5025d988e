use std::time::Instant;

use jordan_kit_core::analysis::{
    enumerate_normal_subgroups, enumerate_subgroup_classes, is_simple, jordan_constant,
    min_abelian_index, min_normal_abelian_index, simple_nonabelian_classes,
};
use jordan_kit_core::bounds::collins_value;
use jordan_kit_core::constructions::{
    abelian_group, alternating_group, binary_icosahedral_group, dihedral_group, symmetric_group,
};
use jordan_kit_core::group::{are_isomorphic, structure_report};
use jordan_kit_core::{Caps, FiniteGroup, SubgroupSet};

fn caps() -> Caps {
    Caps::default()
}

fn check_report_invariants(g: &FiniteGroup) -> usize {
    let r = jordan_constant(g, &caps()).unwrap();
    let k = &r.witness_subgroup;
    let a = &r.witness_abelian;
    assert!(a.is_subgroup_of(k));
    assert!(a.is_abelian(g));
    assert!(a.is_normal_in(g, k));
    assert_eq!(a.index_in(k).unwrap(), r.jordan_constant);
    assert!(r.jordan_constant <= r.bound_constant);
    assert_eq!(r.bound_constant, g.order());
    r.jordan_constant
}

#[test]
fn trivial_group_has_one_class() {
    let g = FiniteGroup::trivial();
    assert_eq!(enumerate_subgroup_classes(&g, &caps()).unwrap().len(), 1);
    assert_eq!(check_report_invariants(&g), 1);
}

#[test]
fn normal_subgroup_examples() {
    let c = caps();
    let v = abelian_group(&[2, 4], &c).unwrap();
    let all: usize = enumerate_subgroup_classes(&v, &c).unwrap().len();
    assert_eq!(enumerate_normal_subgroups(&v, &c).unwrap().len(), all);
    let s4 = symmetric_group(4, &c).unwrap();
    let orders: Vec<usize> = enumerate_normal_subgroups(&s4, &c)
        .unwrap()
        .iter()
        .map(SubgroupSet::order)
        .collect();
    assert_eq!(orders, [1, 4, 12, 24]);
    let a5 = alternating_group(5, &c).unwrap();
    assert_eq!(enumerate_normal_subgroups(&a5, &c).unwrap().len(), 2);
}

#[test]
fn alpha_examples() {
    let c = caps();
    let s4 = symmetric_group(4, &c).unwrap();
    let a = min_normal_abelian_index(&s4, &c).unwrap();
    assert_eq!(a.alpha, 6);
    assert_eq!(a.witness.order(), 4);
    let a5 = alternating_group(5, &c).unwrap();
    let a = min_normal_abelian_index(&a5, &c).unwrap();
    assert_eq!(a.alpha, 60);
    assert!(a.witness.is_trivial());
    let v = abelian_group(&[3, 3], &c).unwrap();
    let a = min_normal_abelian_index(&v, &c).unwrap();
    assert_eq!(a.alpha, 1);
    assert!(a.witness.is_whole());
}

#[test]
fn min_abelian_index_examples() {
    let c = caps();
    assert_eq!(min_abelian_index(&abelian_group(&[2, 2], &c).unwrap(), &c).unwrap().index, 1);
    assert_eq!(min_abelian_index(&dihedral_group(4, &c).unwrap(), &c).unwrap().index, 2);
    let a5 = alternating_group(5, &c).unwrap();
    let m = min_abelian_index(&a5, &c).unwrap();
    assert_eq!(m.index, 12);
    assert!(m.index <= min_normal_abelian_index(&a5, &c).unwrap().alpha);
}

#[test]
fn symmetric_jordan_constants() {
    let c = caps();
    assert_eq!(check_report_invariants(&symmetric_group(3, &c).unwrap()), 2);
    assert_eq!(check_report_invariants(&symmetric_group(4, &c).unwrap()), 6);
    let s5 = symmetric_group(5, &c).unwrap();
    let start = Instant::now();
    let r = jordan_constant(&s5, &c).unwrap();
    assert!(start.elapsed().as_secs_f64() < 10.0);
    assert_eq!(r.jordan_constant, 120);
    assert!(r.witness_subgroup.is_whole());
    assert!(r.witness_abelian.is_trivial());
}

#[test]
fn sym6_jordan_constant() {
    let s6 = symmetric_group(6, &caps()).unwrap();
    let start = Instant::now();
    let r = jordan_constant(&s6, &caps()).unwrap();
    assert!(start.elapsed().as_secs_f64() < 120.0);
    assert_eq!(r.jordan_constant, 720);
    assert_eq!(r.subgroup_class_count, 56);
}

#[test]
fn binary_icosahedral_witness() {
    let c = caps();
    let g = binary_icosahedral_group(&c).unwrap();
    assert_eq!(structure_report(&g).center.order(), 2);
    let r = jordan_constant(&g, &c).unwrap();
    assert_eq!(r.jordan_constant, 60);
    assert_eq!(collins_value(2).unwrap().value, 60u32.into());
    assert_eq!(r.witness_abelian, SubgroupSet::whole(&g).center(&g));
    assert!(r.witness_subgroup.is_whole());
}

#[test]
fn alternating_alpha_growth() {
    let c = caps();
    for (n, expected) in [(5, 60), (6, 360), (7, 2520)] {
        let g = alternating_group(n, &c).unwrap();
        let start = Instant::now();
        let a = min_normal_abelian_index(&g, &c).unwrap();
        assert!(start.elapsed().as_secs_f64() < 60.0);
        assert_eq!(a.alpha, expected, "alt {n}");
    }
}

#[test]
fn simple_class_examples() {
    let c = caps();
    assert!(simple_nonabelian_classes(&symmetric_group(4, &c).unwrap(), &c).unwrap().is_empty());
    let s5 = symmetric_group(5, &c).unwrap();
    let found = simple_nonabelian_classes(&s5, &c).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].group.order(), 60);
    let s6 = symmetric_group(6, &c).unwrap();
    let found = simple_nonabelian_classes(&s6, &c).unwrap();
    let orders: Vec<usize> = found.iter().map(|s| s.group.order()).collect();
    assert_eq!(orders, [60, 360]);
    assert!(are_isomorphic(&found[0].group, &alternating_group(5, &c).unwrap(), &c)
        .unwrap()
        .is_some());
    assert!(is_simple(&alternating_group(5, &c).unwrap()));
    assert!(!is_simple(&abelian_group(&[4], &c).unwrap()));
    assert!(is_simple(&abelian_group(&[5], &c).unwrap()));
}

#[test]
fn simple_groups_have_alpha_equal_to_order() {
    let c = caps();
    for g in [alternating_group(5, &c).unwrap(), alternating_group(6, &c).unwrap()] {
        let a = min_normal_abelian_index(&g, &c).unwrap().alpha;
        assert_eq!(a, g.order());
    }
    assert_eq!(check_report_invariants(&alternating_group(5, &c).unwrap()), 60);
}

#[test]
fn lattice_cap_is_enforced() {
    let c = Caps { lattice: 100, ..Caps::default() };
    let s5 = symmetric_group(5, &c).unwrap();
    assert!(enumerate_subgroup_classes(&s5, &c).unwrap_err().is_cap_exceeded());
    assert!(jordan_constant(&s5, &c).unwrap_err().is_cap_exceeded());
}
