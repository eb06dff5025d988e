//! Exact finite groups as Cayley tables, and the structural operations the
//! analysis is built on.

pub mod closure;
pub mod cores;
pub mod finite;
pub mod hom;
pub mod iso;
pub mod perm;
pub mod product;
pub mod quotient;
pub mod structure;
pub mod subgroup;

pub use closure::{close_generators, matrix_group_over_prime_field, Closure, PrimeFieldMatrix};
pub use cores::{coset_action_kernel, intersect_conjugates, normal_core, ConjugateIntersection};
pub use finite::{Elem, FiniteGroup};
pub use hom::GroupHomomorphism;
pub use iso::{are_isomorphic, automorphism_group, automorphisms};
pub use perm::Permutation;
pub use product::{direct_product, product_factors, product_projections, semidirect_parts, semidirect_product};
pub use quotient::quotient_group;
pub use structure::{structure_report, StructureReport};
pub use subgroup::{ElemSet, SubgroupSet};
