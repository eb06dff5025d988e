//! Exact finite-group computations around Jordan constants.
//!
//! Groups are stored as full Cayley tables ([`FiniteGroup`]); subgroups as
//! sorted member lists ([`SubgroupSet`]). On top of that sit the subgroup
//! lattice and the Jordan constant ([`analysis`]), the named group families
//! ([`constructions`]), closed-form bound tables ([`bounds`]) and
//! executable inequality checks ([`theorems`]).

pub mod analysis;
pub mod bounds;
pub mod caps;
pub mod constructions;
pub mod error;
pub mod group;
pub mod theorems;

pub use analysis::{jordan_constant, AnalysisReport, SubgroupClass};
pub use caps::Caps;
pub use constructions::{GroupSpec, ZarhinParams};
pub use error::{GroupError, Result};
pub use group::{Elem, FiniteGroup, GroupHomomorphism, Permutation, SubgroupSet};
pub use theorems::CheckRecord;
