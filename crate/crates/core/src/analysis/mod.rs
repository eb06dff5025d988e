//! Subgroup structure and the Jordan constant.

pub mod alpha;
pub mod jordan;
pub mod lattice;
pub mod normal;
pub mod simple;

pub use alpha::{min_abelian_index, min_normal_abelian_index, AbelianIndex, NormalAbelianIndex};
pub use jordan::{jordan_constant, jordan_constant_from_classes, AnalysisReport};
pub use lattice::{enumerate_subgroup_classes, SubgroupClass};
pub use normal::enumerate_normal_subgroups;
pub use simple::{is_simple, simple_nonabelian_classes, SimpleClass};
