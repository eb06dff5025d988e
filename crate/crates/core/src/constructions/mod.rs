//! Named group families and declarative construction recipes.

pub mod families;
pub mod zarhin;

use std::fmt;

pub use families::{
    abelian_group, alternating_group, binary_icosahedral_group, cyclic_group, dihedral_group,
    multiplier_action, quaternion_group, standard_family, symmetric_group, Family,
};
pub use zarhin::{zarhin_group, zarhin_index, zarhin_roots_of_unity, ZarhinParams};

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::closure::{close_generators, matrix_group_over_prime_field};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::perm::Permutation;
use crate::group::product::{direct_product, product_factors};
use crate::group::subgroup::SubgroupSet;

/// A recipe for a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Family(Family),
    Permutation {
        degree: usize,
        generators: Vec<Permutation>,
    },
    Matrix {
        dim: usize,
        p: u32,
        generators: Vec<Vec<Vec<i64>>>,
    },
    Cayley {
        order: usize,
        /// row-major
        table: Vec<Elem>,
        labels: Option<Vec<String>>,
    },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn family(f: Family) -> Self {
        GroupSpec::Family(f)
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Short human-readable description used in reports.
    pub fn summary(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(fam) => write!(f, "{fam}"),
            GroupSpec::Permutation { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                write!(f, "perm{degree}<{}>", gens.join(","))
            }
            GroupSpec::Matrix { dim, p, generators } => {
                write!(f, "matrix{dim}x{dim}/F{p}<{} generators>", generators.len())
            }
            GroupSpec::Cayley { order, .. } => write!(f, "cayley({order})"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// Build the group described by `spec`.
pub fn from_spec(spec: &GroupSpec, caps: &Caps) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Family(f) => standard_family(f, caps),
        GroupSpec::Permutation { degree, generators } => {
            Ok(close_generators(*degree, generators, caps)?.group)
        }
        GroupSpec::Matrix { dim, p, generators } => {
            Ok(matrix_group_over_prime_field(*dim, *p, generators, caps)?.group)
        }
        GroupSpec::Cayley {
            order,
            table,
            labels,
        } => {
            let g = FiniteGroup::from_table(*order, table.clone(), caps)?;
            match labels {
                Some(l) => g.with_labels(l.clone()),
                None => Ok(g),
            }
        }
        GroupSpec::DirectProduct(a, b) => {
            direct_product(&from_spec(a, caps)?, &from_spec(b, caps)?, caps)
        }
    }
}

/// Structural side data a corpus entry carries into the checks.
#[derive(Debug, Clone)]
pub enum Decomposition {
    /// `G = G1 × G2`, with both factor groups.
    DirectProduct {
        left: FiniteGroup,
        right: FiniteGroup,
    },
    /// `G = N ⋊ S` as subgroups of `G`.
    Split {
        normal: SubgroupSet,
        complement: SubgroupSet,
    },
}

/// A group built from a spec, with any decomposition the spec implies.
#[derive(Debug, Clone)]
pub struct BuiltGroup {
    pub name: String,
    pub spec: GroupSpec,
    pub group: FiniteGroup,
    pub decomposition: Option<Decomposition>,
}

pub fn build(name: impl Into<String>, spec: GroupSpec, caps: &Caps) -> Result<BuiltGroup> {
    let group = from_spec(&spec, caps)?;
    let decomposition = match &spec {
        GroupSpec::DirectProduct(a, b) => Some(Decomposition::DirectProduct {
            left: from_spec(a, caps)?,
            right: from_spec(b, caps)?,
        }),
        GroupSpec::Family(Family::CyclicSemidirect { n, k, .. }) => {
            let (normal, complement) =
                product_factors(&cyclic_group(*n, caps)?, &cyclic_group(*k, caps)?);
            Some(Decomposition::Split { normal, complement })
        }
        _ => None,
    };
    Ok(BuiltGroup {
        name: name.into(),
        spec,
        group,
        decomposition,
    })
}

/// Named entry of a verification corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
}

fn entry(spec: GroupSpec) -> CorpusEntry {
    CorpusEntry {
        name: spec.summary(),
        spec,
    }
}

/// The built-in verification corpus: small family groups, direct and
/// semidirect products of order at most 64, and the larger groups
/// `Sym₄`, `Sym₅`, `Alt₅`, `SL₂(F₅)`.
pub fn default_corpus() -> Vec<CorpusEntry> {
    use Family::*;
    let f = GroupSpec::Family;
    let base = [
        Cyclic(1),
        Cyclic(2),
        Cyclic(3),
        Cyclic(4),
        Cyclic(5),
        Cyclic(6),
        Cyclic(7),
        Cyclic(8),
        Abelian(vec![2, 2]),
        Abelian(vec![2, 4]),
        Abelian(vec![2, 2, 2]),
        Abelian(vec![3, 3]),
        Symmetric(3),
        Dihedral(4),
        Quaternion(8),
        Dihedral(5),
        Dihedral(6),
        Alternating(4),
        Quaternion(12),
        Zarhin(ZarhinParams::new(vec![2]).expect("valid")),
        Zarhin(ZarhinParams::new(vec![3]).expect("valid")),
    ];
    let semidirect = [
        CyclicSemidirect { n: 3, k: 2, r: 2 },
        CyclicSemidirect { n: 7, k: 3, r: 2 },
        CyclicSemidirect { n: 5, k: 4, r: 2 },
        CyclicSemidirect { n: 3, k: 4, r: 2 },
        CyclicSemidirect { n: 9, k: 3, r: 4 },
        CyclicSemidirect { n: 8, k: 2, r: 3 },
        CyclicSemidirect { n: 8, k: 2, r: 5 },
        CyclicSemidirect { n: 4, k: 4, r: 3 },
        CyclicSemidirect { n: 7, k: 6, r: 3 },
        CyclicSemidirect { n: 13, k: 4, r: 5 },
    ];
    let products = [
        (Cyclic(2), Cyclic(3)),
        (Cyclic(2), Cyclic(2)),
        (Cyclic(2), Symmetric(3)),
        (Cyclic(3), Symmetric(3)),
        (Symmetric(3), Symmetric(3)),
        (Cyclic(2), Dihedral(4)),
        (Cyclic(2), Quaternion(8)),
        (Cyclic(3), Quaternion(8)),
        (Cyclic(2), Alternating(4)),
        (Abelian(vec![2, 2]), Symmetric(3)),
        (Symmetric(3), Dihedral(4)),
        (Symmetric(3), Quaternion(8)),
        (Dihedral(4), Cyclic(4)),
        (Dihedral(4), Dihedral(4)),
        (Quaternion(8), Quaternion(8)),
        (Dihedral(4), Quaternion(8)),
        (Alternating(4), Cyclic(2)),
        (Dihedral(5), Cyclic(3)),
    ];
    let mut out: Vec<CorpusEntry> = base.into_iter().map(|b| entry(f(b))).collect();
    out.extend(semidirect.into_iter().map(|s| entry(f(s))));
    out.extend(
        products
            .into_iter()
            .map(|(a, b)| entry(GroupSpec::product(f(a), f(b)))),
    );
    out.extend(
        [Symmetric(4), Symmetric(5), Alternating(5), BinaryIcosahedral]
            .into_iter()
            .map(|b| entry(f(b))),
    );
    out
}

/// Parse a family name with its integer parameters, as used on the
/// command line and in spec files.
pub fn family_from_parts(
    name: &str,
    n: Option<usize>,
    factors: Option<&[usize]>,
    k: Option<usize>,
    r: Option<usize>,
) -> Result<Family> {
    let need_n = || {
        n.ok_or_else(|| GroupError::InvalidParameter(format!("{name}: parameter n is required")))
    };
    let need_factors = || {
        factors
            .map(|f| f.to_vec())
            .ok_or_else(|| GroupError::InvalidParameter(format!("{name}: factors are required")))
    };
    let fam = match name {
        "cyclic" => Family::Cyclic(need_n()?),
        "dihedral" => Family::Dihedral(need_n()?),
        "symmetric" => Family::Symmetric(need_n()?),
        "alternating" => Family::Alternating(need_n()?),
        "quaternion" => Family::Quaternion(n.unwrap_or(8)),
        "abelian" => Family::Abelian(need_factors()?),
        "binary_icosahedral" => Family::BinaryIcosahedral,
        "zarhin" => Family::Zarhin(ZarhinParams::new(need_factors()?)?),
        "cyclic_semidirect" => Family::CyclicSemidirect {
            n: need_n()?,
            k: k.ok_or_else(|| GroupError::InvalidParameter("cyclic_semidirect: k is required".into()))?,
            r: r.ok_or_else(|| GroupError::InvalidParameter("cyclic_semidirect: r is required".into()))?,
        },
        other => return Err(GroupError::InvalidParameter(format!("unknown family '{other}'"))),
    };
    fam.validate()?;
    Ok(fam)
}
