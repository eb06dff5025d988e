use std::fmt;

use num_integer::Integer;

use crate::caps::Caps;
use crate::constructions::zarhin::{zarhin_group, ZarhinParams};
use crate::error::{GroupError, Result};
use crate::group::closure::{close_generators, matrix_group_over_prime_field};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::perm::Permutation;
use crate::group::product::semidirect_product;

/// Named group families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `Z/n`
    Cyclic(usize),
    /// Symmetries of the regular `n`-gon, order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Dicyclic group of the given order (a multiple of 4, at least 8);
    /// order 8 is the quaternion group.
    Quaternion(usize),
    /// `Z/d₁ × … × Z/d_r`; the empty list is the trivial group.
    Abelian(Vec<usize>),
    /// `SL₂(F₅)`, the binary icosahedral group of order 120.
    BinaryIcosahedral,
    Zarhin(ZarhinParams),
    /// `Z/n ⋊ Z/k` with the generator of `Z/k` acting as `x ↦ r·x`.
    CyclicSemidirect { n: usize, k: usize, r: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic(_) => "cyclic",
            Family::Dihedral(_) => "dihedral",
            Family::Symmetric(_) => "symmetric",
            Family::Alternating(_) => "alternating",
            Family::Quaternion(_) => "quaternion",
            Family::Abelian(_) => "abelian",
            Family::BinaryIcosahedral => "binary_icosahedral",
            Family::Zarhin(_) => "zarhin",
            Family::CyclicSemidirect { .. } => "cyclic_semidirect",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(GroupError::InvalidParameter(msg));
        match self {
            Family::Cyclic(n) | Family::Dihedral(n) | Family::Symmetric(n) | Family::Alternating(n)
                if *n == 0 =>
            {
                bad(format!("{}: n must be at least 1", self.name()))
            }
            Family::Quaternion(order) if *order < 8 || order % 4 != 0 => bad(format!(
                "quaternion: order {order} must be a multiple of 4 and at least 8"
            )),
            Family::Abelian(factors) if factors.contains(&0) => {
                bad("abelian: factors must be positive".into())
            }
            Family::Zarhin(p) => ZarhinParams::new(p.invariant_factors().to_vec()).map(|_| ()),
            Family::CyclicSemidirect { n, k, r } => {
                if *n == 0 || *k == 0 {
                    return bad("cyclic_semidirect: n and k must be positive".into());
                }
                if r.gcd(n) != 1 {
                    return bad(format!("cyclic_semidirect: r = {r} is not a unit mod {n}"));
                }
                let rk = (0..*k).fold(1 % n, |acc, _| acc * r % n);
                if rk != 1 % n {
                    return bad(format!("cyclic_semidirect: {r}^{k} is not 1 mod {n}"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Family::Cyclic(n)
            | Family::Dihedral(n)
            | Family::Symmetric(n)
            | Family::Alternating(n)
            | Family::Quaternion(n) => write!(f, "{}({n})", self.name()),
            Family::Abelian(v) => write!(f, "abelian({})", list(v)),
            Family::BinaryIcosahedral => write!(f, "binary_icosahedral"),
            Family::Zarhin(p) => write!(f, "zarhin({p})"),
            Family::CyclicSemidirect { n, k, r } => write!(f, "cyclic_semidirect({n},{k},{r})"),
        }
    }
}

fn check_order(order: usize, caps: &Caps, what: &'static str) -> Result<()> {
    if order > caps.closure {
        return Err(GroupError::CapExceeded {
            what,
            cap: caps.closure,
        });
    }
    Ok(())
}

/// `Z/d₁ × … × Z/d_r` by componentwise addition; tuple `(x₁, …, x_r)` has
/// index `x₁·(d₂⋯d_r) + … + x_r`.
pub fn abelian_group(factors: &[usize], caps: &Caps) -> Result<FiniteGroup> {
    if factors.contains(&0) {
        return Err(GroupError::InvalidParameter("abelian: factors must be positive".into()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .unwrap_or(usize::MAX);
    check_order(order, caps, "abelian group order")?;
    let decode = |mut x: usize| {
        let mut v = vec![0; factors.len()];
        for (slot, &d) in v.iter_mut().zip(factors).rev() {
            *slot = x % d;
            x /= d;
        }
        v
    };
    let tuples: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut table = Vec::with_capacity(order * order);
    for a in &tuples {
        for b in &tuples {
            let idx = a
                .iter()
                .zip(b)
                .zip(factors)
                .fold(0, |acc, ((&x, &y), &d)| acc * d + (x + y) % d);
            table.push(idx as Elem);
        }
    }
    FiniteGroup::from_table_unvalidated(order, table)
}

pub fn cyclic_group(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic: n must be at least 1".into()));
    }
    abelian_group(&[n], caps)
}

/// Dihedral group of order `2n`: `r^k s^e` at index `k + n·e`.
pub fn dihedral_group(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("dihedral: n must be at least 1".into()));
    }
    check_order(2 * n, caps, "dihedral group order")?;
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (k1, e1) = (a % n, a / n);
        for b in 0..order {
            let (k2, e2) = (b % n, b / n);
            let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 } % n;
            table.push((k + n * ((e1 + e2) % 2)) as Elem);
        }
    }
    FiniteGroup::from_table_unvalidated(order, table)
}

/// Dicyclic group `⟨a, x | a^{2m} = 1, x² = a^m, xax⁻¹ = a⁻¹⟩` of order
/// `4m`: `a^k x^e` at index `k + 2m·e`.
pub fn quaternion_group(order: usize, caps: &Caps) -> Result<FiniteGroup> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(GroupError::InvalidParameter(format!(
            "quaternion: order {order} must be a multiple of 4 and at least 8"
        )));
    }
    check_order(order, caps, "quaternion group order")?;
    let two_m = order / 2;
    let m = two_m / 2;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (k1, e1) = (a % two_m, a / two_m);
        for b in 0..order {
            let (k2, e2) = (b % two_m, b / two_m);
            let (k, e) = match (e1, e2) {
                (0, _) => (k1 + k2, e2),
                (_, 0) => (k1 + two_m - k2, 1),
                _ => (k1 + two_m - k2 + m, 0),
            };
            table.push((k % two_m + two_m * e) as Elem);
        }
    }
    FiniteGroup::from_table_unvalidated(order, table)
}

fn full_cycle(n: usize, from: u32) -> Permutation {
    Permutation::from_cycles(n, &[(from..n as u32).collect()]).expect("valid cycle")
}

pub fn symmetric_group(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("symmetric: n must be at least 1".into()));
    }
    let gens = match n {
        1 => vec![],
        2 => vec![full_cycle(2, 0)],
        _ => vec![
            full_cycle(n, 0),
            Permutation::from_cycles(n, &[vec![0, 1]]).expect("valid"),
        ],
    };
    Ok(close_generators(n, &gens, caps)?.group)
}

pub fn alternating_group(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("alternating: n must be at least 1".into()));
    }
    let gens = if n < 3 {
        vec![]
    } else {
        let three = Permutation::from_cycles(n, &[vec![0, 1, 2]]).expect("valid");
        // an (n or n-1)-cycle of even parity
        let long = if n % 2 == 1 { full_cycle(n, 0) } else { full_cycle(n, 1) };
        vec![three, long]
    };
    Ok(close_generators(n, &gens, caps)?.group)
}

/// `SL₂(F₅)`.
pub fn binary_icosahedral_group(caps: &Caps) -> Result<FiniteGroup> {
    let gens = vec![vec![vec![1, 1], vec![0, 1]], vec![vec![0, 4], vec![1, 0]]];
    Ok(matrix_group_over_prime_field(2, 5, &gens, caps)?.group)
}

/// Action of `Z/k` on `Z/n` by `h ↦ (x ↦ r^h·x)`.
pub fn multiplier_action(n: usize, k: usize, r: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::with_capacity(k);
    let mut rh = 1 % n;
    for _ in 0..k {
        out.push((0..n).map(|x| (x * rh % n) as Elem).collect());
        rh = rh * r % n;
    }
    out
}

pub fn standard_family(family: &Family, caps: &Caps) -> Result<FiniteGroup> {
    family.validate()?;
    match family {
        Family::Cyclic(n) => cyclic_group(*n, caps),
        Family::Dihedral(n) => dihedral_group(*n, caps),
        Family::Symmetric(n) => symmetric_group(*n, caps),
        Family::Alternating(n) => alternating_group(*n, caps),
        Family::Quaternion(order) => quaternion_group(*order, caps),
        Family::Abelian(factors) => abelian_group(factors, caps),
        Family::BinaryIcosahedral => binary_icosahedral_group(caps),
        Family::Zarhin(params) => zarhin_group(params, caps),
        Family::CyclicSemidirect { n, k, r } => semidirect_product(
            &cyclic_group(*n, caps)?,
            &cyclic_group(*k, caps)?,
            &multiplier_action(*n, *k, *r),
            caps,
        ),
    }
}
