use std::collections::HashMap;
use std::hash::Hash;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::finite::{Elem, FiniteGroup};
use crate::group::perm::Permutation;

/// Concrete element representation that can be closed into a [`FiniteGroup`].
pub trait GroupElement: Clone + Eq + Hash {
    fn mul(&self, other: &Self) -> Self;
    fn label(&self) -> String;
}

impl GroupElement for Permutation {
    fn mul(&self, other: &Self) -> Self {
        self.compose(other)
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

/// A square matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    dim: usize,
    p: u32,
    entries: Vec<u32>,
}

impl PrimeFieldMatrix {
    pub fn new(dim: usize, p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(GroupError::InvalidParameter(format!(
                "matrix must be {dim}x{dim}"
            )));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(p as i64) as u32)
            .collect();
        Ok(PrimeFieldMatrix { dim, p, entries })
    }

    pub fn identity(dim: usize, p: u32) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % p;
        }
        PrimeFieldMatrix { dim, p, entries }
    }

    /// Determinant mod p by Gaussian elimination.
    pub fn determinant(&self) -> u32 {
        let (n, p) = (self.dim, self.p as u64);
        let mut m: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = (p - det) % p;
            }
            let pv = m[col * n + col];
            det = det * pv % p;
            let inv = mod_pow(pv, p - 2, p);
            for r in col + 1..n {
                let factor = m[r * n + col] * inv % p;
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let sub = factor * m[col * n + c] % p;
                    m[r * n + c] = (m[r * n + c] + p - sub) % p;
                }
            }
        }
        det as u32
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl GroupElement for PrimeFieldMatrix {
    fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let p = self.p as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u64;
                for k in 0..n {
                    s += self.entries[i * n + k] as u64 * other.entries[k * n + j] as u64;
                }
                entries[i * n + j] = (s % p) as u32;
            }
        }
        PrimeFieldMatrix {
            dim: n,
            p: self.p,
            entries,
        }
    }

    fn label(&self) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Result of a closure: the abstract group plus the concrete element behind
/// each index.
#[derive(Debug, Clone)]
pub struct Closure<E> {
    pub group: FiniteGroup,
    pub elements: Vec<E>,
}

/// Close `gens` under multiplication.
///
/// Elements are numbered in breadth-first order from the identity, applying
/// generators on the right in the order given, so index 0 is always the
/// identity and the numbering depends only on the generator sequence.
pub fn close<E: GroupElement>(identity: E, gens: &[E], cap: usize) -> Result<Closure<E>> {
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<E, Elem> = HashMap::new();
    index.insert(identity, 0);
    // right[k][x] = index of elements[x] * gens[k]
    let mut right: Vec<Vec<Elem>> = vec![Vec::new(); gens.len()];
    // (parent, generator) that first reached each element
    let mut reached_by: Vec<(Elem, usize)> = vec![(0, usize::MAX)];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        for (k, g) in gens.iter().enumerate() {
            let y = x.mul(g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            what: "generator closure",
                            cap,
                        });
                    }
                    let i = elements.len() as Elem;
                    index.insert(y.clone(), i);
                    elements.push(y);
                    reached_by.push((head as Elem, k));
                    i
                }
            };
            right[k].push(idx);
        }
        head += 1;
    }

    // table[a][b] = table[a][parent(b)] * gen(b), filled in BFS order of b
    let n = elements.len();
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        table[a * n] = a as Elem;
    }
    for b in 1..n {
        let (parent, k) = reached_by[b];
        let rk = &right[k];
        for a in 0..n {
            table[a * n + b] = rk[table[a * n + parent as usize] as usize];
        }
    }
    let labels = elements.iter().map(GroupElement::label).collect();
    let group = FiniteGroup::from_table_unvalidated(n, table)?.with_labels(labels)?;
    Ok(Closure { group, elements })
}

/// The permutation group generated by `gens` on `degree` points.
pub fn close_generators(
    degree: usize,
    gens: &[Permutation],
    caps: &Caps,
) -> Result<Closure<Permutation>> {
    if degree == 0 {
        return Err(GroupError::InvalidParameter("degree must be positive".into()));
    }
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch {
            expected: degree,
            found: bad.degree(),
        });
    }
    close(Permutation::identity(degree), gens, caps.closure)
}

/// Abstract group generated by invertible `dim`×`dim` matrices over F_p.
///
/// This is a construction device for abstract groups (e.g. SL₂(F₅) as the
/// binary icosahedral group); nothing here models matrices over a field of
/// characteristic zero.
pub fn matrix_group_over_prime_field(
    dim: usize,
    p: u32,
    gens: &[Vec<Vec<i64>>],
    caps: &Caps,
) -> Result<Closure<PrimeFieldMatrix>> {
    if dim == 0 {
        return Err(GroupError::InvalidParameter("dimension must be positive".into()));
    }
    if p < 2 || !(2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    let mats = gens
        .iter()
        .map(|g| PrimeFieldMatrix::new(dim, p, g))
        .collect::<Result<Vec<_>>>()?;
    if let Some(index) = mats.iter().position(|m| m.determinant() == 0) {
        return Err(GroupError::NonInvertible { index, p });
    }
    close(PrimeFieldMatrix::identity(dim, p), &mats, caps.closure)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let c: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &c).unwrap()
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let c = close_generators(1, &[], &Caps::default()).unwrap();
        assert_eq!(c.group.order(), 1);
        assert_eq!(c.group.label(0), "()");
    }

    #[test]
    fn sym3_from_transpositions() {
        let c = close_generators(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[1, 2]])], &Caps::default())
            .unwrap();
        assert_eq!(c.group.order(), 6);
        assert!(!c.group.is_abelian());
        // BFS order: e, gen0, gen1, ...
        assert_eq!(c.elements[1], cyc(3, &[&[0, 1]]));
        assert_eq!(c.elements[2], cyc(3, &[&[1, 2]]));
    }

    #[test]
    fn sym5_order_and_table_consistency() {
        let caps = Caps::default();
        let c = close_generators(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])], &caps)
            .unwrap();
        assert_eq!(c.group.order(), 120);
        for a in 0..120u32 {
            for b in (0..120u32).step_by(7) {
                let prod = c.elements[a as usize].compose(&c.elements[b as usize]);
                assert_eq!(c.elements[c.group.mul(a, b) as usize], prod);
            }
        }
        // the table was produced without validation; re-validate it fully
        FiniteGroup::from_table(120, c.group.table().to_vec(), &caps).unwrap();
    }

    #[test]
    fn degree_mismatch_and_cap() {
        let caps = Caps::default();
        assert!(matches!(
            close_generators(3, &[cyc(4, &[&[0, 1]])], &caps),
            Err(GroupError::DegreeMismatch { expected: 3, found: 4 })
        ));
        let small = Caps::default().with_closure(100);
        let err = close_generators(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])], &small)
            .unwrap_err();
        assert!(err.is_cap_exceeded());
    }

    #[test]
    fn prime_field_matrix_groups() {
        let caps = Caps::default();
        assert_eq!(
            matrix_group_over_prime_field(1, 5, &[vec![vec![2]]], &caps)
                .unwrap()
                .group
                .order(),
            4
        );
        let gens = |_p: i64| vec![vec![vec![1, 1], vec![0, 1]], vec![vec![0, -1], vec![1, 0]]];
        let sl25 = matrix_group_over_prime_field(2, 5, &gens(5), &caps).unwrap();
        assert_eq!(sl25.group.order(), 120);
        let sl23 = matrix_group_over_prime_field(2, 3, &gens(3), &caps).unwrap();
        assert_eq!(sl23.group.order(), 24);
        assert!(matches!(
            matrix_group_over_prime_field(2, 5, &[vec![vec![1, 2], vec![2, 4]]], &caps),
            Err(GroupError::NonInvertible { index: 0, p: 5 })
        ));
        assert!(matrix_group_over_prime_field(1, 4, &[vec![vec![3]]], &caps).is_err());
    }

    #[test]
    fn determinant_mod_p() {
        let m = PrimeFieldMatrix::new(3, 7, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.determinant(), 0);
        let m = PrimeFieldMatrix::new(2, 7, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.determinant(), 6);
    }
}
