use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::{GroupError, Result};

/// Element handle inside one [`FiniteGroup`]. Indices are the only element
/// identity; labels are for display.
pub type Elem = u32;

/// A finite group stored as a full Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverses: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// The group with one element.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            identity: 0,
            inverses: vec![0],
            labels: None,
        }
    }

    /// Build from a row-major table and validate every group axiom.
    ///
    /// Associativity is checked on all triples up to `caps.validation`
    /// and on `caps.sampled_triples` seeded random triples above it.
    pub fn from_table(order: usize, table: Vec<Elem>, caps: &Caps) -> Result<Self> {
        let group = Self::from_table_unvalidated(order, table)?;
        group.check_associativity(caps)?;
        Ok(group)
    }

    /// Build from a table that is known to come from an associative
    /// construction. Identity and inverses are still located and checked.
    pub(crate) fn from_table_unvalidated(order: usize, table: Vec<Elem>) -> Result<Self> {
        if order == 0 {
            return Err(GroupError::InvalidTable("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(GroupError::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&x| x as usize >= order) {
            return Err(GroupError::InvalidTable(format!("entry {bad} out of range")));
        }
        // each row and column must be a permutation (Latin square)
        let mut seen = vec![0u32; order];
        for r in 0..order {
            let stamp = r as u32 + 1;
            for c in 0..order {
                let x = table[r * order + c] as usize;
                if seen[x] == stamp {
                    return Err(GroupError::InvalidTable(format!("row {r} repeats entry {x}")));
                }
                seen[x] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for c in 0..order {
            let stamp = c as u32 + 1;
            for r in 0..order {
                let x = table[r * order + c] as usize;
                if seen[x] == stamp {
                    return Err(GroupError::InvalidTable(format!(
                        "column {c} repeats entry {x}"
                    )));
                }
                seen[x] = stamp;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x))
            .ok_or_else(|| GroupError::InvalidTable("no left identity".into()))?;
        if !(0..order).all(|x| table[x * order + identity] as usize == x) {
            return Err(GroupError::InvalidTable("identity is not two-sided".into()));
        }
        let mut inverses = vec![0 as Elem; order];
        for (x, inv) in inverses.iter_mut().enumerate() {
            let row = &table[x * order..(x + 1) * order];
            // Latin rows guarantee exactly one solution
            let y = row.iter().position(|&v| v as usize == identity).unwrap();
            if table[y * order + x] as usize != identity {
                return Err(GroupError::InvalidTable(format!("element {x} has no two-sided inverse")));
            }
            *inv = y as Elem;
        }
        Ok(FiniteGroup {
            order,
            table,
            identity: identity as Elem,
            inverses,
            labels: None,
        })
    }

    fn check_associativity(&self, caps: &Caps) -> Result<()> {
        let n = self.order;
        let fail = |a: usize, b: usize, c: usize| {
            Err(GroupError::InvalidTable(format!(
                "associativity fails for ({a}, {b}, {c})"
            )))
        };
        if n <= caps.validation {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.table[a * n + b] as usize;
                    for c in 0..n {
                        let bc = self.table[b * n + c] as usize;
                        if self.table[ab * n + c] != self.table[a * n + bc] {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(caps.seed);
            for _ in 0..caps.sampled_triples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                let lhs = self.mul(self.mul(a as Elem, b as Elem), c as Elem);
                let rhs = self.mul(a as Elem, self.mul(b as Elem, c as Elem));
                if lhs != rhs {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(GroupError::InvalidParameter(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        let start = a as usize * self.order;
        &self.table[start..start + self.order]
    }

    pub fn inverses(&self) -> &[Elem] {
        &self.inverses
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a as usize].clone(),
            None => a.to_string(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order as Elem;
        (0..n).all(|a| (a + 1..n).all(|b| self.commute(a, b)))
    }

    /// Conjugacy classes as sorted element lists, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for x in self.elements() {
            if class_of[x as usize] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in self.elements() {
                let y = self.conj(g, x);
                if class_of[y as usize] == usize::MAX {
                    class_of[y as usize] = id;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Relabel elements through the bijection `perm` (old index -> new index).
    /// The result is isomorphic to `self` via `perm`.
    pub fn relabeled(&self, perm: &[Elem]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(GroupError::InvalidParameter("relabeling has wrong length".into()));
        }
        let n = self.order;
        let mut table = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] as usize * n + perm[b] as usize] = perm[self.table[a * n + b] as usize];
            }
        }
        let mut g = Self::from_table_unvalidated(n, table)?;
        if let Some(labels) = &self.labels {
            let mut relabeled = vec![String::new(); n];
            for (a, l) in labels.iter().enumerate() {
                relabeled[perm[a] as usize] = l.clone();
            }
            g.labels = Some(relabeled);
        }
        Ok(g)
    }

    /// Table as rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }
}
