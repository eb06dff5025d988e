/// Resource limits for the exact engine. Exceeding any of them is a
/// [`GroupError::CapExceeded`](crate::GroupError::CapExceeded), never a
/// silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest group a generator closure may produce.
    pub closure: usize,
    /// Tables up to this order get every associativity triple checked;
    /// larger tables are sampled.
    pub validation: usize,
    /// Number of sampled triples above `validation`.
    pub sampled_triples: usize,
    /// Seed for sampled validation.
    pub seed: u64,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub lattice: usize,
    /// Largest group whose normal subgroups may be enumerated.
    pub normal_lattice: usize,
    /// Largest group whose automorphisms may be enumerated.
    pub automorphism: usize,
    /// Node budget for one isomorphism search.
    pub isomorphism_nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 10_000,
            validation: 512,
            sampled_triples: 100_000,
            seed: 0x6a6f_7264_616e,
            lattice: 1024,
            normal_lattice: 10_000,
            automorphism: 128,
            isomorphism_nodes: 5_000_000,
        }
    }
}

impl Caps {
    pub fn with_closure(mut self, closure: usize) -> Self {
        self.closure = closure;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
