use thiserror::Error;

/// Errors raised by the group engine and the calculators built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("generator of degree {found} does not match degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("matrix generator {index} is not invertible mod {p}")]
    NonInvertible { index: usize, p: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("{sub} is not normal in {ambient}")]
    NotNormal {
        sub: &'static str,
        ambient: &'static str,
    },
    #[error("{0} is not abelian")]
    NotAbelian(&'static str),
    #[error("{inner} is not contained in {outer}")]
    NotContained {
        inner: &'static str,
        outer: &'static str,
    },
    #[error("action is not a homomorphism into the automorphisms of N")]
    ActionNotHomomorphism,
    #[error("action image of complement element {0} is not an automorphism of N")]
    ActionNotAutomorphism(usize),
    #[error("map is not a homomorphism")]
    NotHomomorphism,
    #[error("center of H is not trivial (order {0})")]
    CenterNotTrivial(usize),
    #[error("value for n = {0} is not tabulated in source")]
    NotTabulated(u32),
    #[error("bound not applicable for n = {n} (requires n >= {min})")]
    NotApplicable { n: u32, min: u32 },
}

impl GroupError {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, GroupError::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;
