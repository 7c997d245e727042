use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Generators or maps mixing permutation degrees.
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    /// An image array that is not a bijection of `1..=degree`.
    NotAPermutation(String),
    /// A resource guard tripped; `what` names the guarded quantity.
    GuardExceeded {
        what: &'static str,
        limit: usize,
        detail: String,
    },
    NotASubgroup(String),
    NotAHomomorphism(String),
    NotInjective(String),
    NotSylow(String),
    /// A morphism was expected to lie in a fusion system and does not.
    NotInFusionSystem(String),
    /// Two fusion systems over different groups were compared.
    MismatchedGroups(String),
    /// Structural defect in a tree of groups or of fusion systems.
    InvalidTree(String),
    /// Hypothesis (H) fails: no vertex qualifies as a root.
    NoRoot(String),
    /// `p` does not divide ... style precondition violations of theorem engines.
    Precondition(String),
    InvalidInput(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, limit: usize, detail: impl Into<String>) -> Self {
        Error::GuardExceeded {
            what,
            limit,
            detail: detail.into(),
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotAPermutation(s) => write!(f, "not a permutation: {s}"),
            Error::GuardExceeded { what, limit, detail } => {
                write!(f, "resource guard exceeded ({what} > {limit}): {detail}")
            }
            Error::NotASubgroup(s) => write!(f, "not a subgroup: {s}"),
            Error::NotAHomomorphism(s) => write!(f, "not a homomorphism: {s}"),
            Error::NotInjective(s) => write!(f, "not injective: {s}"),
            Error::NotSylow(s) => write!(f, "not a Sylow subgroup: {s}"),
            Error::NotInFusionSystem(s) => write!(f, "morphism not in fusion system: {s}"),
            Error::MismatchedGroups(s) => write!(f, "mismatched groups: {s}"),
            Error::InvalidTree(s) => write!(f, "invalid tree: {s}"),
            Error::NoRoot(s) => write!(f, "hypothesis (H) fails: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Resource guards. The defaults are sized for desk-scale inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum group order for element enumeration and transporter scans.
    pub max_order: usize,
    /// Maximum number of subgroups in a lattice enumeration.
    pub max_subgroups: usize,
    /// Maximum number of stored morphisms in a fusion system.
    pub max_morphisms: usize,
    /// Maximum homomorphisms enumerated from one subgroup into one site.
    pub max_homs: usize,
    /// Maximum candidate generator-image assignments in a hom search.
    pub max_candidates: usize,
    /// Maximum alternating word length in amalgam enumerations.
    pub max_word_len: usize,
    /// Maximum size of `A \ C` (resp. `B \ C`) in amalgam enumerations.
    pub max_word_letters: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 20_000,
            max_subgroups: 5_000,
            max_morphisms: 2_000_000,
            max_homs: 100_000,
            max_candidates: 1_000_000,
            max_word_len: 6,
            max_word_letters: 100_000,
        }
    }
}
