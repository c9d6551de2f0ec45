use alloc::string::String;

/// Errors raised by group construction, lattice enumeration and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("permutation of degree {found} where degree {expected} was required")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group order exceeds the configured maximum of {max}")]
    OrderLimitExceeded { max: usize },
    #[error("group of order {order} exceeds the lattice budget of {budget}")]
    LatticeBudgetExceeded { order: usize, budget: usize },
    #[error("computation cancelled (time budget)")]
    Cancelled,
    #[error("element {0} is not in the group")]
    NotAnElement(usize),
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("containment violated: {0}")]
    NotContained(&'static str),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not a prime divisor of the group order")]
    NotAPrimeDivisor(u32),
    #[error("group is not soluble")]
    NotSoluble,
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(&'static str),
    #[error("action is not a homomorphism into the automorphism group")]
    ActionNotHomomorphism,
    #[error("formation predicate {0} failed closure verification")]
    FormationViolation(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = core::result::Result<T, Error>;
