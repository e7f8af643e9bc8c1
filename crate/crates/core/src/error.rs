use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed cycle notation: {0}")]
    MalformedCycle(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("image list is not a bijection of 1..{degree}: {detail}")]
    NotBijection { degree: usize, detail: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("a group needs at least one generator")]
    NoGenerators,

    #[error("group order {order} exceeds the element cap {cap}")]
    Capacity { order: u128, cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("prime {p} does not divide the group order {order}")]
    NotDividing { p: u64, order: u128 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("permutation {0} does not normalize the group")]
    NotNormalizing(String),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("unknown group name: {0}")]
    UnknownName(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("time budget exhausted")]
    Timeout,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
