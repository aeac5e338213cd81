use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Every variant has a stable machine-readable [`Error::code`] and belongs to
/// one [`ErrorKind`], which the command-line front end maps onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("poset must have at least one element")]
    EmptyPoset,
    #[error("cover ({0}, {1}) refers to an element outside 1..={2}")]
    ElementOutOfRange(usize, usize, usize),
    #[error("cover ({0}, {0}) is a loop")]
    SelfCover(usize),
    #[error("covers contain a directed cycle")]
    Cycle,
    #[error("cover ({0}, {1}) is implied by transitivity")]
    RedundantCover(usize, usize),
    #[error("rooted tree has {0} roots, expected exactly one")]
    MultipleRoots(usize),
    #[error("shrub needs at least 2 elements, got {0}")]
    ShrubTooSmall(usize),
    #[error("poset is not a rooted tree poset")]
    NotTree,
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset has no unique minimal element")]
    NoUniqueMinimum,
    #[error("poset is not (m,m)-bipartite")]
    NotBipartite,
    #[error("(m,m)-bipartite poset has no perfect matching between minima and maxima")]
    NoPerfectMatching,
    #[error("{what} too large: {actual} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: u128,
        limit: u128,
    },
    #[error("exact search too large: estimated cost {estimated} exceeds limit {limit}")]
    SearchTooLarge { estimated: u128, limit: u128 },
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("operation needs a polytope of dimension at least {needed}, got {actual}")]
    Dimension { needed: usize, actual: usize },
    #[error("polytope does not contain the origin")]
    OriginMissing,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("polar dual has non-integral vertices")]
    RationalPolytope,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("exponent vector has a negative coordinate")]
    NegativeExponent,
    #[error("polytope of width {width} does not fit in [0, {}]", .q - 2)]
    BoxOverflow { width: i64, q: u64 },
    #[error("{0} is not a prime power in 2..=512")]
    NotPrimePower(u64),
    #[error("field size {0} too small for this operation")]
    SmallField(u64),
    #[error("exact arithmetic overflowed")]
    ArithmeticOverflow,
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Coarse error classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A size or cost guard refused the computation.
    Guard,
    /// The input is malformed or violates a precondition.
    Input,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyPoset => "empty-poset",
            Error::ElementOutOfRange(..) => "element-out-of-range",
            Error::SelfCover(_) => "self-cover",
            Error::Cycle => "cycle",
            Error::RedundantCover(..) => "redundant-cover",
            Error::MultipleRoots(_) => "multiple-roots",
            Error::ShrubTooSmall(_) => "shrub-too-small",
            Error::NotTree => "not-tree",
            Error::NotGraded => "not-graded",
            Error::NoUniqueMinimum => "no-unique-minimum",
            Error::NotBipartite => "not-bipartite",
            Error::NoPerfectMatching => "no-perfect-matching",
            Error::TooLarge { .. } => "too-large",
            Error::SearchTooLarge { .. } => "search-too-large",
            Error::DimensionMismatch(..) => "dimension-mismatch",
            Error::Dimension { .. } => "dimension",
            Error::OriginMissing => "origin-missing",
            Error::OriginNotInterior => "origin-not-interior",
            Error::RationalPolytope => "rational-polytope",
            Error::NotUnimodular => "not-unimodular",
            Error::NegativeExponent => "negative-exponent",
            Error::BoxOverflow { .. } => "box-overflow",
            Error::NotPrimePower(_) => "not-prime-power",
            Error::SmallField(_) => "small-field",
            Error::ArithmeticOverflow => "arithmetic-overflow",
            Error::Invalid(_) => "invalid-input",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::TooLarge { .. }
            | Error::SearchTooLarge { .. }
            | Error::BoxOverflow { .. }
            | Error::ArithmeticOverflow => ErrorKind::Guard,
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, actual: u128, limit: u128) -> Result<()> {
    if actual > limit {
        Err(Error::TooLarge {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
