use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid group spec: {0}")]
    GroupSpec(String),

    #[error("no prime p = 1 mod {exponent} with p > {lower} found below {bound}")]
    PrimeSearchFailed { exponent: u64, lower: u64, bound: u64 },

    #[error("character table validation failed: {0}")]
    LiftInconsistent(String),

    #[error("Frobenius-Schur indicator of character {character} is {value}, not in {{-1,0,1}}")]
    NonIndicatorValue { character: usize, value: String },

    #[error("generalized indicator nu_{n} of character {character} is not an integer: {value}")]
    NonIntegerIndicator { character: usize, n: i64, value: String },

    #[error("partition weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator `{name}` at position {pos}")]
    UnknownGenerator { pos: usize, name: String },

    #[error("generator x{index} exceeds rank {rank}")]
    RankMismatch { index: usize, rank: usize },

    #[error("class functions belong to different groups")]
    GroupMismatch,

    #[error("word has no closed-form coefficient formula")]
    GenericShape,

    #[error("enumeration needs {required} tuples, budget is {limit}")]
    BudgetExceeded { required: String, limit: u64 },

    #[error("formula did not reduce to a nonnegative integer: {0}")]
    NonIntegerResult(String),

    #[error("group is not a symmetric group in its natural action")]
    NotSymmetricGroup,

    #[error("unknown or ambiguous conjugacy class `{0}`")]
    ClassName(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that can only arise from an arithmetic or logic bug.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::LiftInconsistent(_)
                | Error::NonIndicatorValue { .. }
                | Error::NonIntegerIndicator { .. }
                | Error::NonIntegerResult(_)
                | Error::Internal(_)
        )
    }
}
