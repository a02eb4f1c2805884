use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player count {0} is outside 1..=64")]
    PlayerCount(usize),

    #[error("player {player} is out of range for {n} players")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("coalitions over {left} and {right} players cannot be mixed")]
    DimensionMismatch { left: usize, right: usize },

    #[error("family is not an antichain: {subset} is a strict subset of {superset}")]
    NotAntichain { subset: String, superset: String },

    #[error("a simple game needs at least one minimal winning coalition")]
    NoWinningCoalition,

    #[error("the empty coalition cannot be winning")]
    EmptyWinningCoalition,

    #[error("quota {quota} must be positive")]
    ZeroQuota { quota: u64 },

    #[error("quota {quota} is unreachable: total weight is {total}")]
    UnreachableQuota { quota: u64, total: u128 },

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("vectors of length {left} and {right} cannot be compared")]
    LengthMismatch { left: usize, right: usize },

    #[error("players must be distinct (got {0} twice)")]
    SamePlayer(usize),

    #[error("invalid coalition bijection: {0}")]
    InvalidBijection(String),

    #[error("invalid larger-coalition family: {0}")]
    InvalidExtension(String),

    #[error("invalid ranking: {0}")]
    InvalidRanking(String),

    #[error("{n} players exceeds the enumeration cap of {cap}; pass --force to override")]
    EnumerationCap { n: usize, cap: usize },
}
