use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system: {0}")]
    InvalidSystem(String),

    #[error("index list must be non-empty")]
    EmptyIndexList,

    #[error("index list {list:?} must be strictly increasing within 1..={n}")]
    InvalidIndexList { list: Vec<u32>, n: u32 },

    #[error("weight has {got} entries, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("root ({i},{j}) is not a positive root of {system}")]
    InvalidRoot { i: u32, j: u32, system: String },

    #[error("pair ({i},{j}) is not in the radical P_d")]
    NotInRadical { i: u32, j: u32 },

    #[error("no closed-form case matches ({i},{j})")]
    NoMatchingCase { i: u32, j: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inadmissible collection: {0}")]
    Inadmissible(String),

    #[error("polytope embedding violated an inequality: {0}")]
    EmbeddingViolation(String),

    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("a localization denominator vanishes at this point; resample")]
    DenominatorZero,

    #[error("every sampled point hit a vanishing denominator ({attempts} attempts)")]
    NoValidPoint { attempts: usize },

    #[error("lift failed at ({i},{j}): {reason}")]
    LiftInfeasible { i: u32, j: u32, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
