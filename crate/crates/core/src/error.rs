use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring axiom violated: {law} fails at {witness:?}")]
    AxiomViolation { law: &'static str, witness: Vec<usize> },

    #[error("bad ring specification: {0}")]
    BadSpec(String),

    #[error("ring of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("ideals belong to different rings")]
    RingMismatch,

    #[error("ideal {0:?} is not semi-prime")]
    NotSemiprime(Vec<usize>),

    #[error("point set is not contained in the ambient subspace")]
    SNotSubsetY,

    #[error("element set is not a unital subring: {0}")]
    NotASubring(String),

    #[error("element set {0:?} is not an ideal")]
    NotAnIdeal(Vec<usize>),

    #[error("premise failed: {0}")]
    PremiseFailed(String),

    #[error("maximal proper strong ideal {0:?} is not prime")]
    NonPrimeMaximalStrongIdeal(Vec<usize>),

    #[error("maximal annihilator {0:?} is not prime")]
    NonPrimeAffiliated(Vec<usize>),

    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
