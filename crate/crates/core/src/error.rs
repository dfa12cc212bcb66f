use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A denominator factor `1 - Q^alpha T^beta` with `alpha < 1` has no Q-adic expansion.
    #[error("factor 1 - Q^{alpha}T^{beta} is not expandable as a Q-series")]
    NonExpandableFactor { alpha: i64, beta: i64 },

    #[error("substitution T -> (QT^2)^-1 leaves its domain: {0}")]
    SubstitutionDomain(String),

    #[error("undefined substitution: {0}")]
    UndefinedSubstitution(String),

    #[error("negative Q exponent {0} in a polynomial")]
    NegativeQExponent(i64),

    #[error("invalid weak diagonal partition: {0}")]
    InvalidPartition(String),

    #[error("unsupported curve x^{u} y^{v}: supported families are u=1, u=2, u=v, u=v-1, u=v-2 with 1 <= u <= v")]
    UnsupportedCurve { u: i64, v: i64 },

    #[error("argument out of range: {0}")]
    Domain(String),

    #[error("binary strings have different numbers of ones ({t_ones} vs {w_ones})")]
    OnesMismatch { t_ones: usize, w_ones: usize },

    #[error("rewrite cycle without a Q factor through state {0}")]
    CycleWithoutQ(String),

    #[error("normalization failed: {0}")]
    Normalization(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
