use thiserror::Error;

/// Errors produced by the exact scans and the numerical certificate layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid representation spec: {0}")]
    InvalidSpec(String),

    #[error("invalid circle direction: {0}")]
    InvalidDirection(String),

    #[error("invalid factor subset: {0}")]
    InvalidSubset(String),

    #[error("invalid case parameters: {0}")]
    InvalidCase(String),

    #[error("scan bounds too small to certify completeness: {0}")]
    BoundsTooSmall(String),

    #[error("unknown representation name: {0}")]
    UnknownRep(String),

    #[error("group closure exceeded the safety cap of {cap} elements")]
    ClosureCap { cap: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("generator matrices fail the bracket closure check: residual {residual}")]
    ClosureCheck { residual: f64 },

    #[error("rank decision unstable: {0}")]
    RankInstability(String),

    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),

    #[error("certificate engine version {found} does not match {expected}; re-derive with a matching engine")]
    VersionMismatch { found: String, expected: String },

    #[error("quantity not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
