use thiserror::Error;

/// Errors surfaced by workbench operations.
///
/// Contract violations (dimension mismatches, mixing algebras) panic instead:
/// they are caller bugs, not data problems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("relation ideal is not admissible: {0}")]
    NotAdmissible(String),

    #[error("path basis enumeration exceeded cap {cap} without closure: {detail}")]
    BasisNotClosed { cap: usize, detail: String },

    #[error("rewriting system is not confluent: {0}")]
    NotConfluent(String),

    #[error("approximation of `{module}` by `{subcategory}` is not epic (admissibility failure)")]
    ApproximationNotEpic { module: String, subcategory: String },

    #[error("coapproximation of `{module}` by `{subcategory}` is not monic (coadmissibility failure)")]
    CoapproximationNotMonic { module: String, subcategory: String },

    #[error("depth {have} is insufficient for degree {need}; increase depth")]
    DepthInsufficient { have: usize, need: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("workspace schema violation: {0}")]
    Schema(String),

    #[error("invariant violation in `{location}`: {detail}")]
    Invariant { location: String, detail: String },

    #[error("dangling reference `{0}`")]
    DanglingReference(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
