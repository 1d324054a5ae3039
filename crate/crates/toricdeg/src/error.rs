use crate::lattice::IntVec;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("semigroup is not pointed")]
    NotPointed,
    #[error("generator {0} is inhomogeneous under the grading")]
    NotHomogeneous(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("context has no unique Betti element")]
    MissingUniqueBetti,
    #[error("context carries no degeneration data (w, d_w)")]
    MissingDegenerationData,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("certificate verification failed at {0:?}")]
    CertificationFailure(IntVec),
    #[error("subset enumeration refused for n = {0} > 20 generators")]
    TooManyGenerators(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
