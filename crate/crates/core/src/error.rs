use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("bad preset parameter: {0}")]
    BadParameter(String),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("orbit larger than cap ({cap})")]
    OrbitTooLarge { cap: usize },
    #[error("vector is not dominant")]
    NotDominant,
    #[error("subset is not contained in the simple-root index range")]
    BadSubset,
    #[error("automorphism does not have finite order (cap {0})")]
    NotFiniteOrder(usize),
    #[error("automorphism group closure exceeds cap ({0})")]
    GroupNotFinite(usize),
    #[error("frobenius does not preserve the simple-root base")]
    NotPinned,
    #[error("levi subset is not stable under the frobenius")]
    NotSigmaStable,
    #[error("cocharacter is not minuscule")]
    NotMinuscule,
    #[error("polygon breakpoint is not integral")]
    NonIntegralBreakpoint,
    #[error("unknown render format `{0}`")]
    UnknownFormat(String),
    #[error("twisted torus is not elliptic")]
    NotElliptic,
    #[error("no witness found in the Weyl orbit")]
    NoWitness,
    #[error("cocharacter does not lie in the coroot lattice")]
    NotInCorootLattice,
    #[error("local Galois datum is not a subgroup of the global one")]
    InconsistentLocalData,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
