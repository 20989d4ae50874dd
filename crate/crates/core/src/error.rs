use alloc::string::String;

use thiserror::Error;

use crate::quantum::Role;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("subsystem dimension {0} is not supported (expected 2 or 3)")]
    UnsupportedDim(usize),
    #[error("duplicate subsystem label `{0}`")]
    DuplicateLabel(Role),
    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(Role),
    #[error("empty subsystem list")]
    EmptyLabels,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("layouts differ")]
    LayoutMismatch,
    #[error("non-finite amplitude")]
    NonFinite,
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("zero-norm state")]
    ZeroNorm,
    #[error("operator is not unitary (defect {0:e})")]
    NotUnitary(f64),
    #[error("operator is not a partial isometry (defect {0:e})")]
    NotPartialIsometry(f64),
    #[error("state lies outside the operator's domain (lost weight {0:e})")]
    OutsideDomain(f64),
    #[error("matrix is not Hermitian (defect {0:e})")]
    NotHermitian(f64),
    #[error("trace {0} differs from 1")]
    BadTrace(f64),
    #[error("eigenvalue {0:e} is below the positivity tolerance")]
    NotPositive(f64),
    #[error("basis vectors are not orthonormal (defect {0:e})")]
    NotOrthonormal(f64),
    #[error("eigenvalue iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("sampled a measurement branch of zero probability")]
    ZeroProbabilityBranch,
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("empty key")]
    EmptyKey,
    #[error("bit lists differ in length ({0} vs {1})")]
    KeyLengthMismatch(usize, usize),
    #[error("unknown attack `{0}` (expected none, opaque, translucent:D=<float>, wojcik or cai)")]
    UnknownAttack(String),
    #[error("attack `{attack}` fault: {reason}")]
    AttackFault {
        attack: &'static str,
        reason: &'static str,
    },
    #[error("eve's guess was already set this round")]
    GuessAlreadySet,
}
