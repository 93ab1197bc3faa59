use thiserror::Error;

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type {family}{rank}: {constraint}")]
    InvalidType {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("cannot parse Lie type {0:?} (expected a family letter A-G followed by a rank, e.g. B2)")]
    TypeSyntax(String),

    #[error("cannot parse rational {token:?}: {reason}")]
    RationalSyntax { token: String, reason: &'static str },

    #[error("vector is not a root of {0}")]
    NotARoot(String),

    #[error("simple root index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("group too large: |W| = {order} exceeds the cap {cap}")]
    GroupTooLarge { order: u128, cap: u128 },

    #[error("not an extended Weyl element: translation {0} is not in the coweight lattice")]
    NotExtendedWeyl(String),

    #[error("critical level: k = {0} equals -h_dual")]
    CriticalLevel(Q),

    #[error("level not admissible: k = {level} (k + h_dual = {p}/{q}, requires p >= {required})")]
    LevelNotAdmissible {
        level: Q,
        p: String,
        q: String,
        required: i64,
    },

    #[error("level mismatch: weight has level {weight}, context has level {context}")]
    LevelMismatch { weight: Q, context: Q },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("level denominator or numerator {0} does not fit into a machine integer")]
    LevelTooLarge(String),

    #[error("search bound insufficient: simple integral roots not certified within delta-bound {bound} ({detail})")]
    SearchBoundInsufficient { bound: i64, detail: String },

    #[error("twist search box too large: {candidates} candidates exceed the cap {cap}")]
    TwistBoxTooLarge { candidates: u128, cap: u128 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
