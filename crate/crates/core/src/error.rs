use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic summand Z/{p}^{e} does not occur in the group")]
    MissingSummand { p: u64, e: u32 },

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("atom {0} cannot be suspended directly; pass it through the bundle rule first")]
    UnsuspendableAtom(String),

    #[error("invalid atom: {0}")]
    InvalidAtom(String),

    #[error("cannot parse wedge expression: {0}")]
    Parse(String),

    #[error("query outside the table: {0}")]
    OutOfTable(String),

    #[error("wu vector has length {found}, expected {expected} (m + d + l)")]
    WuLengthMismatch { expected: usize, found: usize },

    #[error("rank {name} is negative ({value})")]
    NegativeRank { name: &'static str, value: i64 },

    #[error("illegal move: position {from} may not be added to position {to}")]
    IllegalDirection { from: usize, to: usize },

    #[error("position {0} is outside the vector")]
    BadPosition(usize),

    #[error("single suspension needs H = 0 or T = 0 (H = {h}, T = {t})")]
    NeedsDoubleSuspension { h: String, t: String },

    #[error("homology does not fit a complex with cells in degrees {bottom}..={top}: {reason}", top = .bottom + 2)]
    BadRange { bottom: u32, reason: String },

    #[error("stage {0} is not one of 3, 4, 5")]
    BadStage(u32),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
