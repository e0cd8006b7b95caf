//! Reduction of a mod-3 attaching vector by order-respecting moves.
//!
//! Entry `c_t` is the component of the top-cell attaching map on the `t`-th
//! summand of an ordered wedge. For `a < b` there is a self-equivalence of
//! the wedge acting as `c_b <- c_a + c_b`, and each summand can be flipped by
//! `-1`. These are the only legal moves. Positions are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReductionVector {
    entries: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Unit {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// `c_to <- c_from + c_to`, requires `from < to`.
    AddForward { from: usize, to: usize },
    /// `c_at <- -c_at`.
    Negate { at: usize },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::AddForward { from, to } => write!(f, "add {from} -> {to}"),
            Move::Negate { at } => write!(f, "negate {at}"),
        }
    }
}

impl ReductionVector {
    /// Entries are reduced mod 3.
    pub fn new(entries: impl IntoIterator<Item = i64>) -> Self {
        ReductionVector { entries: entries.into_iter().map(|x| x.rem_euclid(3) as u8).collect() }
    }

    pub fn zeros(len: usize) -> Self {
        ReductionVector { entries: vec![0; len] }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Position of the first nonzero entry.
    pub fn leading_position(&self) -> Option<usize> {
        self.entries.iter().position(|&x| x != 0).map(|i| i + 1)
    }

    fn check(&self, pos: usize) -> Result<usize> {
        if pos == 0 || pos > self.entries.len() {
            return Err(Error::BadPosition(pos));
        }
        Ok(pos - 1)
    }

    pub fn add_forward(&self, from: usize, to: usize) -> Result<ReductionVector> {
        let (a, b) = (self.check(from)?, self.check(to)?);
        if a >= b {
            return Err(Error::IllegalDirection { from, to });
        }
        let mut out = self.clone();
        out.entries[b] = (out.entries[a] + out.entries[b]) % 3;
        Ok(out)
    }

    pub fn scale(&self, at: usize, unit: Unit) -> Result<ReductionVector> {
        let a = self.check(at)?;
        let mut out = self.clone();
        if unit == Unit::Minus {
            out.entries[a] = (3 - out.entries[a]) % 3;
        }
        Ok(out)
    }

    pub fn apply(&self, mv: Move) -> Result<ReductionVector> {
        match mv {
            Move::AddForward { from, to } => self.add_forward(from, to),
            Move::Negate { at } => self.scale(at, Unit::Minus),
        }
    }

    /// Applies `moves` in order.
    pub fn replay(&self, moves: &[Move]) -> Result<ReductionVector> {
        moves.iter().try_fold(self.clone(), |v, &m| v.apply(m))
    }
}

impl fmt::Display for ReductionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(u8::to_string).collect();
        f.write_str(&s.join(","))
    }
}

/// The canonical form and a sequence of legal moves reaching it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub form: ReductionVector,
    pub witness: Vec<Move>,
}

/// Reduces `v` to `e_t`, `t` its leading position, or to zero.
pub fn canonical_form(v: &ReductionVector) -> Reduction {
    let mut witness = Vec::new();
    let Some(t) = v.leading_position() else {
        return Reduction { form: v.clone(), witness };
    };
    if v.entries[t - 1] == 2 {
        witness.push(Move::Negate { at: t });
    }
    for b in t + 1..=v.len() {
        match v.entries[b - 1] {
            0 => {}
            // 1 -> 2 -> 2 + 1 = 0
            1 => witness.extend([Move::Negate { at: b }, Move::AddForward { from: t, to: b }]),
            _ => witness.push(Move::AddForward { from: t, to: b }),
        }
    }
    let form = v.replay(&witness).expect("witness moves are legal by construction");
    Reduction { form, witness }
}
