//! Worked cases with hand-written expected wedges, one per case of the
//! splitting formulas.

use serde::{Deserialize, Serialize};

use crate::decompose::{decompose, DecompositionResult};
use crate::error::Result;
use crate::invariants::{validate, RawDescriptor};
use crate::wedge::WedgeExpr;

const GOLDEN: &str = include_str!("../corpus/golden.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub descriptor: RawDescriptor,
    pub suspensions: u32,
    /// Expected case label as rendered by [`crate::CaseLabel`].
    pub case: String,
    /// Expected wedge, written in the order of the formula's terms.
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusOutcome {
    pub name: String,
    pub expected: String,
    pub emitted: String,
    pub case: String,
    pub pass: bool,
}

impl CorpusEntry {
    /// The expected wedge in canonical order.
    pub fn expected_wedge(&self) -> Result<WedgeExpr> {
        self.expected.parse()
    }

    pub fn decompose(&self) -> Result<DecompositionResult> {
        let desc = validate(&self.descriptor)?.descriptor;
        decompose(&desc, self.suspensions)
    }

    /// Decomposes and compares both the rendered string and the case label.
    pub fn run(&self) -> Result<CorpusOutcome> {
        let result = self.decompose()?;
        let expected = self.expected_wedge()?.to_string();
        let emitted = result.wedge.to_string();
        let case = result.case.to_string();
        Ok(CorpusOutcome {
            name: self.name.clone(),
            pass: expected == emitted && case == self.case,
            expected,
            emitted,
            case,
        })
    }
}

/// The built-in golden entries.
pub fn golden() -> Vec<CorpusEntry> {
    serde_json::from_str(GOLDEN).expect("embedded corpus is valid JSON")
}

pub fn load(json: &str) -> Result<Vec<CorpusEntry>> {
    serde_json::from_str(json).map_err(|e| crate::Error::Parse(e.to_string()))
}
