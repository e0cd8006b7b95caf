//! Suspension splittings of simply connected closed 7-manifolds after
//! inverting 2.
//!
//! A manifold enters as a [`ManifoldDescriptor`]: the ranks `r = rk H_2`,
//! `d = rk H_3`, the torsion groups `H ⊂ H_2` and `T ⊂ H_3`, and the mod-3
//! pairing of `p_1` with the canonical basis of `H^3(M; Z/3)`. From this the
//! crate computes `ΣM` (when `H` or `T` vanishes) and `Σ²M` as canonical
//! [`WedgeExpr`]s, and checks the answers against independent homology and
//! rigidity oracles.

pub mod abelian;
pub mod checker;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod invariants;
pub mod reduce;
pub mod tables;
pub mod wedge;

pub use abelian::{AbelianGroup, IntegerMatrix, RawGroup};
pub use checker::{rigidity_equal, verify_homology, VerificationReport};
pub use corpus::CorpusEntry;
pub use decompose::{decompose, decompose_sigma, decompose_sigma2, CaseLabel, DecompositionResult};
pub use error::{Error, Result};
pub use invariants::{validate, ManifoldDescriptor, Radius, RawDescriptor};
pub use reduce::{canonical_form, Move, ReductionVector};
pub use wedge::{Atom, AttachTag, WedgeExpr};
