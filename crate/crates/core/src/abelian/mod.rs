//! Finitely generated abelian groups away from 2, Smith normal form, and
//! chain-complex homology.

mod chain;
mod group;
mod snf;

pub use chain::ChainComplex;
pub use group::{
    factorize, is_prime, localize_away_from_2, AbelianGroup, Localized, PrimePower, RawCyclic,
    RawGroup,
};
pub use snf::{smith_normal_form, IntegerMatrix, SmithForm};
