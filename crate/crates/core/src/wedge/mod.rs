//! Formal wedges of spheres, Moore spaces and two-cell-over-Moore cones.

mod atom;
mod expr;
mod text;

pub use atom::{Atom, AttachTag, Cell};
pub use expr::{normalize, WedgeBuilder, WedgeExpr};
pub use text::parse_atom;
