use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::atom::Atom;
use crate::abelian::AbelianGroup;
use crate::error::Result;

/// A wedge of [`Atom`]s in canonical order. The empty wedge is a point.
///
/// Atoms are sorted by bottom cell dimension, then kind (sphere, Moore, cone,
/// bundle), then prime, exponent and tag; contractible Moore atoms never
/// appear. Equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WedgeExpr {
    atoms: Vec<Atom>,
}

/// Sorts atoms and drops the contractible ones.
pub fn normalize(raw: impl IntoIterator<Item = Atom>) -> WedgeExpr {
    let mut atoms: Vec<Atom> = raw.into_iter().filter(|a| !a.is_contractible()).collect();
    atoms.sort();
    WedgeExpr { atoms }
}

impl WedgeExpr {
    pub fn point() -> Self {
        Self::default()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_point(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn wedge(&self, other: &WedgeExpr) -> WedgeExpr {
        normalize(self.atoms.iter().chain(&other.atoms).copied())
    }

    /// Suspends every atom `times` times; raw bundle atoms are rejected.
    pub fn suspend(&self, times: u32) -> Result<WedgeExpr> {
        let atoms = self.atoms.iter().map(|a| a.suspend(times)).collect::<Result<Vec<_>>>()?;
        Ok(normalize(atoms))
    }

    /// Reduced homology, additive over the atoms. Degrees with trivial
    /// homology are absent.
    pub fn reduced_homology(&self) -> BTreeMap<u32, AbelianGroup> {
        let mut out: BTreeMap<u32, AbelianGroup> = BTreeMap::new();
        for atom in &self.atoms {
            for (deg, g) in atom.reduced_homology() {
                let slot = out.entry(deg).or_default();
                *slot = slot.direct_sum(&g);
            }
        }
        out.retain(|_, g| !g.is_trivial());
        out
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.atoms.binary_search(atom).is_ok()
    }
}

impl FromIterator<Atom> for WedgeExpr {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        normalize(iter)
    }
}

/// Accumulates summands in formula order and normalizes at the end.
#[derive(Clone, Debug, Default)]
pub struct WedgeBuilder {
    atoms: Vec<Atom>,
}

impl WedgeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn atom(mut self, atom: Atom) -> Self {
        self.atoms.push(atom);
        self
    }

    /// `count` copies of `S^n`.
    pub fn spheres(mut self, n: u32, count: u32) -> Self {
        self.atoms.extend((0..count).map(|_| Atom::sphere(n)));
        self
    }

    /// `P^n(A)` for a torsion group `A`, split into prime-power Moore
    /// spaces. Any free part of `A` is ignored.
    pub fn moore(mut self, n: u32, group: &AbelianGroup) -> Self {
        self.atoms.extend(group.torsion().iter().map(|f| Atom::moore(n, f.p, f.e)));
        self
    }

    pub fn wedge(mut self, other: &WedgeExpr) -> Self {
        self.atoms.extend_from_slice(other.atoms());
        self
    }

    pub fn build(self) -> WedgeExpr {
        normalize(self.atoms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::RawGroup;

    #[test]
    fn normalize_sorts() {
        let w = normalize([Atom::sphere(6), Atom::sphere(3)]);
        assert_eq!(w.atoms(), &[Atom::sphere(3), Atom::sphere(6)]);
    }

    #[test]
    fn normalize_drops_trivial_moore() {
        assert!(normalize([Atom::moore(5, 3, 0)]).is_point());
    }

    #[test]
    fn moore_of_composite_group_splits() {
        let z45 = crate::abelian::localize_away_from_2(&RawGroup::from_orders(0, &[45]))
            .unwrap()
            .group;
        let w = WedgeBuilder::new().moore(5, &z45).build();
        assert_eq!(w.atoms(), &[Atom::moore(5, 3, 2), Atom::moore(5, 5, 1)]);
    }

    #[test]
    fn suspend_examples() {
        let w = normalize([Atom::sphere(3), Atom::moore(4, 3, 1)]);
        assert_eq!(w.suspend(1).unwrap(), normalize([Atom::sphere(4), Atom::moore(5, 3, 1)]));
        let b = normalize([Atom::Bundle { rho: 1, nu: 1 }]);
        assert!(b.suspend(1).is_err());
    }

    #[test]
    fn homology_examples() {
        let w = normalize([
            Atom::sphere(3),
            Atom::sphere(6),
            Atom::moore(5, 3, 1),
            Atom::sphere(8),
        ]);
        let h = w.reduced_homology();
        assert_eq!(h.len(), 4);
        assert_eq!(h[&3], AbelianGroup::free(1));
        assert_eq!(h[&4], AbelianGroup::cyclic(3, 1).unwrap());
        assert_eq!(h[&6], AbelianGroup::free(1));
        assert_eq!(h[&8], AbelianGroup::free(1));
        assert!(WedgeExpr::point().reduced_homology().is_empty());
    }

    #[test]
    fn homology_accumulates() {
        let w = normalize([Atom::sphere(4), Atom::sphere(4), Atom::moore(5, 3, 1)]);
        assert_eq!(w.reduced_homology()[&4], AbelianGroup::with_torsion(2, &[(3, 1)]).unwrap());
    }
}
