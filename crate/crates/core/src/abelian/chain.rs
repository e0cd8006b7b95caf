//! Finite free chain complexes and their integral homology, used as an
//! independent oracle for the homology of cell structures.

use std::collections::BTreeMap;

use super::group::{factorize, AbelianGroup, PrimePower};
use super::snf::{smith_normal_form, IntegerMatrix};

/// A chain complex of finitely generated free abelian groups.
///
/// `boundary(k)` maps `C_k -> C_{k-1}`, stored with `rank C_{k-1}` rows and
/// `rank C_k` columns.
#[derive(Clone, Debug, Default)]
pub struct ChainComplex {
    ranks: BTreeMap<i32, usize>,
    boundaries: BTreeMap<i32, IntegerMatrix>,
}

impl ChainComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cells(mut self, degree: i32, count: usize) -> Self {
        *self.ranks.entry(degree).or_default() += count;
        self
    }

    /// Sets the boundary `C_k -> C_{k-1}`. Panics on a shape mismatch.
    pub fn with_boundary(mut self, degree: i32, d: IntegerMatrix) -> Self {
        assert_eq!(d.cols(), self.rank(degree), "boundary source rank");
        assert_eq!(d.rows(), self.rank(degree - 1), "boundary target rank");
        self.boundaries.insert(degree, d);
        self
    }

    pub fn rank(&self, degree: i32) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn boundary(&self, degree: i32) -> IntegerMatrix {
        self.boundaries
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zeros(self.rank(degree - 1), self.rank(degree)))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.ranks.iter().filter(|(_, &r)| r > 0).map(|(&k, _)| k)
    }

    /// Checks `d_{k-1} d_k = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        self.degrees().all(|k| {
            let d = self.boundary(k);
            let dd = self.boundary(k - 1);
            dd.rows() == 0 || d.cols() == 0 || {
                let p = dd.mul(&d);
                (0..p.rows()).all(|i| (0..p.cols()).all(|j| p[(i, j)] == 0))
            }
        })
    }

    /// Tensor product with the Koszul sign `d(a ⊗ b) = da ⊗ b + (-1)^|a| a ⊗ db`.
    pub fn tensor(&self, other: &ChainComplex) -> ChainComplex {
        // Basis of (C ⊗ D)_n: pairs (p, i, q, j) with p + q = n, ordered by p.
        let mut basis: BTreeMap<i32, Vec<(i32, usize, i32, usize)>> = BTreeMap::new();
        for p in self.degrees() {
            for q in other.degrees() {
                let cell = basis.entry(p + q).or_default();
                for i in 0..self.rank(p) {
                    for j in 0..other.rank(q) {
                        cell.push((p, i, q, j));
                    }
                }
            }
        }
        let index = |n: i32, key: (i32, usize, i32, usize)| -> usize {
            basis[&n].iter().position(|&b| b == key).expect("basis element")
        };

        let mut out = ChainComplex::new();
        for (&n, cells) in &basis {
            out = out.with_cells(n, cells.len());
        }
        for (&n, cells) in &basis {
            if !basis.contains_key(&(n - 1)) {
                continue;
            }
            let mut d = IntegerMatrix::zeros(basis[&(n - 1)].len(), cells.len());
            for (col, &(p, i, q, j)) in cells.iter().enumerate() {
                let da = self.boundary(p);
                for r in 0..da.rows() {
                    let c = da[(r, i)];
                    if c != 0 {
                        d[(index(n - 1, (p - 1, r, q, j)), col)] += c;
                    }
                }
                let db = other.boundary(q);
                let sign = if p.rem_euclid(2) == 0 { 1 } else { -1 };
                for r in 0..db.rows() {
                    let c = db[(r, j)];
                    if c != 0 {
                        d[(index(n - 1, (p, i, q - 1, r)), col)] += sign * c;
                    }
                }
            }
            out = out.with_boundary(n, d);
        }
        out
    }

    /// Integral homology in `degree`, with the 2-primary torsion discarded.
    pub fn homology_away_from_2(&self, degree: i32) -> AbelianGroup {
        let n = self.rank(degree);
        if n == 0 {
            return AbelianGroup::trivial();
        }
        let out_rank = smith_normal_form(&self.boundary(degree)).rank();
        let incoming = smith_normal_form(&self.boundary(degree + 1));
        let free = n - out_rank - incoming.rank();
        let torsion = incoming
            .diagonal
            .iter()
            .filter(|&&d| d.abs() > 1)
            .flat_map(|&d| factorize(d.unsigned_abs() as u64))
            .filter(|&(p, _)| p != 2)
            .map(|(p, e)| PrimePower { p, e });
        AbelianGroup::from_parts(free as u32, torsion)
    }

    /// Homology in every degree where it is nonzero.
    pub fn homology_map(&self) -> BTreeMap<i32, AbelianGroup> {
        self.degrees()
            .map(|k| (k, self.homology_away_from_2(k)))
            .filter(|(_, g)| !g.is_trivial())
            .collect()
    }
}
