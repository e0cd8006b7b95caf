//! Benchmark fixtures.

use susp7_core::{AbelianGroup, IntegerMatrix, ManifoldDescriptor, ReductionVector};

/// A descriptor with `r = d = rank`, `tors` cyclic 3-groups in H and a
/// Wu vector cycling 1,2,0.
pub fn descriptor(rank: u32, tors: u32) -> ManifoldDescriptor {
    let pairs: Vec<(u64, u32)> = (0..tors).map(|i| (3, 1 + i % 3)).collect();
    let h = AbelianGroup::with_torsion(0, &pairs).unwrap();
    let t = AbelianGroup::with_torsion(0, &[(3, 2), (5, 1)]).unwrap();
    let len = tors + rank + 1;
    let wu = (0..len).map(|i| ((i + 1) % 3) as u8).collect();
    ManifoldDescriptor::new(rank, rank, h, t, wu).unwrap()
}

/// Deterministic dense n x n matrix with small entries.
pub fn matrix(n: usize) -> IntegerMatrix {
    let rows: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| ((i * 7 + j * 13 + i * j) % 41) as i128 - 20).collect())
        .collect();
    IntegerMatrix::from_rows(&rows)
}

pub fn vector(len: usize) -> ReductionVector {
    ReductionVector::new((0..len).map(|i| ((i * i + 2) % 3) as i64))
}
