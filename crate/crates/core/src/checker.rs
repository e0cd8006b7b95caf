//! Homology and rigidity checks on decomposition results.
//!
//! The expected homology is written out here from `(r, d, H, T)` rather than
//! taken from [`crate::invariants`] or [`crate::decompose`].

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::abelian::AbelianGroup;
use crate::decompose::DecompositionResult;
use crate::error::{Error, Result};
use crate::invariants::{p1_radius, ManifoldDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: u32,
    pub expected: AbelianGroup,
    pub found: AbelianGroup,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub rows: Vec<DegreeRow>,
    pub trace: Vec<String>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &DegreeRow> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>6}  {:<24} {:<24} ok", "degree", "expected", "found")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>6}  {:<24} {:<24} {}",
                row.degree,
                row.expected.to_string(),
                row.found.to_string(),
                if row.matches { "yes" } else { "NO" }
            )?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Reduced homology of `Σ^k M` away from 2, degree by degree.
pub fn expected_homology(desc: &ManifoldDescriptor, suspensions: u32) -> Vec<(u32, AbelianGroup)> {
    let free = AbelianGroup::free;
    let (r, d, h, t) = (desc.r(), desc.d(), desc.h(), desc.t());
    let table = [
        (2, free(r).direct_sum(h)),
        (3, free(d).direct_sum(t)),
        (4, free(d).direct_sum(h)),
        (5, free(r)),
        (7, free(1)),
    ];
    table
        .into_iter()
        .filter(|(_, g)| !g.is_trivial())
        .map(|(k, g)| (k + suspensions, g))
        .collect()
}

/// Compares the homology of `result.wedge` with that of `Σ^k M`.
pub fn verify_homology(desc: &ManifoldDescriptor, result: &DecompositionResult) -> VerificationReport {
    let expected: std::collections::BTreeMap<u32, AbelianGroup> =
        expected_homology(desc, result.suspensions).into_iter().collect();
    let found = result.wedge.reduced_homology();
    let degrees: BTreeSet<u32> = expected.keys().chain(found.keys()).copied().collect();
    let rows: Vec<DegreeRow> = degrees
        .into_iter()
        .map(|degree| {
            let expected = expected.get(&degree).cloned().unwrap_or_default();
            let found = found.get(&degree).cloned().unwrap_or_default();
            DegreeRow { degree, matches: expected == found, expected, found }
        })
        .collect();
    VerificationReport { pass: rows.iter().all(|r| r.matches), rows, trace: result.trace.clone() }
}

/// Equality of homology, of the `p_1 ≡ 0 mod 3` predicate and of the
/// `p_1`-radius. For one suspension both descriptors must have `H = 0` or
/// `T = 0`.
pub fn rigidity_equal(a: &ManifoldDescriptor, b: &ManifoldDescriptor, suspensions: u32) -> Result<bool> {
    match suspensions {
        1 => {
            for m in [a, b] {
                if !m.h().is_trivial() && !m.t().is_trivial() {
                    return Err(Error::NeedsDoubleSuspension { h: m.h().to_string(), t: m.t().to_string() });
                }
            }
        }
        2 => {}
        k => return Err(Error::InvalidDescriptor(format!("suspensions must be 1 or 2, got {k}"))),
    }
    Ok(expected_homology(a, 0) == expected_homology(b, 0)
        && a.p1_vanishes_mod_3() == b.p1_vanishes_mod_3()
        && p1_radius(a) == p1_radius(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{decompose_sigma, decompose_sigma2};
    use crate::invariants::{validate, RawDescriptor};
    use crate::RawGroup;

    fn desc(r: i64, d: i64, h: &[u64], t: &[u64], wu: &[i64]) -> ManifoldDescriptor {
        let raw = RawDescriptor {
            r,
            d,
            h: RawGroup::from_orders(0, h),
            t: RawGroup::from_orders(0, t),
            wu: wu.to_vec(),
        };
        validate(&raw).unwrap().descriptor
    }

    #[test]
    fn aloff_wallach_passes() {
        let m = desc(1, 0, &[], &[3], &[0]);
        let rep = verify_homology(&m, &decompose_sigma(&m).unwrap());
        assert!(rep.pass);
        let degrees: Vec<u32> = rep.rows.iter().map(|r| r.degree).collect();
        assert_eq!(degrees, [3, 4, 6, 8]);
        assert_eq!(rep.rows[1].found, AbelianGroup::cyclic(3, 1).unwrap());
    }

    #[test]
    fn tampered_wedge_fails_at_top() {
        let m = desc(1, 0, &[], &[3], &[0]);
        let mut res = decompose_sigma(&m).unwrap();
        res.wedge = "S^3 v S^6 v P^5(3)".parse().unwrap();
        let rep = verify_homology(&m, &res);
        assert!(!rep.pass);
        let bad: Vec<u32> = rep.failures().map(|r| r.degree).collect();
        assert_eq!(bad, [8]);
    }

    #[test]
    fn empty_descriptor() {
        let m = desc(0, 0, &[], &[], &[]);
        assert!(verify_homology(&m, &decompose_sigma(&m).unwrap()).pass);
        assert!(verify_homology(&m, &decompose_sigma2(&m)).pass);
    }

    #[test]
    fn rigidity_examples() {
        let a = desc(0, 0, &[], &[9], &[1]);
        let b = desc(0, 0, &[], &[9], &[2]);
        assert!(rigidity_equal(&a, &b, 1).unwrap());

        let a = desc(0, 0, &[3], &[9], &[1, 0]);
        let b = desc(0, 0, &[3], &[9], &[0, 1]);
        assert!(!rigidity_equal(&a, &b, 2).unwrap());
        assert!(matches!(rigidity_equal(&a, &b, 1), Err(Error::NeedsDoubleSuspension { .. })));

        assert!(rigidity_equal(&a, &a, 2).unwrap());
    }

    #[test]
    fn report_table() {
        let m = desc(0, 0, &[], &[], &[]);
        let s = verify_homology(&m, &decompose_sigma(&m).unwrap()).to_string();
        assert!(s.lines().nth(1).unwrap().contains("Z"));
        assert!(s.ends_with("PASS"));
    }
}
