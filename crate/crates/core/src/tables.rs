//! Closed-world tables of low-degree homotopy away from 2.
//!
//! Only the entries needed by the decomposition arguments are present.
//! Everything else is [`Error::OutOfTable`]; nothing is extrapolated. Each
//! entry carries the statement it rests on, for audit output.

use serde::Serialize;

use crate::abelian::{is_prime, AbelianGroup};
use crate::error::{Error, Result};
use crate::wedge::{normalize, Atom, AttachTag, WedgeExpr};

/// One homotopy group with its generator, when the group is `Z/3` and the
/// generator is one of the named classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiEntry {
    pub group: AbelianGroup,
    pub generator: Option<AttachTag>,
    pub source: &'static str,
}

const CONNECTIVITY: &str = "P^n(p^r) is (n-2)-connected with pi_{n-1} = Z/p^r (Hurewicz)";
const STEM_0_1: &str = "pi_n(P^n(p^r)) = pi_{n+1}(P^n(p^r)) = 0 away from 2, n >= 4";
const STEM_2: &str =
    "n >= 6: pi_{n+2}(P^n(3^r)) = Z/3{i o Sigma^{n-4} alpha}, pi_{n+2}(P^n(p^r)) = 0 for p >= 5";
const PI7_P4: &str =
    "pi_7(P^4(3^r)) = Z/3{alpha~} with q o alpha~ = Sigma alpha; pi_7(P^4(p^r)) = 0 for p >= 5";
const PI8_P5: &str =
    "pi_8(P^5(3^r)) = Z/3{Sigma alpha~}; pi_8(P^5(p^r)) = 0 for p >= 5";

const SPHERE_LOW: &str = "pi_k(S^n) = 0 for k < n and pi_n(S^n) = Z";
const SPHERE_STEMS_1_2: &str = "pi_{n+1}(S^n) and pi_{n+2}(S^n) are 2-groups for n >= 3";
const SPHERE_STEM_3: &str =
    "pi_6(S^3) = Z/3{alpha} away from 2, alpha stable and detected by P^1";

fn check_moore(n: u32, p: u64, e: u32) -> Result<()> {
    if n < 3 || p < 3 || !is_prime(p) || e == 0 {
        return Err(Error::OutOfTable(format!("P^{n}({p}^{e}) is not an odd-primary Moore space")));
    }
    Ok(())
}

fn z3() -> AbelianGroup {
    AbelianGroup::cyclic(3, 1).expect("3 is prime")
}

/// `π_k(P^n(p^e))` away from 2.
pub fn pi_moore(n: u32, p: u64, e: u32, k: u32) -> Result<PiEntry> {
    check_moore(n, p, e)?;
    let entry = |group, generator, source| Ok(PiEntry { group, generator, source });
    let at_three = |tag| if p == 3 { (z3(), Some(tag)) } else { (AbelianGroup::trivial(), None) };
    match k {
        k if k + 1 < n => entry(AbelianGroup::trivial(), None, CONNECTIVITY),
        k if k + 1 == n => entry(AbelianGroup::cyclic(p, e)?, None, CONNECTIVITY),
        k if (k == n || k == n + 1) && n >= 4 => entry(AbelianGroup::trivial(), None, STEM_0_1),
        k if k == n + 2 && n >= 6 => {
            let (g, t) = at_three(AttachTag::IotaAlpha);
            entry(g, t, STEM_2)
        }
        7 if n == 4 => {
            let (g, t) = at_three(AttachTag::AlphaTilde);
            entry(g, t, PI7_P4)
        }
        8 if n == 5 => {
            let (g, t) = at_three(AttachTag::AlphaTilde);
            entry(g, t, PI8_P5)
        }
        _ => Err(Error::OutOfTable(format!("pi_{k}(P^{n}({p}^{e}))"))),
    }
}

/// `π_k(S^n)` away from 2, `n >= 3`.
pub fn pi_sphere(n: u32, k: u32) -> Result<PiEntry> {
    if n < 3 {
        return Err(Error::OutOfTable(format!("S^{n} is not simply connected")));
    }
    let entry = |group, generator, source| Ok(PiEntry { group, generator, source });
    match k {
        k if k < n => entry(AbelianGroup::trivial(), None, SPHERE_LOW),
        k if k == n => entry(AbelianGroup::free(1), None, SPHERE_LOW),
        k if k == n + 1 || k == n + 2 => entry(AbelianGroup::trivial(), None, SPHERE_STEMS_1_2),
        // π_7(S^4) has a Hopf-invariant Z summand and is not tabulated.
        k if k == n + 3 && n != 4 => entry(z3(), Some(AttachTag::Alpha), SPHERE_STEM_3),
        _ => Err(Error::OutOfTable(format!("pi_{k}(S^{n})"))),
    }
}

/// `π_k` of a sphere or Moore atom.
pub fn pi_atom(atom: &Atom, k: u32) -> Result<PiEntry> {
    match *atom {
        Atom::Sphere { n } => pi_sphere(n, k),
        Atom::Moore { n, p, e } => pi_moore(n, p, e, k),
        _ => Err(Error::OutOfTable(format!("homotopy of {atom}"))),
    }
}

/// `P^m(p^r) ∧ P^n(q^s)` away from 2.
pub fn smash_moore(m: u32, p: u64, r: u32, n: u32, q: u64, s: u32) -> Result<WedgeExpr> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidAtom(format!("Moore dimensions {m}, {n} must be >= 3")));
    }
    if r == 0 || s == 0 || p == 2 || q == 2 || p != q {
        return Ok(WedgeExpr::point());
    }
    let k = r.min(s);
    Ok(normalize([Atom::moore(m + n, p, k), Atom::moore(m + n - 1, p, k)]))
}

/// The set `[P^n(A), X]` read off the universal coefficient sequence
/// `0 -> π_n(X) ⊗ A -> [P^n(A), X] -> Tor(π_{n-1}(X), A) -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapsFromMoore {
    pub tensor_part: AbelianGroup,
    pub tor_part: AbelianGroup,
    /// The group itself, when one end of the sequence vanishes.
    pub group: Option<AbelianGroup>,
    /// Certificate that every map inducing zero on homology is null.
    pub null_if_homology_trivial: bool,
    pub sources: Vec<&'static str>,
}

impl MapsFromMoore {
    pub fn is_trivial(&self) -> bool {
        self.tensor_part.is_trivial() && self.tor_part.is_trivial()
    }

    /// Order of the set, `None` if infinite.
    pub fn order(&self) -> Option<u128> {
        Some(self.tensor_part.order()? * self.tor_part.order()?)
    }
}

/// `[P^n(A), target]` away from 2 for a torsion group `A`.
pub fn maps_from_moore(n: u32, source: &AbelianGroup, target: &Atom) -> Result<MapsFromMoore> {
    if n < 3 {
        return Err(Error::OutOfTable(format!("P^{n}(A) below dimension 3")));
    }
    if !source.is_torsion() {
        return Err(Error::OutOfTable("source group must be torsion".into()));
    }
    let top = pi_atom(target, n)?;
    let below = pi_atom(target, n - 1)?;
    let tensor_part = top.group.tensor(source);
    let tor_part = below.group.tor(source);
    let group = if tensor_part.is_trivial() {
        Some(tor_part.clone())
    } else if tor_part.is_trivial() {
        Some(tensor_part.clone())
    } else {
        None
    };
    // With the tensor term gone, a map is determined by its effect on
    // π_{n-1}, which the Hurewicz map identifies with H_{n-1} as long as the
    // target is (n-2)-connected.
    let hurewicz = match *target {
        Atom::Sphere { n: m } => m + 1 >= n,
        Atom::Moore { n: m, .. } => m >= n,
        _ => false,
    };
    let null_if_homology_trivial = (tensor_part.is_trivial() && hurewicz) || (group.as_ref().is_some_and(|g| g.is_trivial()));
    let mut sources = vec!["0 -> pi_n(X) (x) A -> [P^n(A), X] -> Tor(pi_{n-1}(X), A) -> 0"];
    for s in [top.source, below.source] {
        if !sources.contains(&s) {
            sources.push(s);
        }
    }
    Ok(MapsFromMoore { tensor_part, tor_part, group, null_if_homology_trivial, sources })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(pairs: &[(u64, u32)]) -> AbelianGroup {
        AbelianGroup::with_torsion(0, pairs).unwrap()
    }

    #[test]
    fn pi_moore_examples() {
        let e = pi_moore(4, 3, 2, 7).unwrap();
        assert_eq!(e.group, z3());
        assert_eq!(e.generator, Some(AttachTag::AlphaTilde));

        assert!(pi_moore(4, 5, 1, 7).unwrap().group.is_trivial());
        assert!(pi_moore(7, 7, 1, 9).unwrap().group.is_trivial());
    }

    #[test]
    fn pi_moore_stem_two() {
        for n in 6..12 {
            let e = pi_moore(n, 3, 1, n + 2).unwrap();
            assert_eq!(e.group, z3());
            assert_eq!(e.generator, Some(AttachTag::IotaAlpha));
        }
        let e = pi_moore(5, 3, 3, 8).unwrap();
        assert_eq!(e.generator, Some(AttachTag::AlphaTilde));
    }

    #[test]
    fn pi_moore_closed_world() {
        // π_6(P^3(3^r)) is deliberately absent.
        assert!(matches!(pi_moore(3, 3, 1, 6), Err(Error::OutOfTable(_))));
        assert!(matches!(pi_moore(4, 3, 1, 6), Err(Error::OutOfTable(_))));
        assert!(matches!(pi_moore(5, 3, 1, 7), Err(Error::OutOfTable(_))));
        assert!(matches!(pi_moore(3, 3, 1, 3), Err(Error::OutOfTable(_))));
        assert!(matches!(pi_moore(6, 3, 1, 9), Err(Error::OutOfTable(_))));
        assert!(pi_moore(4, 9, 1, 4).is_err());
    }

    #[test]
    fn pi_sphere_entries() {
        assert_eq!(pi_sphere(3, 6).unwrap().group, z3());
        assert_eq!(pi_sphere(5, 8).unwrap().generator, Some(AttachTag::Alpha));
        assert!(pi_sphere(3, 4).unwrap().group.is_trivial());
        assert!(pi_sphere(4, 7).is_err());
        assert!(pi_sphere(3, 7).is_err());
    }

    #[test]
    fn smash_examples() {
        assert_eq!(smash_moore(4, 3, 2, 5, 3, 1).unwrap().to_string(), "P^8(3) v P^9(3)");
        assert!(smash_moore(4, 3, 1, 4, 5, 2).unwrap().is_point());
        assert_eq!(smash_moore(3, 3, 1, 3, 3, 1).unwrap().to_string(), "P^5(3) v P^6(3)");
        assert!(smash_moore(4, 3, 0, 4, 3, 1).unwrap().is_point());
    }

    #[test]
    fn maps_vanishing_statements() {
        let m = maps_from_moore(5, &g(&[(3, 2), (5, 1)]), &Atom::sphere(4)).unwrap();
        assert!(m.is_trivial());
        assert_eq!(m.group, Some(AbelianGroup::trivial()));

        let m = maps_from_moore(5, &g(&[(3, 1)]), &Atom::sphere(3)).unwrap();
        assert!(m.is_trivial());

        let m = maps_from_moore(6, &g(&[(3, 1)]), &Atom::moore(5, 3, 2)).unwrap();
        assert!(m.is_trivial());
    }

    #[test]
    fn maps_between_equal_dimension_moore_spaces() {
        let m = maps_from_moore(5, &g(&[(3, 2), (5, 1)]), &Atom::moore(5, 3, 1)).unwrap();
        assert_eq!(m.group, Some(g(&[(3, 1)])));
        assert!(m.null_if_homology_trivial);
        assert_eq!(m.order(), Some(3));
    }

    #[test]
    fn maps_out_of_table() {
        assert!(maps_from_moore(5, &g(&[(3, 1)]), &Atom::sphere_cone(4)).is_err());
        assert!(maps_from_moore(7, &g(&[(3, 1)]), &Atom::sphere(4)).is_err());
        assert!(maps_from_moore(5, &AbelianGroup::free(1), &Atom::sphere(4)).is_err());
    }
}
