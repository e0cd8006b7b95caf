use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{is_prime, AbelianGroup};
use crate::error::{Error, Result};

/// The attaching class of the top cell of a [`Atom::Cone`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AttachTag {
    /// An iterated suspension of the order-3 class `α ∈ π_6(S^3)` on a sphere.
    #[serde(rename = "alpha")]
    Alpha,
    /// The lift `α̃` of `Σα` through the pinch map of a mod-`3^μ` Moore space.
    #[serde(rename = "alpha~")]
    AlphaTilde,
    /// `α` composed with the bottom-cell inclusion of a mod-`3^ν` Moore space.
    #[serde(rename = "i.alpha")]
    IotaAlpha,
}

impl AttachTag {
    /// `top - n` for a cone on a core of index `n`: `α` and `α̃` live in
    /// `π_{n+3}`, while `i∘α` lives in `π_{n+2}(P^n)`.
    pub fn top_offset(&self) -> u32 {
        match self {
            AttachTag::Alpha | AttachTag::AlphaTilde => 4,
            AttachTag::IotaAlpha => 3,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            AttachTag::Alpha => "alpha",
            AttachTag::AlphaTilde => "alpha~",
            AttachTag::IotaAlpha => "i.alpha",
        }
    }

    pub fn parse(s: &str) -> Option<AttachTag> {
        match s {
            "alpha" => Some(AttachTag::Alpha),
            "alpha~" => Some(AttachTag::AlphaTilde),
            "i.alpha" => Some(AttachTag::IotaAlpha),
            _ => None,
        }
    }
}

impl fmt::Display for AttachTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The lower skeleton a cone cell is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cell {
    Sphere { n: u32 },
    Moore { n: u32, p: u64, e: u32 },
}

impl Cell {
    pub fn n(&self) -> u32 {
        match *self {
            Cell::Sphere { n } | Cell::Moore { n, .. } => n,
        }
    }

    /// Dimension of the bottom cell: `n` for `S^n`, `n - 1` for `P^n`.
    pub fn bottom_dim(&self) -> u32 {
        match *self {
            Cell::Sphere { n } => n,
            Cell::Moore { n, .. } => n - 1,
        }
    }

    fn as_atom(&self) -> Atom {
        match *self {
            Cell::Sphere { n } => Atom::Sphere { n },
            Cell::Moore { n, p, e } => Atom::Moore { n, p, e },
        }
    }

    fn shifted(&self, k: u32) -> Cell {
        match *self {
            Cell::Sphere { n } => Cell::Sphere { n: n + k },
            Cell::Moore { n, p, e } => Cell::Moore { n: n + k, p, e },
        }
    }
}

/// One indecomposable wedge summand, localized away from 2.
///
/// `Moore { n, p, e }` is `P^n(p^e)`, with reduced homology `Z/p^e` in
/// degree `n - 1`. A `Cone` is its `core` with one cell of dimension
/// `top = core.n() + tag.top_offset()` attached along `tag`. `Bundle { rho, nu }` is the
/// total space of the `S^3`-bundle over `S^4` with invariants
/// `(rho, 3^nu)`; it only exists unsuspended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Atom {
    Sphere { n: u32 },
    Moore { n: u32, p: u64, e: u32 },
    Cone { core: Cell, tag: AttachTag, top: u32 },
    Bundle { rho: i64, nu: u32 },
}

impl Atom {
    pub fn sphere(n: u32) -> Atom {
        Atom::Sphere { n }
    }

    pub fn moore(n: u32, p: u64, e: u32) -> Atom {
        Atom::Moore { n, p, e }
    }

    /// `S^n ∪_{Σ^{n-3}α} e^{n+4}`
    pub fn sphere_cone(n: u32) -> Atom {
        Atom::Cone { core: Cell::Sphere { n }, tag: AttachTag::Alpha, top: n + 4 }
    }

    /// `P^n(3^mu) ∪_{α̃} e^{n+4}`
    pub fn alpha_tilde_cone(n: u32, mu: u32) -> Atom {
        Atom::Cone { core: Cell::Moore { n, p: 3, e: mu }, tag: AttachTag::AlphaTilde, top: n + 4 }
    }

    /// `P^n(3^nu) ∪_{i∘Σ^{n-4}α} e^{n+3}`
    pub fn iota_alpha_cone(n: u32, nu: u32) -> Atom {
        Atom::Cone { core: Cell::Moore { n, p: 3, e: nu }, tag: AttachTag::IotaAlpha, top: n + 3 }
    }

    /// Index dimension `n` (the superscript of the sphere or Moore space, or
    /// of the core for a cone). Bundles count as `4`, like `P^4(3^nu)`.
    pub fn n(&self) -> u32 {
        match *self {
            Atom::Sphere { n } | Atom::Moore { n, .. } => n,
            Atom::Cone { core, .. } => core.n(),
            Atom::Bundle { .. } => 4,
        }
    }

    /// Dimension of the bottom cell; the primary key of the canonical order.
    pub fn bottom_dim(&self) -> u32 {
        match *self {
            Atom::Sphere { n } => n,
            Atom::Moore { n, .. } => n - 1,
            Atom::Cone { core, .. } => core.bottom_dim(),
            Atom::Bundle { .. } => 3,
        }
    }

    /// True for Moore atoms that are contractible away from 2.
    pub fn is_contractible(&self) -> bool {
        matches!(*self, Atom::Moore { p, e, .. } if e == 0 || p == 2)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidAtom(format!("{self}: {msg}")));
        match *self {
            Atom::Sphere { n } if n < 3 => bad(format!("dimension {n} below 3")),
            Atom::Sphere { .. } => Ok(()),
            Atom::Moore { n, .. } if n < 3 => bad(format!("dimension {n} below 3")),
            Atom::Moore { p, .. } if p < 3 || !is_prime(p) => bad(format!("{p} is not an odd prime")),
            Atom::Moore { e: 0, .. } => bad("trivial coefficient group".into()),
            Atom::Moore { p, e, .. } if p.checked_pow(e).is_none() => bad("order overflows".into()),
            Atom::Moore { .. } => Ok(()),
            Atom::Cone { core, tag, top } => {
                let n = core.n();
                if n < 4 {
                    return bad(format!("core dimension {n} below 4"));
                }
                if top != n + tag.top_offset() {
                    return bad(format!("top cell {top} must be {}", n + tag.top_offset()));
                }
                match (core, tag) {
                    (Cell::Sphere { .. }, AttachTag::Alpha) => Ok(()),
                    (Cell::Moore { p: 3, e, .. }, AttachTag::AlphaTilde | AttachTag::IotaAlpha)
                        if e >= 1 && 3u64.checked_pow(e).is_some() =>
                    {
                        Ok(())
                    }
                    _ => bad(format!("tag {tag} does not fit this core")),
                }
            }
            Atom::Bundle { nu: 0, .. } => bad("nu must be positive".into()),
            Atom::Bundle { nu, .. } if 3u64.checked_pow(nu).is_none() => bad("order overflows".into()),
            Atom::Bundle { .. } => Ok(()),
        }
    }

    /// Shifts every cell up by `times` dimensions. Attaching tags persist.
    pub fn suspend(&self, times: u32) -> Result<Atom> {
        Ok(match *self {
            Atom::Sphere { n } => Atom::Sphere { n: n + times },
            Atom::Moore { n, p, e } => Atom::Moore { n: n + times, p, e },
            Atom::Cone { core, tag, top } => {
                Atom::Cone { core: core.shifted(times), tag, top: top + times }
            }
            Atom::Bundle { .. } if times == 0 => *self,
            Atom::Bundle { .. } => return Err(Error::UnsuspendableAtom(self.to_string())),
        })
    }

    /// Reduced integral homology (away from 2) as `(degree, group)` pairs.
    pub fn reduced_homology(&self) -> Vec<(u32, AbelianGroup)> {
        match *self {
            Atom::Sphere { n } => vec![(n, AbelianGroup::free(1))],
            Atom::Moore { .. } if self.is_contractible() => vec![],
            Atom::Moore { n, p, e } => {
                vec![(n - 1, AbelianGroup::cyclic(p, e).expect("validated Moore atom"))]
            }
            Atom::Cone { core, top, .. } => {
                let mut h = core.as_atom().reduced_homology();
                h.push((top, AbelianGroup::free(1)));
                h
            }
            Atom::Bundle { nu, .. } => vec![
                (3, AbelianGroup::cyclic(3, nu).expect("validated bundle")),
                (7, AbelianGroup::free(1)),
            ],
        }
    }

    fn sort_key(&self) -> (u32, u8, u64, u32, u8, i64) {
        match *self {
            Atom::Sphere { n } => (n, 0, 0, 0, 0, 0),
            Atom::Moore { n, p, e } => (n - 1, 1, p, e, 0, 0),
            Atom::Cone { core, tag, .. } => {
                let (p, e) = match core {
                    Cell::Sphere { .. } => (0, 0),
                    Cell::Moore { p, e, .. } => (p, e),
                };
                (core.bottom_dim(), 2, p, e, tag as u8, 0)
            }
            Atom::Bundle { rho, nu } => (3, 3, 3, nu, 0, rho),
        }
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_atom().fmt(f)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Sphere { n } => write!(f, "S^{n}"),
            Atom::Moore { n, p, e } => match p.checked_pow(e) {
                Some(k) => write!(f, "P^{n}({k})"),
                None => write!(f, "P^{n}({p}^{e})"),
            },
            Atom::Cone { core, tag, top } => write!(f, "C({core};{tag};{top})"),
            Atom::Bundle { rho, nu } => write!(f, "M({rho},{})", 3u64.pow(nu)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(Atom::sphere(3).to_string(), "S^3");
        assert_eq!(Atom::moore(5, 3, 2).to_string(), "P^5(9)");
        assert_eq!(Atom::sphere_cone(4).to_string(), "C(S^4;alpha;8)");
        assert_eq!(Atom::alpha_tilde_cone(4, 1).to_string(), "C(P^4(3);alpha~;8)");
        assert_eq!(Atom::iota_alpha_cone(5, 2).to_string(), "C(P^5(9);i.alpha;8)");
        assert_eq!(Atom::Bundle { rho: 1, nu: 1 }.to_string(), "M(1,3)");
    }

    #[test]
    fn validation() {
        assert!(Atom::sphere(2).validate().is_err());
        assert!(Atom::moore(5, 4, 1).validate().is_err());
        assert!(Atom::moore(5, 3, 0).validate().is_err());
        assert!(Atom::sphere_cone(3).validate().is_err());
        assert!(Atom::iota_alpha_cone(5, 1).validate().is_ok());
        let wrong_tag = Atom::Cone { core: Cell::Sphere { n: 4 }, tag: AttachTag::IotaAlpha, top: 8 };
        assert!(wrong_tag.validate().is_err());
        let wrong_top = Atom::Cone { core: Cell::Sphere { n: 4 }, tag: AttachTag::Alpha, top: 9 };
        assert!(wrong_top.validate().is_err());
        let wrong_prime =
            Atom::Cone { core: Cell::Moore { n: 4, p: 5, e: 1 }, tag: AttachTag::AlphaTilde, top: 8 };
        assert!(wrong_prime.validate().is_err());
    }

    #[test]
    fn suspension_shifts_cone() {
        assert_eq!(Atom::sphere_cone(4).suspend(1).unwrap(), Atom::sphere_cone(5));
        assert_eq!(
            Atom::Bundle { rho: 1, nu: 1 }.suspend(1),
            Err(Error::UnsuspendableAtom("M(1,3)".into()))
        );
    }

    #[test]
    fn cone_homology_is_core_plus_top() {
        let h = Atom::alpha_tilde_cone(4, 2).reduced_homology();
        assert_eq!(
            h,
            vec![(3, AbelianGroup::cyclic(3, 2).unwrap()), (8, AbelianGroup::free(1))]
        );
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&Atom::iota_alpha_cone(5, 1)).unwrap();
        assert_eq!(
            j,
            r#"{"kind":"cone","core":{"kind":"moore","n":5,"p":3,"e":1},"tag":"i.alpha","top":8}"#
        );
    }
}
