//! Suspension splittings of a 7-manifold from its invariants.
//!
//! The pipeline: the homology decomposition of `ΣM` splits through the
//! 5-skeleton stage ([`stage`]); the top cell only sees
//! `∨d S^4 ∨ P^4(H) ∨ P^5(T)`; primes `p >= 5` split off; the 3-local
//! attaching vector is reduced by [`crate::reduce`] to a single nonzero
//! entry at the `P^1`-index, and the summand found there decides which
//! two-cell block carries the top cell.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::invariants::{summand_list, ManifoldDescriptor, SummandIndex, SummandKind};
use crate::reduce::{canonical_form, ReductionVector};
use crate::wedge::{Atom, WedgeBuilder, WedgeExpr};

/// Which case of the splitting applies, selected by the `p_1`-radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// `p_1 ≡ 0 mod 3`: the top cell splits off.
    P1Trivial,
    /// Radius `-1/mu`: `α̃` cone on a `P(3^mu)` summand from `H`.
    NegativeRadius { mu: u32 },
    /// Radius `0`: `α` cone on a sphere from the free part of `H_3`.
    ZeroRadius,
    /// Radius `1/nu`: the bundle block over a `P(3^nu)` summand from `T`.
    PositiveRadius { nu: u32 },
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::P1Trivial => write!(f, "p1=0"),
            CaseLabel::NegativeRadius { mu } => write!(f, "rad=-1/{mu}"),
            CaseLabel::ZeroRadius => write!(f, "rad=0"),
            CaseLabel::PositiveRadius { nu } => write!(f, "rad=1/{nu}"),
        }
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    pub suspensions: u32,
    pub wedge: WedgeExpr,
    pub case: CaseLabel,
    pub trace: Vec<String>,
}

/// `Σ M_(level)`, the suspended homology-decomposition stage, as a wedge.
pub fn stage(desc: &ManifoldDescriptor, level: u32) -> Result<WedgeExpr> {
    if !(3..=5).contains(&level) {
        return Err(Error::BadStage(level));
    }
    let (r, d, h, t) = (desc.r(), desc.d(), desc.h(), desc.t());
    let mut b = WedgeBuilder::new().spheres(3, r).spheres(4, d).moore(4, h).moore(5, t);
    if level >= 4 {
        b = b.spheres(5, d).moore(6, h);
    }
    if level >= 5 {
        b = b.spheres(6, r);
    }
    Ok(b.build())
}

/// `Σ M_{rho,3^nu}`: `P^5(3^nu) ∨ S^8` when `3 | rho`, otherwise the
/// indecomposable `P^5(3^nu) ∪_{i∘Σα} e^8` (`p_1 = 4 rho` is then nonzero
/// mod 3, so `P^1` is nontrivial).
pub fn suspend_bundle(rho: i64, nu: u32) -> Result<WedgeExpr> {
    if nu == 0 {
        return Err(Error::InvalidAtom("bundle needs nu >= 1".into()));
    }
    Ok(if rho.rem_euclid(3) == 0 {
        WedgeBuilder::new().atom(Atom::moore(5, 3, nu)).spheres(8, 1).build()
    } else {
        WedgeBuilder::new().atom(Atom::iota_alpha_cone(5, nu)).build()
    })
}

/// Replaces raw [`Atom::Bundle`]s by their suspensions, then suspends the
/// rest `times - 1` more times.
pub fn suspend_with_bundles(w: &WedgeExpr, times: u32) -> Result<WedgeExpr> {
    if times == 0 {
        return Ok(w.clone());
    }
    let mut out = WedgeBuilder::new();
    for atom in w.atoms() {
        let once = match *atom {
            Atom::Bundle { rho, nu } => suspend_bundle(rho, nu)?,
            a => WedgeBuilder::new().atom(a.suspend(1)?).build(),
        };
        out = out.wedge(&once.suspend(times - 1)?);
    }
    Ok(out.build())
}

struct Selection {
    case: CaseLabel,
    index: Option<SummandIndex>,
    trace: Vec<String>,
}

/// Runs the matrix reduction on `wu` and reads off the case.
fn select_case(desc: &ManifoldDescriptor) -> Selection {
    let vector = ReductionVector::new(desc.wu().iter().map(|&x| i64::from(x)));
    let reduction = canonical_form(&vector);
    let mut trace = Vec::new();
    let Some(t) = reduction.form.leading_position() else {
        trace.push(format!("attaching vector ({vector}) is zero: P^1 acts trivially"));
        return Selection { case: CaseLabel::P1Trivial, index: None, trace };
    };
    let moves: Vec<String> = reduction.witness.iter().map(ToString::to_string).collect();
    trace.push(format!(
        "attaching vector ({vector}) reduced to ({}) by [{}]",
        reduction.form,
        moves.join("; ")
    ));
    let index = summand_list(desc)[t - 1];
    let case = match index.kind {
        SummandKind::HPart(mu) => CaseLabel::NegativeRadius { mu },
        SummandKind::FreePart => CaseLabel::ZeroRadius,
        SummandKind::TPart(nu) => CaseLabel::PositiveRadius { nu },
    };
    trace.push(format!("P^1-index t = {t}, summand {:?}, radius {}", index.kind, index.radius));
    Selection { case, index: Some(index), trace }
}

fn quotient(g: &AbelianGroup, e: u32) -> AbelianGroup {
    g.remove_cyclic_summand(3, e).expect("summand list only names summands of the group")
}

/// `ΣM` away from 2, for descriptors with `H = 0` or `T = 0`.
pub fn decompose_sigma(desc: &ManifoldDescriptor) -> Result<DecompositionResult> {
    let (r, d, h, t) = (desc.r(), desc.d(), desc.h(), desc.t());
    if !h.is_trivial() && !t.is_trivial() {
        return Err(Error::NeedsDoubleSuspension { h: h.to_string(), t: t.to_string() });
    }
    let Selection { case, index, mut trace } = select_case(desc);
    let mut steps = vec![
        "Sigma M_(5) splits into spheres and Moore spaces".to_string(),
        "top cell attaches to d S^4 v P^4(H) v P^5(T); primes >= 5 split off".to_string(),
        format!("{} vanishes, so the top-cell complex desuspends", if h.is_trivial() { "H" } else { "T" }),
    ];
    steps.append(&mut trace);

    let base = WedgeBuilder::new().spheres(3, r).spheres(6, r);
    let wedge = match case {
        CaseLabel::P1Trivial => base
            .spheres(4, d)
            .spheres(5, d)
            .moore(4, h)
            .moore(6, h)
            .moore(5, t)
            .spheres(8, 1)
            .build(),
        CaseLabel::NegativeRadius { mu } => base
            .spheres(4, d)
            .spheres(5, d)
            .moore(4, &quotient(h, mu))
            .moore(6, h)
            .atom(Atom::alpha_tilde_cone(4, mu))
            .build(),
        CaseLabel::ZeroRadius => base
            .spheres(4, d - 1)
            .spheres(5, d)
            .moore(4, h)
            .moore(6, h)
            .moore(5, t)
            .atom(Atom::sphere_cone(4))
            .build(),
        CaseLabel::PositiveRadius { nu } => {
            steps.push(format!("block is Sigma M(rho,{}) with 3 not dividing rho", 3u64.pow(nu)));
            base.spheres(4, d)
                .spheres(5, d)
                .moore(5, &quotient(t, nu))
                .wedge(&suspend_bundle(1, nu)?)
                .build()
        }
    };
    debug_assert_eq!(index.is_some(), case != CaseLabel::P1Trivial);
    Ok(DecompositionResult { suspensions: 1, wedge, case, trace: steps })
}

/// `Σ²M` away from 2, for every descriptor.
pub fn decompose_sigma2(desc: &ManifoldDescriptor) -> DecompositionResult {
    let (r, d, h, t) = (desc.r(), desc.d(), desc.h(), desc.t());
    let Selection { case, mut trace, .. } = select_case(desc);
    let mut steps = vec![
        "Sigma M_(5) splits into spheres and Moore spaces".to_string(),
        "top cell attaches to d S^5 v P^5(H) v P^6(T) after one more suspension".to_string(),
        "primes >= 5 split off; the 3-local part is ordered by radius".to_string(),
    ];
    steps.append(&mut trace);

    let base = WedgeBuilder::new().spheres(4, r).spheres(7, r);
    let wedge = match case {
        CaseLabel::P1Trivial => base
            .spheres(5, d)
            .spheres(6, d)
            .moore(5, h)
            .moore(6, t)
            .moore(7, h)
            .spheres(9, 1)
            .build(),
        CaseLabel::NegativeRadius { mu } => base
            .spheres(5, d)
            .spheres(6, d)
            .moore(5, &quotient(h, mu))
            .moore(6, t)
            .moore(7, h)
            .atom(Atom::alpha_tilde_cone(5, mu))
            .build(),
        CaseLabel::ZeroRadius => base
            .spheres(5, d - 1)
            .spheres(6, d)
            .moore(5, h)
            .moore(6, t)
            .moore(7, h)
            .atom(Atom::sphere_cone(5))
            .build(),
        CaseLabel::PositiveRadius { nu } => {
            steps.push(format!("block is Sigma^2 M(rho,{}) with 3 not dividing rho", 3u64.pow(nu)));
            let block = suspend_bundle(1, nu)
                .and_then(|b| b.suspend(1))
                .expect("bundle block with nu >= 1 suspends");
            base.spheres(5, d)
                .spheres(6, d)
                .moore(5, h)
                .moore(6, &quotient(t, nu))
                .moore(7, h)
                .wedge(&block)
                .build()
        }
    };
    DecompositionResult { suspensions: 2, wedge, case, trace: steps }
}

/// Dispatches on the number of suspensions (1 or 2).
pub fn decompose(desc: &ManifoldDescriptor, suspensions: u32) -> Result<DecompositionResult> {
    match suspensions {
        1 => decompose_sigma(desc),
        2 => Ok(decompose_sigma2(desc)),
        k => Err(Error::InvalidDescriptor(format!("suspensions must be 1 or 2, got {k}"))),
    }
}

/// The wedge of spheres and Moore spaces with the given homology, for an
/// `(n-1)`-connected complex of dimension at most `n + 2`. Away from 2 such
/// a complex is determined by its homology.
pub fn chang_split(homology: &BTreeMap<u32, AbelianGroup>, bottom: u32) -> Result<WedgeExpr> {
    let bad = |reason: String| Error::BadRange { bottom, reason };
    if bottom < 3 {
        return Err(bad("bottom dimension must be at least 3".into()));
    }
    let mut b = WedgeBuilder::new();
    for (&deg, g) in homology {
        if g.is_trivial() {
            continue;
        }
        if deg < bottom || deg > bottom + 2 {
            return Err(bad(format!("homology in degree {deg}")));
        }
        if deg == bottom + 2 && !g.is_torsion() {
            b = b.spheres(deg, g.free_rank());
        } else if deg == bottom + 2 {
            return Err(bad(format!("torsion in the top degree {deg}")));
        } else {
            b = b.spheres(deg, g.free_rank()).moore(deg + 1, g);
        }
    }
    Ok(b.build())
}
