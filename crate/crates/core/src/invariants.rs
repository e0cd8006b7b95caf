//! Manifold invariants: the descriptor, its validation, radii, the ordered
//! summand list and the `P^1`-index.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{localize_away_from_2, AbelianGroup, RawGroup};
use crate::error::{Error, Result};

/// Invariants of a simply connected closed 7-manifold `M`, away from 2.
///
/// `H_2 = Z^r + H`, `H_3 = Z^d + T`, `H_4 = Z^d + H`, `H_5 = Z^r`. The vector
/// `wu` records `(p_1(M) mod 3) ∪ x` for `x` running over the canonical
/// basis of `H^3(M; Z/3)`, indexed like [`summand_list`]. In particular
/// `p_1(M) ≡ 0 mod 3` exactly when `wu` is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManifoldDescriptor {
    r: u32,
    d: u32,
    h: AbelianGroup,
    t: AbelianGroup,
    wu: Vec<u8>,
}

/// Descriptor as read from JSON, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDescriptor {
    pub r: i64,
    pub d: i64,
    #[serde(rename = "H", default)]
    pub h: RawGroup,
    #[serde(rename = "T", default)]
    pub t: RawGroup,
    #[serde(default)]
    pub wu: Vec<i64>,
}

/// A validated descriptor plus anything discarded on the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validated {
    pub descriptor: ManifoldDescriptor,
    pub warnings: Vec<String>,
}

/// Validates raw input: drops 2-torsion (with a warning), sorts torsion
/// and checks the length of `wu` against `m + d + l`.
pub fn validate(raw: &RawDescriptor) -> Result<Validated> {
    let rank = |name, value: i64| -> Result<u32> {
        if value < 0 {
            return Err(Error::NegativeRank { name, value });
        }
        u32::try_from(value).map_err(|_| Error::InvalidDescriptor(format!("{name} = {value} is too large")))
    };
    let r = rank("r", raw.r)?;
    let d = rank("d", raw.d)?;

    let mut warnings = Vec::new();
    let mut torsion = |name: &str, g: &RawGroup| -> Result<AbelianGroup> {
        if g.free != 0 {
            return Err(Error::InvalidDescriptor(format!("{name} must be a torsion group")));
        }
        let l = localize_away_from_2(g)?;
        for k in &l.dropped {
            warnings.push(format!("dropped 2-primary summand Z/{k} from {name}"));
        }
        Ok(l.group)
    };
    let h = torsion("H", &raw.h)?;
    let t = torsion("T", &raw.t)?;

    let expected = h.exponents_at(3).len() + d as usize + t.exponents_at(3).len();
    if raw.wu.len() != expected {
        return Err(Error::WuLengthMismatch { expected, found: raw.wu.len() });
    }
    let wu = raw.wu.iter().map(|&x| x.rem_euclid(3) as u8).collect();
    Ok(Validated { descriptor: ManifoldDescriptor { r, d, h, t, wu }, warnings })
}

impl ManifoldDescriptor {
    /// Checked constructor from already localized data.
    pub fn new(r: u32, d: u32, h: AbelianGroup, t: AbelianGroup, wu: Vec<u8>) -> Result<Self> {
        validate(&RawDescriptor {
            r: r.into(),
            d: d.into(),
            h: (&h).into(),
            t: (&t).into(),
            wu: wu.into_iter().map(i64::from).collect(),
        })
        .map(|v| v.descriptor)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn h(&self) -> &AbelianGroup {
        &self.h
    }

    pub fn t(&self) -> &AbelianGroup {
        &self.t
    }

    /// Residues mod 3, one per entry of [`summand_list`].
    pub fn wu(&self) -> &[u8] {
        &self.wu
    }

    /// `p_1(M) ≡ 0 mod 3`.
    pub fn p1_vanishes_mod_3(&self) -> bool {
        self.wu.iter().all(|&x| x == 0)
    }

    pub fn to_raw(&self) -> RawDescriptor {
        RawDescriptor {
            r: self.r.into(),
            d: self.d.into(),
            h: (&self.h).into(),
            t: (&self.t).into(),
            wu: self.wu.iter().map(|&x| x.into()).collect(),
        }
    }

    /// Reduced integral homology away from 2, by degree.
    pub fn homology(&self) -> [(u32, AbelianGroup); 5] {
        let (r, d) = (AbelianGroup::free(self.r), AbelianGroup::free(self.d));
        [
            (2, r.direct_sum(&self.h)),
            (3, d.direct_sum(&self.t)),
            (4, d.direct_sum(&self.h)),
            (5, r),
            (7, AbelianGroup::free(1)),
        ]
    }
}

impl Serialize for ManifoldDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ManifoldDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDescriptor::deserialize(d)?;
        validate(&raw).map(|v| v.descriptor).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ManifoldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wu: Vec<String> = self.wu.iter().map(u8::to_string).collect();
        write!(f, "r={} d={} H={} T={} wu=[{}]", self.r, self.d, self.h, self.t, wu.join(","))
    }
}

/// The radius of a mod-3 degree-3 class: `-1/mu`, `0` or `+1/nu`, ordered
/// as rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "sign", content = "denominator", rename_all = "snake_case")]
pub enum Radius {
    Neg(u32),
    Zero,
    Pos(u32),
}

impl Ord for Radius {
    fn cmp(&self, other: &Self) -> Ordering {
        use Radius::*;
        match (*self, *other) {
            // -1/a < -1/b iff a < b; 1/a < 1/b iff a > b.
            (Neg(a), Neg(b)) => a.cmp(&b),
            (Pos(a), Pos(b)) => b.cmp(&a),
            (Zero, Zero) => Ordering::Equal,
            (Neg(_), _) | (Zero, Pos(_)) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for Radius {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Neg(mu) => write!(f, "-1/{mu}"),
            Radius::Zero => write!(f, "0"),
            Radius::Pos(nu) => write!(f, "1/{nu}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "part", content = "exponent", rename_all = "snake_case")]
pub enum SummandKind {
    /// A `P^4(3^mu)` summand coming from the 3-torsion of `H`.
    HPart(u32),
    /// An `S^4` summand coming from the free part of `H_3`.
    FreePart,
    /// A `P^5(3^nu)` summand coming from the 3-torsion of `T`.
    TPart(u32),
}

impl SummandKind {
    pub fn radius(&self) -> Radius {
        match *self {
            SummandKind::HPart(mu) => Radius::Neg(mu),
            SummandKind::FreePart => Radius::Zero,
            SummandKind::TPart(nu) => Radius::Pos(nu),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SummandIndex {
    /// 1-based.
    pub position: usize,
    pub kind: SummandKind,
    pub radius: Radius,
}

/// The 3-local lower summands of the top-cell complex in their canonical
/// order: `H` parts by ascending exponent, then the `d` spheres, then `T`
/// parts by descending exponent. Radii weakly increase along the list.
pub fn summand_list(desc: &ManifoldDescriptor) -> Vec<SummandIndex> {
    let mut t_exps = desc.t.exponents_at(3);
    t_exps.reverse();
    let kinds = desc
        .h
        .exponents_at(3)
        .into_iter()
        .map(SummandKind::HPart)
        .chain((0..desc.d).map(|_| SummandKind::FreePart))
        .chain(t_exps.into_iter().map(SummandKind::TPart));
    kinds
        .enumerate()
        .map(|(i, kind)| SummandIndex { position: i + 1, kind, radius: kind.radius() })
        .collect()
}

/// First summand that `P^1` (equivalently, the cup pairing with `p_1 mod 3`)
/// detects; `None` when `p_1 ≡ 0 mod 3`.
pub fn p1_index(desc: &ManifoldDescriptor) -> Option<SummandIndex> {
    let t = desc.wu.iter().position(|&x| x != 0)?;
    Some(summand_list(desc)[t])
}

/// The `p_1`-radius, `None` when `p_1 ≡ 0 mod 3`.
pub fn p1_radius(desc: &ManifoldDescriptor) -> Option<Radius> {
    p1_index(desc).map(|s| s.radius)
}
