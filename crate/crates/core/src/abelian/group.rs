use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cyclic factor `Z/p^e` with `p` an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidGroup(format!("{p} is not an odd prime")));
        }
        if e == 0 {
            return Err(Error::InvalidGroup(format!("exponent of {p} must be positive")));
        }
        Ok(PrimePower { p, e })
    }

    /// The order `p^e`. Panics on overflow of `u64`.
    pub fn order(&self) -> u64 {
        self.p
            .checked_pow(self.e)
            .unwrap_or_else(|| panic!("{}^{} overflows u64", self.p, self.e))
    }
}

/// A finitely generated abelian group localized away from 2.
///
/// The torsion part is stored as a list of prime-power cyclic factors in
/// ascending `(p, e)` order, so two groups are isomorphic exactly when they
/// compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    free_rank: u32,
    torsion: Vec<PrimePower>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: u32) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(p: u64, e: u32) -> Result<Self> {
        Ok(AbelianGroup { free_rank: 0, torsion: vec![PrimePower::new(p, e)?] })
    }

    /// Builds a group from already odd prime-power factors in any order.
    pub fn from_parts(free_rank: u32, torsion: impl IntoIterator<Item = PrimePower>) -> Self {
        let mut torsion: Vec<_> = torsion.into_iter().collect();
        torsion.sort();
        AbelianGroup { free_rank, torsion }
    }

    /// Checked variant of [`AbelianGroup::from_parts`] taking `(p, e)` pairs.
    pub fn with_torsion(free_rank: u32, pairs: &[(u64, u32)]) -> Result<Self> {
        let factors = pairs
            .iter()
            .map(|&(p, e)| PrimePower::new(p, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(free_rank, factors))
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[PrimePower] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the group, `None` when it is infinite.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().map(|f| f.order() as u128).product())
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let torsion = self.torsion.iter().chain(&other.torsion).copied();
        Self::from_parts(self.free_rank + other.free_rank, torsion)
    }

    /// The torsion-only part of the group.
    pub fn torsion_subgroup(&self) -> AbelianGroup {
        AbelianGroup { free_rank: 0, torsion: self.torsion.clone() }
    }

    /// Splits off the `p`-primary torsion. The free part goes with the
    /// complement.
    pub fn primary_part(&self, p: u64) -> (AbelianGroup, AbelianGroup) {
        let (at_p, rest): (Vec<_>, Vec<_>) = self.torsion.iter().partition(|f| f.p == p);
        (
            AbelianGroup { free_rank: 0, torsion: at_p },
            AbelianGroup { free_rank: self.free_rank, torsion: rest },
        )
    }

    /// Deletes one occurrence of the cyclic factor `Z/p^e`.
    pub fn remove_cyclic_summand(&self, p: u64, e: u32) -> Result<AbelianGroup> {
        let idx = self
            .torsion
            .iter()
            .position(|f| f.p == p && f.e == e)
            .ok_or(Error::MissingSummand { p, e })?;
        let mut torsion = self.torsion.clone();
        torsion.remove(idx);
        Ok(AbelianGroup { free_rank: self.free_rank, torsion })
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion = Vec::new();
        for _ in 0..self.free_rank {
            torsion.extend_from_slice(&other.torsion);
        }
        for _ in 0..other.free_rank {
            torsion.extend_from_slice(&self.torsion);
        }
        torsion.extend(cross_min(&self.torsion, &other.torsion));
        Self::from_parts(self.free_rank * other.free_rank, torsion)
    }

    /// `Tor(self, other)`.
    pub fn tor(&self, other: &AbelianGroup) -> AbelianGroup {
        Self::from_parts(0, cross_min(&self.torsion, &other.torsion))
    }

    /// Exponents of the `p`-primary cyclic factors, ascending.
    pub fn exponents_at(&self, p: u64) -> Vec<u32> {
        self.torsion.iter().filter(|f| f.p == p).map(|f| f.e).collect()
    }
}

/// `Z/p^a ⊗ Z/q^b` (equally `Tor`) is `Z/p^min(a,b)` when `p = q`, else 0.
fn cross_min(a: &[PrimePower], b: &[PrimePower]) -> Vec<PrimePower> {
    a.iter()
        .flat_map(|x| b.iter().filter(|y| y.p == x.p).map(|y| PrimePower { p: x.p, e: x.e.min(y.e) }))
        .collect()
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{}", t.order())));
        write!(f, "{}", parts.join(" + "))
    }
}

/// One torsion entry as it may appear in input: a `[p, e]` pair or a bare
/// cyclic order `k` standing for `Z/k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawCyclic {
    Pair([u64; 2]),
    Order(u64),
}

/// Unlocalized group data, e.g. straight from a JSON file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGroup {
    #[serde(default)]
    pub free: i64,
    #[serde(default)]
    pub torsion: Vec<RawCyclic>,
}

impl RawGroup {
    pub fn from_orders(free: i64, orders: &[u64]) -> Self {
        RawGroup { free, torsion: orders.iter().map(|&k| RawCyclic::Order(k)).collect() }
    }
}

/// Result of localizing raw data; `dropped` lists the 2-primary cyclic
/// orders that were discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized {
    pub group: AbelianGroup,
    pub dropped: Vec<u64>,
}

/// Inverts 2: removes all 2-primary torsion and splits the rest into
/// prime-power cyclic factors.
pub fn localize_away_from_2(raw: &RawGroup) -> Result<Localized> {
    if raw.free < 0 {
        return Err(Error::InvalidGroup(format!("negative free rank {}", raw.free)));
    }
    let free_rank = u32::try_from(raw.free)
        .map_err(|_| Error::InvalidGroup(format!("free rank {} too large", raw.free)))?;
    let mut factors = Vec::new();
    let mut dropped = Vec::new();
    for entry in &raw.torsion {
        match *entry {
            RawCyclic::Pair([p, e]) => {
                if !is_prime(p) {
                    return Err(Error::InvalidGroup(format!("{p} is not a prime")));
                }
                let e = u32::try_from(e)
                    .ok()
                    .filter(|&e| e >= 1)
                    .ok_or_else(|| Error::InvalidGroup(format!("bad exponent {e} for {p}")))?;
                if p == 2 {
                    dropped.push(2u64.checked_pow(e).unwrap_or(u64::MAX));
                } else {
                    p.checked_pow(e)
                        .ok_or_else(|| Error::InvalidGroup(format!("{p}^{e} is too large")))?;
                    factors.push(PrimePower { p, e });
                }
            }
            RawCyclic::Order(0) => {
                return Err(Error::InvalidGroup("cyclic order 0; use the free rank".into()));
            }
            RawCyclic::Order(k) => {
                for (p, e) in factorize(k) {
                    if p == 2 {
                        dropped.push(1u64 << e);
                    } else {
                        factors.push(PrimePower { p, e });
                    }
                }
            }
        }
    }
    Ok(Localized { group: AbelianGroup::from_parts(free_rank, factors), dropped })
}

impl From<&AbelianGroup> for RawGroup {
    fn from(g: &AbelianGroup) -> Self {
        RawGroup {
            free: g.free_rank as i64,
            torsion: g.torsion.iter().map(|f| RawCyclic::Pair([f.p, f.e as u64])).collect(),
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGroup::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGroup::deserialize(d)?;
        localize_away_from_2(&raw).map(|l| l.group).map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(free: u32, pairs: &[(u64, u32)]) -> AbelianGroup {
        AbelianGroup::with_torsion(free, pairs).unwrap()
    }

    #[test]
    fn localize_examples() {
        let l = localize_away_from_2(&RawGroup::from_orders(1, &[12])).unwrap();
        assert_eq!(l.group, g(1, &[(3, 1)]));
        assert_eq!(l.dropped, vec![4]);

        let l = localize_away_from_2(&RawGroup::from_orders(0, &[8])).unwrap();
        assert!(l.group.is_trivial());

        let l = localize_away_from_2(&RawGroup::from_orders(0, &[45])).unwrap();
        assert_eq!(l.group, g(0, &[(3, 2), (5, 1)]));
    }

    #[test]
    fn localize_pairs_unsorted_with_two() {
        let raw = RawGroup {
            free: 0,
            torsion: vec![
                RawCyclic::Pair([5, 1]),
                RawCyclic::Pair([2, 3]),
                RawCyclic::Pair([3, 2]),
            ],
        };
        let l = localize_away_from_2(&raw).unwrap();
        assert_eq!(l.group, g(0, &[(3, 2), (5, 1)]));
        assert_eq!(l.dropped, vec![8]);
    }

    #[test]
    fn localize_rejects_garbage() {
        let raw = RawGroup { free: 0, torsion: vec![RawCyclic::Pair([6, 1])] };
        assert!(localize_away_from_2(&raw).is_err());
        let raw = RawGroup { free: 0, torsion: vec![RawCyclic::Pair([3, 0])] };
        assert!(localize_away_from_2(&raw).is_err());
        assert!(localize_away_from_2(&RawGroup::from_orders(-1, &[])).is_err());
        assert!(localize_away_from_2(&RawGroup::from_orders(0, &[0])).is_err());
    }

    #[test]
    fn primary_part_examples() {
        let (a, b) = g(0, &[(3, 1), (5, 2)]).primary_part(3);
        assert_eq!(a, g(0, &[(3, 1)]));
        assert_eq!(b, g(0, &[(5, 2)]));

        let (a, b) = AbelianGroup::trivial().primary_part(3);
        assert!(a.is_trivial() && b.is_trivial());

        let (a, b) = g(0, &[(3, 1), (3, 2)]).primary_part(3);
        assert_eq!(a, g(0, &[(3, 1), (3, 2)]));
        assert!(b.is_trivial());
    }

    #[test]
    fn remove_cyclic_summand_examples() {
        let h = g(0, &[(3, 1), (3, 1), (3, 2)]);
        assert_eq!(h.remove_cyclic_summand(3, 1).unwrap(), g(0, &[(3, 1), (3, 2)]));
        assert!(g(0, &[(3, 2)]).remove_cyclic_summand(3, 2).unwrap().is_trivial());
        assert_eq!(
            g(0, &[(5, 1)]).remove_cyclic_summand(3, 1),
            Err(Error::MissingSummand { p: 3, e: 1 })
        );
    }

    #[test]
    fn tensor_and_tor() {
        let a = g(1, &[(3, 2), (5, 1)]);
        let b = g(0, &[(3, 1), (7, 1)]);
        assert_eq!(a.tensor(&b), g(0, &[(3, 1), (7, 1), (3, 1)]));
        assert_eq!(a.tor(&b), g(0, &[(3, 1)]));
        assert_eq!(g(2, &[]).tensor(&g(1, &[])), g(2, &[]));
        assert!(g(1, &[]).tor(&b).is_trivial());
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(g(2, &[(3, 2), (5, 1)]).to_string(), "Z^2 + Z/9 + Z/5");
        assert_eq!(g(1, &[]).to_string(), "Z");
    }

    #[test]
    fn json_literal() {
        let a: AbelianGroup =
            serde_json::from_str(r#"{"free": 1, "torsion": [[5,1],[2,2],[3,1]]}"#).unwrap();
        assert_eq!(a, g(1, &[(3, 1), (5, 1)]));
        let back = serde_json::to_string(&a).unwrap();
        assert_eq!(back, r#"{"free":1,"torsion":[[3,1],[5,1]]}"#);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}
