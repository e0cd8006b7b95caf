//! Text form of wedge expressions.
//!
//! Atoms render as `S^n`, `P^n(k)`, `C(S^n;alpha;m)`, `C(P^n(k);alpha~;m)`,
//! `C(P^n(k);i.alpha;m)` and `M(rho,k)`, joined by ` v `. The point is `*`.
//! The parser also accepts `∨`, free spacing, composite `k` in `P^n(k)`
//! (split into prime powers), and even factors of `k` (dropped).

use std::fmt;
use std::str::FromStr;

use super::atom::{Atom, AttachTag, Cell};
use super::expr::{normalize, WedgeExpr};
use crate::abelian::factorize;
use crate::error::{Error, Result};

impl fmt::Display for WedgeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return f.write_str("*");
        }
        for (i, a) in self.atoms().iter().enumerate() {
            if i > 0 {
                f.write_str(" v ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for WedgeExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<WedgeExpr> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace('∨', "v");
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if compact == "*" {
            return Ok(WedgeExpr::point());
        }
        let mut atoms = Vec::new();
        for token in compact.split('v') {
            atoms.extend(parse_atom(token)?);
        }
        Ok(normalize(atoms))
    }
}

/// Parses a single atom token. Returns several atoms for `P^n(k)` with
/// composite `k` and none when `k` has no odd part.
pub fn parse_atom(token: &str) -> Result<Vec<Atom>> {
    let err = |why: &str| Error::Parse(format!("`{token}`: {why}"));
    let atoms = if let Some(rest) = token.strip_prefix("S^") {
        vec![Atom::sphere(parse_num(rest).ok_or_else(|| err("bad sphere dimension"))? as u32)]
    } else if token.starts_with("P^") {
        let (n, k) = parse_moore(token).ok_or_else(|| err("expected P^n(k)"))?;
        factorize(k)
            .into_iter()
            .filter(|&(p, _)| p != 2)
            .map(|(p, e)| Atom::moore(n, p, e))
            .collect()
    } else if let Some(inner) = token.strip_prefix("C(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = inner.split(';').collect();
        let [core, tag, top] = parts[..] else {
            return Err(err("expected C(core;tag;top)"));
        };
        let tag = AttachTag::parse(tag).ok_or_else(|| err("unknown attaching tag"))?;
        let top = parse_num(top).ok_or_else(|| err("bad top dimension"))? as u32;
        let core = if let Some(n) = core.strip_prefix("S^") {
            Cell::Sphere { n: parse_num(n).ok_or_else(|| err("bad core dimension"))? as u32 }
        } else {
            let (n, k) = parse_moore(core).ok_or_else(|| err("bad cone core"))?;
            let e = power_of_three(k).ok_or_else(|| err("cone core must be a mod 3^e Moore space"))?;
            Cell::Moore { n, p: 3, e }
        };
        vec![Atom::Cone { core, tag, top }]
    } else if let Some(inner) = token.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
        let (rho, k) = inner.split_once(',').ok_or_else(|| err("expected M(rho,k)"))?;
        let rho: i64 = rho.parse().map_err(|_| err("bad rho"))?;
        let k = parse_num(k).ok_or_else(|| err("bad order"))?;
        let nu = power_of_three(k).ok_or_else(|| err("bundle order must be 3^nu"))?;
        vec![Atom::Bundle { rho, nu }]
    } else {
        return Err(err("unknown atom"));
    };
    for a in &atoms {
        a.validate().map_err(|e| Error::Parse(e.to_string()))?;
    }
    Ok(atoms)
}

fn parse_num(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_moore(s: &str) -> Option<(u32, u64)> {
    let rest = s.strip_prefix("P^")?;
    let (n, k) = rest.strip_suffix(')')?.split_once('(')?;
    let k = parse_num(k)?;
    (k > 0).then_some(())?;
    Some((parse_num(n)? as u32, k))
}

fn power_of_three(mut k: u64) -> Option<u32> {
    let mut e = 0;
    while k > 1 && k.is_multiple_of(3) {
        k /= 3;
        e += 1;
    }
    (k == 1 && e > 0).then_some(e)
}
