//! Oracles and generators shared by the integration tests. Nothing here
//! calls into the algorithms it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use proptest::prelude::*;
use rand::Rng;
use susp7_core::invariants::{validate, RawDescriptor};
use susp7_core::{AbelianGroup, ManifoldDescriptor, RawGroup};

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * laplace_det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k`, the gcd of all `k x k` minors, for `k = 1..=min(rows, cols)`.
pub fn determinantal_divisors(m: &[Vec<i128>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = 0;
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<i128>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    g = gcd(g, laplace_det(&sub));
                }
            }
            g
        })
        .collect()
}

/// Invariant factors `d_k / d_{k-1}`, nonzero ones only.
pub fn invariant_factors(m: &[Vec<i128>]) -> Vec<i128> {
    let d = determinantal_divisors(m);
    let mut out = Vec::new();
    let mut prev = 1;
    for &dk in &d {
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Z^free + (+) Z/k` for the given orders, away from 2.
pub fn group_from_orders(free: u32, orders: &[i128]) -> AbelianGroup {
    let mut pairs = Vec::new();
    for &k in orders {
        for (p, e) in factor(k.unsigned_abs() as u64) {
            if p != 2 {
                pairs.push((p, e));
            }
        }
    }
    AbelianGroup::with_torsion(free, &pairs).unwrap()
}

/// Homology of a chain complex given by ranks and boundary matrices
/// `bd[k]: C_k -> C_{k-1}` (rows = rank C_{k-1}), away from 2.
pub fn homology_by_minors(ranks: &BTreeMap<i32, usize>, bd: &BTreeMap<i32, Vec<Vec<i128>>>) -> BTreeMap<i32, AbelianGroup> {
    let rank_of = |k: i32| -> usize { bd.get(&k).map_or(0, |m| invariant_factors(m).len()) };
    let mut out = BTreeMap::new();
    for (&k, &n) in ranks {
        let free = n - rank_of(k) - rank_of(k + 1);
        let tors: Vec<i128> = bd
            .get(&(k + 1))
            .map(|m| invariant_factors(m).into_iter().filter(|&x| x.abs() > 1).collect())
            .unwrap_or_default();
        let g = group_from_orders(free as u32, &tors);
        if !g.is_trivial() {
            out.insert(k, g);
        }
    }
    out
}

/// Reduced homology of `P^m(p^r) ∧ P^n(q^s)` from the tensor product of the
/// two-cell cellular chain complexes.
pub fn kunneth_smash(m: u32, p: u64, r: u32, n: u32, q: u64, s: u32) -> BTreeMap<u32, AbelianGroup> {
    let a = (p as i128).pow(r);
    let b = (q as i128).pow(s);
    let (m, n) = (m as i32, n as i32);
    let sign = |k: i32| if k % 2 == 0 { 1 } else { -1 };
    // Cells: x = e_{m-1} ⊗ f_{n-1}, y = e_m ⊗ f_{n-1}, z = e_{m-1} ⊗ f_n, w = e_m ⊗ f_n.
    let lo = m + n - 2;
    let ranks: BTreeMap<i32, usize> = [(lo, 1), (lo + 1, 2), (lo + 2, 1)].into_iter().collect();
    let mut bd = BTreeMap::new();
    // d y = a x, d z = (-1)^{m-1} b x
    bd.insert(lo + 1, vec![vec![a, sign(m - 1) * b]]);
    // d w = a z + (-1)^m b y, columns ordered (y, z) in the rows
    bd.insert(lo + 2, vec![vec![sign(m) * b], vec![a]]);
    homology_by_minors(&ranks, &bd).into_iter().map(|(k, g)| (k as u32, g)).collect()
}

/// All vectors reachable from `v` by `c_b += c_a` (`a < b`) and `c_a *= -1`,
/// and the one of least weight, then least lexicographically.
pub fn bfs_representative(v: &[u8]) -> (Vec<u8>, usize) {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::from([v.to_vec()]);
    seen.insert(v.to_vec());
    while let Some(cur) = queue.pop_front() {
        let mut next = Vec::new();
        for a in 0..cur.len() {
            let mut neg = cur.clone();
            neg[a] = (3 - neg[a]) % 3;
            next.push(neg);
            for b in a + 1..cur.len() {
                let mut add = cur.clone();
                add[b] = (add[b] + add[a]) % 3;
                next.push(add);
            }
        }
        for w in next {
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let weight = |w: &Vec<u8>| w.iter().filter(|&&x| x != 0).count();
    let rep = seen.iter().min_by(|x, y| weight(x).cmp(&weight(y)).then_with(|| x.cmp(y))).unwrap().clone();
    (rep, seen.len())
}

/// Every vector in `(Z/3)^len`.
pub fn all_vectors(len: usize) -> Vec<Vec<u8>> {
    (0..3usize.pow(len as u32))
        .map(|mut i| {
            (0..len)
                .map(|_| {
                    let x = (i % 3) as u8;
                    i /= 3;
                    x
                })
                .collect()
        })
        .collect()
}

const PRIMES: [u64; 3] = [3, 5, 7];

fn threes(torsion: &[(u64, u32)]) -> usize {
    torsion.iter().filter(|(p, _)| *p == 3).count()
}

pub fn raw_descriptor(r: u32, d: u32, h: &[(u64, u32)], t: &[(u64, u32)], wu: &[u8]) -> RawDescriptor {
    let group = |g: &[(u64, u32)]| RawGroup::from_orders(0, &g.iter().map(|&(p, e)| p.pow(e)).collect::<Vec<_>>());
    RawDescriptor { r: r.into(), d: d.into(), h: group(h), t: group(t), wu: wu.iter().map(|&x| x.into()).collect() }
}

fn random_torsion<R: Rng>(rng: &mut R) -> Vec<(u64, u32)> {
    let k = rng.gen_range(0..=4);
    (0..k).map(|_| (PRIMES[rng.gen_range(0..3)], rng.gen_range(1..=3))).collect()
}

/// `r, d <= 4`, `H` and `T` with at most four cyclic factors over
/// `{3, 5, 7}` and exponents at most 3, random `wu`. With `gate`, one of
/// `H`, `T` is forced to vanish.
pub fn random_descriptor<R: Rng>(rng: &mut R, gate: bool) -> ManifoldDescriptor {
    let r = rng.gen_range(0..=4);
    let d = rng.gen_range(0..=4);
    let mut h = random_torsion(rng);
    let mut t = random_torsion(rng);
    if gate {
        if rng.gen_bool(0.5) {
            h.clear();
        } else {
            t.clear();
        }
    }
    let len = threes(&h) + d as usize + threes(&t);
    // Bias towards zero so every case shows up often.
    let wu: Vec<u8> = (0..len).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=2) }).collect();
    validate(&raw_descriptor(r, d, &h, &t, &wu)).unwrap().descriptor
}

/// Same homology as `desc`, with `wu` rescaled, re-drawn or kept.
pub fn perturb<R: Rng>(rng: &mut R, desc: &ManifoldDescriptor) -> ManifoldDescriptor {
    let wu: Vec<u8> = match rng.gen_range(0..3) {
        0 => desc.wu().to_vec(),
        1 => desc.wu().iter().map(|&x| (3 - x) % 3).collect(),
        _ => desc.wu().iter().map(|_| rng.gen_range(0..=2)).collect(),
    };
    ManifoldDescriptor::new(desc.r(), desc.d(), desc.h().clone(), desc.t().clone(), wu).unwrap()
}

pub fn torsion_strategy() -> impl Strategy<Value = Vec<(u64, u32)>> {
    prop::collection::vec((prop::sample::select(PRIMES.to_vec()), 1u32..=3), 0..=4)
}

pub fn descriptor_strategy() -> impl Strategy<Value = ManifoldDescriptor> {
    (0u32..=4, 0u32..=4, torsion_strategy(), torsion_strategy(), prop::collection::vec(0u8..3, 12)).prop_map(
        |(r, d, h, t, pool)| {
            let len = threes(&h) + d as usize + threes(&t);
            validate(&raw_descriptor(r, d, &h, &t, &pool[..len])).unwrap().descriptor
        },
    )
}

pub fn gated_descriptor_strategy() -> impl Strategy<Value = ManifoldDescriptor> {
    descriptor_strategy().prop_map(|m| {
        if m.h().is_trivial() || m.t().is_trivial() {
            return m;
        }
        let keep = m.wu().len() - m.t().exponents_at(3).len();
        ManifoldDescriptor::new(m.r(), m.d(), m.h().clone(), AbelianGroup::trivial(), m.wu()[..keep].to_vec()).unwrap()
    })
}
