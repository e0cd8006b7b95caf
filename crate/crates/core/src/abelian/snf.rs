//! Smith normal form over the integers with unimodular transforms.
//!
//! Matrices are stored with `i128` entries. Elimination runs on big
//! integers: intermediate entries of Hermite reduction can be far larger
//! than the input, its minors, or the final transforms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i128]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged matrix rows");
            data.extend_from_slice(r.as_ref());
        }
        IntegerMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Panics if the determinant does not fit in `i128`.
    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a = Big::from(self);
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / &prev;
                    *a.at_mut(i, j) = v;
                }
            }
            prev = a.at(k, k).clone();
        }
        let det = a.at(n - 1, n - 1).clone();
        narrow(if negate { -det } else { det })
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn narrow(x: BigInt) -> i128 {
    x.to_i128().unwrap_or_else(|| panic!("entry {x} does not fit in i128"))
}

/// Working matrix for elimination.
#[derive(Clone)]
struct Big {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl From<&IntegerMatrix> for Big {
    fn from(m: &IntegerMatrix) -> Self {
        Big { rows: m.rows, cols: m.cols, data: m.data.iter().map(|&x| BigInt::from(x)).collect() }
    }
}

impl Big {
    fn identity(n: usize) -> Self {
        Big::from(&IntegerMatrix::identity(n))
    }

    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    fn narrow(self) -> IntegerMatrix {
        IntegerMatrix { rows: self.rows, cols: self.cols, data: self.data.into_iter().map(narrow).collect() }
    }

    fn transpose(&self) -> Big {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        Big { rows: self.cols, cols: self.rows, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, src: usize, dst: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.at(src, j) * k;
            *self.at_mut(dst, j) += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j);
            *self.at_mut(r, j) = v;
        }
    }

    /// `(row[a], row[b]) <- (s row[a] + t row[b], u row[a] + v row[b])`
    fn mix_rows(&mut self, a: usize, b: usize, [s, t, u, v]: &[BigInt; 4]) {
        for j in 0..self.cols {
            let (x, y) = (self.at(a, j).clone(), self.at(b, j).clone());
            *self.at_mut(a, j) = s * &x + t * &y;
            *self.at_mut(b, j) = u * &x + v * &y;
        }
    }

    /// Right multiplication by `[s t; u v]` on columns `a`, `b`.
    fn mix_cols(&mut self, a: usize, b: usize, [s, t, u, v]: &[BigInt; 4]) {
        for i in 0..self.rows {
            let (x, y) = (self.at(i, a).clone(), self.at(i, b).clone());
            *self.at_mut(i, a) = s * &x + u * &y;
            *self.at_mut(i, b) = t * &x + v * &y;
        }
    }

    fn is_monomial(&self) -> bool {
        let row_ok = (0..self.rows).all(|i| (0..self.cols).filter(|&j| !self.at(i, j).is_zero()).count() <= 1);
        let col_ok = (0..self.cols).all(|j| (0..self.rows).filter(|&i| !self.at(i, j).is_zero()).count() <= 1);
        row_ok && col_ok
    }
}

/// `left * m * right` is diagonal with entries `diagonal`, each dividing
/// the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }
}

/// Smith normal form.
///
/// Alternates row and column Hermite reduction (pivots positive, entries
/// above a pivot reduced modulo it) until the matrix is monomial, moves the
/// entries onto the diagonal and then fixes divisibility pairwise with
/// gcd/lcm steps. Panics if a transform entry does not fit in `i128`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = Big::from(m);
    let mut left = Big::identity(rows);
    let mut right = Big::identity(cols);

    loop {
        row_hermite(&mut a, &mut left);
        if a.is_monomial() {
            break;
        }
        let (mut at, mut rt) = (a.transpose(), right.transpose());
        row_hermite(&mut at, &mut rt);
        (a, right) = (at.transpose(), rt.transpose());
        if a.is_monomial() {
            break;
        }
    }

    // Move the k-th nonzero entry, in row order, to (k, k).
    let mut rank = 0;
    for i in 0..rows {
        let Some(j) = (0..cols).find(|&j| !a.at(i, j).is_zero()) else { continue };
        a.swap_rows(rank, i);
        left.swap_rows(rank, i);
        a.swap_cols(rank, j);
        right.swap_cols(rank, j);
        rank += 1;
    }

    let make_positive = |a: &mut Big, left: &mut Big, i: usize| {
        if a.at(i, i).is_negative() {
            a.negate_row(i);
            left.negate_row(i);
        }
    };
    for i in 0..rank {
        make_positive(&mut a, &mut left, i);
    }
    // After the pass for i, a[i][i] divides every later diagonal entry.
    for i in 0..rank {
        for j in i + 1..rank {
            let (x, y) = (a.at(i, i).clone(), a.at(j, j).clone());
            if (&y % &x).is_zero() {
                continue;
            }
            // [s t; -y/g x/g] diag(x, y) [1 -t y/g; 1 s x/g] = diag(g, xy/g)
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (yg, xg) = (&y / &g, &x / &g);
            let l = [s.clone(), t.clone(), -&yg, xg.clone()];
            let r = [BigInt::one(), -(t * yg), BigInt::one(), s * xg];
            a.mix_rows(i, j, &l);
            left.mix_rows(i, j, &l);
            a.mix_cols(i, j, &r);
            right.mix_cols(i, j, &r);
            make_positive(&mut a, &mut left, i);
            make_positive(&mut a, &mut left, j);
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| narrow(a.at(i, i).clone())).collect();
    SmithForm { diagonal, left: left.narrow(), right: right.narrow() }
}

/// Row-style Hermite form by unimodular row operations, applied to `t` too.
fn row_hermite(a: &mut Big, t: &mut Big) {
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        for i in r + 1..a.rows {
            if a.at(i, c).is_zero() {
                continue;
            }
            if a.at(r, c).is_zero() {
                a.swap_rows(r, i);
                t.swap_rows(r, i);
                continue;
            }
            let step = clearing_step(a.at(r, c), a.at(i, c));
            a.mix_rows(r, i, &step);
            t.mix_rows(r, i, &step);
        }
        if a.at(r, c).is_zero() {
            continue;
        }
        if a.at(r, c).is_negative() {
            a.negate_row(r);
            t.negate_row(r);
        }
        for i in 0..r {
            let q = a.at(i, c).div_floor(a.at(r, c));
            if !q.is_zero() {
                a.add_row(r, i, &-&q);
                t.add_row(r, i, &-q);
            }
        }
        r += 1;
    }
}

/// `[s, t, u, v]` with `s x + t y = gcd(x, y)`, `u x + v y = 0` and
/// `s v - t u = 1`. Plain subtraction when `x | y`.
fn clearing_step(x: &BigInt, y: &BigInt) -> [BigInt; 4] {
    if (y % x).is_zero() {
        return [BigInt::one(), BigInt::zero(), -(y / x), BigInt::one()];
    }
    let e = x.extended_gcd(y);
    [e.x, e.y, -(y / &e.gcd), x / &e.gcd]
}
