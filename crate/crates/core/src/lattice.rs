//! Integer lattice utilities backing the Seifert-form validation and the
//! genus search: exact determinants, Smith normal form with transforms,
//! integer kernels, and completion of primitive families to unimodular
//! bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact determinant of an integer matrix by Bareiss elimination.
pub fn int_det(rows: &[Vec<i64>]) -> BigInt {
    mat_det(&Mat::from_i64(rows))
}

/// A dense rectangular BigInt matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_columns(cols: &[Vec<BigInt>], dim: usize) -> Self {
        let mut m = Self::zero(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim);
            for (i, val) in col.iter().enumerate() {
                m.set(i, j, val.clone());
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &a * other.at(k, j);
                    out.data[i * other.cols + j] += add;
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += f * row b
    fn add_row(&mut self, a: usize, b: usize, f: &BigInt) {
        for j in 0..self.cols {
            let add = f * self.at(b, j);
            self.data[a * self.cols + j] += add;
        }
    }

    /// col a += f * col b
    fn add_col(&mut self, a: usize, b: usize, f: &BigInt) {
        for i in 0..self.rows {
            let add = f * self.at(i, b);
            self.data[i * self.cols + a] += add;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.at(a, j).clone();
            self.data[a * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self.at(i, a).clone();
            self.data[i * self.cols + a] = v;
        }
    }
}

/// Exact determinant of a square Mat by Bareiss elimination.
pub fn mat_det(a: &Mat) -> BigInt {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.data.clone();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                Some(i) => {
                    for j in 0..n {
                        m.swap(k * n + j, i * n + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i * n + j] * &pivot - &m[i * n + k] * &m[k * n + j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i * n + j] = q;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    BigInt::from(sign) * m.pop().unwrap()
}

/// Smith normal form U·A·V = diag(d₁, …) with unimodular transforms and
/// their inverses tracked alongside.
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub v_inv: Mat,
}

struct SnfState {
    m: Mat,
    u: Mat,
    u_inv: Mat,
    v: Mat,
    v_inv: Mat,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row a += f·row b, with transforms updated
    fn add_row(&mut self, a: usize, b: usize, f: &BigInt) {
        self.m.add_row(a, b, f);
        self.u.add_row(a, b, f);
        self.u_inv.add_col(b, a, &(-f));
    }

    /// col a += f·col b, with transforms updated
    fn add_col(&mut self, a: usize, b: usize, f: &BigInt) {
        self.m.add_col(a, b, f);
        self.v.add_col(a, b, f);
        self.v_inv.add_row(b, a, &(-f));
    }

    fn negate_row(&mut self, a: usize) {
        self.m.negate_row(a);
        self.u.negate_row(a);
        self.u_inv.negate_col(a);
    }
}

/// Computes the Smith normal form of `a`.
pub fn smith_normal_form(a: &Mat) -> Snf {
    let (rows, cols) = (a.rows, a.cols);
    let k_max = rows.min(cols);
    let mut s = SnfState {
        m: a.clone(),
        u: Mat::identity(rows),
        u_inv: Mat::identity(rows),
        v: Mat::identity(cols),
        v_inv: Mat::identity(cols),
    };

    loop {
        diagonalize(&mut s, k_max);
        for k in 0..k_max {
            if s.m.at(k, k).is_negative() {
                s.negate_row(k);
            }
        }
        // enforce the divisibility chain; each fold strictly shrinks a
        // diagonal entry, so re-diagonalizing terminates
        let mut folded = false;
        'chain: for k in 0..k_max {
            for j in k + 1..k_max {
                let dk = s.m.at(k, k).clone();
                let dj = s.m.at(j, j).clone();
                let violates = if dk.is_zero() {
                    !dj.is_zero()
                } else {
                    !(&dj % &dk).is_zero()
                };
                if violates {
                    s.add_col(k, j, &BigInt::one());
                    folded = true;
                    break 'chain;
                }
            }
        }
        if !folded {
            break;
        }
    }

    Snf {
        diag: (0..k_max).map(|i| s.m.at(i, i).clone()).collect(),
        u: s.u,
        u_inv: s.u_inv,
        v: s.v,
        v_inv: s.v_inv,
    }
}

fn diagonalize(s: &mut SnfState, k_max: usize) {
    let (rows, cols) = (s.m.rows, s.m.cols);
    for k in 0..k_max {
        loop {
            // move a nonzero entry of minimal absolute value to (k, k)
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !s.m.at(i, j).is_zero()
                        && best.is_none_or(|(bi, bj)| s.m.at(i, j).abs() < s.m.at(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return; // the rest of the block is zero
            };
            s.swap_rows(k, pi);
            s.swap_cols(k, pj);

            let mut clean = true;
            let pivot = s.m.at(k, k).clone();
            for i in k + 1..rows {
                let q = rounded_div(s.m.at(i, k), &pivot);
                if !q.is_zero() {
                    s.add_row(i, k, &(-&q));
                }
                if !s.m.at(i, k).is_zero() {
                    clean = false;
                }
            }
            let pivot = s.m.at(k, k).clone();
            for j in k + 1..cols {
                let q = rounded_div(s.m.at(k, j), &pivot);
                if !q.is_zero() {
                    s.add_col(j, k, &(-&q));
                }
                if !s.m.at(k, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
    }
}

/// Division rounded to nearest, keeping remainders at most |b|/2.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (&r + &r).abs() > b.abs() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the integer kernel {x : A·x = 0} as columns.
pub fn integer_kernel(a: &Mat) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let rank = snf.diag.iter().filter(|d| !d.is_zero()).count();
    (rank..a.cols).map(|j| snf.v.column(j)).collect()
}

/// Completes the given linearly independent columns to a unimodular square
/// matrix whose first columns are exactly the input, or returns None when
/// they do not span a primitive sublattice of Z^dim.
pub fn complete_unimodular(cols: &[Vec<BigInt>], dim: usize) -> Option<Mat> {
    let k = cols.len();
    if k > dim {
        return None;
    }
    if k == 0 {
        return Some(Mat::identity(dim));
    }
    let b = Mat::from_columns(cols, dim);
    let snf = smith_normal_form(&b);
    if snf.diag.len() < k || snf.diag.iter().any(|d| !d.is_one()) {
        return None;
    }
    // U·B·V = [[I],[0]] gives B·V = first k columns of U⁻¹, so
    // [B | last columns of U⁻¹] = U⁻¹ · blockdiag(V⁻¹, I) is unimodular.
    let mut p = Mat::zero(dim, dim);
    let bv = b.mul(&snf.v);
    for i in 0..dim {
        for j in 0..k {
            p.set(i, j, bv.at(i, j).clone());
        }
        for j in k..dim {
            p.set(i, j, snf.u_inv.at(i, j).clone());
        }
    }
    let mut fix = Mat::identity(dim);
    for i in 0..k {
        for j in 0..k {
            fix.set(i, j, snf.v_inv.at(i, j).clone());
        }
    }
    let p = p.mul(&fix);
    debug_assert!(mat_det(&p).abs().is_one());
    Some(p)
}
