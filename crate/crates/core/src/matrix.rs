//! Dense square matrices over Λ and over Z: exact determinants by
//! fraction-free elimination, Hermitian structure, congruence, evaluation at
//! t = 1, and exact signatures of integer symmetric matrices.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A square matrix over Λ, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LambdaMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LambdaMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// Lifts an integer matrix to constants in Λ.
    pub fn from_int(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| LaurentPoly::constant(c)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        self.entries[i * self.n + j] = value;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.entry(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|e| e * c)
    }

    /// Entrywise involution composed with transposition.
    pub fn involute_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.entry(j, i).involute())
    }

    /// True iff the matrix equals its involute-transpose.
    pub fn is_hermitian(&self) -> bool {
        *self == self.involute_transpose()
    }

    /// Exact determinant by Bareiss fraction-free elimination. The empty
    /// matrix has determinant 1.
    pub fn det(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<LaurentPoly>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = 1i64;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&i| !at(&m, i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&at(&m, i, j) * &pivot) - &(&at(&m, i, k) * &at(&m, k, j));
                    m[i * n + j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
                m[i * n + k] = LaurentPoly::zero();
            }
            prev = pivot;
        }
        &LaurentPoly::constant(sign) * &at(&m, n - 1, n - 1)
    }

    /// Deletes row i and column j.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let n = self.n;
        Self::from_fn(n - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.entry(rr, cc).clone()
        })
    }

    /// Adjugate matrix: adj(M)·M = det(M)·I. Computed by cofactors, which
    /// keeps every entry in Λ.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let cof = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                cof
            } else {
                -&cof
            }
        })
    }

    /// Entrywise evaluation at t = 1.
    pub fn eval_at_one(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.eval_at_one()).collect(),
        }
    }

    /// Rank of the matrix viewed over Q(t), by fraction-free elimination.
    pub fn rank_over_fractions(&self) -> usize {
        let n = self.n;
        let mut m = self.entries.clone();
        let at = |m: &Vec<LaurentPoly>, i: usize, j: usize| m[i * n + j].clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot_row) = (rank..n).find(|&i| !at(&m, i, col).is_zero()) else {
                continue;
            };
            for j in 0..n {
                m.swap(rank * n + j, pivot_row * n + j);
            }
            let pivot = at(&m, rank, col);
            for i in rank + 1..n {
                let factor = at(&m, i, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    m[i * n + j] = &(&at(&m, i, j) * &pivot) - &(&factor * &at(&m, rank, j));
                }
            }
            rank += 1;
        }
        rank
    }

    /// Congruence by a basis change P: returns P̄ᵀ·M·P. P must be square of
    /// the same size with unit determinant ±tᵏ.
    pub fn congruence(&self, p: &LambdaMatrix) -> Result<Self> {
        if p.n != self.n {
            return Err(Error::SizeMismatch(format!(
                "basis change is {}x{}, matrix is {}x{}",
                p.n, p.n, self.n, self.n
            )));
        }
        if !p.det().is_unit() {
            return Err(Error::NonUnitDeterminant);
        }
        Ok(&(&p.involute_transpose() * self) * p)
    }
}

impl Add for &LambdaMatrix {
    type Output = LambdaMatrix;
    fn add(self, rhs: &LambdaMatrix) -> LambdaMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        LambdaMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &LambdaMatrix {
    type Output = LambdaMatrix;
    fn mul(self, rhs: &LambdaMatrix) -> LambdaMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        LambdaMatrix::from_fn(self.n, |i, j| {
            let mut acc = LaurentPoly::zero();
            for k in 0..self.n {
                acc = &acc + &(self.entry(i, k) * rhs.entry(k, j));
            }
            acc
        })
    }
}

impl fmt::Debug for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for LambdaMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LambdaMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        let parsed: std::result::Result<Vec<Vec<LaurentPoly>>, Error> = rows
            .into_iter()
            .map(|row| row.into_iter().map(|s| s.parse()).collect())
            .collect();
        LambdaMatrix::from_rows(parsed.map_err(de::Error::custom)?).map_err(de::Error::custom)
    }
}

/// A square integer matrix (the image of a Λ-matrix under t ↦ 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// Certifies symmetry, upgrading to a matrix with a well-defined
    /// signature.
    pub fn into_symmetric(self) -> Result<IntSymMatrix> {
        if self.is_symmetric() {
            Ok(IntSymMatrix { inner: self })
        } else {
            Err(Error::NotSymmetric)
        }
    }
}

/// A certified-symmetric integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntSymMatrix {
    inner: IntMatrix,
}

impl IntSymMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::from_i64(rows)?.into_symmetric()
    }

    pub fn size(&self) -> usize {
        self.inner.size()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        self.inner.entry(i, j)
    }

    /// Exact signature: positive minus negative eigenvalue count, computed
    /// by simultaneous row/column reduction over the rationals. A zero
    /// diagonal pivot with a nonzero off-diagonal partner forms a hyperbolic
    /// 2x2 block contributing 0.
    pub fn signature(&self) -> i64 {
        let n = self.size();
        let mut m: Vec<BigRational> = self
            .inner
            .entries
            .iter()
            .map(|e| BigRational::from_integer(e.clone()))
            .collect();
        let at = |m: &Vec<BigRational>, i: usize, j: usize| m[i * n + j].clone();
        let mut sig = 0i64;
        let mut k = 0;
        while k < n {
            if at(&m, k, k).is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !at(&m, j, j).is_zero()) {
                    swap_rows_cols(&mut m, n, k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !at(&m, k, j).is_zero()) {
                    // remaining diagonal all zero: split off [[0,a],[a,0]]
                    swap_rows_cols(&mut m, n, k + 1, j);
                    let a = at(&m, k, k + 1);
                    for i in k + 2..n {
                        let fk = &at(&m, i, k + 1) / &a;
                        let fk1 = &at(&m, i, k) / &a;
                        for j in 0..n {
                            let delta = &(&fk * &at(&m, k, j)) + &(&fk1 * &at(&m, k + 1, j));
                            m[i * n + j] -= &delta;
                        }
                        for j in 0..n {
                            let delta = &(&fk * &at(&m, j, k)) + &(&fk1 * &at(&m, j, k + 1));
                            m[j * n + i] -= &delta;
                        }
                    }
                    k += 2;
                    continue;
                } else {
                    // row k vanishes from column k on: radical direction
                    k += 1;
                    continue;
                }
            }
            let pivot = at(&m, k, k);
            sig += if pivot.is_positive() { 1 } else { -1 };
            for i in k + 1..n {
                let f = &at(&m, i, k) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let delta = &f * &at(&m, k, j);
                    m[i * n + j] -= &delta;
                }
                for j in 0..n {
                    let delta = &f * &at(&m, j, k);
                    m[j * n + i] -= &delta;
                }
            }
            k += 1;
        }
        sig
    }
}

fn swap_rows_cols(m: &mut [BigRational], n: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..n {
        m.swap(a * n + j, b * n + j);
    }
    for i in 0..n {
        m.swap(i * n + a, i * n + b);
    }
}
