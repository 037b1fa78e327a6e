//! The Laurent polynomial ring Λ = Z[t, t⁻¹] with exact big-integer
//! coefficients, the involution t ↦ t⁻¹, and normalization up to units.
//!
//! Units of Λ are exactly ±tᵏ; two polynomials are *associate* (written
//! p ≐ q elsewhere in this crate) when they differ by such a unit.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of Λ: a finitely supported map exponent → coefficient.
///
/// Invariant: no zero coefficient is ever stored; the empty map is 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable t.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// c·tᵏ.
    pub fn monomial<C: Into<BigInt>>(c: C, k: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (k, c) in pairs {
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// True iff the polynomial is a unit of Λ, i.e. ±tᵏ.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    /// Coefficient of tᵏ (zero when absent).
    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates (exponent, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of stored terms.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Multiplication by tᵏ.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The ring involution t ↦ t⁻¹ applied term by term.
    pub fn involute(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of coefficients, i.e. the evaluation p(1).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes t ↦ tʷ. For w = 0 this is evaluation at 1 viewed as a
    /// constant polynomial.
    pub fn substitute_power(&self, w: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * w, c.clone())))
    }

    /// Factors p = sign · tᵗ · canonical with the canonical associate
    /// having minimum exponent 0 and positive leading coefficient.
    pub fn normalize_assoc(&self) -> Result<UnitNormalization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let shift = self.min_exp().unwrap();
        let mut canonical = self.shifted(-shift);
        let sign = if canonical.terms.values().next_back().unwrap().is_negative() {
            canonical = -&canonical;
            -1
        } else {
            1
        };
        Ok(UnitNormalization { canonical, sign, shift })
    }

    /// Canonical associate; zero maps to zero.
    pub fn canonical_associate(&self) -> Self {
        match self.normalize_assoc() {
            Ok(n) => n.canonical,
            Err(_) => Self::zero(),
        }
    }

    /// True iff p = ±tᵏ·q for some k (both zero counts as true).
    pub fn is_associate(&self, other: &Self) -> bool {
        self.canonical_associate() == other.canonical_associate()
    }

    /// Exact division in Λ: returns q with self = q·d, or None when d does
    /// not divide self (including d = 0 with self ≠ 0; 0/0 yields 0).
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return if d.is_zero() { None } else { Some(Self::zero()) };
        }
        if d.is_zero() {
            return None;
        }
        let ns = self.min_exp().unwrap();
        let ds = d.min_exp().unwrap();
        let num = coeff_vec(&self.shifted(-ns));
        let den = coeff_vec(&d.shifted(-ds));
        let q = exact_div_vec(&num, &den)?;
        Some(Self::from_terms(
            q.into_iter().enumerate().map(|(i, c)| (i as i64 + ns - ds, c)),
        ))
    }

    /// Gcd of the coefficients (non-negative); content of 0 is 0.
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Gcd in Λ up to units, returned as a canonical associate. Combines the
    /// integer content gcd with the primitive polynomial gcd over Z.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.canonical_associate();
        }
        if other.is_zero() {
            return self.canonical_associate();
        }
        let ca = self.content();
        let cb = other.content();
        let a = coeff_vec(&self.shifted(-self.min_exp().unwrap()));
        let b = coeff_vec(&other.shifted(-other.min_exp().unwrap()));
        let g = primitive_gcd_vec(&primitive_vec(&a), &primitive_vec(&b));
        let poly = Self::from_terms(g.into_iter().enumerate().map(|(i, c)| (i as i64, c)));
        let scaled = &poly * &Self::constant(ca.gcd(&cb));
        scaled.canonical_associate()
    }
}

/// Factorization p = sign · tᵗ · canonical, realizing equality up to units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalization {
    pub canonical: LaurentPoly,
    /// ±1.
    pub sign: i8,
    /// Exponent of the t-power unit.
    pub shift: i64,
}

fn coeff_vec(p: &LaurentPoly) -> Vec<BigInt> {
    // assumes min_exp == 0
    let deg = p.max_exp().unwrap_or(0);
    let mut v = vec![BigInt::zero(); deg as usize + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

fn trim_vec(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exact division of ordinary integer polynomials (ascending coefficients).
fn exact_div_vec(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = num.to_vec();
    trim_vec(&mut rem);
    let mut den = den.to_vec();
    trim_vec(&mut den);
    if den.is_empty() {
        return None;
    }
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < den.len() {
        return None;
    }
    let qlen = rem.len() - den.len() + 1;
    let mut q = vec![BigInt::zero(); qlen];
    let lead = den.last().unwrap().clone();
    for i in (0..qlen).rev() {
        let top = rem[i + den.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(&lead);
        if !r.is_zero() {
            return None;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

fn content_vec(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_vec(v: &[BigInt]) -> Vec<BigInt> {
    let c = content_vec(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) · a mod b.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    trim_vec(&mut rem);
    let lead = b.last().unwrap().clone();
    while rem.len() >= b.len() {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        trim_vec(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

/// Gcd of primitive integer polynomials via the primitive Euclidean scheme.
fn primitive_gcd_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim_vec(&mut a);
    trim_vec(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_vec(&pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let k = ka + kb;
                let entry = terms.entry(k).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if *k == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*t^{k}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`, plus the usual
    /// hand-written variants: `t`, `-t^2`, `3t`, `t^-1 + 2`, `t^2 - t + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        // split into signed terms; '+'/'-' bind to the next term unless they
        // follow '^' or '*' (exponent or coefficient sign) or another sign,
        // so "1 + -1*t^1" keeps "-1*t^1" together
        let chars: Vec<char> = compact.chars().collect();
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, &ch) in chars.iter().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                let prev = chars[i - 1];
                if prev != '^' && prev != '*' && prev != '+' && prev != '-' {
                    pieces.push(std::mem::take(&mut cur));
                    cur.push(ch);
                    continue;
                }
            }
            cur.push(ch);
        }
        pieces.push(cur);

        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for piece in pieces {
            // a separator '+' followed by a signed coefficient is fine;
            // anything beyond one leading '+' is rejected
            let trimmed = piece.strip_prefix('+').unwrap_or(&piece);
            if trimmed.is_empty() || trimmed.starts_with('+') {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            terms.push(parse_term(trimmed)?);
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term(term: &str) -> Result<(i64, BigInt)> {
    let bad = || Error::Parse(format!("malformed term {term:?}"));
    let (coeff_str, exp_str) = match term.find('t') {
        None => (term, None),
        Some(pos) => {
            let coeff = term[..pos].trim_end_matches('*');
            let rest = &term[pos + 1..];
            let exp = if rest.is_empty() {
                "1"
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?
            };
            (coeff, Some(exp))
        }
    };
    let coeff = match coeff_str {
        "" | "+" => BigInt::one(),
        "-" => -BigInt::one(),
        other => BigInt::from_str(other).map_err(|_| bad())?,
    };
    let exp = match exp_str {
        None => 0,
        Some(e) => e.parse::<i64>().map_err(|_| bad())?,
    };
    Ok((exp, coeff))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
