//! The fraction field Q(t) and the quotients Q(t)/Λ and Q(t)/Λ_S.
//!
//! Fractions are kept fully reduced with an integral numerator and
//! denominator: the denominator is a canonical associate (minimum exponent
//! zero, positive leading coefficient) and shares no content or polynomial
//! factor with the numerator. Reduction stays in Z[t] throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// An element of Q(t) as a reduced fraction of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Fraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Fraction {
    /// Builds num/den, reducing to the canonical representative.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            });
        }
        let n = num.normalize_assoc().expect("nonzero");
        let d = den.normalize_assoc().expect("nonzero");
        let g = n.canonical.gcd(&d.canonical);
        let n_red = n.canonical.exact_div(&g).expect("gcd divides");
        let d_red = d.canonical.exact_div(&g).expect("gcd divides");
        // move the full unit onto the numerator
        let sign = i64::from(n.sign * d.sign);
        let unit = LaurentPoly::monomial(sign, n.shift - d.shift);
        Ok(Self {
            num: &n_red * &unit,
            den: d_red,
        })
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn involute(&self) -> Self {
        Self::new(self.num.involute(), self.den.involute()).expect("denominator stays nonzero")
    }

    /// True iff the fraction lies in Λ, i.e. reduces to denominator 1.
    pub fn is_in_lambda(&self) -> bool {
        self.den.is_one()
    }

    /// True iff the fraction lies in Λ_S = Z[t, t⁻¹, (t−1)⁻¹]: after
    /// discarding every (t−1) factor of the denominator nothing remains.
    pub fn is_in_lambda_s(&self) -> bool {
        let t_minus_1 = &LaurentPoly::t() - &LaurentPoly::one();
        let mut d = self.den.clone();
        while let Some(q) = d.exact_div(&t_minus_1) {
            d = q;
        }
        d.is_unit()
    }
}

impl From<LaurentPoly> for Fraction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Add for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        Fraction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators multiply to nonzero")
    }
}

impl Sub for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl Mul for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        Fraction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators multiply to nonzero")
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which subring is quotiented out of Q(t).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    /// Values in Q(t)/Λ.
    Lambda,
    /// Values in Q(t)/Λ_S.
    LambdaS,
}

impl Ambient {
    fn contains(self, f: &Fraction) -> bool {
        match self {
            Ambient::Lambda => f.is_in_lambda(),
            Ambient::LambdaS => f.is_in_lambda_s(),
        }
    }
}

/// A residue class in Q(t)/Λ or Q(t)/Λ_S, carried by a reduced
/// representative. Two classes are equal iff their difference lies in the
/// ambient subring.
#[derive(Clone)]
pub struct ResidueClass {
    rep: Fraction,
    ambient: Ambient,
}

impl ResidueClass {
    pub fn new(rep: Fraction, ambient: Ambient) -> Self {
        Self { rep, ambient }
    }

    pub fn rep(&self) -> &Fraction {
        &self.rep
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.ambient.contains(&self.rep)
    }

    pub fn involute(&self) -> Self {
        Self::new(self.rep.involute(), self.ambient)
    }
}

impl PartialEq for ResidueClass {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.ambient.contains(&(&self.rep - &other.rep))
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = match self.ambient {
            Ambient::Lambda => "Λ",
            Ambient::LambdaS => "Λ_S",
        };
        write!(f, "{}/({}) (mod {})", self.rep.num(), self.rep.den(), ring)
    }
}

impl fmt::Debug for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reduces a fraction to its residue class in the chosen quotient.
pub fn residue(f: Fraction, ambient: Ambient) -> ResidueClass {
    ResidueClass::new(f, ambient)
}
