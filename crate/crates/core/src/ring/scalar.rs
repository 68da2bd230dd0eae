use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::{Field, GaussRat, LaurentPoly};
use crate::error::{Error, Result};

/// A reduced rational function `num / den` in `v`.
///
/// Canonical form: `den` has lowest exponent 0 and constant term 1, and
/// `num`, `den` share no nonunit factor. Equality is therefore
/// coefficient-wise. Every matrix entry in the engine is a `Scalar`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    pub fn from_laurent(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRat::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_gauss(GaussRat::ratio(num, den))
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    /// The formal variable `v = q^{1/2}`.
    pub fn v() -> Self {
        Self::v_pow(1)
    }

    /// `q = v^2`
    pub fn q() -> Self {
        Self::v_pow(2)
    }

    pub fn v_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::v_pow(e))
    }

    /// `q^e = v^{2e}`
    pub fn q_pow(e: i32) -> Self {
        Self::v_pow(2 * e)
    }

    /// Builds and reduces `num / den`.
    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// Whether the denominator is 1, i.e. `self` is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::from_laurent(LaurentPoly::zero());
        }
        let (num, den) = Self::unit_normalize(num, den);
        if den.is_one() {
            return Scalar { num, den };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return Scalar { num, den };
        }
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let (num, den) = Self::unit_normalize(num, den);
        Scalar { num, den }
    }

    /// Moves the lowest monomial of `den` into `num`.
    fn unit_normalize(num: LaurentPoly, den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let lo = den.min_exp().expect("nonzero denominator");
        let c = den.lowest_coeff().expect("nonzero denominator");
        if lo == 0 && Field::is_one(c) {
            return (num, den);
        }
        let inv = c.inverse().expect("nonzero coefficient");
        (num.shift(-lo).scale(&inv), den.shift(-lo).scale(&inv))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Scalar::from_int(1);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// Exact value when `self` does not depend on `v`.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.terms() {
            [] => Some(GaussRat::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Scalar { num, den: self.den.clone() };
            }
            return Scalar::normalize(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::normalize(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::from_int(0);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        Scalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    /// Panics on division by zero; use [`Field::quotient`] for a checked version.
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inverse().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $tr::$m(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<GaussRat> for Scalar {
    fn from(c: GaussRat) -> Self {
        Scalar::from_gauss(c)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            fmt::Display::fmt(&self.num, f)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::from_int(0)
    }
    fn one() -> Self {
        Scalar::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_int(n)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}
