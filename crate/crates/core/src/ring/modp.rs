use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{Field, GaussRat, LaurentPoly, Scalar};

/// Residues modulo the prime `p = 2^64 − 2^32 + 1`.
///
/// Since `p ≡ 1 (mod 4)` the field contains a square root of `−1`, so
/// Gaussian-rational coefficients reduce to it. Used for dimension counts at
/// specialized points where exact rationals grow too large.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP(u64);

impl ModP {
    pub const P: u64 = 0xffff_ffff_0000_0001;

    pub fn new(x: u64) -> Self {
        ModP(x % Self::P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = ModP(1);
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&b);
            }
            b = b.times(&b);
            e >>= 1;
        }
        acc
    }

    /// The square root of `−1` used as the image of `i`.
    pub fn sqrt_minus_one() -> Self {
        // 7 generates the multiplicative group
        ModP(7).pow((Self::P - 1) / 4)
    }

    fn from_bigint(x: &BigInt) -> Self {
        let r = x.mod_floor(&BigInt::from(Self::P));
        ModP(r.to_u64().expect("reduced below p"))
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        let d = Self::from_bigint(r.denom());
        Some(Self::from_bigint(r.numer()).times(&d.inv()?))
    }

    /// Image of a Gaussian rational; `None` if a denominator vanishes mod `p`.
    pub fn from_gauss(c: &GaussRat) -> Option<Self> {
        let re = Self::from_rational(c.re())?;
        let im = Self::from_rational(c.im())?;
        Some(re.plus(&im.times(&Self::sqrt_minus_one())))
    }

    /// Evaluates a Laurent polynomial at `v0 ≠ 0`.
    pub fn eval_laurent(p: &LaurentPoly, v0: ModP) -> Option<Self> {
        let vinv = v0.inv()?;
        let mut acc = ModP(0);
        for (e, c) in p.terms() {
            let base = if *e < 0 { vinv } else { v0 };
            acc = acc.plus(&Self::from_gauss(c)?.times(&base.pow(e.unsigned_abs() as u64)));
        }
        Some(acc)
    }

    /// Evaluates a scalar at `v0`; `None` at a pole.
    pub fn eval_scalar(s: &Scalar, v0: ModP) -> Option<Self> {
        let num = Self::eval_laurent(s.numer(), v0)?;
        let den = Self::eval_laurent(s.denom(), v0)?;
        Some(num.times(&den.inv()?))
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod p)", self.0)
    }
}

impl Field for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1)
    }
    fn from_i64(n: i64) -> Self {
        let m = ModP::new(n.unsigned_abs());
        if n < 0 {
            m.negated()
        } else {
            m
        }
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        let s = self.0 as u128 + rhs.0 as u128;
        ModP((s % Self::P as u128) as u64)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        ModP(((self.0 as u128 * rhs.0 as u128) % Self::P as u128) as u64)
    }
    fn negated(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            ModP(Self::P - self.0)
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(Self::P - 2))
        }
    }
}
