//! Exact scalar arithmetic.
//!
//! The formal variable is `v = q^{1/2}`. A [`Scalar`] is a reduced fraction
//! of [`LaurentPoly`]s in `v` with [`GaussRat`] coefficients; this one field
//! houses every coefficient the operators need, including `q^{1/2}` and `i`.

mod gauss;
mod laurent;
mod modp;
mod qnum;
mod sample;
mod scalar;

pub use gauss::GaussRat;
pub use laurent::LaurentPoly;
pub use modp::ModP;
pub use qnum::{qint, qint_half, qint_plus, specialize, substitute_neg_qsq, QParam};
pub use sample::PointSampler;
pub use scalar::Scalar;

use core::fmt::{Debug, Display};

/// A commutative field with exact equality.
///
/// Matrix code is generic over this trait so the same routines run
/// symbolically over [`Scalar`] and at specialized points over [`GaussRat`].
pub trait Field: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn quotient(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.times(&r))
    }

    fn plus_assign(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.plus(&a.times(b));
    }
}
