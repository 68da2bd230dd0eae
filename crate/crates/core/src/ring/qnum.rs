use super::{Field, GaussRat, Scalar};
use crate::error::{Error, Result};

/// A deformation parameter together with a chosen square root.
///
/// The default is `q = v^2` with root `v`; half-integer quantum numbers and
/// `K^{1/2}` are evaluated through the root.
#[derive(Clone, Debug, PartialEq)]
pub struct QParam {
    pub q: Scalar,
    pub sqrt_q: Scalar,
}

impl QParam {
    /// `q = v^2`, `q^{1/2} = v`.
    pub fn generic() -> Self {
        QParam { q: Scalar::q(), sqrt_q: Scalar::v() }
    }

    pub fn from_sqrt(sqrt_q: Scalar) -> Self {
        QParam { q: &sqrt_q * &sqrt_q, sqrt_q }
    }

    /// The parameter `-q^2` with root `i·q`.
    pub fn neg_qsq(&self) -> Self {
        QParam {
            q: substitute_neg_qsq(&self.q),
            sqrt_q: substitute_neg_qsq(&self.sqrt_q),
        }
    }

    /// `[m]` for `m = doubled / 2`.
    pub fn qint_half(&self, doubled: i64) -> Result<Scalar> {
        qint_half(doubled, &self.sqrt_q)
    }
}

/// The quantum integer `[n] = (b^n - b^-n) / (b - b^-1)` in base `b`.
pub fn qint(n: i64, base: &Scalar) -> Result<Scalar> {
    let inv = base.inverse().ok_or(Error::DivisionByZero)?;
    let den = base - &inv;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let up = base.pow(n).ok_or(Error::DivisionByZero)?;
    let down = base.pow(-n).ok_or(Error::DivisionByZero)?;
    Ok(&(&up - &down) / &den)
}

/// `[m]` in base `s^2` for `m = doubled / 2`, evaluated through the root `s`.
pub fn qint_half(doubled: i64, sqrt_base: &Scalar) -> Result<Scalar> {
    let inv = sqrt_base.inverse().ok_or(Error::DivisionByZero)?;
    let den = &(sqrt_base * sqrt_base) - &(&inv * &inv);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let up = sqrt_base.pow(doubled).ok_or(Error::DivisionByZero)?;
    let down = sqrt_base.pow(-doubled).ok_or(Error::DivisionByZero)?;
    Ok(&(&up - &down) / &den)
}

/// `[m]^+ = i (q^m + q^-m) / (q - q^-1)` for `m = doubled / 2`.
pub fn qint_plus(doubled: i64, sqrt_base: &Scalar) -> Result<Scalar> {
    let inv = sqrt_base.inverse().ok_or(Error::DivisionByZero)?;
    let den = &(sqrt_base * sqrt_base) - &(&inv * &inv);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let up = sqrt_base.pow(doubled).ok_or(Error::DivisionByZero)?;
    let down = sqrt_base.pow(-doubled).ok_or(Error::DivisionByZero)?;
    Ok(&(&Scalar::i() * &(&up + &down)) / &den)
}

/// The ring map `q -> -q^2`, realized on `v` as `v -> i·v^2`.
pub fn substitute_neg_qsq(s: &Scalar) -> Scalar {
    let num = s.numer().substitute_neg_qsq();
    let den = s.denom().substitute_neg_qsq();
    Scalar::fraction(num, den).expect("injective substitution keeps the denominator nonzero")
}

/// Exact evaluation at `v = v0`.
pub fn specialize(s: &Scalar, v0: &GaussRat) -> Result<GaussRat> {
    let den = s.denom().eval(v0).ok_or(Error::Pole)?;
    if den.is_zero() {
        return Err(Error::Pole);
    }
    let num = s.numer().eval(v0).ok_or(Error::Pole)?;
    Ok(&num * &den.inverse().expect("nonzero"))
}

impl Scalar {
    /// Evaluates at `v = v0`; see [`specialize`].
    pub fn specialize(&self, v0: &GaussRat) -> Result<GaussRat> {
        specialize(self, v0)
    }

    /// Whether `self = c · v^e` for some Gaussian rational `c`.
    pub fn is_monomial(&self) -> bool {
        self.denom().is_one() && self.numer().is_monomial()
    }

    pub fn is_nonzero(&self) -> bool {
        !Field::is_zero(self)
    }
}
