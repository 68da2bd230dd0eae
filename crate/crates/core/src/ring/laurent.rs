use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Field, GaussRat};

/// A Laurent polynomial in `v` with Gaussian-rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so the empty
/// term list is the zero polynomial and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, GaussRat)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::from_int(1))
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · v^e`
    pub fn monomial(c: GaussRat, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: alloc::vec![(e, c)] }
    }

    /// `v^e`
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(GaussRat::from_int(1), e)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRat)>>(terms: I) -> Self {
        let mut acc: BTreeMap<i32, GaussRat> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(GaussRat::zero);
            Field::plus_assign(slot, &c);
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && Field::is_one(&self.terms[0].1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn lowest_coeff(&self) -> Option<&GaussRat> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&GaussRat> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, e: i32) -> GaussRat {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => GaussRat::zero(),
        }
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn map_coeffs<F: Fn(i32, &GaussRat) -> GaussRat>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, f(*e, c))))
    }

    /// Exact evaluation at `v0`; `None` when `v0 = 0` meets a negative power.
    pub fn eval(&self, v0: &GaussRat) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut p = v0.pow(lo as i64)?;
        let mut acc = GaussRat::zero();
        let mut cur = lo;
        for (e, c) in &self.terms {
            while cur < *e {
                p = &p * v0;
                cur += 1;
            }
            acc.add_product(c, &p);
        }
        debug_assert_eq!(cur, hi);
        Some(acc)
    }

    /// The image under the ring map `v -> i·v^2` (so `q -> -q^2`).
    pub fn substitute_neg_qsq(&self) -> Self {
        let i = GaussRat::i();
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let unit = i.pow(*e as i64).expect("i is invertible");
            (2 * e, c * &unit)
        }))
    }

    /// Coefficients by degree after dividing out the lowest power of `v`.
    fn to_dense(&self) -> Vec<GaussRat> {
        let lo = match self.min_exp() {
            Some(lo) => lo,
            None => return Vec::new(),
        };
        let hi = self.max_exp().unwrap();
        let mut dense = alloc::vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        dense
    }

    fn from_dense(dense: &[GaussRat], shift: i32) -> Self {
        LaurentPoly {
            terms: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| (d as i32 + shift, c.clone()))
                .collect(),
        }
    }

    /// Greatest common divisor up to units `c·v^e` of the Laurent ring,
    /// normalized to lowest exponent 0 and lowest coefficient 1.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_unit();
        }
        if other.is_zero() {
            return self.normalized_unit();
        }
        if self.is_monomial() || other.is_monomial() {
            return Self::one();
        }
        let mut a = self.to_dense();
        let mut b = other.to_dense();
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        make_monic(&mut b);
        while !b.is_empty() {
            let r = dense_rem(&a, &b);
            a = b;
            b = r;
            make_monic(&mut b);
        }
        Self::from_dense(&a, 0).normalized_unit()
    }

    /// `self` divided by its lowest monomial, so the constant term is 1.
    fn normalized_unit(&self) -> Self {
        match (self.min_exp(), self.lowest_coeff()) {
            (Some(lo), Some(c)) => {
                let inv = c.inverse().expect("nonzero coefficient");
                self.shift(-lo).scale(&inv)
            }
            _ => Self::zero(),
        }
    }

    /// Exact quotient in the Laurent ring, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let shift = self.min_exp().unwrap() - d.min_exp().unwrap();
        if d.is_monomial() {
            let inv = d.terms[0].1.inverse()?;
            return Some(self.shift(-d.terms[0].0).scale(&inv));
        }
        let a = self.to_dense();
        let b = d.to_dense();
        if a.len() < b.len() {
            return None;
        }
        let (q, r) = dense_div_rem(&a, &b);
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_dense(&q, shift))
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every coefficient is a Gaussian integer.
    pub fn has_gaussian_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_gaussian_integer())
    }
}

fn trim(p: &mut Vec<GaussRat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn make_monic(p: &mut Vec<GaussRat>) {
    trim(p);
    if let Some(lead) = p.last() {
        if !Field::is_one(lead) {
            let inv = lead.inverse().expect("nonzero leading coefficient");
            for c in p.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

fn dense_div_rem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let mut r: Vec<GaussRat> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inverse().expect("nonzero divisor");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = alloc::vec![GaussRat::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let coef = &r[r.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let t = &coef * bj;
                r[k + j] = &r[k + j] - &t;
            }
        }
        q[k] = coef;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn dense_rem(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    dense_div_rem(a, b).1
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            let (e, c) = &b.terms[j];
            out.push((*e, if negate { -c } else { c.clone() }));
            j += 1;
        } else {
            let c = if negate {
                &a.terms[i].1 - &b.terms[j].1
            } else {
                &a.terms[i].1 + &b.terms[j].1
            };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentPoly { terms: out }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return rhs.shift(*e).scale(c);
        }
        if rhs.is_monomial() {
            let (e, c) = &rhs.terms[0];
            return self.shift(*e).scale(c);
        }
        let mut acc: BTreeMap<i32, GaussRat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc.entry(ea + eb).or_insert_with(GaussRat::zero).add_product(ca, cb);
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut coeff = alloc::format!("{}", c);
            let complex = !c.is_real() && !c.re().is_zero();
            if complex {
                coeff = alloc::format!("({})", coeff);
            }
            let negative = coeff.starts_with('-');
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let body: String = if negative { coeff[1..].into() } else { coeff };
            let unit = body == "1";
            match *e {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        f.write_str(&body)?;
                        f.write_str("*")?;
                    }
                    if *e == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{}", e)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
