use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Field, GaussRat, ModP, Scalar};

/// Row-compressed sparse matrix over a [`Field`].
///
/// Each row is a list of `(column, value)` sorted by column with no stored
/// zeros, so equality is entry-wise.
#[derive(Clone, PartialEq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Field> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal((0..n).map(|_| T::one()))
    }

    pub fn from_diagonal<I: IntoIterator<Item = T>>(diag: I) -> Self {
        let rows: Vec<Vec<(usize, T)>> = diag
            .into_iter()
            .enumerate()
            .map(|(i, d)| if d.is_zero() { Vec::new() } else { vec![(i, d)] })
            .collect();
        let n = rows.len();
        SparseMatrix { nrows: n, ncols: n, rows }
    }

    /// Builds a matrix from `(row, col, value)` triplets, summing duplicates.
    ///
    /// Panics if an index is out of range.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, T)>>(
        nrows: usize,
        ncols: usize,
        triplets: I,
    ) -> Self {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "entry ({r}, {c}) outside {nrows}x{ncols}");
            rows[r].push((c, v));
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, T)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => lv.plus_assign(&v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            *row = merged;
        }
        SparseMatrix { nrows, ncols, rows }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&SparseMatrix<T>]) -> Self {
        let ncols = parts.first().map_or(0, |p| p.ncols);
        let mut rows = Vec::new();
        for p in parts {
            assert_eq!(p.ncols, ncols, "column mismatch in vstack");
            rows.extend(p.rows.iter().cloned());
        }
        SparseMatrix { nrows: rows.len(), ncols, rows }
    }

    /// Builds from dense rows.
    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(nrows, ncols, trip)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(p) => self.rows[i][p].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// All stored entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn nnz_in_column(&self, j: usize) -> usize {
        self.rows.iter().filter(|r| r.binary_search_by_key(&j, |e| e.0).is_ok()).count()
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.iter().all(|e| e.0 == i))
    }

    /// The diagonal, if the matrix is square.
    pub fn diagonal(&self) -> Option<Vec<T>> {
        if !self.is_square() {
            return None;
        }
        Some((0..self.nrows).map(|i| self.get(i, i)).collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.entries() {
            rows[j].push((i, v.clone()));
        }
        SparseMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        self.map(|v| v.times(c))
    }

    /// Applies `f` entry-wise; zero results are dropped.
    pub fn map<U: Field, F: Fn(&T) -> U>(&self, f: F) -> SparseMatrix<U> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .filter_map(|(j, v)| {
                        let u = f(v);
                        (!u.is_zero()).then_some((*j, u))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// Fallible entry-wise map.
    pub fn try_map<U: Field, E, F: Fn(&T) -> core::result::Result<U, E>>(
        &self,
        f: F,
    ) -> core::result::Result<SparseMatrix<U>, E> {
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            let mut out = Vec::with_capacity(r.len());
            for (j, v) in r {
                let u = f(v)?;
                if !u.is_zero() {
                    out.push((*j, u));
                }
            }
            rows.push(out);
        }
        Ok(SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows })
    }

    fn combine(&self, rhs: &Self, sign: bool) -> Self {
        assert_eq!(
            (self.nrows, self.ncols),
            (rhs.nrows, rhs.ncols),
            "shape mismatch in matrix sum"
        );
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let ca = a.get(x).map_or(usize::MAX, |e| e.0);
                    let cb = b.get(y).map_or(usize::MAX, |e| e.0);
                    if ca < cb {
                        out.push(a[x].clone());
                        x += 1;
                    } else if cb < ca {
                        let v = if sign { b[y].1.clone() } else { b[y].1.negated() };
                        out.push((cb, v));
                        y += 1;
                    } else {
                        let v = if sign { a[x].1.plus(&b[y].1) } else { a[x].1.minus(&b[y].1) };
                        if !v.is_zero() {
                            out.push((ca, v));
                        }
                        x += 1;
                        y += 1;
                    }
                }
                out
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.negated())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "shape mismatch in matrix product");
        let mut scratch: Vec<Option<T>> = vec![None; rhs.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for a_row in &self.rows {
            for (k, a) in a_row {
                for (j, b) in &rhs.rows[*k] {
                    match &mut scratch[*j] {
                        Some(acc) => acc.add_product(a, b),
                        slot => {
                            *slot = Some(a.times(b));
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for j in touched.drain(..) {
                let v = scratch[j].take().expect("touched slot");
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            rows.push(out);
        }
        SparseMatrix { nrows: self.nrows, ncols: rhs.ncols, rows }
    }

    /// `self · rhs − rhs · self`
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.nrows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product; the left factor indexes the slow-varying position.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut rows = Vec::with_capacity(self.nrows * rhs.nrows);
        for a_row in &self.rows {
            for b_row in &rhs.rows {
                let mut out = Vec::with_capacity(a_row.len() * b_row.len());
                for (ja, a) in a_row {
                    for (jb, b) in b_row {
                        out.push((ja * rhs.ncols + jb, a.times(b)));
                    }
                }
                rows.push(out);
            }
        }
        SparseMatrix { nrows: self.nrows * rhs.nrows, ncols: self.ncols * rhs.ncols, rows }
    }

    /// Number of rows; convenience alias for square operators.
    pub fn dim(&self) -> usize {
        self.nrows
    }
}

impl SparseMatrix<Scalar> {
    /// Exact evaluation of every entry at `v = v0`.
    pub fn specialize(&self, v0: &GaussRat) -> Result<SparseMatrix<GaussRat>> {
        self.try_map(|s| s.specialize(v0))
    }

    /// Reduction of [`Self::specialize`] modulo [`ModP::P`].
    pub fn specialize_mod(&self, v0: ModP) -> Result<SparseMatrix<ModP>> {
        self.try_map(|s| ModP::eval_scalar(s, v0).ok_or(Error::Pole))
    }
}

/// Places `op`, acting on `r` consecutive tensor factors of dimension `d`,
/// at slots `slot..slot+r-1` (1-based) of an `n`-fold tensor power.
pub fn embed_factor<T: Field>(
    op: &SparseMatrix<T>,
    slot: usize,
    n: usize,
    d: usize,
) -> Result<SparseMatrix<T>> {
    if !op.is_square() || d < 1 {
        return Err(Error::DimensionMismatch(format!(
            "operator of shape {}x{} over factor dimension {d}",
            op.nrows(),
            op.ncols()
        )));
    }
    let mut r = 0;
    let mut size = 1usize;
    while size < op.nrows() {
        size *= d;
        r += 1;
    }
    if size != op.nrows() || (d == 1 && op.nrows() != 1) {
        return Err(Error::DimensionMismatch(format!(
            "operator dimension {} is not a power of {d}",
            op.nrows()
        )));
    }
    let r = r.max(1);
    if slot < 1 || slot + r > n + 1 {
        return Err(Error::IndexOutOfRange { index: slot, min: 1, max: (n + 1).saturating_sub(r) });
    }
    let left = SparseMatrix::identity(d.pow((slot - 1) as u32));
    let right = SparseMatrix::identity(d.pow((n + 1 - slot - r) as u32));
    Ok(left.kron(op).kron(&right))
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<'a, T: Field> $tr<&'a SparseMatrix<T>> for &'a SparseMatrix<T> {
            type Output = SparseMatrix<T>;
            fn $m(self, rhs: &'a SparseMatrix<T>) -> SparseMatrix<T> {
                SparseMatrix::$m(self, rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<T: Field> Neg for &SparseMatrix<T> {
    type Output = SparseMatrix<T>;
    fn neg(self) -> SparseMatrix<T> {
        SparseMatrix::neg(self)
    }
}

impl<T: fmt::Debug> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.nrows, self.ncols)?;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                writeln!(f, "  ({i}, {j}): {v:?}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, i: usize, j: usize) -> SparseMatrix<GaussRat> {
        SparseMatrix::from_triplets(n, n, [(i, j, GaussRat::from_int(1))])
    }

    #[test]
    fn kron_identities() {
        let i2 = SparseMatrix::<GaussRat>::identity(2);
        let i3 = SparseMatrix::identity(3);
        assert_eq!(i2.kron(&i3), SparseMatrix::identity(6));
        let a = SparseMatrix::from_dense(&[
            vec![GaussRat::from_int(1), GaussRat::from_int(2)],
            vec![GaussRat::from_int(0), GaussRat::i()],
        ]);
        assert_eq!(a.kron(&SparseMatrix::identity(1)), a);
        assert_eq!(unit(2, 0, 0).kron(&unit(2, 0, 0)), unit(4, 0, 0));
    }

    #[test]
    fn kron_index_convention() {
        let a = unit(2, 1, 0);
        let b = unit(3, 2, 1);
        let k = a.kron(&b);
        assert_eq!(k.get(3 + 2, 1), GaussRat::from_int(1));
        assert_eq!(k.nnz(), 1);
    }

    #[test]
    fn embed_examples() {
        let a = SparseMatrix::from_dense(&[
            vec![GaussRat::from_int(1), GaussRat::from_int(2)],
            vec![GaussRat::from_int(3), GaussRat::from_int(4)],
        ]);
        let c = a.kron(&a);
        assert_eq!(embed_factor(&c, 1, 2, 2).unwrap(), c);
        let id = SparseMatrix::identity(2);
        assert_eq!(embed_factor(&a, 2, 3, 2).unwrap(), id.kron(&a).kron(&id));
        let b = a.transpose();
        let x = embed_factor(&a, 1, 3, 2).unwrap();
        let y = embed_factor(&b, 3, 3, 2).unwrap();
        assert_eq!(x.mul(&y), y.mul(&x));
        assert!(matches!(embed_factor(&c, 3, 3, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(embed_factor(&a, 1, 2, 3), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn arithmetic_and_transpose() {
        let a = SparseMatrix::from_dense(&[
            vec![GaussRat::from_int(1), GaussRat::from_int(2)],
            vec![GaussRat::from_int(3), GaussRat::from_int(4)],
        ]);
        let sq = a.mul(&a);
        assert_eq!(
            sq.to_dense(),
            vec![
                vec![GaussRat::from_int(7), GaussRat::from_int(10)],
                vec![GaussRat::from_int(15), GaussRat::from_int(22)]
            ]
        );
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.pow(2), sq);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(&a + &a, a.scale(&GaussRat::from_int(2)));
        assert!(!a.is_diagonal());
        assert!(SparseMatrix::<GaussRat>::identity(4).is_diagonal());
    }

    #[test]
    fn triplets_merge_and_cancel() {
        let m = SparseMatrix::from_triplets(
            2,
            2,
            [
                (0, 1, GaussRat::from_int(1)),
                (0, 1, GaussRat::from_int(-1)),
                (1, 0, GaussRat::from_int(2)),
                (1, 0, GaussRat::from_int(3)),
            ],
        );
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), GaussRat::from_int(5));
    }

    #[test]
    fn specialize_entries() {
        let m = SparseMatrix::from_diagonal([Scalar::q(), Scalar::v()]);
        let s = m.specialize(&GaussRat::ratio(3, 5)).unwrap();
        assert_eq!(s.get(0, 0), GaussRat::ratio(9, 25));
        assert_eq!(s.get(1, 1), GaussRat::ratio(3, 5));
    }
}
