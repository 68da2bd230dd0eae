use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::SparseMatrix;
use crate::ring::Field;

/// Sparse vector: `(index, value)` pairs sorted by index, no zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// Incrementally maintained row-echelon basis of a subspace.
///
/// Every stored row is monic at its leading index and leading indices are
/// distinct, so a single left-to-right sweep reduces any vector.
#[derive(Clone, Debug)]
pub struct EchelonBasis<T> {
    rows: Vec<SparseVec<T>>,
    pivot_row: BTreeMap<usize, usize>,
}

impl<T: Field> Default for EchelonBasis<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn axpy<T: Field>(v: &[(usize, T)], c: &T, row: &[(usize, T)]) -> SparseVec<T> {
    // v - c * row
    let mut out = Vec::with_capacity(v.len() + row.len());
    let (mut x, mut y) = (0, 0);
    while x < v.len() || y < row.len() {
        let cv = v.get(x).map_or(usize::MAX, |e| e.0);
        let cr = row.get(y).map_or(usize::MAX, |e| e.0);
        if cv < cr {
            out.push(v[x].clone());
            x += 1;
        } else if cr < cv {
            out.push((cr, c.times(&row[y].1).negated()));
            y += 1;
        } else {
            let val = v[x].1.minus(&c.times(&row[y].1));
            if !val.is_zero() {
                out.push((cv, val));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

impl<T: Field> EchelonBasis<T> {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        let mut pos = 0;
        while pos < v.len() {
            let col = v[pos].0;
            match self.pivot_row.get(&col) {
                Some(&r) => {
                    let c = v[pos].1.clone();
                    v = axpy(&v, &c, &self.rows[r]);
                    // entries before `pos` are untouched since the row starts at `col`
                }
                None => pos += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: SparseVec<T>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<T>) -> bool {
        let mut r = self.reduce(v);
        let Some(first) = r.first() else {
            return false;
        };
        let lead = first.0;
        let inv = first.1.inv().expect("stored entries are nonzero");
        for e in r.iter_mut() {
            e.1 = e.1.times(&inv);
        }
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Rows in fully reduced echelon form, sorted by leading index.
    pub fn reduced_rows(&self) -> Vec<SparseVec<T>> {
        let mut out: Vec<SparseVec<T>> = Vec::with_capacity(self.rows.len());
        for (&lead, &r) in self.pivot_row.iter().rev() {
            let mut row = self.rows[r].clone();
            // clear entries above later pivots using already reduced rows
            for done in out.iter() {
                let p = done[0].0;
                if let Ok(at) = row.binary_search_by_key(&p, |e| e.0) {
                    let c = row[at].1.clone();
                    row = axpy(&row, &c, done);
                }
            }
            debug_assert_eq!(row[0].0, lead);
            out.push(row);
        }
        out.reverse();
        out
    }
}

/// Rank of a matrix over its field.
pub fn rank<T: Field>(m: &SparseMatrix<T>) -> usize {
    let mut basis = EchelonBasis::new();
    for i in 0..m.nrows() {
        basis.insert(m.row(i).to_vec());
        if basis.rank() == m.ncols() {
            break;
        }
    }
    basis.rank()
}

/// Basis of the right nullspace `{x : m x = 0}`, as dense vectors.
pub fn nullspace<T: Field>(m: &SparseMatrix<T>) -> Vec<Vec<T>> {
    let mut basis = EchelonBasis::new();
    for i in 0..m.nrows() {
        basis.insert(m.row(i).to_vec());
    }
    let rref = basis.reduced_rows();
    let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut out = Vec::new();
    for free in (0..m.ncols()).filter(|c| !pivots.contains(c)) {
        let mut x = vec![T::zero(); m.ncols()];
        x[free] = T::one();
        for row in &rref {
            if let Ok(at) = row.binary_search_by_key(&free, |e| e.0) {
                x[row[0].0] = row[at].1.negated();
            }
        }
        out.push(x);
    }
    out
}
