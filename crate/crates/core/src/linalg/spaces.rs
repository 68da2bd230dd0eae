use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::{rank, EchelonBasis, SparseMatrix, SparseVec};
use crate::error::Result;
use crate::ring::{Field, GaussRat, ModP, PointSampler, Scalar};

/// Outcome of [`verify_spectrum`].
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport<T> {
    /// Candidate eigenvalue and `dim − rank(m − c·Id)`.
    pub pairs: Vec<(T, usize)>,
    /// The annihilating product vanished and the multiplicities add up.
    pub verified: bool,
    pub dim: usize,
}

impl<T: Field> SpectrumReport<T> {
    /// Pairs with nonzero multiplicity.
    pub fn occurring(&self) -> impl Iterator<Item = &(T, usize)> {
        self.pairs.iter().filter(|p| p.1 > 0)
    }

    pub fn multiplicity(&self, c: &T) -> usize {
        self.pairs.iter().find(|p| &p.0 == c).map_or(0, |p| p.1)
    }
}

/// Certifies the spectrum of `m` against a list of distinct candidates.
///
/// Verified iff `∏ (m − c·Id) = 0`, which also shows `m` is diagonalizable,
/// so the eigenspace dimensions must sum to the full dimension.
pub fn verify_spectrum<T: Field>(m: &SparseMatrix<T>, candidates: &[T]) -> SpectrumReport<T> {
    let d = m.nrows();
    let id = SparseMatrix::identity(d);
    let shifted: Vec<SparseMatrix<T>> =
        candidates.iter().map(|c| m.sub(&id.scale(c))).collect();
    let mut product = id.clone();
    for s in &shifted {
        product = product.mul(s);
        if product.is_zero() {
            break;
        }
    }
    let pairs: Vec<(T, usize)> =
        candidates.iter().zip(&shifted).map(|(c, s)| (c.clone(), d - rank(s))).collect();
    let total: usize = pairs.iter().map(|p| p.1).sum();
    SpectrumReport { verified: product.is_zero() && total == d, pairs, dim: d }
}

fn flatten<T: Field>(m: &SparseMatrix<T>) -> SparseVec<T> {
    let d = m.ncols();
    m.entries().map(|(i, j, v)| (i * d + j, v.clone())).collect()
}

/// Dimension of the unital algebra generated by `gens`.
///
/// Breadth-first closure: every new independent element is multiplied on the
/// left by each generator until no new directions appear.
pub fn algebra_closure_dim<T: Field>(gens: &[SparseMatrix<T>]) -> usize {
    let Some(first) = gens.first() else {
        return 1;
    };
    let d = first.nrows();
    let id = SparseMatrix::identity(d);
    let mut basis = EchelonBasis::new();
    let mut queue = VecDeque::new();
    basis.insert(flatten(&id));
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let p = g.mul(&m);
            if basis.insert(flatten(&p)) {
                queue.push_back(p);
            }
        }
    }
    basis.rank()
}

/// Dimension of `{X : gX = Xg for all g}` for `d × d` generators.
///
/// Diagonal generators are used first to force `X_ab = 0` whenever their
/// diagonal entries at `a` and `b` differ; the remaining generators give the
/// linear system on the surviving unknowns.
pub fn commutant_dimension<T: Field>(gens: &[SparseMatrix<T>], d: usize) -> usize {
    let (diag, other): (Vec<&SparseMatrix<T>>, Vec<&SparseMatrix<T>>) =
        gens.iter().partition(|g| g.is_diagonal());
    let keys: Vec<Vec<T>> = (0..d)
        .map(|a| diag.iter().map(|g| g.get(a, a)).collect())
        .collect();
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    // group basis positions by diagonal signature so only matching pairs survive
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..d {
        match classes.iter_mut().find(|c| keys[c[0]] == keys[a]) {
            Some(c) => c.push(a),
            None => classes.push(alloc::vec![a]),
        }
    }
    for class in &classes {
        for &a in class {
            for &b in class {
                let t = index.len();
                index.insert((a, b), t);
            }
        }
    }
    let unknowns = index.len();
    let mut basis = EchelonBasis::new();
    for g in other {
        let gt = g.transpose();
        // (gX − Xg)_{ij} = Σ_l g_il X_lj − Σ_l X_il g_lj
        let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, T>> = BTreeMap::new();
        for (&(a, b), &t) in &index {
            for (i, gia) in gt.row(a) {
                let e = eqs.entry((*i, b)).or_default().entry(t).or_insert_with(T::zero);
                e.plus_assign(gia);
            }
            for (j, gbj) in g.row(b) {
                let e = eqs.entry((a, *j)).or_default().entry(t).or_insert_with(T::zero);
                e.plus_assign(&gbj.negated());
            }
        }
        for (_, row) in eqs {
            let v: SparseVec<T> = row.into_iter().filter(|e| !e.1.is_zero()).collect();
            if !v.is_empty() {
                basis.insert(v);
                if basis.rank() == unknowns {
                    return 0;
                }
            }
        }
    }
    unknowns - basis.rank()
}

/// Specializes every matrix at one point drawn from `sampler`, re-drawing
/// until no entry has a pole there.
pub fn specialize_all(
    mats: &[SparseMatrix<Scalar>],
    sampler: &mut PointSampler,
) -> (GaussRat, Vec<SparseMatrix<GaussRat>>) {
    loop {
        let v0 = sampler.next_point();
        let out: Result<Vec<_>> = mats.iter().map(|m| m.specialize(&v0)).collect();
        if let Ok(out) = out {
            return (v0, out);
        }
    }
}

/// [`specialize_all`] over the prime field [`ModP`].
pub fn specialize_all_mod(
    mats: &[SparseMatrix<Scalar>],
    sampler: &mut PointSampler,
) -> (ModP, Vec<SparseMatrix<ModP>>) {
    loop {
        let v0 = sampler.next_mod_point();
        let out: Result<Vec<_>> = mats.iter().map(|m| m.specialize_mod(v0)).collect();
        if let Ok(out) = out {
            return (v0, out);
        }
    }
}
