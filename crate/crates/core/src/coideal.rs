//! The algebras `U'_p so_n` (and `U'_p o_n` with the extra involution `F`) as
//! relation oracles, with the modules the duality needs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::intertwiner::{build_c_quantum, cubic_residual, IntertwinerSet};
use crate::linalg::{embed_factor, nullspace, SparseMatrix};
use crate::report::ResidualReport;
use crate::ring::{qint, Field, GaussRat, QParam, Scalar};
use crate::clifford::CliffordContext;

/// Images of `B_1, …, B_{n−1}` (and optionally `F`) for the parameter `param`.
#[derive(Clone, Debug)]
pub struct CoidealRep<T> {
    pub n: usize,
    pub param: T,
    pub b: Vec<SparseMatrix<T>>,
    pub f: Option<SparseMatrix<T>>,
}

impl<T: Field> CoidealRep<T> {
    pub fn dim(&self) -> usize {
        self.b.first().or(self.f.as_ref()).map_or(0, |m| m.nrows())
    }

    pub fn try_map<U: Field>(
        &self,
        param: U,
        f: impl Fn(&SparseMatrix<T>) -> Result<SparseMatrix<U>>,
    ) -> Result<CoidealRep<U>> {
        Ok(CoidealRep {
            n: self.n,
            param,
            b: self.b.iter().map(&f).collect::<Result<_>>()?,
            f: self.f.as_ref().map(&f).transpose()?,
        })
    }
}

impl CoidealRep<Scalar> {
    pub fn specialize(&self, v0: &GaussRat) -> Result<CoidealRep<GaussRat>> {
        self.try_map(self.param.specialize(v0)?, |m| m.specialize(v0))
    }
}

/// Checks `B_iB_j = B_jB_i` for `|i−j| > 1`, the cubic relation
/// `B_i²B_j − (p + p^{-1})B_iB_jB_i + B_jB_i² = B_j` for `|i−j| = 1`, and
/// `F² = 1`, `FB_1 = −B_1F`, `FB_i = B_iF` (`i > 1`) when `F` is present.
pub fn check_coideal_relations<T: Field>(rep: &CoidealRep<T>) -> ResidualReport {
    let mut out = ResidualReport::new();
    let coeff = rep
        .param
        .plus(&rep.param.inv().expect("parameter is invertible"))
        .negated();
    let m = rep.b.len();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            if i.abs_diff(j) > 1 {
                if i < j {
                    out.record(format!("[B{}, B{}]", i + 1, j + 1), &rep.b[i].commutator(&rep.b[j]));
                }
            } else {
                out.record(format!("cubic(B{}; B{})", i + 1, j + 1), &cubic_residual(&rep.b[i], &rep.b[j], &coeff));
            }
        }
    }
    if let Some(f) = &rep.f {
        let id = SparseMatrix::identity(f.nrows());
        out.record("F^2 = 1", &f.mul(f).sub(&id));
        for (i, b) in rep.b.iter().enumerate() {
            let fb = f.mul(b);
            let bf = b.mul(f);
            if i == 0 {
                out.record("F B1 = -B1 F", &fb.add(&bf));
            } else {
                out.record(format!("F B{0} = B{0} F", i + 1), &fb.sub(&bf));
            }
        }
    }
    out
}

/// `q^{e/2}` through the chosen root.
fn half_pow(qp: &QParam, e: i64) -> Scalar {
    qp.sqrt_q.pow(e).expect("q^{1/2} is invertible")
}

/// The `(N+1)`-dimensional classical module of `U'_q so_3`.
pub fn so3_classical_rep(nparam: usize, qp: &QParam) -> Result<CoidealRep<Scalar>> {
    if nparam < 1 {
        return Err(Error::InvalidParameter("Nparam must be at least 1".into()));
    }
    let nn = nparam as i64;
    let dim = nparam + 1;
    let mut b1 = Vec::with_capacity(dim);
    let mut b2 = Vec::new();
    for j in 0..dim as i64 {
        b1.push(qp.qint_half(nn - 2 * j)?);
        if j + 1 < dim as i64 {
            b2.push(((j + 1) as usize, j as usize, Scalar::from_int(1)));
        }
        if j >= 1 {
            let num = qint(nn + 1 - j, &qp.q)?.times(&qint(j, &qp.q)?);
            let den = half_pow(qp, nn - 2 * j)
                .plus(&half_pow(qp, 2 * j - nn))
                .times(&half_pow(qp, nn - 2 * j + 2).plus(&half_pow(qp, 2 * j - nn - 2)));
            b2.push(((j - 1) as usize, j as usize, num.quotient(&den).ok_or(Error::DivisionByZero)?));
        }
    }
    Ok(CoidealRep {
        n: 3,
        param: qp.q.clone(),
        b: vec![SparseMatrix::from_diagonal(b1), SparseMatrix::from_triplets(dim, dim, b2)],
        f: None,
    })
}

/// `[m]^+ = i(q^m + q^{−m})/(q − q^{−1})` for `m = doubled / 2`.
fn qint_plus(qp: &QParam, doubled: i64) -> Result<Scalar> {
    crate::ring::qint_plus(doubled, &qp.sqrt_q)
}

/// The `(N+1)/2`-dimensional nonclassical module of `U'_q so_3` for odd `N`.
pub fn so3_nonclassical_rep(nparam: usize, qp: &QParam, sign: i8) -> Result<CoidealRep<Scalar>> {
    if nparam.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("Nparam = {nparam} must be odd")));
    }
    let nn = nparam as i64;
    let dim = nparam.div_ceil(2);
    let mut b1 = Vec::with_capacity(dim);
    let mut b2 = Vec::new();
    for j in 0..dim as i64 {
        b1.push(qint_plus(qp, nn - 2 * j)?);
        if j + 1 < dim as i64 {
            b2.push(((j + 1) as usize, j as usize, Scalar::from_int(1)));
        }
        if j >= 1 {
            let num = qint(nn + 1 - j, &qp.q)?.times(&qint(j, &qp.q)?);
            let den = half_pow(qp, nn - 2 * j)
                .minus(&half_pow(qp, 2 * j - nn))
                .times(&half_pow(qp, nn - 2 * j + 2).minus(&half_pow(qp, 2 * j - nn - 2)));
            b2.push(((j - 1) as usize, j as usize, num.quotient(&den).ok_or(Error::DivisionByZero)?));
        }
    }
    // B_2 v_{(N−1)/2} = ± [(N+1)/2] / (i(q^{1/2} − q^{−1/2})) v_{(N−1)/2} + …
    let last = dim - 1;
    let den = Scalar::i().times(&half_pow(qp, 1).minus(&half_pow(qp, -1)));
    let mut corner = qint((nn + 1) / 2, &qp.q)?.quotient(&den).ok_or(Error::DivisionByZero)?;
    if sign < 0 {
        corner = corner.negated();
    }
    b2.push((last, last, corner));
    Ok(CoidealRep {
        n: 3,
        param: qp.q.clone(),
        b: vec![SparseMatrix::from_diagonal(b1), SparseMatrix::from_triplets(dim, dim, b2)],
        f: None,
    })
}

/// `B̃_1 v_j = (−1)^j B_1 v_j`, `B_2` unchanged, parameter negated.
pub fn twist_so3<T: Field>(rep: &CoidealRep<T>) -> CoidealRep<T> {
    let d = rep.dim();
    let signs = SparseMatrix::from_diagonal(
        (0..d).map(|j| if j % 2 == 0 { T::one() } else { T::one().negated() }),
    );
    let mut b = rep.b.clone();
    b[0] = signs.mul(&b[0]);
    CoidealRep { n: rep.n, param: rep.param.negated(), b, f: rep.f.clone() }
}

/// `U_q sl_2` on `C²` with `q = v²`: `E`, `F`, `K^{1/2} = diag(v, v^{-1})`.
fn sl2_vector() -> [SparseMatrix<Scalar>; 3] {
    let one = Scalar::from_int(1);
    let e = SparseMatrix::from_triplets(2, 2, [(0, 1, one)]);
    let f = e.transpose();
    let kh = SparseMatrix::from_diagonal([Scalar::v(), Scalar::v_pow(-1)]);
    [e, f, kh]
}

/// The idempotent onto the one-dimensional invariant summand of `C² ⊗ C²`.
///
/// The invariant line `w` solves `ΔE w = ΔF w = 0`, `ΔK^{1/2} w = w`; the
/// dual line `u` solves the transposed system; the projector is `w uᵀ / (uᵀ w)`.
pub fn tl_projector() -> Result<SparseMatrix<Scalar>> {
    let [e, f, kh] = sl2_vector();
    let khi = SparseMatrix::from_diagonal([Scalar::v_pow(-1), Scalar::v()]);
    let de = kh.kron(&e).add(&e.kron(&khi));
    let df = kh.kron(&f).add(&f.kron(&khi));
    let dk = kh.kron(&kh).sub(&SparseMatrix::identity(4));
    let w = single_vector(&SparseMatrix::vstack(&[&de, &df, &dk]))?;
    let u = single_vector(&SparseMatrix::vstack(&[&de.transpose(), &df.transpose(), &dk.transpose()]))?;
    let norm = u.iter().zip(&w).fold(Scalar::from_int(0), |mut acc, (a, b)| {
        acc.add_product(a, b);
        acc
    });
    let inv = norm.inv().ok_or(Error::DivisionByZero)?;
    let trip = (0..4).flat_map(|i| {
        let (w, u, inv) = (&w, &u, &inv);
        (0..4).map(move |j| (i, j, w[i].times(&u[j]).times(inv)))
    });
    Ok(SparseMatrix::from_triplets(4, 4, trip))
}

fn single_vector(m: &SparseMatrix<Scalar>) -> Result<Vec<Scalar>> {
    let mut ns = nullspace(m);
    if ns.len() != 1 {
        return Err(Error::DimensionMismatch(format!("invariant space of dimension {}", ns.len())));
    }
    Ok(ns.remove(0))
}

/// `e_1, …, e_{n−1}` on `(C²)^{⊗n}`.
pub fn tl_generators(n: usize) -> Result<Vec<SparseMatrix<Scalar>>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    let p = tl_projector()?;
    (1..n).map(|i| embed_factor(&p, i, n, 2)).collect()
}

/// Outcome of [`tl_homomorphism_check`].
#[derive(Clone, Debug)]
pub struct TlCheck {
    /// Temperley–Lieb relations on the constructed `e_i`.
    pub tl_relations: ResidualReport,
    /// `U'_{−q²} so_n` relations on `B_i = [2]^{-1} − [2] e_i`.
    pub coideal_relations: ResidualReport,
    /// The scalar `c` in `e_i e_{i±1} e_i = c e_i`, if it is the same for all pairs.
    pub measured_c: Option<Scalar>,
}

/// Checks the Temperley–Lieb relations and the homomorphism `B_i ↦ [2]^{-1} − [2] e_i`.
pub fn tl_homomorphism_check(n: usize) -> Result<TlCheck> {
    let e = tl_generators(n)?;
    let id = SparseMatrix::identity(1 << n);
    let mut tl = ResidualReport::new();
    let mut cs: Vec<Option<Scalar>> = Vec::new();
    for i in 0..e.len() {
        tl.record(format!("e{0}^2 = e{0}", i + 1), &e[i].mul(&e[i]).sub(&e[i]));
        for j in 0..e.len() {
            if i.abs_diff(j) > 1 {
                tl.record(format!("[e{}, e{}]", i + 1, j + 1), &e[i].commutator(&e[j]));
            } else if i.abs_diff(j) == 1 {
                let x = e[i].mul(&e[j]).mul(&e[i]);
                let c = ratio(&x, &e[i]);
                cs.push(c);
            }
        }
    }
    let measured_c = match cs.split_first() {
        Some((first, rest)) if first.is_some() && rest.iter().all(|c| c == first) => first.clone(),
        _ => None,
    };
    if n >= 3 {
        tl.record_bool("e_i e_{i±1} e_i proportional to e_i with one constant", measured_c.is_some());
    }
    let two = Scalar::q().plus(&Scalar::q_pow(-1));
    let inv_two = two.inv().expect("[2] is nonzero");
    let b = e.iter().map(|ei| id.scale(&inv_two).sub(&ei.scale(&two))).collect();
    let rep = CoidealRep { n, param: Scalar::q_pow(2).negated(), b, f: None };
    Ok(TlCheck { tl_relations: tl, coideal_relations: check_coideal_relations(&rep), measured_c })
}

/// `c` with `x = c·y`, if it exists.
fn ratio<T: Field>(x: &SparseMatrix<T>, y: &SparseMatrix<T>) -> Option<T> {
    let (i, j, yv) = y.entries().next()?;
    let c = x.get(i, j).quotient(yv)?;
    (x == &y.scale(&c)).then_some(c)
}

/// `B_i ↦ C_i` on `S^{⊗n}` with parameter `−q²`; for even `N` also `F ↦ f ⊗ 1`.
pub fn duality_rep(big_n: usize, n: usize) -> Result<CoidealRep<Scalar>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    let set = IntertwinerSet::new(big_n, n, build_c_quantum(big_n)?)?;
    let f = if big_n.is_multiple_of(2) {
        let ctx = CliffordContext::new(big_n)?;
        Some(embed_factor(&ctx.f_r(big_n)?, 1, n, ctx.dim())?)
    } else {
        None
    };
    Ok(CoidealRep { n, param: Scalar::q_pow(2).negated(), b: set.c_i, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qint_half;
    use crate::intertwiner::quantum_eigenvalues;
    use crate::linalg::{algebra_closure_dim, commutant_dimension, verify_spectrum};
    use crate::ring::PointSampler;

    #[test]
    fn so3_classical_relations() {
        let qp = QParam::generic();
        for n in 1..=7 {
            let rep = so3_classical_rep(n, &qp).unwrap();
            assert_eq!(rep.dim(), n + 1);
            let r = check_coideal_relations(&rep);
            assert!(r.is_zero(), "Nparam={n}: {r}");
            let r = check_coideal_relations(&twist_so3(&rep));
            assert!(r.is_zero(), "twist Nparam={n}: {r}");
        }
        let rep = so3_classical_rep(1, &qp).unwrap();
        assert_eq!(rep.b[0].get(0, 0), qint_half(1, &Scalar::v()).unwrap());
        assert_eq!(rep.b[0].get(1, 1), qint_half(-1, &Scalar::v()).unwrap());
    }

    #[test]
    fn so3_nonclassical_relations() {
        let qp = QParam::generic();
        for n in [1, 3, 5, 7] {
            for sign in [1, -1] {
                let rep = so3_nonclassical_rep(n, &qp, sign).unwrap();
                assert_eq!(rep.dim(), n.div_ceil(2));
                let r = check_coideal_relations(&rep);
                assert!(r.is_zero(), "Nparam={n} sign={sign}: {r}");
            }
        }
        assert!(so3_nonclassical_rep(4, &qp, 1).is_err());
    }

    #[test]
    fn twist_is_an_involution() {
        let rep = so3_classical_rep(4, &QParam::generic()).unwrap();
        let back = twist_so3(&twist_so3(&rep));
        assert_eq!(back.b, rep.b);
        assert_eq!(back.param, rep.param);
        let t = twist_so3(&rep);
        assert_eq!(t.b[0].mul(&t.b[0]), rep.b[0].mul(&rep.b[0]));
    }

    #[test]
    fn twist_commutants() {
        let mut sampler = PointSampler::new(3);
        for n in 1..=7 {
            let rep = twist_so3(&so3_classical_rep(n, &QParam::generic()).unwrap());
            let v0 = sampler.next_point();
            let s = rep.specialize(&v0).unwrap();
            let expect = if n % 2 == 0 { 1 } else { 2 };
            assert_eq!(commutant_dimension(&s.b, s.dim()), expect, "Nparam={n}");
        }
    }

    #[test]
    fn nonclassical_eigenvalues_under_neg_qsq() {
        // with q -> −q² and root i·q, B_1 has the spectrum of C for N odd
        let qp = QParam::generic().neg_qsq();
        for n in [3, 5, 7] {
            let rep = so3_nonclassical_rep(n, &qp, 1).unwrap();
            assert!(verify_spectrum(&rep.b[0], &quantum_eigenvalues(n)).verified, "N={n}");
        }
    }

    #[test]
    fn temperley_lieb() {
        for n in 3..=5 {
            let r = tl_homomorphism_check(n).unwrap();
            assert!(r.tl_relations.is_zero(), "n={n}: {}", r.tl_relations);
            assert!(r.coideal_relations.is_zero(), "n={n}: {}", r.coideal_relations);
            let two = Scalar::q().plus(&Scalar::q_pow(-1));
            assert_eq!(r.measured_c.unwrap(), two.times(&two).inv().unwrap());
        }
    }

    #[test]
    fn temperley_lieb_dimension_is_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        let mut sampler = PointSampler::new(5);
        for (n, &expect) in catalan.iter().enumerate().take(6).skip(2) {
            let e = tl_generators(n).unwrap();
            let v0 = sampler.next_point();
            let e: Vec<_> = e.iter().map(|m| m.specialize(&v0).unwrap()).collect();
            assert_eq!(algebra_closure_dim(&e), expect, "n={n}");
        }
    }

    #[test]
    fn duality_relations() {
        for (big_n, n) in [(3, 3), (4, 3), (5, 3)] {
            let rep = duality_rep(big_n, n).unwrap();
            let r = check_coideal_relations(&rep);
            assert!(r.is_zero(), "N={big_n} n={n}: {r}");
        }
    }
}
