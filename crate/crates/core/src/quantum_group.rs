//! Spin representation of `U_q so_N` on `S` and its coproduct powers.
//!
//! Both types use `K_i = q^{2(α_i, μ)}` on a vector of weight `μ`, with the
//! standard form `(ε_a, ε_b) = δ_ab`. Type `B_k` then realizes `U_q so_{2k+1}`
//! and type `D_k` realizes `U_{q^2} so_{2k}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::clifford::{CliffordContext, SpinIndex};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::report::ResidualReport;
use crate::ring::{Field, GaussRat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    B,
    D,
}

/// Generator labels, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
    KHalf(usize),
    KHalfInv(usize),
}

/// Weight of a basis vector, stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub doubled: Vec<i32>,
}

/// `x(m)` has weight `μ_i = 1/2 − m_i`.
pub fn weight_of(m: SpinIndex) -> Weight {
    Weight { doubled: (1..=m.k()).map(|i| 1 - 2 * m.bit(i) as i32).collect() }
}

/// Simple roots in the `ε` basis: `α_i = ε_i − ε_{i+1}`, and `α_k = ε_k`
/// (type B) or `ε_{k−1} + ε_k` (type D).
pub fn simple_roots(lie_type: LieType, k: usize) -> Vec<Vec<i32>> {
    (1..=k)
        .map(|i| {
            let mut a = vec![0; k];
            if i < k {
                a[i - 1] = 1;
                a[i] = -1;
            } else {
                match lie_type {
                    LieType::B => a[k - 1] = 1,
                    LieType::D => {
                        a[k - 2] = 1;
                        a[k - 1] = 1;
                    }
                }
            }
            a
        })
        .collect()
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `B_ij = 2(α_i, α_j)`: `K_i E_j K_i^{-1} = q^{B_ij} E_j`.
pub fn symmetrized_form(lie_type: LieType, k: usize) -> Vec<Vec<i32>> {
    let roots = simple_roots(lie_type, k);
    roots.iter().map(|a| roots.iter().map(|b| 2 * dot(a, b)).collect()).collect()
}

/// Images of the Chevalley generators on one module.
///
/// `K_i^{±1}` are derived from `K_i^{±1/2}`; all relation checks and the
/// coproduct work on this type, generic over the coefficient field.
#[derive(Clone, PartialEq)]
pub struct GeneratorImages<T> {
    pub lie_type: LieType,
    pub e: Vec<SparseMatrix<T>>,
    pub f: Vec<SparseMatrix<T>>,
    pub k_half: Vec<SparseMatrix<T>>,
    pub k_half_inv: Vec<SparseMatrix<T>>,
}

impl<T: Field> core::fmt::Debug for GeneratorImages<T> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GeneratorImages")
            .field("lie_type", &self.lie_type)
            .field("rank", &self.e.len())
            .field("e", &self.e)
            .field("f", &self.f)
            .field("k_half", &self.k_half)
            .finish()
    }
}

impl<T: Field> GeneratorImages<T> {
    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn dim(&self) -> usize {
        self.e[0].nrows()
    }

    pub fn get(&self, g: Generator) -> Result<SparseMatrix<T>> {
        let k = self.rank();
        let i = match g {
            Generator::E(i)
            | Generator::F(i)
            | Generator::K(i)
            | Generator::KInv(i)
            | Generator::KHalf(i)
            | Generator::KHalfInv(i) => i,
        };
        if i < 1 || i > k {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: k });
        }
        Ok(match g {
            Generator::E(_) => self.e[i - 1].clone(),
            Generator::F(_) => self.f[i - 1].clone(),
            Generator::K(_) => self.k_half[i - 1].mul(&self.k_half[i - 1]),
            Generator::KInv(_) => self.k_half_inv[i - 1].mul(&self.k_half_inv[i - 1]),
            Generator::KHalf(_) => self.k_half[i - 1].clone(),
            Generator::KHalfInv(_) => self.k_half_inv[i - 1].clone(),
        })
    }

    /// `E_i, F_i, K_i^{1/2}` for all `i`, the set used for commutation checks.
    pub fn commutation_set(&self) -> Vec<(Generator, &SparseMatrix<T>)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            out.push((Generator::E(i + 1), &self.e[i]));
            out.push((Generator::F(i + 1), &self.f[i]));
            out.push((Generator::KHalf(i + 1), &self.k_half[i]));
        }
        out
    }

    pub fn map<U: Field, F: Fn(&SparseMatrix<T>) -> SparseMatrix<U>>(&self, f: F) -> GeneratorImages<U> {
        GeneratorImages {
            lie_type: self.lie_type,
            e: self.e.iter().map(&f).collect(),
            f: self.f.iter().map(&f).collect(),
            k_half: self.k_half.iter().map(&f).collect(),
            k_half_inv: self.k_half_inv.iter().map(&f).collect(),
        }
    }

    pub fn try_map<U: Field, F: Fn(&SparseMatrix<T>) -> Result<SparseMatrix<U>>>(
        &self,
        f: F,
    ) -> Result<GeneratorImages<U>> {
        let all = |v: &Vec<SparseMatrix<T>>| v.iter().map(&f).collect::<Result<Vec<_>>>();
        Ok(GeneratorImages {
            lie_type: self.lie_type,
            e: all(&self.e)?,
            f: all(&self.f)?,
            k_half: all(&self.k_half)?,
            k_half_inv: all(&self.k_half_inv)?,
        })
    }
}

impl GeneratorImages<Scalar> {
    pub fn specialize(&self, v0: &GaussRat) -> Result<GeneratorImages<GaussRat>> {
        self.try_map(|m| m.specialize(v0))
    }
}

/// Balanced coproduct into `A ⊗ B`:
/// `Δ(X) = K^{1/2} ⊗ X + X ⊗ K^{−1/2}` for `X = E, F`, and `K^{±1/2}` group-like.
pub fn coproduct<T: Field>(a: &GeneratorImages<T>, b: &GeneratorImages<T>) -> GeneratorImages<T> {
    let k = a.rank();
    let split = |xa: &SparseMatrix<T>, xb: &SparseMatrix<T>, i: usize| {
        a.k_half[i].kron(xb).add(&xa.kron(&b.k_half_inv[i]))
    };
    GeneratorImages {
        lie_type: a.lie_type,
        e: (0..k).map(|i| split(&a.e[i], &b.e[i], i)).collect(),
        f: (0..k).map(|i| split(&a.f[i], &b.f[i], i)).collect(),
        k_half: (0..k).map(|i| a.k_half[i].kron(&b.k_half[i])).collect(),
        k_half_inv: (0..k).map(|i| a.k_half_inv[i].kron(&b.k_half_inv[i])).collect(),
    }
}

/// `Δ^{(n)}` images on `V^{⊗n}`, built as `Δ^{(n)} = (Δ^{(n−1)} ⊗ id) ∘ Δ`.
pub fn tensor_power<T: Field>(base: &GeneratorImages<T>, n: usize) -> GeneratorImages<T> {
    assert!(n >= 1, "tensor power needs n ≥ 1");
    let mut acc = base.clone();
    for _ in 1..n {
        acc = coproduct(&acc, base);
    }
    acc
}

/// Hayashi's spin representation on `S`.
#[derive(Clone, Debug)]
pub struct QGroupRep {
    pub ctx: CliffordContext,
    pub lie_type: LieType,
    /// `q_i` as a power of `q`: `K_i E_i K_i^{-1} = q_i^2 E_i`.
    pub qi_table: Vec<i32>,
    pub images: GeneratorImages<Scalar>,
}

/// Builds the representation for `N ≥ 3` at generic `q`.
pub fn hayashi_rep(n: usize) -> Result<QGroupRep> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("N = {n} must be at least 3")));
    }
    let ctx = CliffordContext::new(n)?;
    let k = ctx.k();
    let lie_type = if ctx.is_odd() { LieType::B } else { LieType::D };
    let roots = simple_roots(lie_type, k);
    let mut e = Vec::with_capacity(k);
    for i in 1..k {
        e.push(ctx.psi(i)?.mul(&ctx.psi_dagger(i + 1)?));
    }
    e.push(match lie_type {
        LieType::B => ctx.psi(k)?.mul(&ctx.f_r(2 * k)?),
        LieType::D => ctx.psi(k - 1)?.mul(&ctx.psi(k)?),
    });
    let f: Vec<_> = e.iter().map(|m| m.transpose()).collect();
    let half = |sign: i32| -> Vec<SparseMatrix<Scalar>> {
        roots
            .iter()
            .map(|a| {
                SparseMatrix::from_diagonal(
                    ctx.indices().map(|m| Scalar::v_pow(sign * dot(a, &weight_of(m).doubled))),
                )
            })
            .collect()
    };
    let (k_half, k_half_inv) = (half(1), half(-1));
    let form = symmetrized_form(lie_type, k);
    let qi_table = (0..k).map(|i| form[i][i] / 2).collect();
    Ok(QGroupRep {
        ctx,
        lie_type,
        qi_table,
        images: GeneratorImages { lie_type, e, f, k_half, k_half_inv },
    })
}

impl QGroupRep {
    pub fn k(&self) -> usize {
        self.ctx.k()
    }

    pub fn generator(&self, g: Generator) -> Result<SparseMatrix<Scalar>> {
        self.images.get(g)
    }

    /// Exponent of `q` on the diagonal of `K_i` at `x(m)`, from the weight.
    pub fn k_exponent(&self, i: usize, m: SpinIndex) -> i32 {
        let roots = simple_roots(self.lie_type, self.k());
        dot(&roots[i - 1], &weight_of(m).doubled)
    }
}

/// `Δ^{(n)}(g)` on `S^{⊗n}`.
pub fn coproduct_action(rep: &QGroupRep, g: Generator, n: usize) -> Result<SparseMatrix<Scalar>> {
    tensor_power(&rep.images, n).get(g)
}

/// `[n]_b = b^{n−1} + b^{n−3} + … + b^{1−n}` with `b = v^{step}`.
fn qint_poly<T: Field, P: Fn(i32) -> T>(n: i32, step: i32, vpow: &P) -> T {
    let mut acc = T::zero();
    for j in 0..n {
        acc.plus_assign(&vpow(step * (n - 1 - 2 * j)));
    }
    acc
}

fn qbinom<T: Field, P: Fn(i32) -> T>(n: i32, r: i32, step: i32, vpow: &P) -> T {
    let fact = |m: i32| (1..=m).fold(T::one(), |acc, j| acc.times(&qint_poly(j, step, vpow)));
    fact(n)
        .quotient(&fact(r).times(&fact(n - r)))
        .expect("q-factorials are nonzero at generic points")
}

/// Evaluates every Drinfeld–Jimbo relation on `imgs`.
///
/// `vpow(e)` must return `v^e` in the coefficient field. Relations are read in
/// the `(α_i, α_j)` normalization of [`symmetrized_form`].
pub fn check_defining_relations<T: Field, P: Fn(i32) -> T>(
    imgs: &GeneratorImages<T>,
    vpow: P,
) -> ResidualReport {
    let mut rep = ResidualReport::new();
    let k = imgs.rank();
    let form = symmetrized_form(imgs.lie_type, k);
    let d = imgs.dim();
    let id = SparseMatrix::identity(d);
    let kk: Vec<_> = (0..k).map(|i| imgs.k_half[i].mul(&imgs.k_half[i])).collect();
    let kinv: Vec<_> = (0..k).map(|i| imgs.k_half_inv[i].mul(&imgs.k_half_inv[i])).collect();
    for i in 0..k {
        rep.record(format!("K{0}^(1/2) K{0}^(-1/2) = 1", i + 1), &imgs.k_half[i].mul(&imgs.k_half_inv[i]).sub(&id));
        for j in 0..k {
            rep.record(format!("[K{}, K{}] = 0", i + 1, j + 1), &kk[i].commutator(&kk[j]));
            // K^{1/2} conjugation: q^{B_ij/2} = v^{B_ij}
            let b = form[i][j];
            let ke = imgs.k_half[i].mul(&imgs.e[j]).mul(&imgs.k_half_inv[i]);
            rep.record(format!("K{}^(1/2) E{} K{}^(-1/2)", i + 1, j + 1, i + 1), &ke.sub(&imgs.e[j].scale(&vpow(b))));
            let kf = imgs.k_half[i].mul(&imgs.f[j]).mul(&imgs.k_half_inv[i]);
            rep.record(format!("K{}^(1/2) F{} K{}^(-1/2)", i + 1, j + 1, i + 1), &kf.sub(&imgs.f[j].scale(&vpow(-b))));
            let ef = imgs.e[i].commutator(&imgs.f[j]);
            let expect = if i == j {
                // (K − K^{-1}) / (q_i − q_i^{-1}), q_i = v^{B_ii}
                let den = vpow(form[i][i]).minus(&vpow(-form[i][i]));
                kk[i].sub(&kinv[i]).scale(&den.inv().expect("q_i is not ±1"))
            } else {
                SparseMatrix::zeros(d, d)
            };
            rep.record(format!("[E{}, F{}]", i + 1, j + 1), &ef.sub(&expect));
            if i != j {
                // Σ_r (−1)^r [1−a, r]_{q_i} X_i^{1−a−r} X_j X_i^r, a = 2B_ij / B_ii
                let a = 2 * form[i][j] / form[i][i];
                let top = 1 - a;
                for (name, x) in [("E", &imgs.e), ("F", &imgs.f)] {
                    let mut acc = SparseMatrix::zeros(d, d);
                    for r in 0..=top {
                        let mut c = qbinom(top, r, form[i][i], &vpow);
                        if r % 2 == 1 {
                            c = c.negated();
                        }
                        let term = x[i].pow((top - r) as u32).mul(&x[j]).mul(&x[i].pow(r as u32));
                        acc = acc.add(&term.scale(&c));
                    }
                    rep.record(format!("Serre {name}{} {name}{}", i + 1, j + 1), &acc);
                }
            }
        }
    }
    rep
}

/// Symbolic check with `v` the formal variable.
pub fn check_symbolic(imgs: &GeneratorImages<Scalar>) -> ResidualReport {
    check_defining_relations(imgs, Scalar::v_pow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_symbolically() {
        for n in 3..=7 {
            let rep = hayashi_rep(n).unwrap();
            let r = check_symbolic(&rep.images);
            assert!(r.is_zero(), "N={n}: {r}");
        }
    }

    #[test]
    fn dropping_e1_breaks_relations() {
        let mut rep = hayashi_rep(5).unwrap();
        let d = rep.images.dim();
        rep.images.e[0] = SparseMatrix::zeros(d, d);
        let r = check_symbolic(&rep.images);
        assert!(r.failures().any(|f| f.label == "[E1, F1]"));
    }

    #[test]
    fn generator_examples() {
        let rep = hayashi_rep(6).unwrap();
        let ctx = &rep.ctx;
        assert_eq!(rep.images.e[0], ctx.psi(1).unwrap().mul(&ctx.psi_dagger(2).unwrap()));
        let rep5 = hayashi_rep(5).unwrap();
        let w = rep5.ctx.omega(2, 1).unwrap();
        let expect = w.mul(&w).scale(&Scalar::q());
        assert_eq!(rep5.generator(Generator::K(2)).unwrap(), expect);
        let rep4 = hayashi_rep(4).unwrap();
        let k1 = rep4.generator(Generator::K(1)).unwrap();
        for m in rep4.ctx.indices() {
            let e = 2 * (m.bit(2) as i32 - m.bit(1) as i32);
            assert_eq!(k1.get(m.position(), m.position()), Scalar::q_pow(e));
        }
        assert_eq!(rep.qi_table, vec![2, 2, 2]);
        assert_eq!(rep5.qi_table, vec![2, 1]);
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of(SpinIndex::from_bits(&[0, 0, 0])).doubled, vec![1, 1, 1]);
        assert_eq!(weight_of(SpinIndex::from_bits(&[1, 1])).doubled, vec![-1, -1]);
        assert_eq!(weight_of(SpinIndex::from_bits(&[0, 1])).doubled, vec![1, -1]);
        for n in 3..=7 {
            let rep = hayashi_rep(n).unwrap();
            for i in 1..=rep.k() {
                let kk = rep.generator(Generator::K(i)).unwrap();
                for m in rep.ctx.indices() {
                    let p = m.position();
                    assert_eq!(kk.get(p, p), Scalar::q_pow(rep.k_exponent(i, m)));
                }
            }
        }
    }

    #[test]
    fn highest_weight_vector() {
        for n in 3..=7 {
            let rep = hayashi_rep(n).unwrap();
            for e in &rep.images.e {
                for i in 0..e.nrows() {
                    assert!(e.get(i, 0).is_zero());
                }
            }
        }
    }

    #[test]
    fn coproduct_basics() {
        let rep = hayashi_rep(5).unwrap();
        assert_eq!(coproduct_action(&rep, Generator::E(1), 1).unwrap(), rep.images.e[0]);
        let k1 = rep.generator(Generator::K(1)).unwrap();
        assert_eq!(coproduct_action(&rep, Generator::K(1), 2).unwrap(), k1.kron(&k1));
        let sq = tensor_power(&rep.images, 2);
        assert!(check_symbolic(&sq).is_zero());
    }

    #[test]
    fn coproduct_is_coassociative() {
        for n in [4, 5] {
            let s = hayashi_rep(n).unwrap().images;
            let left = coproduct(&coproduct(&s, &s), &s);
            let right = coproduct(&s, &coproduct(&s, &s));
            assert_eq!(left, right);
        }
    }
}
