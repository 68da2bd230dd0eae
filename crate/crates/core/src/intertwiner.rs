//! The operators `C ∈ End(S ⊗ S)` commuting with the quantum group, their
//! embeddings `C_i` into `S^{⊗n}`, and the checks run on them.

use alloc::format;
use alloc::vec::Vec;

use crate::clifford::CliffordContext;
use crate::error::Result;
use crate::linalg::{embed_factor, verify_spectrum, SparseMatrix, SpectrumReport};
use crate::quantum_group::{coproduct, GeneratorImages};
use crate::report::ResidualReport;
use crate::ring::{Field, GaussRat, Scalar};

/// `ψ` for `+`, `ψ†` for `−`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn exponent(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

fn psi_sign(ctx: &CliffordContext, i: usize, s: Sign) -> Result<SparseMatrix<Scalar>> {
    match s {
        Sign::Plus => ctx.psi(i),
        Sign::Minus => ctx.psi_dagger(i),
    }
}

/// `c_{i,±} = Ω_{i−1}^{-1} ψ_i^{±}`; for odd `N`, `c_{k+1,±} = Ω_k^{-1} f_N`.
pub fn c_op(ctx: &CliffordContext, i: usize, s: Sign) -> Result<SparseMatrix<Scalar>> {
    if i == ctx.k() + 1 && ctx.is_odd() {
        return Ok(ctx.big_omega(ctx.k(), -1)?.mul(&ctx.f_r(2 * ctx.k())?));
    }
    Ok(ctx.big_omega(i - 1, -1)?.mul(&psi_sign(ctx, i, s)?))
}

/// `d_{i,±} = Ω_{i−1} ψ_i^{±}`; for odd `N`, `d_{k+1,±} = Ω_k f_N`.
pub fn d_op(ctx: &CliffordContext, i: usize, s: Sign) -> Result<SparseMatrix<Scalar>> {
    if i == ctx.k() + 1 && ctx.is_odd() {
        return Ok(ctx.big_omega(ctx.k(), 1)?.mul(&ctx.f_r(2 * ctx.k())?));
    }
    Ok(ctx.big_omega(i - 1, 1)?.mul(&psi_sign(ctx, i, s)?))
}

/// `C(i) = c_{i,+} ⊗ d_{i,−} + c_{i,−} ⊗ d_{i,+}`.
pub fn c_term(ctx: &CliffordContext, i: usize) -> Result<SparseMatrix<Scalar>> {
    let a = c_op(ctx, i, Sign::Plus)?.kron(&d_op(ctx, i, Sign::Minus)?);
    let b = c_op(ctx, i, Sign::Minus)?.kron(&d_op(ctx, i, Sign::Plus)?);
    Ok(a.add(&b))
}

/// `C̃(k+1) = [2]^{-1} Ω_k^{-1} f_N ⊗ Ω_k f_N` with `[2] = q + q^{-1}`.
pub fn c_tail(ctx: &CliffordContext) -> Result<SparseMatrix<Scalar>> {
    let k = ctx.k();
    let two = ctx.q_pow(1).plus(&ctx.q_pow(-1));
    let t = c_op(ctx, k + 1, Sign::Plus)?.kron(&d_op(ctx, k + 1, Sign::Plus)?);
    Ok(t.scale(&two.inv().expect("[2] is nonzero")))
}

/// The commuting operator for `ctx`: `Σ_i C(i)`, plus `C̃(k+1)` for odd `N`.
///
/// With a classical context this is the `q = 1` operator in its `ψ` form.
pub fn build_c(ctx: &CliffordContext) -> Result<SparseMatrix<Scalar>> {
    let d = ctx.dim();
    let mut c = SparseMatrix::zeros(d * d, d * d);
    for i in 1..=ctx.k() {
        c = c.add(&c_term(ctx, i)?);
    }
    if ctx.is_odd() {
        c = c.add(&c_tail(ctx)?);
    }
    Ok(c)
}

/// `C` at generic `q` for `N ≥ 3`.
pub fn build_c_quantum(n: usize) -> Result<SparseMatrix<Scalar>> {
    build_c(&CliffordContext::new(n)?)
}

/// `C = ½ Σ_i e_i ⊗ e_i` at `q = 1`.
pub fn build_c_classical(n: usize, sign: i8) -> Result<SparseMatrix<Scalar>> {
    let ctx = CliffordContext::classical(n)?.with_sign(sign);
    let d = ctx.dim();
    let mut c = SparseMatrix::zeros(d * d, d * d);
    for e in ctx.all_e()? {
        c = c.add(&e.kron(&e));
    }
    Ok(c.scale(&Scalar::ratio(1, 2)))
}

/// `C` and its embeddings `C_1, …, C_{n−1}` into `S^{⊗n}`.
#[derive(Clone, Debug)]
pub struct IntertwinerSet<T> {
    pub big_n: usize,
    pub n: usize,
    pub c: SparseMatrix<T>,
    pub c_i: Vec<SparseMatrix<T>>,
}

impl<T: Field> IntertwinerSet<T> {
    pub fn new(big_n: usize, n: usize, c: SparseMatrix<T>) -> Result<Self> {
        let d = 1usize << (big_n / 2);
        let c_i = (1..n).map(|i| embed_factor(&c, i, n, d)).collect::<Result<Vec<_>>>()?;
        Ok(IntertwinerSet { big_n, n, c, c_i })
    }
}

/// `[Δ(g), C]` for `g ∈ {E_i, F_i, K_i^{1/2}}` on `S ⊗ S`.
pub fn check_commutation<T: Field>(s: &GeneratorImages<T>, c: &SparseMatrix<T>) -> ResidualReport {
    check_commutation_with(&coproduct(s, s), core::slice::from_ref(c))
}

/// `[g, C_i]` for all prepared generator images `g` and operators `C_i`.
pub fn check_commutation_with<T: Field>(imgs: &GeneratorImages<T>, cs: &[SparseMatrix<T>]) -> ResidualReport {
    let mut rep = ResidualReport::new();
    for (i, c) in cs.iter().enumerate() {
        for (g, m) in imgs.commutation_set() {
            rep.record(format!("[{g:?}, C{}]", i + 1), &m.commutator(c));
        }
    }
    rep
}

/// `X² Y + coeff·X Y X + Y X² − Y`.
pub fn cubic_residual<T: Field>(x: &SparseMatrix<T>, y: &SparseMatrix<T>, coeff: &T) -> SparseMatrix<T> {
    let xy = x.mul(y);
    let yx = y.mul(x);
    x.mul(&xy).add(&xy.mul(x).scale(coeff)).add(&yx.mul(x)).sub(y)
}

/// Both orientations of the cubic relation for `C_1 = C ⊗ 1`, `C_2 = 1 ⊗ C`.
pub fn check_cubic<T: Field>(c: &SparseMatrix<T>, d: usize, coeff: &T) -> Result<ResidualReport> {
    let c1 = embed_factor(c, 1, 3, d)?;
    let c2 = embed_factor(c, 2, 3, d)?;
    let mut rep = ResidualReport::new();
    rep.record("C1^2 C2 + a C1 C2 C1 + C2 C1^2 - C2", &cubic_residual(&c1, &c2, coeff));
    rep.record("C2^2 C1 + a C2 C1 C2 + C1 C2^2 - C1", &cubic_residual(&c2, &c1, coeff));
    Ok(rep)
}

/// `q² + q^{-2}` as the symbolic cubic coefficient.
pub fn cubic_coefficient() -> Scalar {
    Scalar::q_pow(2).plus(&Scalar::q_pow(-2))
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The `q = 1` eigenvalues of `C` with their expected multiplicities.
///
/// `N = 2k`: `j` with multiplicity `binom(N, k+j)`, `−k ≤ j ≤ k`.
/// `N = 2k+1`: `(−1)^{k−j}(N/2 − j)` with multiplicity `binom(N, j)`, `0 ≤ j ≤ k`.
pub fn classical_eigenvalues(n: usize) -> Vec<(GaussRat, usize)> {
    let k = n / 2;
    if n.is_multiple_of(2) {
        (-(k as i64)..=k as i64)
            .map(|j| (GaussRat::from_int(j), binomial(n, (k as i64 + j) as usize)))
            .collect()
    } else {
        (0..=k)
            .map(|j| {
                let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
                (GaussRat::ratio(sign * (n as i64 - 2 * j as i64), 2), binomial(n, j))
            })
            .collect()
    }
}

/// `(q^{N−2j} − q^{2j−N}) / (q² − q^{−2})` with an overall sign.
fn sft_value(n: usize, j: usize, negate: bool) -> Scalar {
    let e = n as i32 - 2 * j as i32;
    let num = Scalar::q_pow(e).minus(&Scalar::q_pow(-e));
    let den = Scalar::q_pow(2).minus(&Scalar::q_pow(-2));
    let v = num.quotient(&den).expect("q^2 - q^-2 is nonzero");
    if negate {
        v.negated()
    } else {
        v
    }
}

/// The literal candidate list `(−1)^j (q^{N−2j} − q^{2j−N}) / (q² − q^{−2})`, `0 ≤ j ≤ k`.
pub fn sft_candidates(n: usize) -> Vec<Scalar> {
    (0..=n / 2).map(|j| sft_value(n, j, j % 2 == 1)).collect()
}

/// Eigenvalues of `C` at generic `q`.
///
/// `N = 2k+1`: `(−1)^{k−j} (q^{N−2j} − q^{2j−N}) / (q² − q^{−2})`, `0 ≤ j ≤ k`.
/// `N = 2k`: `[j]_{q²} = (q^{2j} − q^{−2j}) / (q² − q^{−2})`, `−k ≤ j ≤ k`.
pub fn quantum_eigenvalues(n: usize) -> Vec<Scalar> {
    let k = n / 2;
    if n % 2 == 1 {
        (0..=k).map(|j| sft_value(n, j, (k - j) % 2 == 1)).collect()
    } else {
        (0..=2 * k).map(|j| sft_value(n, j, false)).collect()
    }
}

/// Spectrum of `C` at `q = 1` against [`classical_eigenvalues`].
pub fn spectrum_of_c_classical(n: usize, sign: i8) -> Result<SpectrumReport<GaussRat>> {
    let c = build_c_classical(n, sign)?.specialize(&GaussRat::from_int(1))?;
    let cands: Vec<GaussRat> = classical_eigenvalues(n).into_iter().map(|p| p.0).collect();
    Ok(verify_spectrum(&c, &cands))
}

/// Symbolic spectrum of `C` against `candidates`.
pub fn spectrum_of_c_quantum(n: usize, candidates: &[Scalar]) -> Result<SpectrumReport<Scalar>> {
    Ok(verify_spectrum(&build_c_quantum(n)?, candidates))
}

/// Whether every entry of `C` is a Laurent polynomial in `v` with Gaussian-integer
/// coefficients once multiplied by `[2]^a` for some `0 ≤ a ≤ max_power`.
pub fn integrality_check(c: &SparseMatrix<Scalar>, max_power: u32) -> bool {
    let two = Scalar::q().plus(&Scalar::q_pow(-1));
    c.entries().all(|(_, _, s)| {
        let mut t = s.clone();
        for _ in 0..=max_power {
            if t.is_laurent() && t.numer().has_gaussian_integer_coeffs() {
                return true;
            }
            t = t.times(&two);
        }
        false
    })
}

/// Relations `cdrel` and `iirelation` among `c_{j,κ}`, `d_{i,ε}` for all `i ≠ j`,
/// including the extra index `k+1` for odd `N`.
pub fn check_cd_relations(ctx: &CliffordContext) -> Result<ResidualReport> {
    let mut rep = ResidualReport::new();
    let top = if ctx.is_odd() { ctx.k() + 1 } else { ctx.k() };
    let signs = [Sign::Plus, Sign::Minus];
    let coeff = cubic_coefficient();
    for i in 1..=top {
        for j in (1..=top).filter(|&j| j != i) {
            for &eps in &signs {
                for &kap in &signs {
                    let d = d_op(ctx, i, eps)?;
                    let dm = d_op(ctx, i, eps.flip())?;
                    let c = c_op(ctx, j, kap)?;
                    let e = if i < j { eps.exponent() } else { kap.exponent() };
                    let lhs = d.mul(&c);
                    let rhs = c.mul(&d).scale(&Scalar::q_pow(2 * e).negated());
                    rep.record(format!("d({i},{eps:?}) c({j},{kap:?})"), &lhs.sub(&rhs));
                    let ddc = d.mul(&dm).mul(&c);
                    let lhs = ddc.add(&d.mul(&c).mul(&dm).scale(&coeff)).add(&c.mul(&d).mul(&dm));
                    let rhs = if i > j {
                        SparseMatrix::zeros(ctx.dim(), ctx.dim())
                    } else {
                        let f = Scalar::from_int(1).minus(&Scalar::q_pow(4 * eps.exponent()));
                        ddc.scale(&f)
                    };
                    rep.record(format!("ii({i},{eps:?}; {j},{kap:?})"), &lhs.sub(&rhs));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::SpinIndex;
    use crate::quantum_group::{check_symbolic, hayashi_rep, tensor_power};
    use crate::ring::PointSampler;
    use alloc::vec;

    #[test]
    fn caction_matches_basis_formula() {
        for n in [4, 5, 6] {
            let ctx = CliffordContext::new(n).unwrap();
            let d = ctx.dim();
            for j in 1..=ctx.k() {
                let op = c_term(&ctx, j).unwrap();
                for m in ctx.indices() {
                    for mm in ctx.indices() {
                        let col = m.position() * d + mm.position();
                        let e = m.prefix(j - 1) as i32 - mm.prefix(j - 1) as i32;
                        if m.bit(j) + mm.bit(j) == 1 {
                            let row = m.flip(j).position() * d + mm.flip(j).position();
                            // (−q²)^e
                            let mut expect = Scalar::q_pow(2 * e);
                            if e.rem_euclid(2) == 1 {
                                expect = -expect;
                            }
                            assert_eq!(op.get(row, col), expect);
                            assert_eq!(op.nnz_in_column(col), 1);
                        } else {
                            assert_eq!(op.nnz_in_column(col), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quantum_reduces_to_classical() {
        for n in 2..=7 {
            let q1 = build_c(&CliffordContext::classical(n).unwrap()).unwrap();
            for sign in [1, -1] {
                assert_eq!(q1, build_c_classical(n, sign).unwrap(), "N={n}");
            }
            if n >= 3 {
                let at_one = build_c_quantum(n).unwrap().specialize(&GaussRat::from_int(1)).unwrap();
                assert_eq!(at_one, q1.specialize(&GaussRat::from_int(1)).unwrap());
            }
        }
    }

    #[test]
    fn n3_classical_matrix() {
        let c = build_c_classical(3, 1).unwrap();
        let half = Scalar::ratio(1, 2);
        assert_eq!(c.get(0, 0), half);
        assert_eq!(c.get(1, 1), -half.clone());
        assert_eq!(c.get(2, 1), Scalar::from_int(1));
    }

    #[test]
    fn commutation_for_all_generators() {
        for n in 3..=6 {
            let rep = hayashi_rep(n).unwrap();
            let c = build_c_quantum(n).unwrap();
            let r = check_commutation(&rep.images, &c);
            assert!(r.is_zero(), "N={n}: {r}");
        }
    }

    #[test]
    fn dropping_tail_breaks_commutation() {
        let ctx = CliffordContext::new(5).unwrap();
        let rep = hayashi_rep(5).unwrap();
        let mut c = SparseMatrix::zeros(16, 16);
        for i in 1..=2 {
            c = c.add(&c_term(&ctx, i).unwrap());
        }
        let r = check_commutation(&rep.images, &c);
        assert!(r.failures().any(|f| f.label.starts_with("[E(2)")));
    }

    #[test]
    fn commutation_on_triple_tensor_at_a_point() {
        let mut sampler = PointSampler::new(11);
        for n in [3, 4, 5] {
            let rep = hayashi_rep(n).unwrap();
            let v0 = sampler.next_point();
            let s = rep.images.specialize(&v0).unwrap();
            let c = build_c_quantum(n).unwrap().specialize(&v0).unwrap();
            let set = IntertwinerSet::new(n, 3, c).unwrap();
            let r = check_commutation_with(&tensor_power(&s, 3), &set.c_i);
            assert!(r.is_zero(), "N={n}: {r}");
        }
    }

    #[test]
    fn c_is_transpose_symmetric() {
        for n in 3..=7 {
            let c = build_c_quantum(n).unwrap();
            assert_eq!(c.transpose(), c, "N={n}");
        }
    }

    #[test]
    fn far_commutation() {
        let c = build_c_quantum(4).unwrap();
        let set = IntertwinerSet::new(4, 4, c).unwrap();
        assert_eq!(set.c_i[0].mul(&set.c_i[2]), set.c_i[2].mul(&set.c_i[0]));
    }

    #[test]
    fn cubic_relation_symbolic_and_classical() {
        for n in [3, 4] {
            let c = build_c_quantum(n).unwrap();
            let r = check_cubic(&c, 1 << (n / 2), &cubic_coefficient()).unwrap();
            assert!(r.is_zero(), "N={n}: {r}");
        }
        let c = build_c_classical(5, 1).unwrap().specialize(&GaussRat::from_int(1)).unwrap();
        assert!(check_cubic(&c, 4, &GaussRat::from_int(2)).unwrap().is_zero());
    }

    #[test]
    fn classical_spectra() {
        for n in 2..=7 {
            let r = spectrum_of_c_classical(n, 1).unwrap();
            assert!(r.verified, "N={n}");
            for (val, mult) in classical_eigenvalues(n) {
                assert_eq!(r.multiplicity(&val), mult, "N={n} eigenvalue {val}");
            }
        }
        let r = spectrum_of_c_classical(3, 1).unwrap();
        assert_eq!(r.multiplicity(&GaussRat::ratio(1, 2)), 3);
        assert_eq!(r.multiplicity(&GaussRat::ratio(-3, 2)), 1);
    }

    #[test]
    fn quantum_spectra() {
        for n in 3..=6 {
            let r = spectrum_of_c_quantum(n, &quantum_eigenvalues(n)).unwrap();
            assert!(r.verified, "N={n}");
        }
        assert!(spectrum_of_c_quantum(5, &sft_candidates(5)).unwrap().verified);
        assert!(!spectrum_of_c_quantum(3, &sft_candidates(3)).unwrap().verified);
    }

    #[test]
    fn integrality() {
        for n in [4, 6] {
            let c = build_c_quantum(n).unwrap();
            assert!(integrality_check(&c, 0), "N={n}");
        }
        for n in [3, 5, 7] {
            let c = build_c_quantum(n).unwrap();
            assert!(!integrality_check(&c, 0));
            assert!(integrality_check(&c, 1), "N={n}");
        }
    }

    #[test]
    fn cd_relations() {
        for n in 3..=7 {
            let ctx = CliffordContext::new(n).unwrap();
            let r = check_cd_relations(&ctx).unwrap();
            assert!(r.is_zero(), "N={n}: {r}");
        }
    }

    #[test]
    fn eigenvector_at_q_one() {
        for n in [4, 5, 6, 7] {
            let ctx = CliffordContext::classical(n).unwrap();
            let (k, d) = (ctx.k(), ctx.dim());
            let c = build_c(&ctx).unwrap().specialize(&GaussRat::from_int(1)).unwrap();
            let mut v = vec![GaussRat::from_int(0); d * d];
            for m in ctx.indices() {
                let bar = SpinIndex::new(((1u32 << k) - 1) ^ m.position() as u32, k);
                let dot: usize = (1..=k).map(|i| m.bit(i) as usize * (k - i)).sum();
                v[m.position() * d + bar.position()] = GaussRat::from_int(if dot.is_multiple_of(2) { 1 } else { -1 });
            }
            // f ⊗ f acts on x(m) ⊗ x(m̄) by (−1)^k, adding (−1)^k / 2 for odd N
            let sk = if k % 2 == 0 { 1 } else { -1 };
            let mut lambda = GaussRat::from_int(-sk * k as i64);
            if n % 2 == 1 {
                lambda = &lambda + &GaussRat::ratio(sk, 2);
            }
            for row in 0..d * d {
                let mut acc = GaussRat::from_int(0);
                for (j, x) in c.row(row) {
                    acc.add_product(x, &v[*j]);
                }
                assert_eq!(acc, &lambda * &v[row], "N={n} row {row}");
            }
        }
    }

    #[test]
    fn duality_generators_satisfy_coideal_relations_at_q_one() {
        // classical C_i give U'_{-1} so_n: middle coefficient −(−1 + −1) = 2
        let c = build_c_classical(4, 1).unwrap().specialize(&GaussRat::from_int(1)).unwrap();
        let set = IntertwinerSet::new(4, 3, c).unwrap();
        let r = cubic_residual(&set.c_i[0], &set.c_i[1], &GaussRat::from_int(2));
        assert!(r.is_zero());
    }

    #[test]
    fn relations_survive_tensor_square() {
        let rep = hayashi_rep(4).unwrap();
        assert!(check_symbolic(&tensor_power(&rep.images, 2)).is_zero());
    }

    #[test]
    fn lemma_ci_relations_part_b() {
        // lhs(C(i) ⊗ 1; 1 ⊗ C(j)) for i > j vanishes and for i = j equals
        // (Ω_{i−1}^{-2} ⊗ Ω_{i−1}^2 ⊗ 1)(1 ⊗ C(j))
        for n in [4, 5] {
            let ctx = CliffordContext::new(n).unwrap();
            let d = ctx.dim();
            let id = SparseMatrix::identity(d);
            let coeff = cubic_coefficient();
            for i in 1..=ctx.k() {
                for j in 1..=ctx.k() {
                    let x = c_term(&ctx, i).unwrap().kron(&id);
                    let y = id.kron(&c_term(&ctx, j).unwrap());
                    let lhs = cubic_residual(&x, &y, &coeff).add(&y);
                    let om = |r: usize| {
                        let a = ctx.big_omega(r, -1).unwrap();
                        let b = ctx.big_omega(r, 1).unwrap();
                        a.mul(&a).kron(&b.mul(&b)).kron(&id)
                    };
                    let expect = if i > j {
                        SparseMatrix::zeros(d * d * d, d * d * d)
                    } else if i == j {
                        om(i - 1).mul(&y)
                    } else {
                        om(i - 1).sub(&om(i)).mul(&y)
                    };
                    assert_eq!(lhs, expect, "N={n} i={i} j={j}");
                }
            }
        }
    }
}
