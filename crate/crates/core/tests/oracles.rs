//! Cross-checks against constructions that share no code with the engine.

use itertools::Itertools;
use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;

use spindual_core::combinatorics::{
    branch, gz_dimension, tensor_power_table, weyl_dim, AlgebraType, BranchLabel, DominantWeight,
};
use spindual_core::intertwiner::{build_c_classical, classical_eigenvalues};
use spindual_core::GaussRat;

type C64 = Complex<f64>;

fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a.kronecker(b)
}

fn pauli() -> [DMatrix<C64>; 4] {
    let c = |re: f64, im: f64| C64::new(re, im);
    let o = c(0.0, 0.0);
    [
        DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), o, o, c(1.0, 0.0)]),
        DMatrix::from_row_slice(2, 2, &[o, c(1.0, 0.0), c(1.0, 0.0), o]),
        DMatrix::from_row_slice(2, 2, &[o, c(0.0, -1.0), c(0.0, 1.0), o]),
        DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), o, o, c(-1.0, 0.0)]),
    ]
}

/// Jordan–Wigner gamma matrices: `Z ⊗ … ⊗ Z ⊗ X|Y ⊗ 1 ⊗ … ⊗ 1`, plus the
/// chirality `Z ⊗ … ⊗ Z` for odd `N`.
fn gammas(big_n: usize) -> Vec<DMatrix<C64>> {
    let k = big_n / 2;
    let [id, x, y, z] = pauli();
    let string = |slot: usize, mid: &DMatrix<C64>| {
        let mut m = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
        for j in 0..k {
            let f = match j.cmp(&slot) {
                std::cmp::Ordering::Less => &z,
                std::cmp::Ordering::Equal => mid,
                std::cmp::Ordering::Greater => &id,
            };
            m = kron(&m, f);
        }
        m
    };
    let mut out = Vec::new();
    for j in 0..k {
        out.push(string(j, &x));
        out.push(string(j, &y));
    }
    if big_n % 2 == 1 {
        out.push(string(k, &id));
    }
    out
}

fn hermitian_spectrum(m: &DMatrix<C64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

fn expected_spectrum(big_n: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for (e, m) in classical_eigenvalues(big_n) {
        let v = e.re().to_f64().unwrap();
        out.extend(std::iter::repeat_n(v, m));
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
}

#[test]
fn classical_casimir_spectrum_from_pauli_matrices() {
    for big_n in 3..=8 {
        let g = gammas(big_n);
        let d = g[0].nrows();
        let mut c = DMatrix::from_element(d * d, d * d, C64::new(0.0, 0.0));
        for a in &g {
            c += kron(a, a) * C64::new(0.5, 0.0);
        }
        assert!(close(&hermitian_spectrum(&c), &expected_spectrum(big_n)), "N={big_n}");
    }
}

#[test]
fn engine_classical_c_matches_pauli_spectrum() {
    for big_n in 3..=8 {
        for sign in [1, -1] {
            let c = build_c_classical(big_n, sign).unwrap().specialize(&GaussRat::from_int(1)).unwrap();
            let d = c.nrows();
            let mut m = DMatrix::from_element(d, d, C64::new(0.0, 0.0));
            for (i, j, v) in c.entries() {
                m[(i, j)] = C64::new(v.re().to_f64().unwrap(), v.im().to_f64().unwrap());
            }
            assert!((&m - m.adjoint()).norm() < 1e-12, "C is Hermitian at q=1");
            assert!(close(&hermitian_spectrum(&m), &expected_spectrum(big_n)), "N={big_n} sign={sign}");
        }
    }
}

fn binom(n: i64, r: i64) -> i64 {
    if r < 0 || r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Multiplicity of the doubled weight `mu` in `S^{⊗n}`: each coordinate is an
/// independent sum of `n` signs.
fn weight_mult(mu: &[i32], n: i64) -> i64 {
    mu.iter()
        .map(|&x| {
            let x = x as i64;
            if (n + x) % 2 != 0 {
                0
            } else {
                binom(n, (n + x) / 2)
            }
        })
        .product()
}

/// `m_λ = Σ_w det(w) mult(λ + ρ − wρ)` over signed permutations (even sign
/// changes only for type D).
fn alternating_multiplicity(lam: &[i32], n: i64, t: AlgebraType) -> i64 {
    let k = lam.len();
    let rho: Vec<i32> = (1..=k as i32)
        .map(|i| match t {
            AlgebraType::B => 2 * (k as i32 - i) + 1,
            _ => 2 * (k as i32 - i),
        })
        .collect();
    let mut total = 0;
    for perm in (0..k).permutations(k) {
        let inversions = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
        for signs in 0u32..(1 << k) {
            let negs = signs.count_ones() as usize;
            if t != AlgebraType::B && negs % 2 == 1 {
                continue;
            }
            let w_rho: Vec<i32> = (0..k).map(|i| if signs >> i & 1 == 1 { -rho[perm[i]] } else { rho[perm[i]] }).collect();
            let mu: Vec<i32> = (0..k).map(|i| lam[i] + rho[i] - w_rho[i]).collect();
            let det = if (inversions + negs).is_multiple_of(2) { 1 } else { -1 };
            total += det * weight_mult(&mu, n);
        }
    }
    total
}

#[test]
fn tensor_rule_matches_weyl_alternating_sum() {
    for big_n in 3..=8 {
        let k = big_n / 2;
        let t = if big_n % 2 == 1 { AlgebraType::B } else { AlgebraType::D };
        for n in 1..=5 {
            let table = tensor_power_table(big_n, n, t, None).unwrap();
            let folded = (t == AlgebraType::D).then(|| tensor_power_table(big_n, n, AlgebraType::ExtendedD, None).unwrap());
            // every dominant weight in the box, not only those the table lists
            let range: Vec<i32> = (-(n as i32)..=n as i32).collect();
            for lam in (0..k).map(|_| range.iter().copied()).multi_cartesian_product() {
                let w = DominantWeight::new(lam.clone());
                if !w.is_dominant(t) {
                    continue;
                }
                let expect = alternating_multiplicity(&lam, n as i64, t);
                assert_eq!(table.get(&lam) as i64, expect, "N={big_n} n={n} {lam:?}");
                if let (Some(f), true) = (&folded, lam[k - 1] >= 0) {
                    assert_eq!(f.get(&lam) as i64, expect, "folded N={big_n} n={n} {lam:?}");
                }
            }
        }
    }
}

/// Weyl dimension as a product over an explicit list of positive roots.
fn root_product_dim(lam: &[i32], t: AlgebraType) -> f64 {
    let k = lam.len();
    let mut roots: Vec<Vec<i32>> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for s in [1, -1] {
                let mut r = vec![0; k];
                r[i] = 1;
                r[j] = -s;
                roots.push(r);
            }
        }
        if t == AlgebraType::B {
            let mut r = vec![0; k];
            r[i] = 1;
            roots.push(r);
        }
    }
    let half_sum: Vec<f64> = (0..k).map(|i| roots.iter().map(|r| r[i] as f64).sum::<f64>() / 2.0).collect();
    roots
        .iter()
        .map(|r| {
            let dot = |v: &[f64]| v.iter().zip(r).map(|(a, b)| a * *b as f64).sum::<f64>();
            let shifted: Vec<f64> = (0..k).map(|i| lam[i] as f64 / 2.0 + half_sum[i]).collect();
            dot(&shifted) / dot(&half_sum)
        })
        .product()
}

#[test]
fn weyl_dimension_matches_root_product() {
    for (t, k) in [(AlgebraType::B, 1), (AlgebraType::B, 2), (AlgebraType::B, 3), (AlgebraType::D, 2), (AlgebraType::D, 3), (AlgebraType::D, 4)] {
        let range: Vec<i32> = (-6..=6).collect();
        for lam in (0..k).map(|_| range.iter().copied()).multi_cartesian_product() {
            let w = DominantWeight::new(lam.clone());
            if !w.is_dominant(t) {
                continue;
            }
            let exact = weyl_dim(&w, t).to_f64().unwrap();
            assert!((exact - root_product_dim(&lam, t)).abs() < 1e-6, "{t:?} {lam:?}");
        }
    }
}

/// Whether `mu` may follow `lam` in a chain, read off as a predicate.
fn interleaves(lam: &[i32], mu: &[i32], m: usize, classical: bool) -> bool {
    let k = lam.len();
    if mu.iter().any(|&x| (x - lam[0]).rem_euclid(2) != 0) {
        return false;
    }
    if m % 2 == 1 {
        (0..k.saturating_sub(1)).all(|i| lam[i] >= mu[i] && mu[i] >= lam[i + 1])
            && if classical { lam[k - 1] >= mu[k - 1].abs() } else { lam[k - 1] >= mu[k - 1] && mu[k - 1] > 0 }
    } else {
        (0..k - 1).all(|i| lam[i] >= mu[i] && mu[i] >= if i + 1 == k - 1 { lam[i + 1].abs() } else { lam[i + 1] })
    }
}

fn brute_gz(lam: &[i32], m: usize, classical: bool) -> u64 {
    if m <= 2 {
        return 1;
    }
    let len = (m - 1) / 2;
    let bound = lam.iter().map(|x| x.abs()).max().unwrap_or(0);
    let range: Vec<i32> = (-bound..=bound).collect();
    (0..len)
        .map(|_| range.iter().copied())
        .multi_cartesian_product()
        .filter(|mu| interleaves(lam, mu, m, classical))
        .map(|mu| brute_gz(&mu, m - 1, classical))
        .sum()
}

#[test]
fn branching_matches_brute_force_patterns() {
    for m in 3..=6 {
        let k = m / 2;
        let t = if m % 2 == 1 { AlgebraType::B } else { AlgebraType::D };
        let range: Vec<i32> = (-5..=5).collect();
        for lam in (0..k).map(|_| range.iter().copied()).multi_cartesian_product() {
            if !DominantWeight::new(lam.clone()).is_dominant(t) {
                continue;
            }
            let c = BranchLabel::classical(lam.clone());
            assert_eq!(gz_dimension(&c, m), brute_gz(&lam, m, true), "so_{m} {lam:?}");
            let nc = BranchLabel::nonclassical(lam.clone());
            if nc.is_valid(m) {
                assert_eq!(gz_dimension(&nc, m), brute_gz(&lam, m, false), "nonclassical so_{m} {lam:?}");
                assert!(branch(&nc, m).iter().all(|b| b.is_valid(m - 1)));
            }
        }
    }
}
