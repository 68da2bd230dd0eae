//! Centralizer dimension counts on `S^{⊗n}`.

use spindual_core::clifford::CliffordContext;
use spindual_core::combinatorics::{tensor_power_table, AlgebraType, MultiplicityTable};
use spindual_core::intertwiner::{build_c_quantum, IntertwinerSet};
use spindual_core::linalg::{algebra_closure_dim, commutant_dimension, embed_factor, specialize_all_mod};
use spindual_core::quantum_group::{hayashi_rep, tensor_power};
use spindual_core::ring::{ModP, PointSampler};
use spindual_core::{Field, Scalar, SparseMatrix};

use crate::config::{QMode, RunConfig};

/// One closure computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureCount {
    pub seed: Option<u64>,
    pub point: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FftCount {
    pub big_n: usize,
    pub n: usize,
    /// Whether `F = f_N ⊗ 1` was adjoined (even `N`).
    pub with_f: bool,
    /// `dim` of the algebra generated by the `C_i` (and `F`).
    pub closure: Vec<ClosureCount>,
    /// `Σ m_λ²` over the matching decomposition of `S^{⊗n}`.
    pub sum_of_squares: u64,
    /// Centralizer of the quantum group, for small `n`.
    pub commutant: Option<usize>,
    /// Even `N`: closure of the `C_i` alone against `Σ m²` over
    /// `so_{2k} ⋊ Z/2` modules.
    pub without_f: Option<(usize, u64)>,
}

impl FftCount {
    pub fn closure_matches(&self) -> bool {
        !self.closure.is_empty() && self.closure.iter().all(|c| c.dim as u64 == self.sum_of_squares)
    }

    pub fn commutant_matches(&self) -> Option<bool> {
        self.commutant.map(|c| c as u64 == self.sum_of_squares)
    }

    pub fn without_f_matches(&self) -> Option<bool> {
        self.without_f.map(|(c, s)| c as u64 == s)
    }

    pub fn holds(&self) -> bool {
        self.closure_matches() && self.commutant_matches() != Some(false) && self.without_f_matches() != Some(false)
    }
}

/// `Σ m²` for `so_{2k} ⋊ Z/2`: a folded label with `λ_k = 0` stands for two
/// modules sharing its multiplicity equally.
pub fn extended_sum_of_squares(folded: &MultiplicityTable) -> u64 {
    folded
        .entries
        .iter()
        .map(|(w, &m)| if w.doubled.last() == Some(&0) && folded.n > 0 { m * m / 2 } else { m * m })
        .sum()
}

fn generators(cfg: &RunConfig, with_f: bool) -> anyhow::Result<Vec<SparseMatrix<Scalar>>> {
    let set = IntertwinerSet::new(cfg.big_n, cfg.n, build_c_quantum(cfg.big_n)?)?;
    let mut gens = set.c_i;
    if with_f {
        let ctx = CliffordContext::new(cfg.big_n)?;
        gens.push(embed_factor(&ctx.f_r(cfg.big_n)?, 1, cfg.n, ctx.dim())?);
    }
    Ok(gens)
}

fn closure_at<T: Field>(gens: &[SparseMatrix<T>], d: usize) -> usize {
    if gens.is_empty() {
        // n = 1: the unital algebra generated by nothing
        return if d > 0 { 1 } else { 0 };
    }
    algebra_closure_dim(gens)
}

fn quantum_commutant_sym(cfg: &RunConfig) -> anyhow::Result<usize> {
    let imgs = tensor_power(&hayashi_rep(cfg.big_n)?.images, cfg.n);
    let gens: Vec<_> = imgs.commutation_set().into_iter().map(|(_, m)| m.clone()).collect();
    Ok(commutant_dimension(&gens, imgs.dim()))
}

fn quantum_commutant_mod(cfg: &RunConfig, v0: ModP) -> anyhow::Result<usize> {
    let base = hayashi_rep(cfg.big_n)?.images.try_map(|m| m.specialize_mod(v0))?;
    let imgs = tensor_power(&base, cfg.n);
    let gens: Vec<_> = imgs.commutation_set().into_iter().map(|(_, m)| m.clone()).collect();
    Ok(commutant_dimension(&gens, imgs.dim()))
}

/// Closure dimensions at each seed, the `Σ m²` target and, for `n ≤ 3`,
/// the commutant of the quantum group.
///
/// Specialized points are residues modulo [`ModP::P`]; symbolic mode is
/// exact over rational functions and meant for small cases.
pub fn fft_count(cfg: &RunConfig, seeds: &[u64]) -> anyhow::Result<FftCount> {
    let odd = cfg.big_n % 2 == 1;
    let with_f = !odd;
    let target_alg = if odd { AlgebraType::B } else { AlgebraType::D };
    let sum_of_squares = tensor_power_table(cfg.big_n, cfg.n, target_alg, None)?.sum_of_squares();
    let gens = generators(cfg, with_f)?;
    let d = cfg.space_dim();
    let n_c = cfg.n - 1;
    let small = cfg.n <= 3;
    let mut closure = Vec::new();
    let mut commutant = None;
    let mut without_f = None;
    let extended = if with_f {
        Some(extended_sum_of_squares(&tensor_power_table(cfg.big_n, cfg.n, AlgebraType::ExtendedD, None)?))
    } else {
        None
    };
    match cfg.q_mode {
        QMode::Sym => {
            closure.push(ClosureCount { seed: None, point: "v".into(), dim: closure_at(&gens, d) });
            if let Some(e) = extended {
                without_f = Some((closure_at(&gens[..n_c], d), e));
            }
            if small {
                commutant = Some(quantum_commutant_sym(cfg)?);
            }
        }
        QMode::Spec | QMode::One => {
            for (idx, &seed) in seeds.iter().enumerate() {
                let mut sampler = PointSampler::new(seed);
                let (v0, sp) = specialize_all_mod(&gens, &mut sampler);
                closure.push(ClosureCount { seed: Some(seed), point: format!("v0 = {} mod p", v0.value()), dim: closure_at(&sp, d) });
                if idx == 0 {
                    if let Some(e) = extended {
                        without_f = Some((closure_at(&sp[..n_c], d), e));
                    }
                    if small {
                        commutant = Some(quantum_commutant_mod(cfg, v0)?);
                    }
                }
            }
        }
    }
    Ok(FftCount { big_n: cfg.big_n, n: cfg.n, with_f, closure, sum_of_squares, commutant, without_f })
}
