//! Tables behind `spindual table`.

use num_traits::ToPrimitive;
use serde::Serialize;
use spindual_core::combinatorics::{
    complement, dual_multiplicity, label_dim, tensor_power_table, AlgebraType, GzCounter,
};
use spindual_core::intertwiner::{build_c_classical, build_c_quantum, classical_eigenvalues, quantum_eigenvalues};
use spindual_core::linalg::verify_spectrum;
use spindual_core::ring::PointSampler;
use spindual_core::{GaussRat, Scalar};

use crate::config::{ConfigError, QMode, RunConfig, TableKind};

/// Serialized table; the layout of `entries` is stable across versions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    /// Doubled highest weight.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<String>,
    pub multiplicity: u64,
    /// Doubled label of the dual coideal module.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<i32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u128>,
}

fn too_large(what: &str) -> ConfigError {
    ConfigError::Unsupported(format!("{what} does not fit in 128 bits"))
}

pub fn build_table(kind: TableKind, cfg: &RunConfig) -> Result<Table, anyhow::Error> {
    cfg.validate()?;
    cfg.require_big_n(kind.name(), 3)?;
    let mut t = Table {
        big_n: cfg.big_n,
        n: cfg.n,
        mode: kind.name(),
        level: None,
        q: None,
        seed: None,
        point: None,
        entries: Vec::new(),
    };
    match kind {
        TableKind::Multiplicities | TableKind::Complements => {
            let alg = AlgebraType::default_for(cfg.big_n);
            let level = if kind == TableKind::Multiplicities { cfg.level } else { None };
            t.level = level;
            let table = tensor_power_table(cfg.big_n, cfg.n, alg, level)?;
            let mut gz = GzCounter::new();
            for (w, &m) in &table.entries {
                let c = complement(w, cfg.big_n, cfg.n)?;
                let dimension = if kind == TableKind::Multiplicities {
                    label_dim(w, alg).to_u128().ok_or_else(|| too_large("dimension"))?
                } else {
                    dual_multiplicity(w, cfg.big_n, cfg.n, &mut gz)? as u128
                };
                t.entries.push(TableEntry {
                    weight: Some(w.doubled.clone()),
                    eigenvalue: None,
                    multiplicity: m,
                    complement: Some(c.doubled),
                    dimension: Some(dimension),
                });
            }
        }
        TableKind::Spectrum => {
            t.q = Some(cfg.q_mode.to_string());
            let pairs: Vec<(String, usize)> = match cfg.q_mode {
                QMode::One => {
                    let c = build_c_classical(cfg.big_n, cfg.sign)?.specialize(&GaussRat::from_int(1))?;
                    let cands: Vec<GaussRat> = classical_eigenvalues(cfg.big_n).into_iter().map(|p| p.0).collect();
                    verify_spectrum(&c, &cands).pairs.into_iter().map(|(e, m)| (e.to_string(), m)).collect()
                }
                QMode::Sym => {
                    let c = build_c_quantum(cfg.big_n)?;
                    let rep = verify_spectrum(&c, &quantum_eigenvalues(cfg.big_n));
                    rep.pairs.into_iter().map(|(e, m)| (e.to_string(), m)).collect()
                }
                QMode::Spec => {
                    let c = build_c_quantum(cfg.big_n)?;
                    let cands = quantum_eigenvalues(cfg.big_n);
                    let mut sampler = PointSampler::new(cfg.seed);
                    let (v0, cs, vals) = loop {
                        let v0 = sampler.next_point();
                        let cs = c.specialize(&v0);
                        let vals: Result<Vec<GaussRat>, _> = cands.iter().map(|s: &Scalar| s.specialize(&v0)).collect();
                        if let (Ok(cs), Ok(vals)) = (cs, vals) {
                            break (v0, cs, vals);
                        }
                    };
                    t.seed = Some(cfg.seed);
                    t.point = Some(format!("v0 = {v0}"));
                    verify_spectrum(&cs, &vals).pairs.into_iter().map(|(e, m)| (e.to_string(), m)).collect()
                }
            };
            t.entries = pairs
                .into_iter()
                .map(|(e, m)| TableEntry {
                    weight: None,
                    eigenvalue: Some(e),
                    multiplicity: m as u64,
                    complement: None,
                    dimension: None,
                })
                .collect();
        }
    }
    Ok(t)
}
