//! Verification suites behind `spindual verify`.

use std::time::{Duration, Instant};

use serde::Serialize;
use spindual_core::coideal::{
    check_coideal_relations, so3_classical_rep, so3_nonclassical_rep, tl_homomorphism_check, twist_so3,
};
use spindual_core::combinatorics::verify_duality;
use spindual_core::intertwiner::{
    build_c_classical, build_c_quantum, check_commutation, check_commutation_with, check_cubic,
    classical_eigenvalues, cubic_coefficient, integrality_check, quantum_eigenvalues, IntertwinerSet,
};
use spindual_core::linalg::{commutant_dimension, verify_spectrum};
use spindual_core::quantum_group::{check_defining_relations, check_symbolic, hayashi_rep, tensor_power};
use spindual_core::report::ResidualReport;
use spindual_core::ring::{PointSampler, QParam};
use spindual_core::{Field, GaussRat, Scalar};

use crate::config::{ConfigError, QMode, RunConfig, Suite};
use crate::fft::fft_count;

/// Largest `S^{⊗n}` on which iterated-coproduct checks run symbolically.
const TENSOR_CHECK_DIM: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub suite: &'static str,
    pub label: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub q: String,
    pub seed: Option<u64>,
    /// Specialization points actually used, in order.
    pub points: Vec<String>,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("computation failed: {0}")]
    Engine(#[from] spindual_core::Error),
    #[error("{0}")]
    Other(#[from] anyhow::Error),
}

struct Run<'a> {
    cfg: &'a RunConfig,
    suite: &'static str,
    sampler: PointSampler,
    points: Vec<String>,
    checks: Vec<CheckLine>,
}

impl<'a> Run<'a> {
    fn new(cfg: &'a RunConfig, suite: &'static str) -> Self {
        Run { cfg, suite, sampler: PointSampler::new(cfg.seed), points: Vec::new(), checks: Vec::new() }
    }

    fn check<F>(&mut self, label: impl Into<String>, f: F) -> Result<(), SuiteError>
    where
        F: FnOnce(&mut Self) -> Result<(bool, String), SuiteError>,
    {
        let t0 = Instant::now();
        let (pass, detail) = f(self)?;
        let line = CheckLine { suite: self.suite, label: label.into(), pass, detail, elapsed: t0.elapsed() };
        self.checks.push(line);
        Ok(())
    }

    fn residuals(&mut self, label: impl Into<String>, r: ResidualReport, elapsed: Duration) {
        let bad: Vec<_> = r.failures().map(|f| f.label.clone()).collect();
        let detail = if bad.is_empty() {
            format!("{} residuals vanish", r.len())
        } else {
            format!("{} of {} residuals nonzero: {}", bad.len(), r.len(), bad.iter().take(4).cloned().collect::<Vec<_>>().join("; "))
        };
        self.checks.push(CheckLine { suite: self.suite, label: label.into(), pass: bad.is_empty(), detail, elapsed });
    }

    /// Draws a point at which every scalar in `probe` is finite.
    fn point(&mut self, probe: &[Scalar]) -> GaussRat {
        loop {
            let v0 = self.sampler.next_point();
            if probe.iter().all(|s| s.specialize(&v0).is_ok()) {
                self.points.push(format!("v0 = {v0}"));
                return v0;
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            big_n: self.cfg.big_n,
            n: self.cfg.n,
            q: self.cfg.q_mode.to_string(),
            seed: (self.cfg.q_mode == QMode::Spec || !self.points.is_empty()).then_some(self.cfg.seed),
            points: self.points,
            checks: self.checks,
        }
    }
}

fn vpow(v0: &GaussRat) -> impl Fn(i32) -> GaussRat + '_ {
    move |e| v0.pow(e as i64).expect("specialization points are nonzero")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t0 = Instant::now();
    let out = f();
    (out, t0.elapsed())
}

/// Runs one suite (or all of them) for `cfg`.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Vec<SuiteReport>, SuiteError> {
    cfg.validate()?;
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            let mut c = cfg.clone();
            // suites with a single supported mode run in it
            c.q_mode = match (s, cfg.q_mode) {
                (Suite::Tl | Suite::Integrality | Suite::Duality | Suite::So3, _) => QMode::Sym,
                (Suite::Relations | Suite::Commutation | Suite::Fft, QMode::One) => QMode::Spec,
                (_, q) => q,
            };
            if s == Suite::Fft && c.q_mode == QMode::Sym && !(cfg.big_n == 3 && cfg.n <= 3) {
                c.q_mode = QMode::Spec;
            }
            if s == Suite::Tl && cfg.n < 2 {
                continue;
            }
            out.extend(run_suite(s, &c)?);
        }
        return Ok(out);
    }
    let name = suite.name();
    let mut run = Run::new(cfg, name);
    match suite {
        Suite::Relations => relations(&mut run)?,
        Suite::Commutation => commutation(&mut run)?,
        Suite::Cubic => cubic(&mut run)?,
        Suite::Spectrum => spectrum(&mut run)?,
        Suite::Duality => duality(&mut run)?,
        Suite::Fft => fft(&mut run)?,
        Suite::Tl => tl(&mut run)?,
        Suite::So3 => so3(&mut run)?,
        Suite::Integrality => integrality(&mut run)?,
        Suite::All => unreachable!(),
    }
    Ok(vec![run.finish()])
}

fn relations(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_q("relations", &[QMode::Sym, QMode::Spec])?;
    cfg.require_big_n("relations", 3)?;
    let rep = hayashi_rep(cfg.big_n)?;
    let big_n = cfg.big_n;
    let powers: Vec<usize> = if cfg.n >= 2 && cfg.space_dim() <= TENSOR_CHECK_DIM { vec![1, cfg.n] } else { vec![1] };
    match cfg.q_mode {
        QMode::Sym => {
            for p in powers {
                let imgs = tensor_power(&rep.images, p);
                let (r, t) = timed(|| check_symbolic(&imgs));
                run.residuals(format!("U_q so_{big_n} relations on S^{p}"), r, t);
            }
        }
        _ => {
            let v0 = run.point(&[]);
            let base = rep.images.specialize(&v0)?;
            for p in powers {
                let imgs = tensor_power(&base, p);
                let (r, t) = timed(|| check_defining_relations(&imgs, vpow(&v0)));
                run.residuals(format!("U_q so_{big_n} relations on S^{p} at v0"), r, t);
            }
        }
    }
    Ok(())
}

fn commutation(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_q("commutation", &[QMode::Sym, QMode::Spec])?;
    cfg.require_big_n("commutation", 3)?;
    let big_n = cfg.big_n;
    let images = hayashi_rep(big_n)?.images;
    let c = build_c_quantum(big_n)?;
    let deep = cfg.n >= 3 && cfg.space_dim() <= TENSOR_CHECK_DIM;
    match cfg.q_mode {
        QMode::Sym => {
            let (r, t) = timed(|| check_commutation(&images, &c));
            run.residuals(format!("[Delta(g), C] on S^2, N={big_n}"), r, t);
            if deep {
                let set = IntertwinerSet::new(big_n, cfg.n, c)?;
                let imgs = tensor_power(&images, cfg.n);
                let (r, t) = timed(|| check_commutation_with(&imgs, &set.c_i));
                run.residuals(format!("[Delta^(n)(g), C_i] on S^{}", cfg.n), r, t);
            }
        }
        _ => {
            let probe: Vec<Scalar> = c.entries().map(|e| e.2.clone()).collect();
            let v0 = run.point(&probe);
            let imgs = images.specialize(&v0)?;
            let cs = c.specialize(&v0)?;
            let (r, t) = timed(|| check_commutation(&imgs, &cs));
            run.residuals(format!("[Delta(g), C] on S^2 at v0, N={big_n}"), r, t);
            if deep {
                let set = IntertwinerSet::new(big_n, cfg.n, cs)?;
                let imgs = tensor_power(&imgs, cfg.n);
                let (r, t) = timed(|| check_commutation_with(&imgs, &set.c_i));
                run.residuals(format!("[Delta^(n)(g), C_i] on S^{} at v0", cfg.n), r, t);
            }
        }
    }
    Ok(())
}

fn cubic(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_big_n("cubic", 3)?;
    let big_n = cfg.big_n;
    let d = 1usize << cfg.k();
    match cfg.q_mode {
        QMode::Sym => {
            let c = build_c_quantum(big_n)?;
            let (r, t) = timed(|| check_cubic(&c, d, &cubic_coefficient()));
            run.residuals(format!("cubic relation on S^3, N={big_n}"), r?, t);
        }
        QMode::Spec => {
            let c = build_c_quantum(big_n)?;
            let probe: Vec<Scalar> = c.entries().map(|e| e.2.clone()).collect();
            let v0 = run.point(&probe);
            let cs = c.specialize(&v0)?;
            let coeff = cubic_coefficient().specialize(&v0)?;
            let (r, t) = timed(|| check_cubic(&cs, d, &coeff));
            run.residuals(format!("cubic relation on S^3 at v0, N={big_n}"), r?, t);
        }
        QMode::One => {
            let c = build_c_classical(big_n, cfg.sign)?.specialize(&GaussRat::from_int(1))?;
            let (r, t) = timed(|| check_cubic(&c, d, &GaussRat::from_int(2)));
            run.residuals(format!("cubic relation on S^3 at q=1, N={big_n}, sign {}", cfg.sign), r?, t);
        }
    }
    Ok(())
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn spectrum(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_big_n("spectrum", 3)?;
    let big_n = cfg.big_n;
    let dim = 1usize << (2 * cfg.k());
    match cfg.q_mode {
        QMode::One => {
            let sign = cfg.sign;
            run.check(format!("spectrum of C at q=1, N={big_n}, sign {sign}"), |_| {
                let c = build_c_classical(big_n, sign)?.specialize(&GaussRat::from_int(1))?;
                let expected = classical_eigenvalues(big_n);
                let cands: Vec<GaussRat> = expected.iter().map(|p| p.0.clone()).collect();
                let rep = verify_spectrum(&c, &cands);
                let mults_ok = expected.iter().all(|(e, m)| rep.multiplicity(e) == *m);
                let shown: Vec<String> = rep.pairs.iter().map(|(e, m)| format!("{e}:{m}")).collect();
                Ok((rep.verified && mults_ok && rep.dim == dim, shown.join(", ")))
            })?;
        }
        QMode::Sym => {
            run.check(format!("spectrum of C, N={big_n}"), |_| {
                let c = build_c_quantum(big_n)?;
                let rep = verify_spectrum(&c, &quantum_eigenvalues(big_n));
                let mults: Vec<usize> = rep.pairs.iter().map(|p| p.1).collect();
                let expect: Vec<usize> = (0..rep.pairs.len()).map(|j| binomial(big_n, j)).collect();
                Ok((rep.verified && mults == expect, format!("multiplicities {mults:?}")))
            })?;
        }
        QMode::Spec => {
            let c = build_c_quantum(big_n)?;
            let cands = quantum_eigenvalues(big_n);
            let mut probe: Vec<Scalar> = c.entries().map(|e| e.2.clone()).collect();
            probe.extend(cands.iter().cloned());
            let v0 = run.point(&probe);
            run.check(format!("spectrum of C at v0, N={big_n}"), |_| {
                let cs = c.specialize(&v0)?;
                let cands: Vec<GaussRat> = cands.iter().map(|s| s.specialize(&v0)).collect::<Result<_, _>>()?;
                let rep = verify_spectrum(&cs, &cands);
                let mults: Vec<usize> = rep.pairs.iter().map(|p| p.1).collect();
                let expect: Vec<usize> = (0..rep.pairs.len()).map(|j| binomial(big_n, j)).collect();
                Ok((rep.verified && mults == expect, format!("multiplicities {mults:?}")))
            })?;
        }
    }
    Ok(())
}

fn duality(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_big_n("duality", 3)?;
    let (big_n, n) = (cfg.big_n, cfg.n);
    run.check(format!("m_lambda = dim W_(lambda^c), N={big_n}, n={n}"), |_| {
        let r = verify_duality(big_n, n)?;
        let detail = format!(
            "{} labels, {} mismatches, total dimension {} (expected {})",
            r.table.entries.len(),
            r.mismatches.len(),
            r.total_dimension,
            r.expected_dimension
        );
        Ok((r.holds(), detail))
    })
}

fn fft(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_q("fft", &[QMode::Sym, QMode::Spec])?;
    cfg.require_big_n("fft", 3)?;
    if cfg.q_mode == QMode::Sym && !(cfg.big_n == 3 && cfg.n <= 3) {
        return Err(ConfigError::Unsupported("symbolic fft counts are limited to N = 3, n <= 3".into()).into());
    }
    let seeds = [cfg.seed];
    let t0 = Instant::now();
    let f = fft_count(cfg, &seeds)?;
    let elapsed = t0.elapsed();
    run.points.extend(f.closure.iter().map(|c| c.point.clone()));
    let gens = if f.with_f { "C_i and F" } else { "C_i" };
    for c in &f.closure {
        run.checks.push(CheckLine {
            suite: run.suite,
            label: format!("closure of {gens} = sum m^2, N={}, n={}", f.big_n, f.n),
            pass: c.dim as u64 == f.sum_of_squares,
            detail: format!("closure {} at {}, sum m^2 {}", c.dim, c.point, f.sum_of_squares),
            elapsed,
        });
    }
    if let Some(c) = f.commutant {
        run.checks.push(CheckLine {
            suite: run.suite,
            label: format!("commutant of U_q so_{} = sum m^2, n={}", f.big_n, f.n),
            pass: c as u64 == f.sum_of_squares,
            detail: format!("commutant {c}, sum m^2 {}", f.sum_of_squares),
            elapsed: Duration::ZERO,
        });
    }
    if let Some((c, s)) = f.without_f {
        run.checks.push(CheckLine {
            suite: run.suite,
            label: format!("closure of C_i = extended sum m^2, N={}, n={}", f.big_n, f.n),
            pass: c as u64 == s,
            detail: format!("closure {c}, sum m^2 {s}"),
            elapsed: Duration::ZERO,
        });
    }
    Ok(())
}

fn tl(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_q("tl", &[QMode::Sym])?;
    if cfg.n < 2 {
        return Err(ConfigError::Unsupported("tl needs n >= 2".into()).into());
    }
    let n = cfg.n;
    let (r, t) = timed(|| tl_homomorphism_check(n));
    let r = r?;
    run.residuals(format!("Temperley-Lieb relations, n={n}"), r.tl_relations.clone(), t);
    run.residuals(format!("B_i = [2]^-1 - [2] e_i satisfy U'_(-q^2) so_{n}"), r.coideal_relations.clone(), Duration::ZERO);
    if n >= 3 {
        let two = Scalar::q().plus(&Scalar::q_pow(-1));
        let expect = two.times(&two).inv().expect("[2] is nonzero");
        let shown = r.measured_c.as_ref().map_or("inconsistent".to_string(), |c| c.to_string());
        run.checks.push(CheckLine {
            suite: run.suite,
            label: format!("e_i e_(i+-1) e_i = c e_i with c = [2]^-2, n={n}"),
            pass: r.measured_c.as_ref() == Some(&expect),
            detail: format!("measured c = {shown}"),
            elapsed: Duration::ZERO,
        });
    }
    Ok(())
}

fn so3(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_q("so3", &[QMode::Sym])?;
    let qp = QParam::generic();
    for np in 1..=cfg.big_n {
        let rep = so3_classical_rep(np, &qp)?;
        let (r, t) = timed(|| check_coideal_relations(&rep));
        run.residuals(format!("classical so3 module, Nparam={np}"), r, t);
        let tw = twist_so3(&rep);
        let (r, t) = timed(|| check_coideal_relations(&tw));
        run.residuals(format!("twisted so3 module at -q, Nparam={np}"), r, t);
        let probe: Vec<Scalar> = tw.b.iter().flat_map(|m| m.entries().map(|e| e.2.clone()).collect::<Vec<_>>()).collect();
        let v0 = run.point(&probe);
        let expect = if np % 2 == 0 { 1 } else { 2 };
        run.check(format!("twisted commutant dimension, Nparam={np}"), |_| {
            let s = tw.specialize(&v0)?;
            let c = commutant_dimension(&s.b, s.dim());
            Ok((c == expect, format!("{c} (expected {expect})")))
        })?;
        if np % 2 == 1 {
            for sign in [1i8, -1] {
                let rep = so3_nonclassical_rep(np, &qp, sign)?;
                let (r, t) = timed(|| check_coideal_relations(&rep));
                run.residuals(format!("nonclassical so3 module, Nparam={np}, sign {sign}"), r, t);
            }
        }
    }
    Ok(())
}

fn integrality(run: &mut Run) -> Result<(), SuiteError> {
    let cfg = run.cfg;
    cfg.require_q("integrality", &[QMode::Sym])?;
    cfg.require_big_n("integrality", 3)?;
    let big_n = cfg.big_n;
    let c = build_c_quantum(big_n)?;
    if big_n.is_multiple_of(2) {
        run.check(format!("C over Z[i][v, v^-1], N={big_n}"), |_| Ok((integrality_check(&c, 0), String::new())))
    } else {
        let max = big_n as u32;
        run.check(format!("[2]^a C over Z[i][v, v^-1], N={big_n}"), |_| {
            let least = (0..=max).find(|&a| integrality_check(&c, a));
            Ok((least.is_some(), least.map_or("no power up to N".into(), |a| format!("a = {a} suffices"))))
        })
    }
}
