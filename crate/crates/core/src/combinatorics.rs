//! Weights, spinor tensor-power multiplicities, complements, branching and
//! fusion truncation. Every weight is stored doubled (`2λ_i`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Which symmetry the multiplicity table is taken for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraType {
    /// `so_{2k+1}`
    B,
    /// `so_{2k}`
    D,
    /// `so_{2k} ⋊ Z/2`: labels are pairs `{λ, λ̃}` stored with `λ_k ≥ 0`.
    ExtendedD,
}

impl AlgebraType {
    /// `B` for odd `N`, `ExtendedD` for even `N`.
    pub fn default_for(big_n: usize) -> Self {
        if big_n % 2 == 1 {
            AlgebraType::B
        } else {
            AlgebraType::ExtendedD
        }
    }
}

/// A dominant weight, doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    pub doubled: Vec<i32>,
}

impl DominantWeight {
    pub fn new(doubled: Vec<i32>) -> Self {
        DominantWeight { doubled }
    }

    pub fn zero(k: usize) -> Self {
        DominantWeight { doubled: vec![0; k] }
    }

    pub fn k(&self) -> usize {
        self.doubled.len()
    }

    /// `λ̃`: last entry negated.
    pub fn associate(&self) -> Self {
        let mut d = self.doubled.clone();
        if let Some(last) = d.last_mut() {
            *last = -*last;
        }
        DominantWeight { doubled: d }
    }

    fn parity_uniform(&self) -> bool {
        self.doubled.windows(2).all(|w| (w[0] - w[1]) % 2 == 0)
    }

    pub fn is_dominant(&self, t: AlgebraType) -> bool {
        let d = &self.doubled;
        if !self.parity_uniform() {
            return false;
        }
        let k = d.len();
        if k == 0 {
            return true;
        }
        let chain = d[..k - 1].windows(2).all(|w| w[0] >= w[1]);
        match t {
            AlgebraType::B => chain && (k < 2 || d[k - 2] >= d[k - 1]) && d[k - 1] >= 0,
            AlgebraType::D => chain && (k < 2 || d[k - 2] >= d[k - 1].abs()),
            AlgebraType::ExtendedD => chain && (k < 2 || d[k - 2] >= d[k - 1]) && d[k - 1] >= 0,
        }
    }
}

/// Doubled entries printed as halves, e.g. `3/2,1/2`.
pub fn format_doubled(d: &[i32]) -> alloc::string::String {
    let parts: Vec<_> = d
        .iter()
        .map(|&x| if x % 2 == 0 { format!("{}", x / 2) } else { format!("{x}/2") })
        .collect();
    parts.join(",")
}

/// Multiplicities of the simple summands of `S^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub big_n: usize,
    pub n: usize,
    pub algebra: AlgebraType,
    pub level: Option<u32>,
    pub entries: BTreeMap<DominantWeight, u64>,
}

impl MultiplicityTable {
    /// `S^{⊗0}`: the trivial module once.
    pub fn trivial(big_n: usize, algebra: AlgebraType, level: Option<u32>) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(DominantWeight::zero(big_n / 2), 1);
        MultiplicityTable { big_n, n: 0, algebra, level, entries }
    }

    pub fn k(&self) -> usize {
        self.big_n / 2
    }

    pub fn get(&self, w: &[i32]) -> u64 {
        self.entries.get(&DominantWeight::new(w.to_vec())).copied().unwrap_or(0)
    }

    /// `Σ_λ m_λ dim V_λ`.
    pub fn total_dimension(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(w, m)| label_dim(w, self.algebra) * BigInt::from(*m))
            .sum()
    }

    /// `Σ_λ m_λ²`.
    pub fn sum_of_squares(&self) -> u64 {
        self.entries.values().map(|m| m * m).sum()
    }
}

/// Whether `λ_1 + λ_2 + N − 2 ≤ ℓ`.
pub fn is_admissible(w: &DominantWeight, big_n: usize, level: u32) -> bool {
    let d1 = w.doubled.first().copied().unwrap_or(0);
    let d2 = w.doubled.get(1).copied().unwrap_or(0);
    d1 + d2 + 2 * (big_n as i32 - 2) <= 2 * level as i32
}

/// One step of `V_λ ⊗ S ≅ ⊕ V_{λ+ω}` over all `ω ∈ {±1/2}^k` with dominant sum.
///
/// For `ExtendedD` each folded label contributes through both members of its
/// pair and the results are folded back to `μ_k ≥ 0`. With a level, weights
/// that are not admissible are dropped.
pub fn tensor_with_spinor(table: &MultiplicityTable) -> MultiplicityTable {
    let k = table.k();
    let check = match table.algebra {
        AlgebraType::B => AlgebraType::B,
        AlgebraType::D | AlgebraType::ExtendedD => AlgebraType::D,
    };
    let mut out: BTreeMap<DominantWeight, u64> = BTreeMap::new();
    for (lam, &mult) in &table.entries {
        let mut members = vec![lam.clone()];
        if table.algebra == AlgebraType::ExtendedD && lam.doubled.last().is_some_and(|&x| x != 0) {
            members.push(lam.associate());
        }
        for nu in &members {
            for signs in 0u32..(1 << k) {
                let d: Vec<i32> = (0..k)
                    .map(|i| nu.doubled[i] + if signs >> (k - 1 - i) & 1 == 0 { 1 } else { -1 })
                    .collect();
                let mu = DominantWeight::new(d);
                if !mu.is_dominant(check) {
                    continue;
                }
                if table.algebra == AlgebraType::ExtendedD && mu.doubled[k - 1] < 0 {
                    continue;
                }
                if let Some(l) = table.level {
                    if !is_admissible(&mu, table.big_n, l) {
                        continue;
                    }
                }
                *out.entry(mu).or_insert(0) += mult;
            }
        }
    }
    MultiplicityTable { big_n: table.big_n, n: table.n + 1, algebra: table.algebra, level: table.level, entries: out }
}

/// The table of `S^{⊗n}` from `n` tensor steps.
pub fn tensor_power_table(big_n: usize, n: usize, algebra: AlgebraType, level: Option<u32>) -> Result<MultiplicityTable> {
    if big_n < 3 {
        return Err(Error::InvalidParameter(format!("N = {big_n} must be at least 3")));
    }
    if (big_n % 2 == 1) != (algebra == AlgebraType::B) {
        return Err(Error::InvalidParameter(format!("algebra {algebra:?} does not match N = {big_n}")));
    }
    let mut t = MultiplicityTable::trivial(big_n, algebra, level);
    for _ in 0..n {
        t = tensor_with_spinor(&t);
    }
    Ok(t)
}

/// Splits by whether `2λ_1 = n` (new) or not (old).
pub fn old_new_split(table: &MultiplicityTable) -> (MultiplicityTable, MultiplicityTable) {
    let (new, old): (BTreeMap<_, _>, BTreeMap<_, _>) = table
        .entries
        .iter()
        .map(|(w, m)| (w.clone(), *m))
        .partition(|(w, _)| w.doubled.first().copied().unwrap_or(0) == table.n as i32);
    let wrap = |entries| MultiplicityTable { entries, ..table.clone() };
    (wrap(old), wrap(new))
}

/// Weyl dimension of `so_{2k+1}` (`B`) or `so_{2k}` (`D`) for a doubled weight.
pub fn weyl_dim(w: &DominantWeight, t: AlgebraType) -> BigInt {
    let k = w.k() as i64;
    let (l, r): (Vec<i64>, Vec<i64>) = (1..=k)
        .map(|i| {
            let rho2 = match t {
                AlgebraType::B => 2 * (k - i) + 1,
                AlgebraType::D | AlgebraType::ExtendedD => 2 * (k - i),
            };
            (w.doubled[(i - 1) as usize] as i64 + rho2, rho2)
        })
        .unzip();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= BigInt::from(l[i] * l[i] - l[j] * l[j]);
            den *= BigInt::from(r[i] * r[i] - r[j] * r[j]);
        }
        if t == AlgebraType::B {
            num *= BigInt::from(l[i]);
            den *= BigInt::from(r[i]);
        }
    }
    let q = BigRational::new(num, den);
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Dimension of a table label: folded pairs count both members.
pub fn label_dim(w: &DominantWeight, t: AlgebraType) -> BigInt {
    match t {
        AlgebraType::ExtendedD if w.doubled.last().is_some_and(|&x| x != 0) => {
            weyl_dim(w, t) + weyl_dim(&w.associate(), t)
        }
        _ => weyl_dim(w, t),
    }
}

/// A label of `U'_q so_m` (doubled, `⌊m/2⌋` entries) with its series.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchLabel {
    pub doubled: Vec<i32>,
    pub classical: bool,
}

impl BranchLabel {
    pub fn classical(doubled: Vec<i32>) -> Self {
        BranchLabel { doubled, classical: true }
    }

    pub fn nonclassical(doubled: Vec<i32>) -> Self {
        BranchLabel { doubled, classical: false }
    }

    /// Whether this is a valid label for `U'_q so_m`.
    pub fn is_valid(&self, m: usize) -> bool {
        let d = &self.doubled;
        if d.len() != m / 2 {
            return false;
        }
        let Some(&last) = d.last() else {
            return true;
        };
        let t = if m % 2 == 1 { AlgebraType::B } else { AlgebraType::D };
        if !DominantWeight::new(d.clone()).is_dominant(t) {
            return false;
        }
        if self.classical {
            true
        } else {
            d[0] % 2 != 0 && last > 0
        }
    }
}

/// All `U'_q so_{m−1}` labels in the restriction of `μ` from `U'_q so_m`.
///
/// Interleaving is non-strict throughout; for odd `m` the last entry obeys
/// `λ_k ≥ |μ_k|` (classical) or `λ_k ≥ μ_k > 0` (nonclassical).
pub fn branch(mu: &BranchLabel, m: usize) -> Vec<BranchLabel> {
    if m <= 2 {
        return Vec::new();
    }
    let lam = &mu.doubled;
    let k = lam.len();
    // (low, high) bounds per entry, all in doubled units of the same parity
    let mut ranges: Vec<(i32, i32)> = Vec::new();
    if m % 2 == 1 {
        for i in 0..k - 1 {
            ranges.push((lam[i + 1], lam[i]));
        }
        let low = if mu.classical { -lam[k - 1] } else { 1 };
        ranges.push((low, lam[k - 1]));
    } else {
        for i in 0..k - 1 {
            let low = if i + 1 == k - 1 { lam[i + 1].abs() } else { lam[i + 1] };
            ranges.push((low, lam[i]));
        }
    }
    let mut out = vec![Vec::new()];
    for (lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            let mut x = lo;
            while x <= hi {
                let mut p: Vec<i32> = prefix.clone();
                p.push(x);
                next.push(p);
                x += 2;
            }
        }
        out = next;
    }
    out.into_iter().map(|d| BranchLabel { doubled: d, classical: mu.classical }).collect()
}

/// Number of complete branching chains down to `so_2`; each `so_2` label counts 1.
#[derive(Default)]
pub struct GzCounter {
    memo: BTreeMap<(usize, BranchLabel), u64>,
}

impl GzCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dimension(&mut self, mu: &BranchLabel, m: usize) -> u64 {
        if m <= 2 {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(m, mu.clone())) {
            return v;
        }
        let total = branch(mu, m).iter().map(|nu| self.dimension(nu, m - 1)).sum();
        self.memo.insert((m, mu.clone()), total);
        total
    }
}

/// One-shot [`GzCounter::dimension`].
pub fn gz_dimension(mu: &BranchLabel, m: usize) -> u64 {
    GzCounter::new().dimension(mu, m)
}

/// Column counts `t_j = #{i : n/2 − λ_i ≥ j}`, `1 ≤ j ≤ ⌊n/2⌋`, of the
/// complement of `λ` in the `k × n/2` rectangle.
fn complement_columns(w: &DominantWeight, n: usize) -> Result<Vec<i32>> {
    let n = n as i32;
    let mut cols = Vec::with_capacity((n / 2) as usize);
    for d in &w.doubled {
        if (n - d) % 2 != 0 || *d > n {
            return Err(Error::ParityMismatch);
        }
    }
    for j in 1..=n / 2 {
        cols.push(w.doubled.iter().filter(|&&d| n - d.abs() >= 2 * j).count() as i32);
    }
    Ok(cols)
}

/// The `U'_q so_n` label dual to `λ` in `S^{⊗n}`.
///
/// Odd `N`: `λ^c_j = t_j + 1/2` (nonclassical). Even `N` with folded labels:
/// `λ^c_j = t_j` (classical); when `λ_k = 0` the second dual label is the
/// associate of `λ^c`.
pub fn complement(w: &DominantWeight, big_n: usize, n: usize) -> Result<BranchLabel> {
    if let Some(&d1) = w.doubled.first() {
        if d1 > n as i32 {
            return Err(Error::InvalidParameter(format!("2λ_1 = {d1} exceeds n = {n}")));
        }
    }
    let cols = complement_columns(w, n)?;
    if big_n % 2 == 1 {
        Ok(BranchLabel::nonclassical(cols.iter().map(|t| 2 * t + 1).collect()))
    } else {
        Ok(BranchLabel::classical(cols.iter().map(|t| 2 * t).collect()))
    }
}

/// Recovers `λ` from `λ^c` by reading rows of the conjugate diagram.
pub fn complement_inverse(c: &BranchLabel, big_n: usize, n: usize) -> DominantWeight {
    let k = big_n / 2;
    let cols: Vec<i32> = c
        .doubled
        .iter()
        .map(|&x| if big_n % 2 == 1 { (x - 1) / 2 } else { x.abs() / 2 })
        .collect();
    let d = (1..=k as i32)
        .rev()
        .map(|i| n as i32 - 2 * cols.iter().filter(|&&t| t >= i).count() as i32)
        .collect();
    DominantWeight::new(d)
}

/// Expected multiplicity of `λ` in `S^{⊗n}` from its dual label(s).
pub fn dual_multiplicity(w: &DominantWeight, big_n: usize, n: usize, gz: &mut GzCounter) -> Result<u64> {
    let c = complement(w, big_n, n)?;
    let one = gz.dimension(&c, n);
    let paired = big_n.is_multiple_of(2) && w.doubled.last() == Some(&0) && n.is_multiple_of(2);
    // a folded label with λ_k = 0 stands for two O(N)-type modules, dual to λ^c and its associate
    Ok(if paired { one + gz.dimension(&associate_label(&c), n) } else { one })
}

fn associate_label(c: &BranchLabel) -> BranchLabel {
    let mut d = c.doubled.clone();
    if let Some(last) = d.last_mut() {
        *last = -*last;
    }
    BranchLabel { doubled: d, classical: c.classical }
}

/// Result of [`verify_duality`].
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub table: MultiplicityTable,
    /// `(λ, m_λ, expected from the dual label)` where they differ.
    pub mismatches: Vec<(DominantWeight, u64, u64)>,
    pub total_dimension: BigInt,
    pub expected_dimension: BigInt,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.total_dimension == self.expected_dimension
    }
}

/// Checks `m_λ = dim W_{λ^c}` for every `λ` in `S^{⊗n}` and `Σ m_λ dim V_λ = 2^{kn}`.
pub fn verify_duality(big_n: usize, n: usize) -> Result<DualityReport> {
    let table = tensor_power_table(big_n, n, AlgebraType::default_for(big_n), None)?;
    let mut gz = GzCounter::new();
    let mut mismatches = Vec::new();
    for (w, &m) in &table.entries {
        let e = dual_multiplicity(w, big_n, n, &mut gz)?;
        if e != m {
            mismatches.push((w.clone(), m, e));
        }
    }
    let total_dimension = table.total_dimension();
    let expected_dimension = BigInt::from(2u32).pow((big_n / 2 * n) as u32);
    Ok(DualityReport { table, mismatches, total_dimension, expected_dimension })
}

/// Dimension of the `O(n)` module with Young diagram given by column lengths.
pub fn orthogonal_group_dim(columns: &[i32], n: usize) -> BigInt {
    let first = columns.first().copied().unwrap_or(0);
    let mut cols = columns.to_vec();
    if 2 * first > n as i32 {
        // the associate diagram has n − r boxes in its first column
        cols[0] = n as i32 - first;
    }
    let r = cols.first().copied().unwrap_or(0);
    let half = n / 2;
    let rows: Vec<i32> = (1..=half as i32).map(|i| cols.iter().filter(|&&c| c >= i).count() as i32).collect();
    let t = if n % 2 == 1 { AlgebraType::B } else { AlgebraType::D };
    let d = weyl_dim(&DominantWeight::new(rows.iter().map(|x| 2 * x).collect()), t);
    if n.is_multiple_of(2) && 2 * r == n as i32 && r > 0 {
        d * 2
    } else {
        d
    }
}

/// Multiplicity of an `so_{2k}` weight in `S^{⊗n}` read off the `O(n)` diagram
/// whose `j`-th column has `n/2 − λ_{k+1−j}` boxes.
pub fn unfolded_d_dual_dim(w: &DominantWeight, n: usize) -> BigInt {
    let k = w.k();
    let cols: Vec<i32> = (1..=k).map(|j| (n as i32 - w.doubled[k - j]) / 2).collect();
    orthogonal_group_dim(&cols, n)
}

/// The largest multiplicity in a table, for reporting.
pub fn max_multiplicity(t: &MultiplicityTable) -> u64 {
    t.entries.values().copied().max().unwrap_or(0)
}

/// `weyl_dim` as a machine integer when it fits.
pub fn weyl_dim_u64(w: &DominantWeight, t: AlgebraType) -> Option<u64> {
    weyl_dim(w, t).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: &[i32]) -> DominantWeight {
        DominantWeight::new(d.to_vec())
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(&w(&[1, 1]), AlgebraType::B), BigInt::from(4));
        assert_eq!(weyl_dim(&w(&[2, 0]), AlgebraType::B), BigInt::from(5));
        assert_eq!(weyl_dim(&w(&[2, 2]), AlgebraType::B), BigInt::from(10));
        assert_eq!(weyl_dim(&w(&[0, 0]), AlgebraType::B), BigInt::from(1));
        assert_eq!(weyl_dim(&w(&[2, 0, 0]), AlgebraType::D), BigInt::from(6));
        assert_eq!(weyl_dim(&w(&[1, 1, 1]), AlgebraType::D), BigInt::from(4));
        assert_eq!(weyl_dim(&w(&[1, 1, -1]), AlgebraType::D), BigInt::from(4));
        assert_eq!(weyl_dim(&w(&[4]), AlgebraType::B), BigInt::from(5));
        assert_eq!(weyl_dim(&w(&[6]), AlgebraType::D), BigInt::from(1));
    }

    #[test]
    fn tensor_steps_for_so5() {
        let t1 = tensor_power_table(5, 1, AlgebraType::B, None).unwrap();
        assert_eq!(t1.entries.len(), 1);
        assert_eq!(t1.get(&[1, 1]), 1);
        let t2 = tensor_with_spinor(&t1);
        assert_eq!(t2.entries.len(), 3);
        assert_eq!((t2.get(&[2, 2]), t2.get(&[2, 0]), t2.get(&[0, 0])), (1, 1, 1));
        assert_eq!(t2.total_dimension(), BigInt::from(16));
    }

    #[test]
    fn dimension_is_conserved() {
        for big_n in 3..=8 {
            let algs: &[AlgebraType] =
                if big_n % 2 == 1 { &[AlgebraType::B] } else { &[AlgebraType::D, AlgebraType::ExtendedD] };
            for &a in algs {
                let mut t = MultiplicityTable::trivial(big_n, a, None);
                for n in 1..=6 {
                    t = tensor_with_spinor(&t);
                    let expect = BigInt::from(2u32).pow((big_n / 2 * n) as u32);
                    assert_eq!(t.total_dimension(), expect, "N={big_n} {a:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn split_by_first_entry() {
        let t1 = tensor_power_table(5, 1, AlgebraType::B, None).unwrap();
        let (old, new) = old_new_split(&t1);
        assert!(old.entries.is_empty());
        assert_eq!(new.entries.len(), 1);
        let t2 = tensor_with_spinor(&t1);
        let (old, new) = old_new_split(&t2);
        assert_eq!(old.entries.keys().cloned().collect::<Vec<_>>(), vec![w(&[0, 0])]);
        assert_eq!(new.entries.len(), 2);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&w(&[0]), 3, 2).unwrap(), BranchLabel::nonclassical(vec![3]));
        assert_eq!(complement(&w(&[2]), 3, 2).unwrap(), BranchLabel::nonclassical(vec![1]));
        assert!(complement(&w(&[1]), 3, 2).is_err());
        for big_n in [3, 4, 5, 6] {
            for n in 1..=5 {
                let t = tensor_power_table(big_n, n, AlgebraType::default_for(big_n), None).unwrap();
                for lam in t.entries.keys() {
                    let c = complement(lam, big_n, n).unwrap();
                    assert!(c.is_valid(n), "N={big_n} n={n} {lam:?} -> {c:?}");
                    assert_eq!(&complement_inverse(&c, big_n, n), lam);
                }
            }
        }
    }

    #[test]
    fn branching_examples() {
        let mu = BranchLabel::nonclassical(vec![3, 1]);
        let b = branch(&mu, 4);
        assert_eq!(b, vec![BranchLabel::nonclassical(vec![1]), BranchLabel::nonclassical(vec![3])]);
        let b = branch(&BranchLabel::nonclassical(vec![3]), 3);
        assert_eq!(b, vec![BranchLabel::nonclassical(vec![1]), BranchLabel::nonclassical(vec![3])]);
        assert_eq!(branch(&BranchLabel::classical(vec![0]), 3), vec![BranchLabel::classical(vec![0])]);
    }

    #[test]
    fn gz_dimension_examples() {
        assert_eq!(gz_dimension(&BranchLabel::classical(vec![6]), 2), 1);
        for j in 0..5 {
            assert_eq!(gz_dimension(&BranchLabel::classical(vec![2 * j]), 3), (2 * j + 1) as u64);
        }
        for m in 2..=7 {
            let ones = BranchLabel::nonclassical(vec![1; m / 2]);
            assert_eq!(gz_dimension(&ones, m), 1, "so_{m}");
        }
    }

    #[test]
    fn gz_matches_weyl_for_classical_labels() {
        for m in 3..=7 {
            let t = if m % 2 == 1 { AlgebraType::B } else { AlgebraType::D };
            let k = m / 2;
            let labels = tensor_power_table(m, 4, if m % 2 == 1 { AlgebraType::B } else { AlgebraType::D }, None).unwrap();
            for lam in labels.entries.keys() {
                let c = BranchLabel::classical(lam.doubled.clone());
                assert_eq!(BigInt::from(gz_dimension(&c, m)), weyl_dim(lam, t), "so_{m} {lam:?}");
                if lam.doubled[0] % 2 != 0 && lam.doubled[k - 1] > 0 {
                    let nc = BranchLabel::nonclassical(lam.doubled.clone());
                    let scale = if m % 2 == 1 { 1u64 << k } else { 1u64 << (k - 1) };
                    assert_eq!(BigInt::from(gz_dimension(&nc, m) * scale), weyl_dim(lam, t), "nonclassical so_{m} {lam:?}");
                }
            }
        }
    }

    #[test]
    fn duality_small_cases() {
        for (big_n, top) in [(3, 6), (5, 5), (4, 5), (6, 4), (7, 3)] {
            for n in 1..=top {
                let r = verify_duality(big_n, n).unwrap();
                assert!(r.holds(), "N={big_n} n={n}: {:?}", r.mismatches);
            }
        }
    }

    #[test]
    fn unfolded_d_matches_orthogonal_group() {
        for (big_n, top) in [(4, 5), (6, 4)] {
            for n in 1..=top {
                let t = tensor_power_table(big_n, n, AlgebraType::D, None).unwrap();
                for (lam, &m) in &t.entries {
                    assert_eq!(unfolded_d_dual_dim(lam, n), BigInt::from(m), "N={big_n} n={n} {lam:?}");
                }
            }
        }
    }

    #[test]
    fn fusion_truncation() {
        let t = tensor_power_table(5, 2, AlgebraType::B, Some(5)).unwrap();
        assert!(t.entries.keys().all(|x| is_admissible(x, 5, 5)));
        assert!(!is_admissible(&w(&[4, 2]), 5, 5));
        for level in [5, 7, 9] {
            for n in 1..=6 {
                let f = tensor_power_table(5, n, AlgebraType::B, Some(level)).unwrap();
                let g = tensor_power_table(5, n, AlgebraType::B, None).unwrap();
                for (lam, &m) in &f.entries {
                    assert!(m <= g.get(&lam.doubled));
                }
                if level as usize >= n + 3 {
                    assert_eq!(f.entries, g.entries, "level {level} n={n}");
                }
            }
        }
    }
}
