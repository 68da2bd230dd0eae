//! The q-Clifford operators on the spinor module `S`.
//!
//! `S` has basis `x(m)` for bit vectors `m ∈ {0,1}^k`, `k = ⌊N/2⌋`, stored at
//! position `Σ m_j 2^{k-j}` (so `m_1` is the most significant bit).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::ring::Scalar;

/// Whether operators carry the formal `q` or are taken at `q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deformation {
    Generic,
    Classical,
}

/// A bit vector `m` labelling the basis vector `x(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinIndex {
    bits: u32,
    k: usize,
}

impl SpinIndex {
    pub fn new(bits: u32, k: usize) -> Self {
        assert!(k < 32 && (bits >> k) == 0, "bit mask {bits:#b} exceeds {k} bits");
        SpinIndex { bits, k }
    }

    pub fn from_bits(m: &[u8]) -> Self {
        let bits = m.iter().fold(0u32, |acc, &b| (acc << 1) | u32::from(b & 1));
        SpinIndex::new(bits, m.len())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Position of `x(m)` in the basis.
    pub fn position(&self) -> usize {
        self.bits as usize
    }

    /// `m_j` for `1 ≤ j ≤ k`.
    pub fn bit(&self, j: usize) -> u32 {
        (self.bits >> (self.k - j)) & 1
    }

    /// `m{r} = m_1 + … + m_r`.
    pub fn prefix(&self, r: usize) -> u32 {
        if r == 0 {
            return 0;
        }
        (self.bits >> (self.k - r)).count_ones()
    }

    /// `m̄^j`: the vector with the `j`-th bit flipped.
    pub fn flip(&self, j: usize) -> Self {
        SpinIndex { bits: self.bits ^ (1 << (self.k - j)), k: self.k }
    }

    pub fn all(k: usize) -> impl Iterator<Item = SpinIndex> {
        (0..1u32 << k).map(move |b| SpinIndex::new(b, k))
    }
}

/// `N`, the derived `k`, the sign `ε` used for `e_{2k+1}` when `N` is odd,
/// and the deformation mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliffordContext {
    n: usize,
    k: usize,
    sign: i8,
    deformation: Deformation,
}

impl CliffordContext {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(alloc::format!("N = {n} must be at least 2")));
        }
        Ok(CliffordContext { n, k: n / 2, sign: 1, deformation: Deformation::Generic })
    }

    pub fn classical(n: usize) -> Result<Self> {
        Ok(Self::new(n)?.with_deformation(Deformation::Classical))
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = if sign < 0 { -1 } else { 1 };
        self
    }

    pub fn with_deformation(mut self, d: Deformation) -> Self {
        self.deformation = d;
        self
    }

    pub fn big_n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn deformation(&self) -> Deformation {
        self.deformation
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn is_classical(&self) -> bool {
        self.deformation == Deformation::Classical
    }

    /// `dim S = 2^k`
    pub fn dim(&self) -> usize {
        1 << self.k
    }

    pub fn indices(&self) -> impl Iterator<Item = SpinIndex> {
        SpinIndex::all(self.k)
    }

    fn check_j(&self, j: usize) -> Result<()> {
        if j < 1 || j > self.k {
            return Err(Error::IndexOutOfRange { index: j, min: 1, max: self.k });
        }
        Ok(())
    }

    /// `q^e`, or `1` in the classical mode.
    pub fn q_pow(&self, e: i32) -> Scalar {
        match self.deformation {
            Deformation::Generic => Scalar::q_pow(e),
            Deformation::Classical => Scalar::from_int(1),
        }
    }

    /// `v^e = q^{e/2}`, or `1` in the classical mode.
    pub fn v_pow(&self, e: i32) -> Scalar {
        match self.deformation {
            Deformation::Generic => Scalar::v_pow(e),
            Deformation::Classical => Scalar::from_int(1),
        }
    }

    fn diagonal<F: Fn(SpinIndex) -> Scalar>(&self, f: F) -> SparseMatrix<Scalar> {
        SparseMatrix::from_diagonal(self.indices().map(f))
    }

    pub fn identity(&self) -> SparseMatrix<Scalar> {
        SparseMatrix::identity(self.dim())
    }

    /// `ψ†_j x(m) = (−1)^{m{j−1}} x(m̄^j)` if `m_j = 0`, else `0`.
    pub fn psi_dagger(&self, j: usize) -> Result<SparseMatrix<Scalar>> {
        self.check_j(j)?;
        let trip = self.indices().filter(|m| m.bit(j) == 0).map(|m| {
            let sign = if m.prefix(j - 1) % 2 == 0 { 1 } else { -1 };
            (m.flip(j).position(), m.position(), Scalar::from_int(sign))
        });
        Ok(SparseMatrix::from_triplets(self.dim(), self.dim(), trip))
    }

    /// `ψ_j`, the adjoint of `ψ†_j`.
    pub fn psi(&self, j: usize) -> Result<SparseMatrix<Scalar>> {
        Ok(self.psi_dagger(j)?.transpose())
    }

    /// `ω_j^{±1}`: diagonal `q^{∓m_j}`.
    pub fn omega(&self, j: usize, exponent: i32) -> Result<SparseMatrix<Scalar>> {
        self.check_j(j)?;
        Ok(self.diagonal(|m| self.q_pow(-exponent * m.bit(j) as i32)))
    }

    /// `Ω_r^{±1} = ∏_{j ≤ r} ω_j^{±2}`: diagonal `q^{∓2 m{r}}`.
    pub fn big_omega(&self, r: usize, exponent: i32) -> Result<SparseMatrix<Scalar>> {
        if r > self.k {
            return Err(Error::IndexOutOfRange { index: r, min: 0, max: self.k });
        }
        Ok(self.diagonal(|m| self.q_pow(-2 * exponent * m.prefix(r) as i32)))
    }

    /// `f_r = (−i)^{r(r−1)/2} e_1 ⋯ e_r`.
    ///
    /// For `r = 2s` this is the diagonal `(−1)^{m{s}}`; odd `r` needs the
    /// classical generators and is rejected for generic `q`.
    pub fn f_r(&self, r: usize) -> Result<SparseMatrix<Scalar>> {
        if r < 1 || r > self.n {
            return Err(Error::IndexOutOfRange { index: r, min: 1, max: self.n });
        }
        if r.is_multiple_of(2) {
            let s = r / 2;
            return Ok(self.diagonal(|m| Scalar::from_int(if m.prefix(s) % 2 == 0 { 1 } else { -1 })));
        }
        if !self.is_classical() {
            return Err(Error::OddCliffordProduct(r));
        }
        self.f_r_from_generators(r)
    }

    /// `f_r` evaluated literally as a product of the `e_i` (classical only).
    pub fn f_r_from_generators(&self, r: usize) -> Result<SparseMatrix<Scalar>> {
        let mut acc = self.identity();
        for i in 1..=r {
            acc = acc.mul(&self.e_i(i)?);
        }
        // (−i)^{r(r−1)/2}
        let phase = match (r * (r - 1) / 2) % 4 {
            0 => Scalar::from_int(1),
            1 => -Scalar::i(),
            2 => Scalar::from_int(-1),
            _ => Scalar::i(),
        };
        Ok(acc.scale(&phase))
    }

    /// Classical generators: `e_{2j−1} = ψ_j + ψ†_j`, `e_{2j} = −i(ψ_j − ψ†_j)`,
    /// and `e_{2k+1} = ε f_{2k}` for odd `N`.
    pub fn e_i(&self, i: usize) -> Result<SparseMatrix<Scalar>> {
        if !self.is_classical() {
            return Err(Error::RequiresClassical);
        }
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: self.n });
        }
        if i == 2 * self.k + 1 {
            return Ok(self.f_r(2 * self.k)?.scale(&Scalar::from_int(self.sign as i64)));
        }
        let j = i.div_ceil(2);
        let (p, pd) = (self.psi(j)?, self.psi_dagger(j)?);
        if i % 2 == 1 {
            Ok(p.add(&pd))
        } else {
            Ok(p.sub(&pd).scale(&-Scalar::i()))
        }
    }

    /// All classical generators `e_1, …, e_N`.
    pub fn all_e(&self) -> Result<Vec<SparseMatrix<Scalar>>> {
        (1..=self.n).map(|i| self.e_i(i)).collect()
    }
}
