//! Residual bookkeeping for relation checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::SparseMatrix;
use crate::ring::Field;

/// One evaluated identity: the number of nonzero entries of `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub label: String,
    pub nonzero_entries: usize,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.nonzero_entries == 0
    }
}

/// Collection of residuals from a relation checker.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResidualReport {
    pub entries: Vec<Residual>,
}

impl ResidualReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `m`, which should be the zero matrix.
    pub fn record<T: Field>(&mut self, label: impl Into<String>, m: &SparseMatrix<T>) {
        self.entries.push(Residual { label: label.into(), nonzero_entries: m.nnz() });
    }

    /// Records a boolean identity as a residual of size 0 or 1.
    pub fn record_bool(&mut self, label: impl Into<String>, holds: bool) {
        self.entries.push(Residual { label: label.into(), nonzero_entries: usize::from(!holds) });
    }

    pub fn merge(&mut self, other: ResidualReport) {
        self.entries.extend(other.entries);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Residual::is_zero)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Residual> {
        self.entries.iter().filter(|r| !r.is_zero())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for ResidualReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad = self.failures().count();
        write!(f, "{} identities, {} nonzero", self.entries.len(), bad)?;
        for r in self.failures() {
            write!(f, "\n  {}: {} nonzero entries", r.label, r.nonzero_entries)?;
        }
        Ok(())
    }
}
