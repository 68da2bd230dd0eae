//! Exact sparse linear algebra.
//!
//! Matrices are generic over [`Field`](crate::ring::Field): symbolic work uses
//! [`Scalar`](crate::ring::Scalar) entries, dimension counts on large tensor
//! powers run over [`GaussRat`](crate::ring::GaussRat) after specialization.

mod echelon;
mod matrix;
mod spaces;

pub use echelon::{nullspace, rank, EchelonBasis, SparseVec};
pub use matrix::{embed_factor, SparseMatrix};
pub use spaces::{
    algebra_closure_dim, commutant_dimension, specialize_all, specialize_all_mod, verify_spectrum,
    SpectrumReport,
};
