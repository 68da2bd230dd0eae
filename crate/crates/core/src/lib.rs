//! Exact spinor-representation engine for `U_q so_N`.
//!
//! Everything here is exact: scalars are reduced rational functions in a
//! formal variable `v` (with `q = v^2`) over the Gaussian rationals, and all
//! operators on tensor powers of the spinor module are sparse matrices of such
//! scalars. Heavy dimension counts run at seeded specialization points, either
//! Gaussian-rational or in a 64-bit prime field containing `i`.
//!
//! Module map:
//!
//! - [`ring`]: Gaussian rationals, a prime field, Laurent polynomials, rational
//!   functions, quantum integers and the `q -> -q^2` substitution.
//! - [`linalg`]: sparse matrices, Kronecker embeddings, rank, commutants,
//!   algebra closures and spectrum certificates.
//! - [`clifford`]: the q-Clifford operators acting on the basis `x(m)`.
//! - [`quantum_group`]: the spin representation of `U_q so_N`, its relation
//!   checker and iterated coproducts.
//! - [`intertwiner`]: the operators `C` commuting with the quantum group.
//! - [`coideal`]: the algebras `U'_q so_n`, explicit `so_3` modules,
//!   Temperley-Lieb generators and the duality representation.
//! - [`combinatorics`]: weights, tensor-power multiplicities, complements,
//!   branching and fusion truncation.
#![no_std]

extern crate alloc;

pub mod clifford;
pub mod coideal;
pub mod combinatorics;
pub mod error;
pub mod intertwiner;
pub mod linalg;
pub mod quantum_group;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
pub use linalg::SparseMatrix;
pub use ring::{Field, GaussRat, LaurentPoly, Scalar};
