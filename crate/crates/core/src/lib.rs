//! Exact computations for derivations and biderivations of finite-dimensional
//! Lie algebras given by rational structure constants.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over the
//! rationals with arbitrary precision, so every dimension and membership
//! statement it reports is exact.
//!
//! Module map:
//!
//! * [`exactla`]: rational matrices, reduced echelon forms, kernels and a
//!   canonical [`Subspace`] type.
//! * [`liealg`]: [`LieAlgebra`] tables, brackets, center, lower central
//!   series, Killing form, direct sums and a small catalog.
//! * [`derivations`]: `Der(L)`, `ad(L)`, completeness and (skew-)commuting maps.
//! * [`biderivations`]: the biderivation solver and everything built on it.
//! * [`vdecomp`]: the matrix spaces `V`, `V+`, `V-` attached to the structure
//!   matrices.

#![no_std]

extern crate alloc;

pub mod biderivations;
pub mod derivations;
mod error;
pub mod exactla;
pub mod liealg;
pub mod rational;
pub mod vdecomp;

pub use biderivations::{Biderivation, BiderivationSpace, PhiPsiPair, ScalarTuple, Symmetry};
pub use error::{AlgebraError, BiderivationError, LinAlgError};
pub use exactla::{Matrix, Subspace, SubspaceRelation};
pub use liealg::{LieAlgebra, StructureMatrices};
pub use rational::Rational;
