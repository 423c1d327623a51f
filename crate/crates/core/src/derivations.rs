//! Derivations, inner derivations, completeness and (skew-)commuting maps.
//!
//! A linear map `D` is stored as an n×n [`Matrix`] whose column `j` is
//! `D(e_j)`. Wherever maps are collected into a [`Subspace`], the matrix is
//! flattened row-major: entry `(r, c)` sits at index `r * n + c`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::BiderivationError;
use crate::exactla::{self, accumulate, Matrix, SparseRow, Subspace, SubspaceRelation};
use crate::liealg::LieAlgebra;
use crate::rational::Rational;

pub fn flatten_map(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

pub fn unflatten_map(n: usize, v: &[Rational]) -> Matrix {
    Matrix::from_entries(n, n, v.to_vec())
}

/// Direct check of `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
pub fn is_derivation(alg: &LieAlgebra, d: &Matrix) -> bool {
    let n = alg.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j)));
            let a = alg.bracket(&images[i], &alg.basis_vector(j));
            let b = alg.bracket(&alg.basis_vector(i), &images[j]);
            if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                return false;
            }
        }
    }
    true
}

/// `Der(L)` as a subspace of flattened n×n matrices.
pub fn derivation_space(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<SparseRow> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for r in 0..n {
                // Σ_t c_ij^t D[r][t] - Σ_t c_tj^r D[t][i] - Σ_t c_it^r D[t][j]
                let mut terms = Vec::new();
                for (t, c) in alg.basis_bracket(i, j) {
                    terms.push((var(r, *t), c.clone()));
                }
                for t in 0..n {
                    let a = alg.structure_constant(t, j, r);
                    if !a.is_zero() {
                        terms.push((var(t, i), -a));
                    }
                    let b = alg.structure_constant(i, t, r);
                    if !b.is_zero() {
                        terms.push((var(t, j), -b));
                    }
                }
                rows.push(accumulate(terms));
            }
        }
    }
    exactla::kernel_of_rows(n * n, rows)
}

/// `ad(L)`, the span of the `ad e_i`.
pub fn inner_derivation_space(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    Subspace::span(
        n * n,
        (0..n).map(|i| flatten_map(&alg.adjoint_matrix(&alg.basis_vector(i)))),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Completeness {
    pub complete: bool,
    pub center_dim: usize,
    pub der_dim: usize,
    pub inner_dim: usize,
}

/// Complete means `Z(L) = 0` and `Der(L) = ad(L)`. Equality is decided on the
/// subspaces themselves, not only on their dimensions.
pub fn is_complete(alg: &LieAlgebra) -> Completeness {
    let center_dim = alg.center().dim();
    let der = derivation_space(alg);
    let inner = inner_derivation_space(alg);
    let equal = der.compare(&inner).expect("same ambient dimension") == SubspaceRelation::Equal;
    Completeness {
        complete: center_dim == 0 && equal,
        center_dim,
        der_dim: der.dim(),
        inner_dim: inner.dim(),
    }
}

/// Rows of `[f e_i, e_j] + sign·[e_i, f e_j] = 0` over the pairs `i ≤ j`
/// (the form is symmetric for `sign = -1` and antisymmetric for `sign = +1`,
/// so these pairs determine it).
fn commuting_rows(alg: &LieAlgebra, sign: i64) -> Vec<SparseRow> {
    let n = alg.dim();
    let var = |r: usize, c: usize| r * n + c;
    let sign = Rational::from_integer(sign.into());
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            for r in 0..n {
                let mut terms = Vec::new();
                for t in 0..n {
                    let a = alg.structure_constant(t, j, r);
                    if !a.is_zero() {
                        terms.push((var(t, i), a));
                    }
                    let b = alg.structure_constant(i, t, r);
                    if !b.is_zero() {
                        terms.push((var(t, j), &sign * b));
                    }
                }
                rows.push(accumulate(terms));
            }
        }
    }
    rows
}

/// Linear maps with `[f(x), y] = [x, f(y)]` for all `x, y`.
///
/// Over a field of characteristic 0 this is equivalent to `[x, f(x)] = 0`.
/// The diagonal pairs `x = y = e_i` contribute `2[f(e_i), e_i] = 0` and are
/// part of the system.
pub fn commuting_map_space(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    exactla::kernel_of_rows(n * n, commuting_rows(alg, -1))
}

/// Linear maps with `[f(x), y] = -[x, f(y)]` for all `x, y`.
pub fn skew_commuting_map_space(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    exactla::kernel_of_rows(n * n, commuting_rows(alg, 1))
}

/// The unique `u` with `ad_u = D` on a centerless algebra.
pub fn ad_preimage(alg: &LieAlgebra, d: &Matrix) -> Result<Vec<Rational>, BiderivationError> {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return Err(BiderivationError::DimMismatch { expected: n, found: d.rows() });
    }
    let center_dim = alg.center().dim();
    if center_dim != 0 {
        return Err(BiderivationError::CenterNonzero { center_dim });
    }
    // (ad u)_{kj} = Σ_i u_i c_ij^k; unknowns u_i, one row per entry (k, j).
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.basis_bracket(i, j) {
                system[(k * n + j, i)] = c.clone();
            }
        }
    }
    exactla::solve_linear(&system, d.entries()).map_err(|_| BiderivationError::NotInner)
}
