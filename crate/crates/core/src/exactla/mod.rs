//! Exact dense linear algebra over the rationals.

mod echelon;
mod matrix;
mod subspace;

use alloc::vec::Vec;

pub use echelon::{determinant, rref, rref_sparse, Rref};
pub(crate) use echelon::{Echelon, SparseRow};
pub use matrix::Matrix;
pub use subspace::{Subspace, SubspaceRelation};

use crate::error::LinAlgError;
use crate::rational::Rational;

/// Canonical basis of `{v : Mv = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.push_dense(m.row(i));
    }
    kernel_of(&e)
}

/// Kernel of an accumulated system: the free-variable vectors, re-canonicalized.
pub(crate) fn kernel_of(e: &Echelon) -> Subspace {
    Subspace::span(e.cols(), e.kernel_vectors())
}

/// Kernel of a system given as a stream of sparse rows over `cols` unknowns.
pub(crate) fn kernel_of_rows(cols: usize, rows: impl IntoIterator<Item = SparseRow>) -> Subspace {
    let mut e = Echelon::new(cols);
    for row in rows {
        if !row.is_empty() {
            e.push(row.iter().map(|(c, v)| (*c, v)));
        }
    }
    kernel_of(&e)
}

/// Collects `(column, coefficient)` terms into a sparse row, summing repeated
/// columns and dropping zeros.
pub(crate) fn accumulate(terms: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut acc: alloc::collections::BTreeMap<usize, Rational> = alloc::collections::BTreeMap::new();
    for (c, v) in terms {
        *acc.entry(c).or_insert_with(num_traits::Zero::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !num_traits::Zero::is_zero(v)).collect()
}

/// One exact solution of `Mx = b` (free variables set to zero).
pub fn solve_linear(m: &Matrix, b: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
    if b.len() != m.rows() {
        return Err(LinAlgError::ShapeMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let cols = m.cols();
    let mut e = Echelon::new(cols + 1);
    for (i, rhs) in b.iter().enumerate() {
        let row = m.row(i).iter().enumerate().chain(core::iter::once((cols, rhs)));
        e.push(row);
    }
    e.particular_solution().ok_or(LinAlgError::NoSolution)
}
