//! Biderivations of a Lie algebra.
//!
//! A bilinear map `B: L × L → L` is stored as the tuple `(B_1, …, B_n)` of
//! n×n matrices with `(B_k)_{ij} = b_ij^k`, the `e_k` coordinate of
//! `B(e_i, e_j)`. It is a biderivation when, for all `x, y, z`,
//!
//! ```text
//! (1) B([x,y], z) = [x, B(y,z)] + [B(x,z), y]
//! (2) B(x, [y,z]) = [B(x,y), z] + [y, B(x,z)]
//! ```
//!
//! Flattened tuples index the unknown `b_ij^k` at `k·n² + i·n + j`.
//!
//! Two independent routes decide membership: [`assemble_constraints`] /
//! [`biderivation_space`] solve the linear system in the `b_ij^k`, while
//! [`is_biderivation`] expands both conditions triple by triple with the
//! algebra's bracket.

mod closure;
mod phipsi;
mod twostep;

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

pub use closure::{bider_bracket_closure, BracketClosure};
pub use phipsi::{biderivation_from_phi, extract_phi_psi, PhiPsiPair};
pub use twostep::{two_step_properties, TwoStepFailure, TwoStepReport};

use crate::derivations;
use crate::error::BiderivationError;
use crate::exactla::{self, accumulate, Matrix, SparseRow, Subspace};
use crate::liealg::LieAlgebra;
use crate::rational::{self, Rational};

/// A candidate bilinear map `(B_1, …, B_n)`. Whether it is a biderivation is
/// decided by [`is_biderivation`], not by the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biderivation {
    mats: Vec<Matrix>,
}

impl Biderivation {
    /// Requires `n` square matrices of size n.
    pub fn new(mats: Vec<Matrix>) -> Result<Self, BiderivationError> {
        let n = mats.len();
        for m in &mats {
            if m.rows() != n || m.cols() != n {
                return Err(BiderivationError::DimMismatch {
                    expected: n,
                    found: if m.rows() != n { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(Self { mats })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            mats: alloc::vec![Matrix::zeros(n, n); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// `B(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> Vec<Rational> {
        self.mats.iter().map(|m| m[(i, j)].clone()).collect()
    }

    /// `B(x, y)`, coordinate `k` being `xᵀ B_k y`.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.mats
            .iter()
            .map(|m| {
                m.mul_vec(y)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn from_flat(n: usize, v: &[Rational]) -> Self {
        assert_eq!(v.len(), n * n * n, "flattened biderivation has n³ entries");
        Self {
            mats: v.chunks(n * n).map(|c| Matrix::from_entries(n, n, c.to_vec())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            mats: self.mats.iter().map(|m| m.scale(factor)).collect(),
        }
    }

    pub fn transpose_arguments(&self) -> Self {
        Self {
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.mats.iter().all(Matrix::is_symmetric)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.mats.iter().all(Matrix::is_skew_symmetric)
    }

    /// `([A_1, B_1], …, [A_n, B_n])`, the bracket of `M_n(Q)^n`.
    pub fn componentwise_commutator(&self, other: &Self) -> Self {
        Self {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.commutator(b))
                .collect(),
        }
    }
}

/// First failing instance of condition (1) or (2), in `(condition, i, j, k)`
/// lexicographic order. `residual` is left side minus right side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "condition ({}) fails at basis triple ({i},{j},{k}); residual (", self.condition)?;
        for (idx, v) in self.residual.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Checks both defining conditions on all basis triples by direct expansion
/// and reports the first failure.
pub fn is_biderivation(alg: &LieAlgebra, cand: &Biderivation) -> Result<(), Violation> {
    let n = alg.dim();
    assert_eq!(cand.dim(), n, "candidate size must match the algebra");
    let value: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|i| (0..n).map(|j| cand.value(i, j)).collect())
        .collect();
    // acc -= [e_a, v]; acc += [e_b, w]
    let subtract_brackets = |acc: &mut Vec<Rational>, a: usize, v: &[Rational], b: usize, w: &[Rational]| {
        for (x, y) in acc.iter_mut().zip(alg.bracket_basis_with(a, v)) {
            *x -= y;
        }
        for (x, y) in acc.iter_mut().zip(alg.bracket_basis_with(b, w)) {
            *x += y;
        }
    };

    for condition in [1u8, 2] {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut residual = rational::zeros(n);
                    if condition == 1 {
                        // B([e_i,e_j], e_k) - [e_i, B(e_j,e_k)] - [B(e_i,e_k), e_j]
                        for (t, c) in alg.basis_bracket(i, j) {
                            for (x, y) in residual.iter_mut().zip(&value[*t][k]) {
                                *x += c * y;
                            }
                        }
                        subtract_brackets(&mut residual, i, &value[j][k], j, &value[i][k]);
                    } else {
                        // B(e_i, [e_j,e_k]) - [B(e_i,e_j), e_k] - [e_j, B(e_i,e_k)]
                        for (t, c) in alg.basis_bracket(j, k) {
                            for (x, y) in residual.iter_mut().zip(&value[i][*t]) {
                                *x += c * y;
                            }
                        }
                        subtract_brackets(&mut residual, j, &value[i][k], k, &value[i][j]);
                    }
                    if residual.iter().any(|v| !v.is_zero()) {
                        return Err(Violation {
                            condition,
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn var(n: usize, i: usize, j: usize, k: usize) -> usize {
    k * n * n + i * n + j
}

/// The linear constraint rows in the unknowns `b_ij^k`, in the fixed order
/// condition (1) then (2), each over `(i, j, k, r)` lexicographically.
/// Zero and repeated rows are kept so row positions stay meaningful.
pub(crate) fn constraint_rows(alg: &LieAlgebra) -> impl Iterator<Item = SparseRow> + '_ {
    let n = alg.dim();
    let c = move |i: usize, j: usize, r: usize| alg.structure_constant(i, j, r);
    let row_a = move |i: usize, j: usize, k: usize, r: usize| {
        // Σ_t c_ij^t b_tk^r - Σ_t (c_it^r b_jk^t + c_tj^r b_ik^t)
        let mut terms = Vec::new();
        for (t, cij) in alg.basis_bracket(i, j) {
            terms.push((var(n, *t, k, r), cij.clone()));
        }
        for t in 0..n {
            let a = c(i, t, r);
            if !a.is_zero() {
                terms.push((var(n, j, k, t), -a));
            }
            let b = c(t, j, r);
            if !b.is_zero() {
                terms.push((var(n, i, k, t), -b));
            }
        }
        accumulate(terms)
    };
    let row_b = move |i: usize, j: usize, k: usize, r: usize| {
        // Σ_t c_jk^t b_it^r - Σ_t (c_tk^r b_ij^t + c_jt^r b_ik^t)
        let mut terms = Vec::new();
        for (t, cjk) in alg.basis_bracket(j, k) {
            terms.push((var(n, i, *t, r), cjk.clone()));
        }
        for t in 0..n {
            let a = c(t, k, r);
            if !a.is_zero() {
                terms.push((var(n, i, j, t), -a));
            }
            let b = c(j, t, r);
            if !b.is_zero() {
                terms.push((var(n, i, k, t), -b));
            }
        }
        accumulate(terms)
    };
    let quads = move || {
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |r| (i, j, k, r))))
        })
    };
    quads()
        .map(move |(i, j, k, r)| row_a(i, j, k, r))
        .chain(quads().map(move |(i, j, k, r)| row_b(i, j, k, r)))
}

/// Dense `2n⁴ × n³` constraint matrix whose kernel is `F(BiDer(L))`.
pub fn assemble_constraints(alg: &LieAlgebra) -> Matrix {
    let n = alg.dim();
    let cols = n * n * n;
    let rows = 2 * n * n * n * n;
    let mut m = Matrix::zeros(rows, cols);
    for (r, row) in constraint_rows(alg).enumerate() {
        for (c, v) in row {
            m[(r, c)] = v;
        }
    }
    m
}

/// `F(BiDer(L))` inside `Q^{n³}`, together with the algebra size for reshaping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiderivationSpace {
    algebra_dim: usize,
    space: Subspace,
}

impl BiderivationSpace {
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    /// Canonical basis reshaped to matrix tuples.
    pub fn basis(&self) -> Vec<Biderivation> {
        self.space
            .basis()
            .iter()
            .map(|v| Biderivation::from_flat(self.algebra_dim, v))
            .collect()
    }

    pub fn contains(&self, b: &Biderivation) -> bool {
        b.dim() == self.algebra_dim && self.space.contains(&b.flatten())
    }

    pub fn coordinates(&self, b: &Biderivation) -> Option<Vec<Rational>> {
        self.space.coordinates(&b.flatten())
    }
}

fn checked_space(alg: &LieAlgebra, space: Subspace) -> BiderivationSpace {
    let out = BiderivationSpace {
        algebra_dim: alg.dim(),
        space,
    };
    for (idx, b) in out.basis().iter().enumerate() {
        if let Err(v) = is_biderivation(alg, b) {
            panic!("kernel basis element {idx} is not a biderivation: {v}");
        }
    }
    out
}

/// `BiDer(L)`; every basis element is re-checked with [`is_biderivation`].
pub fn biderivation_space(alg: &LieAlgebra) -> BiderivationSpace {
    let n = alg.dim();
    let space = exactla::kernel_of_rows(n * n * n, constraint_rows(alg));
    checked_space(alg, space)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `B(x, y) = B(y, x)`
    Symmetric,
    /// `B(x, y) = -B(y, x)`
    Skew,
}

/// Symmetric or skew-symmetric biderivations: the constraint system plus
/// `b_ij^k ∓ b_ji^k = 0` for all `i, j, k`.
pub fn constrained_biderivation_space(alg: &LieAlgebra, mode: Symmetry) -> BiderivationSpace {
    let n = alg.dim();
    let sign = match mode {
        Symmetry::Symmetric => -rational::one(),
        Symmetry::Skew => rational::one(),
    };
    let symmetry_rows = (0..n).flat_map(move |k| {
        let sign = sign.clone();
        (0..n).flat_map(move |i| {
            let sign = sign.clone();
            (0..n).map(move |j| accumulate([(var(n, i, j, k), rational::one()), (var(n, j, i, k), sign.clone())]))
        })
    });
    let space = exactla::kernel_of_rows(n * n * n, constraint_rows(alg).chain(symmetry_rows));
    checked_space(alg, space)
}

/// Scalars `λ_1, …, λ_t`, one per factor of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarTuple(pub Vec<Rational>);

/// `B(x_1+…+x_t, y_1+…+y_t) = Σ λ_i [x_i, y_i]`, i.e. `B_k = λ_{f(k)} A_k`
/// where `f(k)` is the factor containing index `k`.
pub fn inner_biderivation(alg: &LieAlgebra, lambdas: &ScalarTuple) -> Result<Biderivation, BiderivationError> {
    let sizes = alg.factor_sizes();
    if lambdas.0.len() != sizes.len() {
        return Err(BiderivationError::FactorMismatch {
            expected: sizes.len(),
            found: lambdas.0.len(),
        });
    }
    let factor = alg.factor_of_index();
    let a = alg.structure_matrices();
    let mats = a
        .matrices()
        .iter()
        .enumerate()
        .map(|(k, m)| m.scale(&lambdas.0[factor[k]]))
        .collect();
    Ok(Biderivation { mats })
}

/// The derivations `B(e_i, -)` (rows) and `B(-, e_i)` (columns) of a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowColumnDerivations {
    /// k-th row is the i-th row of `B_k`: the matrix of `B(e_i, -)`.
    pub rowmap: Matrix,
    /// k-th row is the i-th column of `B_k`: the matrix of `B(-, e_i)`.
    pub colmap: Matrix,
    pub both_derivations: bool,
}

pub fn row_column_derivations(alg: &LieAlgebra, b: &Biderivation, i: usize) -> RowColumnDerivations {
    let (rowmap, colmap) = row_column_maps(b, i);
    let der = derivations::derivation_space(alg);
    let both_derivations = der.contains(&derivations::flatten_map(&rowmap))
        && der.contains(&derivations::flatten_map(&colmap));
    RowColumnDerivations {
        rowmap,
        colmap,
        both_derivations,
    }
}

pub(crate) fn row_column_maps(b: &Biderivation, i: usize) -> (Matrix, Matrix) {
    let n = b.dim();
    let mut rowmap = Matrix::zeros(n, n);
    let mut colmap = Matrix::zeros(n, n);
    for (k, m) in b.mats.iter().enumerate() {
        for j in 0..n {
            rowmap[(k, j)] = m[(i, j)].clone();
            colmap[(k, j)] = m[(j, i)].clone();
        }
    }
    (rowmap, colmap)
}

/// `(B⁺, B⁻)` with `B⁺(x,y) = B(x,y) + B(y,x)` and `B⁻(x,y) = B(x,y) - B(y,x)`,
/// so that `B = ½B⁺ + ½B⁻`.
pub fn symmetric_skew_split(b: &Biderivation) -> (Biderivation, Biderivation) {
    let t = b.transpose_arguments();
    let plus = Biderivation {
        mats: b.mats.iter().zip(&t.mats).map(|(m, mt)| m.add(mt)).collect(),
    };
    let minus = Biderivation {
        mats: b.mats.iter().zip(&t.mats).map(|(m, mt)| m.sub(mt)).collect(),
    };
    (plus, minus)
}
