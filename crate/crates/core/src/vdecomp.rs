//! The matrix spaces
//!
//! ```text
//! V  = { M : ∃ Q with M A_i = A_i Q for all i }
//! V⁺ = { M ∈ V : (M A_i)ᵀ =  M A_i for all i }
//! V⁻ = { M ∈ V : (M A_i)ᵀ = -M A_i for all i }
//! ```
//!
//! built from the structure matrices `A_i`. The variable `M` is the transpose
//! of the φ-matrix `P` returned by [`extract_phi_psi`]: `B(x,y) = [φ(x), y]`
//! reads `Pᵀ A_k = A_k Q` in coordinates.
//!
//! [`extract_phi_psi`]: crate::biderivations::extract_phi_psi

use alloc::vec::Vec;

use num_traits::Zero;

use crate::biderivations::{biderivation_space, extract_phi_psi};
use crate::derivations;
use crate::error::BiderivationError;
use crate::exactla::{self, accumulate, Matrix, SparseRow, Subspace, SubspaceRelation};
use crate::liealg::LieAlgebra;
use crate::rational::Rational;

/// A subspace of n×n matrices, flattened row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSubspace {
    n: usize,
    space: Subspace,
}

impl MatrixSubspace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space
            .basis()
            .iter()
            .map(|v| Matrix::from_entries(self.n, self.n, v.clone()))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.space.contains(m.entries())
    }
}

/// `V` with one witness `Q` per canonical basis element `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSpace {
    pub v: MatrixSubspace,
    pub witnesses: Vec<Matrix>,
}

/// Solves `A_i Q = M A_i` for all `i`, free variables set to zero.
pub fn witness_q(alg: &LieAlgebra, m: &Matrix) -> Option<Matrix> {
    let n = alg.dim();
    let a = alg.structure_matrices();
    let mut system = Matrix::zeros(n * n * n, n * n);
    let mut rhs = Vec::with_capacity(n * n * n);
    for (i, ai) in a.matrices().iter().enumerate() {
        let mai = m.mul(ai);
        for r in 0..n {
            for c in 0..n {
                let row = (i * n + r) * n + c;
                for t in 0..n {
                    system[(row, t * n + c)] = ai[(r, t)].clone();
                }
                rhs.push(mai[(r, c)].clone());
            }
        }
    }
    exactla::solve_linear(&system, &rhs)
        .ok()
        .map(|q| Matrix::from_entries(n, n, q))
}

/// Joint kernel of `M A_i - A_i Q = 0` in `(M, Q)`, projected onto `M`.
pub fn compute_v(alg: &LieAlgebra) -> VSpace {
    let n = alg.dim();
    let nn = n * n;
    let a = alg.structure_matrices();
    let mut rows: Vec<SparseRow> = Vec::new();
    for ai in a.matrices() {
        for r in 0..n {
            for c in 0..n {
                let mut terms = Vec::new();
                for t in 0..n {
                    let x = &ai[(t, c)];
                    if !x.is_zero() {
                        terms.push((r * n + t, x.clone()));
                    }
                    let y = &ai[(r, t)];
                    if !y.is_zero() {
                        terms.push((nn + t * n + c, -y.clone()));
                    }
                }
                rows.push(accumulate(terms));
            }
        }
    }
    let joint = exactla::kernel_of_rows(2 * nn, rows);
    let projected = joint.map(nn, |v| v[..nn].to_vec());
    let v = MatrixSubspace { n, space: projected };
    let witnesses = v
        .basis()
        .iter()
        .map(|m| witness_q(alg, m).expect("every element of V has a witness"))
        .collect();
    VSpace { v, witnesses }
}

/// Kernel of `(M A_i)ᵀ ∓ M A_i = 0` without intersecting with `V`.
fn symmetry_kernel(alg: &LieAlgebra, skew: bool) -> Subspace {
    let n = alg.dim();
    let a = alg.structure_matrices();
    let sign = if skew { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
    let mut rows: Vec<SparseRow> = Vec::new();
    for ai in a.matrices() {
        for r in 0..n {
            for c in 0..n {
                // (M A_i)[c][r] ± (M A_i)[r][c]
                let mut terms = Vec::new();
                for t in 0..n {
                    let x = &ai[(t, r)];
                    if !x.is_zero() {
                        terms.push((c * n + t, x.clone()));
                    }
                    let y = &ai[(t, c)];
                    if !y.is_zero() {
                        terms.push((r * n + t, &sign * y));
                    }
                }
                rows.push(accumulate(terms));
            }
        }
    }
    exactla::kernel_of_rows(n * n, rows)
}

/// `(V⁺, V⁻)`, both intersected with `V`.
pub fn compute_vpm(alg: &LieAlgebra) -> (MatrixSubspace, MatrixSubspace) {
    compute_vpm_with(alg, &compute_v(alg).v)
}

fn compute_vpm_with(alg: &LieAlgebra, v: &MatrixSubspace) -> (MatrixSubspace, MatrixSubspace) {
    let n = alg.dim();
    let plus = symmetry_kernel(alg, false).intersection(&v.space).expect("same ambient");
    let minus = symmetry_kernel(alg, true).intersection(&v.space).expect("same ambient");
    (MatrixSubspace { n, space: plus }, MatrixSubspace { n, space: minus })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumReport {
    pub v_dim: usize,
    pub vplus_dim: usize,
    pub vminus_dim: usize,
    pub sum_dim: usize,
    pub intersection_dim: usize,
    /// `V⁺ + V⁻ = V` and `V⁺ ∩ V⁻ = 0`.
    pub is_direct_sum: bool,
    /// Completeness of the input; the decomposition is only guaranteed then.
    pub complete: bool,
}

pub fn verify_direct_sum(alg: &LieAlgebra) -> DirectSumReport {
    let VSpace { v, .. } = compute_v(alg);
    let (plus, minus) = compute_vpm_with(alg, &v);
    let (sum, meet) = plus.space.combine(&minus.space).expect("same ambient");
    let sum_is_v = sum.compare(&v.space).expect("same ambient") == SubspaceRelation::Equal;
    DirectSumReport {
        v_dim: v.dim(),
        vplus_dim: plus.dim(),
        vminus_dim: minus.dim(),
        sum_dim: sum.dim(),
        intersection_dim: meet.dim(),
        is_direct_sum: sum_is_v && meet.is_zero(),
        complete: derivations::is_complete(alg).complete,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleCheck {
    pub factors: usize,
    pub vplus_dim: usize,
    pub vminus_dim: usize,
}

impl SemisimpleCheck {
    pub fn holds(&self) -> bool {
        self.vplus_dim == 0 && self.vminus_dim == self.factors
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub bider_dim: usize,
    pub v_dim: usize,
    /// `Pᵀ ∈ V` for the φ-matrix of every canonical basis biderivation.
    pub transposes_in_v: bool,
    /// Present when the Killing form is nondegenerate.
    pub semisimple: Option<SemisimpleCheck>,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.bider_dim == self.v_dim
            && self.transposes_in_v
            && self.semisimple.as_ref().is_none_or(SemisimpleCheck::holds)
    }
}

/// Compares `BiDer(L)` with `V` on a complete algebra.
pub fn bider_v_correspondence(alg: &LieAlgebra) -> Result<CorrespondenceReport, BiderivationError> {
    if !derivations::is_complete(alg).complete {
        return Err(BiderivationError::NotComplete);
    }
    let bider = biderivation_space(alg);
    let VSpace { v, .. } = compute_v(alg);
    let mut transposes_in_v = true;
    for b in bider.basis() {
        let pair = extract_phi_psi(alg, &b)?;
        transposes_in_v &= v.contains(&pair.p.transpose());
    }
    let semisimple = alg.killing_form().semisimple.then(|| {
        let (plus, minus) = compute_vpm_with(alg, &v);
        SemisimpleCheck {
            factors: alg.factor_sizes().len(),
            vplus_dim: plus.dim(),
            vminus_dim: minus.dim(),
        }
    });
    Ok(CorrespondenceReport {
        bider_dim: bider.dim(),
        v_dim: v.dim(),
        transposes_in_v,
        semisimple,
    })
}
