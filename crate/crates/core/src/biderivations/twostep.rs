use alloc::vec::Vec;

use num_traits::Zero;

use super::{is_biderivation, Biderivation};
use crate::error::BiderivationError;
use crate::liealg::LieAlgebra;

/// A failed instance, naming the `L'` basis vector(s) by position in the
/// canonical basis of `L'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoStepFailure {
    /// `B(e_i, z) ∉ L'`
    LeftOutsideDerived { basis_index: usize, derived_index: usize },
    /// `B(z, e_i) ∉ L'`
    RightOutsideDerived { basis_index: usize, derived_index: usize },
    /// `B(z, z') ≠ 0`
    NonzeroOnDerived { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStepReport {
    pub derived_dim: usize,
    pub failures: Vec<TwoStepFailure>,
}

impl TwoStepReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// On a two-step nilpotent algebra, checks `B(x, z), B(z, x) ∈ L'` and
/// `B(z, z') = 0` for `x` over the basis of `L` and `z, z'` over a basis of `L'`.
pub fn two_step_properties(alg: &LieAlgebra, b: &Biderivation) -> Result<TwoStepReport, BiderivationError> {
    if b.dim() != alg.dim() {
        return Err(BiderivationError::DimMismatch { expected: alg.dim(), found: b.dim() });
    }
    if !alg.is_two_step() {
        return Err(BiderivationError::NotTwoStep);
    }
    is_biderivation(alg, b).map_err(BiderivationError::NotBiderivation)?;

    let derived = alg.derived_algebra();
    let zs = derived.basis();
    let mut failures = Vec::new();
    for (d, z) in zs.iter().enumerate() {
        for i in 0..alg.dim() {
            let e = alg.basis_vector(i);
            if !derived.contains(&b.apply(&e, z)) {
                failures.push(TwoStepFailure::LeftOutsideDerived { basis_index: i, derived_index: d });
            }
            if !derived.contains(&b.apply(z, &e)) {
                failures.push(TwoStepFailure::RightOutsideDerived { basis_index: i, derived_index: d });
            }
        }
    }
    for (a, z) in zs.iter().enumerate() {
        for (c, w) in zs.iter().enumerate() {
            if b.apply(z, w).iter().any(|v| !v.is_zero()) {
                failures.push(TwoStepFailure::NonzeroOnDerived { left: a, right: c });
            }
        }
    }
    Ok(TwoStepReport {
        derived_dim: derived.dim(),
        failures,
    })
}
