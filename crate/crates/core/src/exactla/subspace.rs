use alloc::vec::Vec;

use num_traits::Zero;

use super::echelon::Echelon;
use crate::error::LinAlgError;
use crate::rational::{self, Rational};

/// A subspace of `Q^ambient_dim`, stored by its reduced row-echelon basis.
///
/// The basis is unique for the space it spans, so two `Subspace` values are
/// equal (`==`) exactly when they are the same subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

/// Outcome of [`Subspace::compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceRelation {
    Equal,
    /// `self ⊊ other`
    Contained,
    /// `other ⊊ self`
    Contains,
    Incomparable,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = rational::zeros(ambient_dim);
                v[i] = rational::one();
                v
            })
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical span of `vectors`. Panics if a vector has the wrong length.
    pub fn span<V: AsRef<[Rational]>>(ambient_dim: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            let v = v.as_ref();
            assert_eq!(v.len(), ambient_dim, "vector length must equal ambient dimension");
            e.push_dense(v);
        }
        Self::from_echelon(&e)
    }

    pub(crate) fn from_echelon(e: &Echelon) -> Self {
        Self {
            ambient_dim: e.cols(),
            basis: e.rref_dense(),
            pivots: e.pivots(),
        }
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.push_dense(v);
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    ///
    /// Because the basis is reduced, the candidate coordinates are just the
    /// entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length must equal ambient dimension");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = rational::zeros(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r += c * x;
                }
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combination(&self, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = rational::zeros(self.ambient_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.ambient_dim == other.ambient_dim {
            Ok(())
        } else {
            Err(LinAlgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            })
        }
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinAlgError> {
        self.check_ambient(other)?;
        Ok(self.basis.iter().all(|v| other.contains(v)))
    }

    pub fn compare(&self, other: &Self) -> Result<SubspaceRelation, LinAlgError> {
        let sub = self.is_subspace_of(other)?;
        let sup = other.is_subspace_of(self)?;
        Ok(match (sub, sup) {
            (true, true) => SubspaceRelation::Equal,
            (true, false) => SubspaceRelation::Contained,
            (false, true) => SubspaceRelation::Contains,
            (false, false) => SubspaceRelation::Incomparable,
        })
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.push_dense(v);
        }
        Ok(Self::from_echelon(&e))
    }

    /// Intersection via the kernel of `[S | -T]`: a kernel vector `(a, b)`
    /// gives the common element `Σ aᵢ sᵢ = Σ bⱼ tⱼ`.
    pub fn intersection(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        let (ds, dt) = (self.dim(), other.dim());
        let mut e = Echelon::new(ds + dt);
        let mut row = rational::zeros(ds + dt);
        for coord in 0..self.ambient_dim {
            for (i, s) in self.basis.iter().enumerate() {
                row[i] = s[coord].clone();
            }
            for (j, t) in other.basis.iter().enumerate() {
                row[ds + j] = -t[coord].clone();
            }
            e.push_dense(&row);
        }
        let common = e
            .kernel_vectors()
            .into_iter()
            .map(|k| self.combination(&k[..ds]));
        Ok(Self::span(self.ambient_dim, common))
    }

    /// `(sum, intersection)` in one call.
    pub fn combine(&self, other: &Self) -> Result<(Self, Self), LinAlgError> {
        Ok((self.sum(other)?, self.intersection(other)?))
    }

    /// Image under a linear map given as a function on vectors.
    pub fn map<F>(&self, target_dim: usize, f: F) -> Self
    where
        F: Fn(&[Rational]) -> Vec<Rational>,
    {
        Self::span(target_dim, self.basis.iter().map(|v| f(v)))
    }
}
