//! Lie algebras given by structure constants in a fixed basis.

mod catalog;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

pub use catalog::{catalog, catalog_names, CATALOG};

use crate::error::AlgebraError;
use crate::exactla::{self, Matrix, Subspace};
use crate::rational::{self, Rational};

/// Key `(i, j, k)` with `i < j`, value `c_ij^k` where `[e_i, e_j] = Σ_k c_ij^k e_k`.
pub type ConstantKey = (usize, usize, usize);

/// `(left, right, [(result index, integer coefficient)])`.
pub type IntBracket<'a> = (usize, usize, &'a [(usize, i64)]);

/// A finite-dimensional Lie algebra over the rationals.
///
/// Only constants with `i < j` are stored; antisymmetry (and `[e_i, e_i] = 0`)
/// is implied by the representation. Zero constants are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    constants: BTreeMap<ConstantKey, Rational>,
    factors: Option<Vec<usize>>,
    // [e_i, e_j] for every ordered pair, index i * dim + j.
    table: Vec<Vec<(usize, Rational)>>,
}

/// First Jacobi failure `(i, j, k)` with `i < j < k`, and the nonzero value of
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "Jacobi identity fails on basis triple ({i},{j},{k}); residual (")?;
        for (idx, v) in self.residual.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `[L¹, L², …]` with `L¹ = [L, L]` and `Lᵏ = [L, Lᵏ⁻¹]`, stopped at the first
/// zero term or the first repeated term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerCentralSeries {
    pub terms: Vec<Subspace>,
    /// `Some(k)` when `Lᵏ = 0` and `Lᵏ⁻¹ ≠ 0` (abelian algebras report 1).
    pub nilpotency_class: Option<usize>,
}

impl LowerCentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingForm {
    pub matrix: Matrix,
    pub determinant: Rational,
    pub rank: usize,
    pub semisimple: bool,
}

/// `(A_1, …, A_n)` with `(A_k)_{ij} = c_ij^k`, so `[x, y]_k = xᵀ A_k y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMatrices {
    mats: Vec<Matrix>,
}

impl StructureMatrices {
    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    /// Bracket through the bilinear forms `xᵀ A_k y`.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.mats
            .iter()
            .map(|a| {
                a.mul_vec(y)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (ay, xi)| acc + ay * xi)
            })
            .collect()
    }

    pub fn all_skew_symmetric(&self) -> bool {
        self.mats.iter().all(Matrix::is_skew_symmetric)
    }
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl LieAlgebra {
    /// Builds and validates (Jacobi) an algebra.
    pub fn new(
        basis_names: Vec<String>,
        constants: impl IntoIterator<Item = (ConstantKey, Rational)>,
        factors: Option<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let alg = Self::new_unchecked(basis_names, constants, factors)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Like [`LieAlgebra::new`] but skips the Jacobi check. Index and factor
    /// rules are still enforced.
    pub fn new_unchecked(
        basis_names: Vec<String>,
        constants: impl IntoIterator<Item = (ConstantKey, Rational)>,
        factors: Option<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        let mut stored = BTreeMap::new();
        for ((i, j, k), c) in constants {
            if !(i < j && j < dim && k < dim) {
                return Err(AlgebraError::Index { left: i, right: j, result: k, dim });
            }
            if stored.contains_key(&(i, j, k)) {
                return Err(AlgebraError::DuplicatePair { left: i, right: j });
            }
            if !c.is_zero() {
                stored.insert((i, j, k), c);
            }
        }
        if let Some(sizes) = &factors {
            let sum: usize = sizes.iter().sum();
            if sum != dim {
                return Err(AlgebraError::FactorSum { sum, dim });
            }
            let block = block_index(sizes);
            for &(i, j, k) in stored.keys() {
                if block[i] != block[j] || block[j] != block[k] {
                    return Err(AlgebraError::CrossFactor { left: i, right: j, result: k });
                }
            }
        }
        let mut table = alloc::vec![Vec::new(); dim * dim];
        for (&(i, j, k), c) in &stored {
            table[i * dim + j].push((k, c.clone()));
            table[j * dim + i].push((k, -c.clone()));
        }
        Ok(Self {
            dim,
            basis_names,
            constants: stored,
            factors,
            table,
        })
    }

    /// Convenience constructor with integer constants. Pairs may be given in
    /// either order; `(j, i)` with `j > i` is stored with its sign flipped.
    pub fn from_int_brackets(
        basis_names: Vec<String>,
        brackets: &[IntBracket<'_>],
        factors: Option<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let mut constants = Vec::new();
        for &(i, j, terms) in brackets {
            let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            if a == b {
                return Err(AlgebraError::Index {
                    left: i,
                    right: j,
                    result: terms.first().map_or(0, |t| t.0),
                    dim: basis_names.len(),
                });
            }
            for &(k, c) in terms {
                constants.push(((a, b, k), rational::int(sign * c)));
            }
        }
        Self::new(basis_names, constants, factors)
    }

    pub fn abelian(n: usize) -> Self {
        Self::new_unchecked(default_names("e", n), [], None).expect("abelian algebra is well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn constants(&self) -> &BTreeMap<ConstantKey, Rational> {
        &self.constants
    }

    pub fn factors(&self) -> Option<&[usize]> {
        self.factors.as_deref()
    }

    /// Factor sizes, treating an algebra without metadata as a single factor.
    pub fn factor_sizes(&self) -> Vec<usize> {
        match &self.factors {
            Some(f) => f.clone(),
            None if self.dim == 0 => Vec::new(),
            None => alloc::vec![self.dim],
        }
    }

    /// Index of the factor block containing each basis index.
    pub fn factor_of_index(&self) -> Vec<usize> {
        block_index(&self.factor_sizes())
    }

    pub fn with_factors(mut self, factors: Option<Vec<usize>>) -> Result<Self, AlgebraError> {
        let names = core::mem::take(&mut self.basis_names);
        Self::new_unchecked(names, self.constants, factors)
    }

    /// `[e_i, e_j]` as sparse `(k, c_ij^k)` pairs.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_bracket(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = rational::zeros(self.dim);
        v[i] = rational::one();
        v
    }

    /// `[x, y]` in coordinates.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim, "element length must equal algebra dimension");
        assert_eq!(y.len(), self.dim, "element length must equal algebra dimension");
        let mut out = rational::zeros(self.dim);
        for (&(i, j, k), c) in &self.constants {
            let w = &x[i] * &y[j] - &x[j] * &y[i];
            if !w.is_zero() {
                out[k] += w * c;
            }
        }
        out
    }

    pub fn bracket_basis_with(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = rational::zeros(self.dim);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in self.basis_bracket(i, j) {
                out[*k] += yj * c;
            }
        }
        out
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k` and
    /// reports the first failure in lexicographic order.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut residual = rational::zeros(n);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (t, coeff) in self.basis_bracket(a, b) {
                            for (r, d) in self.basis_bracket(*t, c) {
                                residual[*r] += coeff * d;
                            }
                        }
                    }
                    if residual.iter().any(|v| !v.is_zero()) {
                        return Err(JacobiViolation { triple: (i, j, k), residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `ad_x = [x, -]`; column `j` holds `[x, e_j]`.
    pub fn adjoint_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j) {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// `Z(L) = {x : [x, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // Row (j, k): Σ_i x_i c_ij^k = 0.
        let rows = (0..n).flat_map(|j| {
            (0..n).map(move |k| {
                (0..n)
                    .filter_map(|i| {
                        let c = self.structure_constant(i, j, k);
                        (!c.is_zero()).then_some((i, c))
                    })
                    .collect::<Vec<_>>()
            })
        });
        exactla::kernel_of_rows(n, rows)
    }

    /// `L' = [L, L]`, spanned by all basis brackets.
    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim;
        Subspace::span(
            n,
            (0..n).flat_map(|i| {
                (0..n).map(move |j| {
                    let mut v = rational::zeros(n);
                    for (k, c) in self.basis_bracket(i, j) {
                        v[*k] = c.clone();
                    }
                    v
                })
            }),
        )
    }

    pub fn lower_central_series(&self) -> LowerCentralSeries {
        let n = self.dim;
        let mut terms = alloc::vec![self.derived_algebra()];
        loop {
            let last = terms.last().expect("series is never empty");
            if last.is_zero() {
                let class = terms.len();
                return LowerCentralSeries { terms, nilpotency_class: Some(class) };
            }
            let next = Subspace::span(
                n,
                (0..n).flat_map(|i| last.basis().iter().map(move |v| self.bracket_basis_with(i, v))),
            );
            if next == *last {
                terms.push(next);
                return LowerCentralSeries { terms, nilpotency_class: None };
            }
            terms.push(next);
        }
    }

    /// `L' ⊆ Z(L)`: two-step nilpotent, abelian algebras included.
    pub fn is_two_step(&self) -> bool {
        self.derived_algebra()
            .is_subspace_of(&self.center())
            .expect("same ambient dimension")
    }

    /// `K_ij = tr(ad e_i · ad e_j)`; semisimple iff `det K ≠ 0`.
    pub fn killing_form(&self) -> KillingForm {
        let n = self.dim;
        let ads: Vec<Matrix> = (0..n).map(|i| self.adjoint_matrix(&self.basis_vector(i))).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        let determinant = exactla::determinant(&k);
        let rank = exactla::rref(&k).rank;
        KillingForm {
            semisimple: !determinant.is_zero(),
            matrix: k,
            determinant,
            rank,
        }
    }

    /// `L ⊕ M` with `M`'s basis placed after `L`'s; factor lists concatenate.
    pub fn direct_sum(&self, other: &Self) -> Self {
        if other.dim == 0 {
            return self.clone();
        }
        if self.dim == 0 {
            return other.clone();
        }
        let shift = self.dim;
        let names = self.basis_names.iter().chain(&other.basis_names).cloned().collect();
        let constants = self.constants.iter().map(|(k, c)| (*k, c.clone())).chain(
            other
                .constants
                .iter()
                .map(|(&(i, j, k), c)| ((i + shift, j + shift, k + shift), c.clone())),
        );
        let mut factors = self.factor_sizes();
        factors.extend(other.factor_sizes());
        Self::new_unchecked(names, constants, Some(factors)).expect("direct sum of well-formed algebras")
    }

    pub fn structure_matrices(&self) -> StructureMatrices {
        let n = self.dim;
        let mut mats = alloc::vec![Matrix::zeros(n, n); n];
        for (&(i, j, k), c) in &self.constants {
            mats[k][(i, j)] = c.clone();
            mats[k][(j, i)] = -c.clone();
        }
        StructureMatrices { mats }
    }
}

fn block_index(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| core::iter::repeat_n(b, s))
        .collect()
}
