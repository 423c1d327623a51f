use alloc::string::String;
use core::fmt;

use crate::biderivations::Violation;
use crate::liealg::JacobiViolation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    /// Two subspaces (or a subspace and a vector) live in different spaces.
    AmbientMismatch { left: usize, right: usize },
    /// Right-hand side or operand has the wrong length.
    ShapeMismatch { expected: usize, found: usize },
    /// The linear system is inconsistent.
    NoSolution,
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ ({left} vs {right})")
            }
            Self::ShapeMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
            Self::NoSolution => f.write_str("linear system has no solution"),
        }
    }
}

impl core::error::Error for LinAlgError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// A structure-constant key is out of range or not strictly ordered.
    Index { left: usize, right: usize, result: usize, dim: usize },
    /// The same `(left, right)` pair was given twice.
    DuplicatePair { left: usize, right: usize },
    /// Basis name count does not match the dimension.
    BasisNames { expected: usize, found: usize },
    /// Factor sizes do not add up to the dimension.
    FactorSum { sum: usize, dim: usize },
    /// A stored constant couples two different factor blocks.
    CrossFactor { left: usize, right: usize, result: usize },
    Jacobi(JacobiViolation),
    UnknownName(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Index { left, right, result, dim } => write!(
                f,
                "bad structure constant index ({left},{right})->{result} for dimension {dim} (need left < right < dim, result < dim)"
            ),
            Self::DuplicatePair { left, right } => {
                write!(f, "bracket ({left},{right}) given more than once")
            }
            Self::BasisNames { expected, found } => {
                write!(f, "expected {expected} basis names, found {found}")
            }
            Self::FactorSum { sum, dim } => {
                write!(f, "factor sizes sum to {sum}, dimension is {dim}")
            }
            Self::CrossFactor { left, right, result } => write!(
                f,
                "constant ({left},{right})->{result} crosses factor blocks"
            ),
            Self::Jacobi(v) => write!(f, "{v}"),
            Self::UnknownName(name) => write!(f, "unknown catalog algebra {name:?}"),
        }
    }
}

impl core::error::Error for AlgebraError {}

impl From<JacobiViolation> for AlgebraError {
    fn from(v: JacobiViolation) -> Self {
        Self::Jacobi(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BiderivationError {
    /// Operand sizes do not match the algebra.
    DimMismatch { expected: usize, found: usize },
    /// Scalar tuple length differs from the number of factors.
    FactorMismatch { expected: usize, found: usize },
    /// The algebra has a nonzero center, so `ad` is not injective.
    CenterNonzero { center_dim: usize },
    /// The map is not an inner derivation.
    NotInner,
    NotComplete,
    NotBiderivation(Violation),
    /// `L'` is not contained in the center.
    NotTwoStep,
    /// A computed result failed its own verification identity.
    InternalInconsistency(&'static str),
}

impl fmt::Display for BiderivationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DimMismatch { expected, found } => {
                write!(f, "dimension mismatch: algebra has {expected}, operand has {found}")
            }
            Self::FactorMismatch { expected, found } => {
                write!(f, "expected {expected} scalars (one per factor), found {found}")
            }
            Self::CenterNonzero { center_dim } => {
                write!(f, "center has dimension {center_dim}; ad is not injective")
            }
            Self::NotInner => f.write_str("map is not an inner derivation"),
            Self::NotComplete => f.write_str("algebra is not complete"),
            Self::NotBiderivation(v) => write!(f, "not a biderivation: {v}"),
            Self::NotTwoStep => f.write_str("algebra is not two-step nilpotent (L' not in Z(L))"),
            Self::InternalInconsistency(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl core::error::Error for BiderivationError {}
