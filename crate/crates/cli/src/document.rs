//! File formats: algebra and biderivation documents (JSON).

use std::collections::BTreeSet;

use biderlab_core::rational::{self, Rational};
use biderlab_core::{Biderivation, LieAlgebra, Matrix};
use serde::{Deserialize, Serialize};

use crate::error::InputError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    /// Defaults to `e1 … en`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<usize>>,
}

/// `[e_left, e_right] = Σ coeff · e_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub result: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub index: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiderivationDocument {
    pub dim: usize,
    pub mats: Vec<Vec<Vec<String>>>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        InputError::Parse {
            location: format!("line {} column {}, field {}", inner.line(), inner.column(), path),
            message: inner.to_string(),
        }
    })
}

fn parse_rational(text: &str, path: impl FnOnce() -> String) -> Result<Rational, InputError> {
    rational::parse(text).ok_or_else(|| InputError::Parse {
        location: path(),
        message: format!("{text:?} is not a rational of the form p or p/q with q > 0"),
    })
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Parse { location: location.into(), message: message.into() }
}

/// Structural checks, then the algebra itself. The Jacobi identity is
/// checked only when `check_jacobi` is set.
pub fn algebra_from_document(doc: &AlgebraDocument, check_jacobi: bool) -> Result<LieAlgebra, InputError> {
    let n = doc.dim;
    let names = match &doc.basis {
        Some(names) if names.len() != n => {
            return Err(invalid("basis", format!("expected {n} names, found {}", names.len())))
        }
        Some(names) => names.clone(),
        None => (1..=n).map(|i| format!("e{i}")).collect(),
    };
    let mut seen = BTreeSet::new();
    let mut constants = Vec::new();
    for (b, entry) in doc.brackets.iter().enumerate() {
        let (l, r) = (entry.left, entry.right);
        if l >= r {
            return Err(InputError::Index(format!("brackets[{b}]: left ({l}) must be smaller than right ({r})")));
        }
        if r >= n {
            return Err(InputError::Index(format!("brackets[{b}]: index {r} out of range for dimension {n}")));
        }
        if !seen.insert((l, r)) {
            return Err(InputError::Index(format!("brackets[{b}]: pair ({l},{r}) appears more than once")));
        }
        let mut result_seen = BTreeSet::new();
        for (t, term) in entry.result.iter().enumerate() {
            if term.index >= n {
                return Err(InputError::Index(format!(
                    "brackets[{b}].result[{t}]: index {} out of range for dimension {n}",
                    term.index
                )));
            }
            if !result_seen.insert(term.index) {
                return Err(InputError::Index(format!(
                    "brackets[{b}].result[{t}]: index {} appears more than once",
                    term.index
                )));
            }
            let c = parse_rational(&term.coeff, || format!("brackets[{b}].result[{t}].coeff"))?;
            constants.push(((l, r, term.index), c));
        }
    }
    if let Some(factors) = &doc.factors {
        let sum: usize = factors.iter().sum();
        if sum != n {
            return Err(invalid("factors", format!("factor sizes sum to {sum}, expected {n}")));
        }
    }
    let alg = LieAlgebra::new_unchecked(names, constants, doc.factors.clone())
        .map_err(|e| invalid("factors", e.to_string()))?;
    if check_jacobi {
        alg.validate().map_err(InputError::Jacobi)?;
    }
    Ok(alg)
}

pub fn parse_algebra(text: &str, check_jacobi: bool) -> Result<(AlgebraDocument, LieAlgebra), InputError> {
    let doc: AlgebraDocument = from_json(text)?;
    let alg = algebra_from_document(&doc, check_jacobi)?;
    Ok((doc, alg))
}

/// Canonical document: brackets by `(left, right)`, terms by index, zero
/// coefficients dropped, rationals in lowest terms.
pub fn algebra_to_document(name: &str, alg: &LieAlgebra) -> AlgebraDocument {
    let mut brackets: Vec<BracketEntry> = Vec::new();
    for (&(i, j, k), c) in alg.constants() {
        let term = Term { index: k, coeff: rational::format(c) };
        match brackets.last_mut() {
            Some(last) if (last.left, last.right) == (i, j) => last.result.push(term),
            _ => brackets.push(BracketEntry { left: i, right: j, result: vec![term] }),
        }
    }
    AlgebraDocument {
        name: name.to_owned(),
        dim: alg.dim(),
        basis: Some(alg.basis_names().to_vec()),
        brackets,
        factors: alg.factors().map(<[usize]>::to_vec),
    }
}

pub fn biderivation_from_document(doc: &BiderivationDocument, alg: &LieAlgebra) -> Result<Biderivation, InputError> {
    let n = alg.dim();
    let mismatch = |expected, found| InputError::DimMismatch { expected, found };
    if doc.dim != n {
        return Err(mismatch(n, doc.dim));
    }
    if doc.mats.len() != n {
        return Err(mismatch(n, doc.mats.len()));
    }
    let mut mats = Vec::with_capacity(n);
    for (k, rows) in doc.mats.iter().enumerate() {
        if rows.len() != n {
            return Err(mismatch(n, rows.len()));
        }
        let mut m = Matrix::zeros(n, n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(mismatch(n, row.len()));
            }
            for (j, text) in row.iter().enumerate() {
                m[(i, j)] = parse_rational(text, || format!("mats[{k}][{i}][{j}]"))?;
            }
        }
        mats.push(m);
    }
    Ok(Biderivation::new(mats).expect("shapes checked above"))
}

pub fn parse_biderivation(text: &str, alg: &LieAlgebra) -> Result<(BiderivationDocument, Biderivation), InputError> {
    let doc: BiderivationDocument = from_json(text)?;
    let b = biderivation_from_document(&doc, alg)?;
    Ok((doc, b))
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(rational::format).collect())
        .collect()
}

pub fn biderivation_to_document(b: &Biderivation) -> BiderivationDocument {
    BiderivationDocument {
        dim: b.dim(),
        mats: b.matrices().iter().map(matrix_strings).collect(),
    }
}
