//! Row reduction.
//!
//! Two engines live here. [`rref`] is a dense fraction-free (Bareiss) forward
//! pass over integer-scaled rows followed by exact rational back-substitution.
//! [`Echelon`] is an incremental Gauss-Jordan accumulator over sparse rows
//! that keeps its rows fully reduced at all times; the kernel and solver paths
//! use it because constraint systems are mostly zero rows. Both produce the
//! unique reduced row-echelon form, so their outputs agree bit for bit.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Matrix;
use crate::rational::{self, Rational};

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut scales = Vec::with_capacity(m.rows());
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let d = rational::common_denominator(row);
            let out = row
                .iter()
                .map(|v| v.numer() * (&d / v.denom()))
                .collect();
            scales.push(d);
            out
        })
        .collect();
    (rows, scales)
}

/// Fraction-free forward elimination. Returns the pivot columns and the
/// number of row swaps; `a` is left in (unnormalized) row-echelon form.
fn bareiss_forward(a: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, usize) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

/// Reduced row-echelon form of `m` over the rationals.
pub fn rref(m: &Matrix) -> Rref {
    let cols = m.cols();
    let (mut a, _) = integer_rows(m);
    let (pivots, _) = bareiss_forward(&mut a, cols);
    let rank = pivots.len();

    let mut rows: Vec<Vec<Rational>> = a
        .into_iter()
        .take(rank)
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    for idx in (0..rank).rev() {
        let c = pivots[idx];
        let lead = rows[idx][c].clone();
        for v in rows[idx].iter_mut().skip(c) {
            *v /= &lead;
        }
        let (above, rest) = rows.split_at_mut(idx);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            let factor = row[c].clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &factor * &pivot_row[j];
                }
            }
        }
    }
    let mut entries: Vec<Rational> = rows.into_iter().flatten().collect();
    entries.extend(rational::zeros((m.rows() - rank) * cols));
    Rref {
        matrix: Matrix::from_entries(m.rows(), cols, entries),
        pivots,
        rank,
    }
}

/// Determinant of a square matrix via the same fraction-free pass.
pub fn determinant(m: &Matrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let (mut a, scales) = integer_rows(m);
    let (pivots, swaps) = bareiss_forward(&mut a, n);
    if pivots.len() < n {
        return Rational::zero();
    }
    let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    let mut det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if swaps % 2 == 1 {
        det = -det;
    }
    det
}

/// Sparse row: strictly increasing column indices, no stored zeros.
pub(crate) type SparseRow = Vec<(usize, Rational)>;


/// `a - factor * b` for sparse rows.
fn axpy(a: &SparseRow, factor: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - factor * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental Gauss-Jordan accumulator. Every stored row has a leading 1 in
/// its pivot column and no entries in any other pivot column.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivot_of: alloc::vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows; the result has no entries in
    /// pivot columns and is empty iff `row` lies in the row span.
    pub fn reduce<'a>(&self, row: impl IntoIterator<Item = (usize, &'a Rational)>) -> SparseRow {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            if v.is_zero() {
                continue;
            }
            match self.pivot_of[c] {
                Some(r) => {
                    for (c2, w) in &self.rows[r] {
                        if *c2 != c {
                            *acc.entry(*c2).or_insert_with(Rational::zero) -= v * w;
                        }
                    }
                }
                None => *acc.entry(c).or_insert_with(Rational::zero) += v,
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn push<'a>(&mut self, row: impl IntoIterator<Item = (usize, &'a Rational)>) -> bool {
        let mut reduced = self.reduce(row);
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        if !lead.is_one() {
            for (_, v) in reduced.iter_mut() {
                *v /= &lead;
            }
        }
        for existing in self.rows.iter_mut() {
            if let Ok(pos) = existing.binary_search_by_key(&pivot, |e| e.0) {
                let factor = existing[pos].1.clone();
                *existing = axpy(existing, &factor, &reduced);
            }
        }
        self.pivot_of[pivot] = Some(self.rows.len());
        self.rows.push(reduced);
        true
    }

    pub fn push_dense(&mut self, row: &[Rational]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        self.push(row.iter().enumerate())
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_of[c].is_some()).collect()
    }

    /// Stored rows ordered by pivot column, i.e. the nonzero rows of the RREF.
    pub fn rref_rows(&self) -> Vec<&SparseRow> {
        (0..self.cols)
            .filter_map(|c| self.pivot_of[c].map(|r| &self.rows[r]))
            .collect()
    }

    pub fn rref_dense(&self) -> Vec<Vec<Rational>> {
        self.rref_rows()
            .into_iter()
            .map(|row| {
                let mut dense = rational::zeros(self.cols);
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    /// Free-variable parameterization of the null space: one vector per free
    /// column in increasing order, with a 1 in that column and 0 in the others.
    pub fn kernel_vectors(&self) -> Vec<Vec<Rational>> {
        let rows = self.rref_rows();
        let pivots = self.pivots();
        (0..self.cols)
            .filter(|&c| self.pivot_of[c].is_none())
            .map(|free| {
                let mut v = rational::zeros(self.cols);
                v[free] = Rational::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    if let Ok(pos) = row.binary_search_by_key(&free, |e| e.0) {
                        v[p] = -row[pos].1.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// For a system whose last column is the right-hand side: the solution
    /// with every free variable set to zero, or `None` if inconsistent.
    pub fn particular_solution(&self) -> Option<Vec<Rational>> {
        let unknowns = self.cols - 1;
        if self.pivot_of[unknowns].is_some() {
            return None;
        }
        let mut x = rational::zeros(unknowns);
        for (row, p) in self.rref_rows().into_iter().zip(self.pivots()) {
            if let Some((c, v)) = row.last() {
                if *c == unknowns {
                    x[p] = v.clone();
                }
            }
        }
        Some(x)
    }
}

/// Row reduction of `m` through the sparse engine; same output as [`rref`].
pub fn rref_sparse(m: &Matrix) -> Rref {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.push_dense(m.row(i));
    }
    let rank = e.rank();
    let mut entries: Vec<Rational> = e.rref_dense().into_iter().flatten().collect();
    entries.extend(rational::zeros((m.rows() - rank) * m.cols()));
    Rref {
        matrix: Matrix::from_entries(m.rows(), m.cols(), entries),
        pivots: e.pivots(),
        rank,
    }
}
