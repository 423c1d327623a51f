use super::{is_biderivation, row_column_maps, Biderivation};
use crate::derivations::{self, ad_preimage};
use crate::error::BiderivationError;
use crate::exactla::Matrix;
use crate::liealg::{LieAlgebra, StructureMatrices};

/// Matrices of `φ, ψ` with `B(x, y) = [φ(x), y] = [x, ψ(y)]`. Column `j` of
/// `p` is `φ(e_j)`, same for `q`.
///
/// In terms of structure matrices this reads `Pᵀ A_k = A_k Q` for every `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiPsiPair {
    pub p: Matrix,
    pub q: Matrix,
}

impl PhiPsiPair {
    pub fn satisfies_structure_identity(&self, a: &StructureMatrices) -> bool {
        let pt = self.p.transpose();
        a.matrices().iter().all(|ak| pt.mul(ak) == ak.mul(&self.q))
    }
}

/// Recovers `φ` and `ψ` for a biderivation of a complete algebra.
///
/// `φ(e_i)` is the ad-preimage of `B(e_i, -)`. If `B(-, e_i) = ad_v` then
/// `ψ(e_i) = -v`, since `B(x, e_i) = [v, x] = [x, -v]`. The pair is checked
/// against `B` on every basis pair before it is returned.
pub fn extract_phi_psi(alg: &LieAlgebra, b: &Biderivation) -> Result<PhiPsiPair, BiderivationError> {
    let n = alg.dim();
    if b.dim() != n {
        return Err(BiderivationError::DimMismatch { expected: n, found: b.dim() });
    }
    if !derivations::is_complete(alg).complete {
        return Err(BiderivationError::NotComplete);
    }
    is_biderivation(alg, b).map_err(BiderivationError::NotBiderivation)?;

    let not_inner = |_| BiderivationError::InternalInconsistency("a row or column map of B is not inner");
    let mut p = Matrix::zeros(n, n);
    let mut q = Matrix::zeros(n, n);
    for i in 0..n {
        let (rowmap, colmap) = row_column_maps(b, i);
        let u = ad_preimage(alg, &rowmap).map_err(not_inner)?;
        let v = ad_preimage(alg, &colmap).map_err(not_inner)?;
        p.set_column(i, &u);
        let minus_v: alloc::vec::Vec<_> = v.into_iter().map(|x| -x).collect();
        q.set_column(i, &minus_v);
    }

    for i in 0..n {
        let ei = alg.basis_vector(i);
        let pei = p.column(i);
        for j in 0..n {
            let ej = alg.basis_vector(j);
            let target = b.value(i, j);
            if alg.bracket(&pei, &ej) != target || alg.bracket(&ei, &q.column(j)) != target {
                return Err(BiderivationError::InternalInconsistency(
                    "[φ(e_i), e_j] = [e_i, ψ(e_j)] = B(e_i, e_j) failed",
                ));
            }
        }
    }
    Ok(PhiPsiPair { p, q })
}

/// `B(x, y) = [φ(x), y]`, i.e. `B_k = Pᵀ A_k`.
pub fn biderivation_from_phi(alg: &LieAlgebra, p: &Matrix) -> Biderivation {
    let pt = p.transpose();
    let mats = alg
        .structure_matrices()
        .matrices()
        .iter()
        .map(|a| pt.mul(a))
        .collect();
    Biderivation::new(mats).expect("square structure matrices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biderivations::{inner_biderivation, ScalarTuple};
    use crate::liealg::catalog;
    use crate::rational::int;

    #[test]
    fn inner_sl2() {
        let sl2 = catalog("sl2", 0).unwrap();
        let b = inner_biderivation(&sl2, &ScalarTuple(alloc::vec![int(2)])).unwrap();
        let pair = extract_phi_psi(&sl2, &b).unwrap();
        assert_eq!(pair.p, Matrix::scalar(3, int(2)));
        assert_eq!(pair.q, Matrix::scalar(3, int(2)));
        assert!(pair.satisfies_structure_identity(&sl2.structure_matrices()));

        let zero = extract_phi_psi(&sl2, &Biderivation::zero(3)).unwrap();
        assert!(zero.p.is_zero() && zero.q.is_zero());
    }

    #[test]
    fn block_scalars_on_direct_sum() {
        let l = catalog("sl2_plus_sl2", 0).unwrap();
        let b = inner_biderivation(&l, &ScalarTuple(alloc::vec![int(1), int(0)])).unwrap();
        let pair = extract_phi_psi(&l, &b).unwrap();
        let mut expected = Matrix::zeros(6, 6);
        expected.set_block(0, 0, &Matrix::identity(3));
        assert_eq!(pair.p, expected);
        assert_eq!(pair.q, expected);
    }

    #[test]
    fn preconditions() {
        let h3 = catalog("heisenberg3", 0).unwrap();
        assert_eq!(
            extract_phi_psi(&h3, &Biderivation::zero(3)),
            Err(BiderivationError::NotComplete)
        );
        let sl2 = catalog("sl2", 0).unwrap();
        let bad = Biderivation::new(alloc::vec![Matrix::identity(3), Matrix::zeros(3, 3), Matrix::zeros(3, 3)]).unwrap();
        assert!(matches!(
            extract_phi_psi(&sl2, &bad),
            Err(BiderivationError::NotBiderivation(_))
        ));
    }

    #[test]
    fn from_phi_roundtrip() {
        let sl2 = catalog("sl2", 0).unwrap();
        let b = biderivation_from_phi(&sl2, &Matrix::scalar(3, int(5)));
        assert_eq!(b, inner_biderivation(&sl2, &ScalarTuple(alloc::vec![int(5)])).unwrap());
        assert_eq!(extract_phi_psi(&sl2, &b).unwrap().p, Matrix::scalar(3, int(5)));
    }
}
