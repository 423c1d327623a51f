use alloc::format;
use alloc::vec::Vec;

use super::{biderivation_space, Biderivation};
use crate::liealg::LieAlgebra;

/// Whether `F(BiDer(L))` is closed under the componentwise commutator of
/// `M_n(Q)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketClosure {
    /// The induced bracket `{B^a, B^b} = F⁻¹([F(B^a), F(B^b)])` on the
    /// canonical basis, packaged as a Lie algebra with basis `B1, B2, …`.
    Closed { algebra: LieAlgebra },
    /// First basis pair `(a, b)`, `a < b`, whose commutator leaves the space.
    NotClosed { pair: (usize, usize), commutator: Biderivation },
}

impl BracketClosure {
    pub fn is_closed(&self) -> bool {
        matches!(self, Self::Closed { .. })
    }
}

pub fn bider_bracket_closure(alg: &LieAlgebra) -> BracketClosure {
    let space = biderivation_space(alg);
    let basis = space.basis();
    let d = basis.len();
    let mut constants = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            let comm = basis[a].componentwise_commutator(&basis[b]);
            match space.coordinates(&comm) {
                Some(coords) => {
                    for (c, v) in coords.into_iter().enumerate() {
                        constants.push(((a, b, c), v));
                    }
                }
                None => {
                    return BracketClosure::NotClosed {
                        pair: (a, b),
                        commutator: comm,
                    }
                }
            }
        }
    }
    let names = (1..=d).map(|i| format!("B{i}")).collect();
    // The commutator of M_n(Q)^n is a Lie bracket, so Jacobi must hold here.
    let algebra = LieAlgebra::new(names, constants, None).expect("induced bracket satisfies Jacobi");
    BracketClosure::Closed { algebra }
}
