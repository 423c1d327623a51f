use biderlab_core::biderivations::{
    bider_bracket_closure, biderivation_from_phi, biderivation_space, constrained_biderivation_space,
    extract_phi_psi, is_biderivation, symmetric_skew_split, two_step_properties, BracketClosure,
};
use biderlab_core::derivations::{commuting_map_space, flatten_map, is_complete, skew_commuting_map_space, unflatten_map};
use biderlab_core::liealg::catalog;
use biderlab_core::rational::frac;
use biderlab_core::vdecomp::{compute_v, compute_vpm, verify_direct_sum, VSpace};
use biderlab_core::{LieAlgebra, Subspace, Symmetry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const COMPLETE: &[&str] = &["L22", "sl2", "so3", "sl2_plus_sl2", "sl3"];

fn complete_algebras() -> Vec<(&'static str, LieAlgebra)> {
    COMPLETE.iter().map(|&n| (n, catalog(n, 0).unwrap())).collect()
}

#[test]
fn catalog_completeness() {
    for (name, alg) in complete_algebras() {
        assert!(is_complete(&alg).complete, "{name}");
    }
    for name in ["abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "heisenberg3", "twostep(3,2)"] {
        assert!(!is_complete(&catalog(name, 1).unwrap()).complete, "{name}");
    }
}

/// Symmetric biderivations come from skew-commuting maps via `φ = -ψ`, skew
/// ones from commuting maps via `φ = ψ`.
#[test]
fn symmetric_and_skew_correspondences() {
    for (name, alg) in complete_algebras() {
        let n = alg.dim();
        for (mode, maps) in [
            (Symmetry::Symmetric, skew_commuting_map_space(&alg)),
            (Symmetry::Skew, commuting_map_space(&alg)),
        ] {
            let space = constrained_biderivation_space(&alg, mode);
            assert_eq!(space.dim(), maps.dim(), "{name} {mode:?}");
            let mut phis = Vec::new();
            for b in space.basis() {
                let pair = extract_phi_psi(&alg, &b).unwrap();
                match mode {
                    Symmetry::Symmetric => assert_eq!(pair.p, pair.q.scale(&frac(-1, 1)), "{name}"),
                    Symmetry::Skew => assert_eq!(pair.p, pair.q, "{name}"),
                }
                assert!(maps.contains(&flatten_map(&pair.p)), "{name}");
                assert_eq!(biderivation_from_phi(&alg, &pair.p), b, "{name}");
                phis.push(flatten_map(&pair.p));
            }
            // B ↦ φ is injective on the basis and lands onto the map space
            assert_eq!(Subspace::span(n * n, &phis), maps, "{name} {mode:?}");
            for f in maps.basis() {
                let b = biderivation_from_phi(&alg, &unflatten_map(n, f));
                assert!(space.contains(&b), "{name} {mode:?}");
            }
        }
    }
}

#[test]
fn decomposition_constructions() {
    for (name, alg) in complete_algebras() {
        let VSpace { v, witnesses } = compute_v(&alg);
        let (plus, minus) = compute_vpm(&alg);
        let half = frac(1, 2);
        for (m, q) in v.basis().iter().zip(&witnesses) {
            let qt = q.transpose();
            let (sym_part, skew_part) = (m.add(&qt), m.sub(&qt));
            assert!(minus.contains(&sym_part), "{name}");
            assert!(plus.contains(&skew_part), "{name}");
            assert_eq!(&sym_part.scale(&half).add(&skew_part.scale(&half)), m, "{name}");
        }
        let report = verify_direct_sum(&alg);
        assert!(report.complete && report.is_direct_sum, "{name}");
        assert_eq!(report.v_dim, biderivation_space(&alg).dim(), "{name}");
    }
}

#[test]
fn frozen_v_dimensions() {
    for (name, dims, direct) in [
        ("L22", (4, 3, 1), true),
        ("heisenberg3", (7, 6, 4), false),
        ("abelian(2)", (4, 4, 4), false),
        ("sl2", (1, 0, 1), true),
        ("so3", (1, 0, 1), true),
        ("sl2_plus_sl2", (2, 0, 2), true),
    ] {
        let r = verify_direct_sum(&catalog(name, 0).unwrap());
        assert_eq!((r.v_dim, r.vplus_dim, r.vminus_dim), dims, "{name}");
        assert_eq!(r.is_direct_sum, direct, "{name}");
    }
}

#[test]
fn symmetric_skew_split_lands_in_subspaces() {
    for name in ["L22", "heisenberg3", "abelian(2)"] {
        let alg = catalog(name, 0).unwrap();
        let sym = constrained_biderivation_space(&alg, Symmetry::Symmetric);
        let skew = constrained_biderivation_space(&alg, Symmetry::Skew);
        let full = biderivation_space(&alg);
        assert_eq!(sym.dim() + skew.dim(), full.dim(), "{name}");
        for b in full.basis() {
            let (s, k) = symmetric_skew_split(&b);
            assert!(sym.contains(&s) && skew.contains(&k), "{name}");
        }
    }
}

#[test]
fn closure_of_small_spaces() {
    for (name, closed) in [("abelian(2)", true), ("L22", true), ("heisenberg3", false), ("sl2", true), ("so3", true)] {
        let r = bider_bracket_closure(&catalog(name, 0).unwrap());
        assert_eq!(r.is_closed(), closed, "{name}");
        if let BracketClosure::NotClosed { commutator, .. } = r {
            assert!(!biderivation_space(&catalog(name, 0).unwrap()).contains(&commutator));
        }
    }
}

#[test]
fn random_combinations_stay_biderivations() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in ["L22", "heisenberg3", "sl2_plus_sl2", "twostep(3,2)"] {
        let alg = catalog(name, 5).unwrap();
        let space = biderivation_space(&alg);
        for _ in 0..5 {
            let coeffs: Vec<_> = (0..space.dim())
                .map(|_| frac(rng.random_range(-9..=9), rng.random_range(1..=5)))
                .collect();
            let flat = space.subspace().combination(&coeffs);
            let b = biderlab_core::Biderivation::from_flat(alg.dim(), &flat);
            assert_eq!(is_biderivation(&alg, &b), Ok(()), "{name}");
            assert_eq!(space.coordinates(&b), Some(coeffs), "{name}");
        }
    }
}

#[test]
fn two_step_properties_on_random_algebras() {
    let mut algebras = vec![catalog("heisenberg3", 0).unwrap()];
    let shapes = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (3, 3)];
    for seed in 0..20u64 {
        let (n, m) = shapes[seed as usize % shapes.len()];
        algebras.push(catalog(&format!("twostep({n},{m})"), seed).unwrap());
    }
    for alg in &algebras {
        assert!(alg.dim() <= 6);
        for b in biderivation_space(alg).basis() {
            let r = two_step_properties(alg, &b).unwrap();
            assert!(r.holds(), "{:?}", r.failures);
        }
    }
}
