use biderlab_core::derivations::is_complete;
use biderlab_core::liealg::catalog;
use biderlab_core::rational::{frac, zero};
use biderlab_core::{LieAlgebra, Rational};
use proptest::prelude::*;

const FIXED: &[&str] = &[
    "abelian(1)",
    "abelian(3)",
    "L22",
    "heisenberg3",
    "sl2",
    "so3",
    "sl2_plus_sl2",
    "sl3",
];

fn algebra() -> impl Strategy<Value = LieAlgebra> {
    prop_oneof![
        proptest::sample::select(FIXED).prop_map(|name| catalog(name, 0).unwrap()),
        (1usize..=4, 1usize..=3, any::<u64>())
            .prop_map(|(n, m, seed)| catalog(&format!("twostep({n},{m})"), seed).unwrap()),
    ]
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-6i64..=6, 1i64..=3).prop_map(|(p, q)| frac(p, q)), n)
}

fn with_vectors() -> impl Strategy<Value = (LieAlgebra, Vec<Rational>, Vec<Rational>, Vec<Rational>, Rational)> {
    algebra().prop_flat_map(|a| {
        let n = a.dim();
        (Just(a), vector(n), vector(n), vector(n), (-5i64..=5).prop_map(|v| frac(v, 2)))
    })
}

fn axpy(a: &Rational, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(x, y)| a * x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_and_antisymmetric((alg, x, y, z, a) in with_vectors()) {
        let xy = alg.bracket(&x, &y);
        let yx = alg.bracket(&y, &x);
        prop_assert_eq!(axpy(&frac(1, 1), &xy, &yx), vec![zero(); alg.dim()]);
        prop_assert!(alg.bracket(&x, &x).iter().all(|v| *v == zero()));
        let left = alg.bracket(&axpy(&a, &x, &z), &y);
        let right = axpy(&a, &xy, &alg.bracket(&z, &y));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn jacobi_on_random_vectors((alg, x, y, z, _a) in with_vectors()) {
        let t1 = alg.bracket(&x, &alg.bracket(&y, &z));
        let t2 = alg.bracket(&y, &alg.bracket(&z, &x));
        let t3 = alg.bracket(&z, &alg.bracket(&x, &y));
        let sum: Vec<Rational> = t1.iter().zip(&t2).zip(&t3).map(|((a, b), c)| a + b + c).collect();
        prop_assert!(sum.iter().all(|v| *v == zero()));
    }

    #[test]
    fn structure_matrices_reproduce_the_bracket((alg, x, y, _z, _a) in with_vectors()) {
        let a = alg.structure_matrices();
        prop_assert!(a.all_skew_symmetric());
        prop_assert_eq!(a.bracket(&x, &y), alg.bracket(&x, &y));
        for (k, ak) in a.matrices().iter().enumerate() {
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    prop_assert_eq!(&ak[(i, j)], &alg.structure_constant(i, j, k));
                }
            }
        }
    }

    #[test]
    fn adjoint_columns_are_brackets((alg, x, y, _z, _a) in with_vectors()) {
        prop_assert_eq!(alg.adjoint_matrix(&x).mul_vec(&y), alg.bracket(&x, &y));
    }

    #[test]
    fn two_step_iff_derived_in_center(alg in algebra()) {
        let derived_in_center = alg.derived_algebra().is_subspace_of(&alg.center()).unwrap();
        prop_assert_eq!(alg.is_two_step(), derived_in_center);
        let lcs = alg.lower_central_series();
        // L³ = [L, L'] vanishes exactly when L' is central
        let l3_zero = lcs.terms.len() == 1 || lcs.terms[1].is_zero();
        prop_assert_eq!(alg.is_two_step(), l3_zero);
    }
}

#[test]
fn semisimple_implies_centerless_and_complete() {
    for name in FIXED {
        let alg = catalog(name, 0).unwrap();
        let kf = alg.killing_form();
        assert_eq!(kf.semisimple, kf.rank == alg.dim(), "{name}");
        if kf.semisimple {
            assert!(alg.center().is_zero(), "{name}");
            assert!(is_complete(&alg).complete, "{name}");
        }
    }
}

#[test]
fn lower_central_series_of_small_algebras() {
    let h3 = catalog("heisenberg3", 0).unwrap();
    let s = h3.lower_central_series();
    assert_eq!(s.dims(), [1, 0]);
    assert_eq!(s.nilpotency_class, Some(2));

    let l22 = catalog("L22", 0).unwrap();
    let s = l22.lower_central_series();
    assert_eq!(s.nilpotency_class, None);
    assert_eq!(s.dims(), [1, 1]);

    let sl2 = catalog("sl2", 0).unwrap();
    assert_eq!(sl2.lower_central_series().dims(), [3, 3]);
    assert_eq!(LieAlgebra::abelian(4).lower_central_series().nilpotency_class, Some(1));
}

#[test]
fn killing_forms() {
    let sl2 = catalog("sl2", 0).unwrap();
    let kf = sl2.killing_form();
    assert_eq!(kf.determinant, frac(-128, 1));
    // K(h,h) = 8, K(e,f) = 4
    assert_eq!(kf.matrix[(2, 2)], frac(8, 1));
    assert_eq!(kf.matrix[(0, 1)], frac(4, 1));
    assert!(catalog("sl3", 0).unwrap().killing_form().semisimple);
    let h3 = catalog("heisenberg3", 0).unwrap().killing_form();
    assert_eq!((h3.rank, h3.semisimple), (0, false));
    let l22 = catalog("L22", 0).unwrap().killing_form();
    assert_eq!((l22.rank, l22.semisimple), (1, false));
}
