//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so
//! the lines are printed even when everything passes.

use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use biderlab::run;
use biderlab_core::biderivations::{
    biderivation_from_phi, biderivation_space, constrained_biderivation_space, extract_phi_psi, is_biderivation,
    two_step_properties,
};
use biderlab_core::derivations::{
    commuting_map_space, derivation_space, flatten_map, is_complete, skew_commuting_map_space, unflatten_map,
};
use biderlab_core::liealg::catalog;
use biderlab_core::rational::frac;
use biderlab_core::vdecomp::{compute_v, compute_vpm, VSpace};
use biderlab_core::{Biderivation, LieAlgebra, Matrix, Rational, Subspace, Symmetry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Workspace(tempfile::TempDir);

impl Workspace {
    fn catalog(&self, name: &str) -> PathBuf {
        let out = run(["biderlab", "catalog", name]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        self.write(&format!("{name}.json"), &out.stdout)
    }

    fn write(&self, file: &str, text: &str) -> PathBuf {
        let path = self.0.path().join(file);
        std::fs::write(&path, text).unwrap();
        path
    }
}

/// Runs the CLI with `--json` and returns `(exit code, results)`.
fn cli(args: &[&str]) -> (i32, Value) {
    let out = run(["biderlab"].iter().chain(args).chain(&["--json"]).copied());
    let value = serde_json::from_str::<Value>(&out.stdout)
        .map(|v| v["results"].clone())
        .unwrap_or(Value::Null);
    (out.code, value)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn alg(name: &str) -> LieAlgebra {
    catalog(name, 0).unwrap()
}

fn structure_multiple(a: &LieAlgebra, b: &Biderivation) -> Option<Rational> {
    let mats = a.structure_matrices();
    let n = a.dim();
    let (k, i, j) = (0..n)
        .flat_map(|k| (0..n).flat_map(move |i| (0..n).map(move |j| (k, i, j))))
        .find(|&(k, i, j)| mats.matrices()[k][(i, j)] != Rational::default())?;
    let lambda = &b.matrices()[k][(i, j)] / &mats.matrices()[k][(i, j)];
    mats.matrices()
        .iter()
        .zip(b.matrices())
        .all(|(a, b)| a.scale(&lambda) == *b)
        .then_some(lambda)
}

const COMPLETE: &[&str] = &["L22", "sl2", "so3", "sl2_plus_sl2", "sl3"];

fn criterion_1(ws: &Workspace) -> Check {
    let mut notes = Vec::new();
    for (name, budget) in [("sl2", 1), ("sl3", 30)] {
        let file = ws.catalog(name);
        let start = Instant::now();
        let (code, r) = cli(&["biderivations", path_str(&file)]);
        let elapsed = start.elapsed();
        ensure!(code == 0 && r["dim"] == 1, "{name}: dim {}", r["dim"]);
        ensure!(elapsed < Duration::from_secs(budget), "{name}: {elapsed:?} over {budget}s");
        let b = &biderivation_space(&alg(name)).basis()[0];
        let lambda = structure_multiple(&alg(name), b);
        ensure!(lambda.is_some(), "{name}: basis element is not a multiple of (A_1, …, A_n)");
        notes.push(format!("{name} dim 1, λ = {}, {:.2?}", lambda.unwrap(), elapsed));
    }
    Ok(notes.join("; "))
}

fn criterion_2() -> Check {
    let l = alg("sl2_plus_sl2");
    let space = biderivation_space(&l);
    ensure!(space.dim() == 2, "dim BiDer = {}", space.dim());
    for b in space.basis() {
        let pair = extract_phi_psi(&l, &b).map_err(|e| e.to_string())?;
        ensure!(pair.p == pair.q, "P ≠ Q");
        ensure!(pair.p.block(0, 3, 3, 3).is_zero() && pair.p.block(3, 0, 3, 3).is_zero(), "P not block diagonal");
        for s in [0, 3] {
            let block = pair.p.block(s, s, 3, 3);
            ensure!(block == Matrix::scalar(3, block[(0, 0)].clone()), "block at {s} is not scalar");
        }
    }
    Ok("dim 2, P = Q block-scalar on both basis elements".into())
}

fn criterion_3() -> Check {
    for name in ["sl2", "sl3", "sl2_plus_sl2"] {
        ensure!(is_complete(&alg(name)).complete, "{name} should be complete");
    }
    let mut incomplete: Vec<String> = (1..=4).map(|n| format!("abelian({n})")).collect();
    incomplete.push("heisenberg3".into());
    incomplete.extend((0..5).map(|s| format!("twostep({},{})", 2 + s % 3, 1 + s % 2)));
    for name in &incomplete {
        ensure!(!is_complete(&catalog(name, 9).unwrap()).complete, "{name} should not be complete");
    }
    // [e1,e2] = e1 has trivial center and only inner derivations
    let l22 = is_complete(&alg("L22"));
    ensure!(l22.complete && l22.der_dim == 2 && l22.center_dim == 0, "L22: {l22:?}");
    let (der_sl2, der_h3) = (derivation_space(&alg("sl2")).dim(), derivation_space(&alg("heisenberg3")).dim());
    ensure!(der_sl2 == 3 && der_h3 == 6, "dim Der(sl2) = {der_sl2}, dim Der(h3) = {der_h3}");
    Ok("sl2, sl3, sl2+sl2 complete; abelian(1..4), h3, twostep not; L22 complete (Der = ad, dim 2); Der(sl2)=3, Der(h3)=6".into())
}

fn criterion_4(ws: &Workspace) -> Check {
    let l22 = ws.catalog("L22");
    let pair = ws.write("l22-pair.json", r#"{"dim": 2, "mats": [[["0","0"],["0","1"]], [["1","0"],["0","0"]]]}"#);
    let (code, r) = cli(&["check-bider", path_str(&l22), path_str(&pair)]);
    ensure!(code == 1, "exit code {code}");
    let v = &r["violation"];
    ensure!(v["condition"] == 1, "condition {}", v["condition"]);
    ensure!(v["triple"] == serde_json::json!([0, 1, 0]), "triple {}", v["triple"]);
    ensure!(v["residual"] == serde_json::json!(["0", "1"]), "residual {}", v["residual"]);
    Ok("condition (1) at ([e1,e2],e1), residual e2, exit 1".into())
}

fn criterion_5() -> Check {
    for n in 1..=3usize {
        let a = LieAlgebra::abelian(n);
        let dims = (
            biderivation_space(&a).dim(),
            constrained_biderivation_space(&a, Symmetry::Symmetric).dim(),
            constrained_biderivation_space(&a, Symmetry::Skew).dim(),
        );
        let expected = (n.pow(3), n * n * (n + 1) / 2, n * n * (n - 1) / 2);
        ensure!(dims == expected, "abelian({n}): {dims:?} vs {expected:?}");
    }
    Ok("n³, n²(n+1)/2, n²(n−1)/2 for n = 1, 2, 3".into())
}

fn criterion_6(ws: &Workspace) -> Check {
    for (name, dims, direct, inter) in [
        ("sl2", [1, 0, 1], true, 0),
        ("sl2_plus_sl2", [2, 0, 2], true, 0),
        ("abelian(2)", [4, 4, 4], false, 4),
    ] {
        let file = ws.catalog(name);
        let (code, r) = cli(&["vdecomp", path_str(&file)]);
        let got = [&r["v_dim"], &r["vplus_dim"], &r["vminus_dim"]].map(|v| v.as_u64().unwrap_or(u64::MAX) as usize);
        ensure!(got == dims, "{name}: {got:?}");
        ensure!(r["direct_sum"] == direct, "{name}: direct sum {}", r["direct_sum"]);
        ensure!(r["intersection_dim"] == inter, "{name}: intersection {}", r["intersection_dim"]);
        ensure!(code == if direct { 0 } else { 1 }, "{name}: exit {code}");
    }
    Ok("sl2 (1,0,1), sl2+sl2 (2,0,2) direct; abelian(2) not direct, intersection 4".into())
}

fn small_catalog() -> Vec<(String, LieAlgebra)> {
    let mut names: Vec<String> = (1..=6).map(|n| format!("abelian({n})")).collect();
    names.extend(["L22", "heisenberg3", "sl2", "so3", "sl2_plus_sl2"].map(String::from));
    names.extend(["twostep(2,1)", "twostep(3,1)", "twostep(3,2)", "twostep(4,2)", "twostep(3,3)"].map(String::from));
    names.into_iter().map(|n| (n.clone(), catalog(&n, 3).unwrap())).collect()
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut full = Vec::new();
    let mut count = 0;
    for (name, a) in small_catalog() {
        let n = a.dim();
        ensure!(n <= 6, "{name} too large");
        let space = biderivation_space(&a);
        for b in space.basis() {
            ensure!(is_biderivation(&a, &b).is_ok(), "{name}: basis element fails the direct check");
        }
        if space.dim() == n.pow(3) {
            // nothing lies outside the space
            full.push(name);
            continue;
        }
        let mut rejected = 0;
        while rejected < 100 {
            let flat: Vec<Rational> = (0..n.pow(3)).map(|_| frac(rng.random_range(-3..=3), 1)).collect();
            let b = Biderivation::from_flat(n, &flat);
            if space.contains(&b) {
                continue;
            }
            ensure!(is_biderivation(&a, &b).is_err(), "{name}: tuple outside the space passes");
            rejected += 1;
        }
        count += 1;
    }
    Ok(format!(
        "bases verified on all; 100 outside tuples fail on {count} algebras; sampling skipped where BiDer is everything: {}",
        full.join(", ")
    ))
}

fn criterion_8() -> Check {
    for &name in COMPLETE {
        let a = alg(name);
        let n = a.dim();
        for (mode, maps) in [
            (Symmetry::Symmetric, skew_commuting_map_space(&a)),
            (Symmetry::Skew, commuting_map_space(&a)),
        ] {
            let space = constrained_biderivation_space(&a, mode);
            ensure!(space.dim() == maps.dim(), "{name} {mode:?}: {} vs {}", space.dim(), maps.dim());
            let mut phis = Vec::new();
            for b in space.basis() {
                let pair = extract_phi_psi(&a, &b).map_err(|e| format!("{name}: {e}"))?;
                let expected_q = match mode {
                    Symmetry::Symmetric => pair.p.scale(&frac(-1, 1)),
                    Symmetry::Skew => pair.p.clone(),
                };
                ensure!(pair.q == expected_q, "{name} {mode:?}: wrong sign relation");
                ensure!(biderivation_from_phi(&a, &pair.p) == b, "{name}: B -> φ -> B does not round-trip");
                phis.push(flatten_map(&pair.p));
            }
            ensure!(Subspace::span(n * n, &phis) == maps, "{name} {mode:?}: φ's do not span the map space");
            for f in maps.basis() {
                let b = biderivation_from_phi(&a, &unflatten_map(n, f));
                ensure!(space.contains(&b), "{name} {mode:?}: map does not give a biderivation");
                let back = extract_phi_psi(&a, &b).map_err(|e| e.to_string())?;
                ensure!(flatten_map(&back.p) == *f, "{name}: f -> B -> f does not round-trip");
            }
        }
    }
    Ok(format!("P = -Q on symmetric, P = Q on skew, dims and bijections on {}", COMPLETE.join(", ")))
}

fn criterion_9() -> Check {
    let mut algebras = vec![alg("heisenberg3")];
    let shapes = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (3, 3), (2, 3), (5, 1)];
    for seed in 0..20u64 {
        let (n, m) = shapes[seed as usize % shapes.len()];
        algebras.push(catalog(&format!("twostep({n},{m})"), seed).unwrap());
    }
    let mut checked = 0;
    for a in &algebras {
        ensure!(a.dim() <= 6 && a.is_two_step(), "bad sample");
        for b in biderivation_space(a).basis() {
            let r = two_step_properties(a, &b).map_err(|e| e.to_string())?;
            ensure!(r.holds(), "failures {:?}", r.failures);
            checked += 1;
        }
    }
    Ok(format!("h3 and 20 random two-step algebras, {checked} basis biderivations"))
}

fn criterion_10() -> Check {
    let half = frac(1, 2);
    let mut count = 0;
    for &name in COMPLETE {
        let a = alg(name);
        let VSpace { v, witnesses } = compute_v(&a);
        let (plus, minus) = compute_vpm(&a);
        for (m, q) in v.basis().iter().zip(&witnesses) {
            let qt = q.transpose();
            let (s, k) = (m.add(&qt), m.sub(&qt));
            ensure!(minus.contains(&s), "{name}: M + Qᵀ ∉ V-");
            ensure!(plus.contains(&k), "{name}: M - Qᵀ ∉ V+");
            ensure!(s.scale(&half).add(&k.scale(&half)) == *m, "{name}: reconstruction");
            count += 1;
        }
    }
    Ok(format!("{count} basis matrices of V on {}", COMPLETE.join(", ")))
}

fn main() -> ExitCode {
    let ws = Workspace(tempfile::tempdir().unwrap());
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("simple case: BiDer(sl2), BiDer(sl3) one-dimensional", Box::new(|| criterion_1(&ws))),
        ("semisimple case: sl2+sl2 block scalars", Box::new(criterion_2)),
        ("completeness gate", Box::new(criterion_3)),
        ("L22 non-example", Box::new(|| criterion_4(&ws))),
        ("abelian counts", Box::new(criterion_5)),
        ("V decomposition", Box::new(|| criterion_6(&ws))),
        ("oracle equivalence", Box::new(criterion_7)),
        ("symmetric/skew correspondences", Box::new(criterion_8)),
        ("two-step nilpotent properties", Box::new(criterion_9)),
        ("decomposition constructions", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {label} [{secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {label} [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
