//! Built-in algebras with fixed basis conventions.
//!
//! | name            | basis                                  | relations                                        |
//! |-----------------|----------------------------------------|--------------------------------------------------|
//! | `abelian(n)`    | `e1..en`                               | none                                             |
//! | `L22`           | `e1, e2`                               | `[e1,e2] = e1`                                   |
//! | `heisenberg3`   | `e1, e2, e3`                           | `[e1,e2] = e3`                                   |
//! | `sl2`           | `e, f, h` (Chevalley)                  | `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`         |
//! | `so3`           | `e1, e2, e3`                           | `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`   |
//! | `sl3`           | `E12 E13 E23 E21 E31 E32 H1 H2`        | matrix commutators, `H1 = E11-E22`, `H2 = E22-E33` |
//! | `sl2_plus_sl2`  | `e1 f1 h1 e2 f2 h2`, factors `(3, 3)`  | two commuting copies of `sl2`                    |
//! | `twostep(n,m)`  | `x1..xn, z1..zm`                       | `[xi,xj] = Σ r z`, `r ∈ [-2, 2]` drawn from the seed |

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{default_names, LieAlgebra};
use crate::error::AlgebraError;
use crate::rational::{self, Rational};

/// Catalog entries as `(syntax, description)`.
pub const CATALOG: &[(&str, &str)] = &[
    ("abelian(n)", "n-dimensional abelian algebra"),
    ("L22", "2-dimensional non-abelian algebra, [e1,e2] = e1"),
    ("heisenberg3", "3-dimensional Heisenberg algebra, [e1,e2] = e3"),
    ("sl2", "sl(2) in the Chevalley basis e, f, h"),
    ("sl3", "sl(3) in the basis E12 E13 E23 E21 E31 E32 H1 H2"),
    ("sl2_plus_sl2", "sl(2) + sl(2) with factors (3,3)"),
    ("so3", "so(3), [e1,e2] = e3 and cyclic"),
    ("twostep(n,m)", "random two-step nilpotent algebra, n generators over an m-dimensional center (uses the seed)"),
];

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(name, _)| *name)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|&s| s.to_owned()).collect()
}

fn parse_args(name: &str, prefix: &str) -> Option<Vec<usize>> {
    let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

/// Looks up a catalog algebra. `seed` only affects `twostep(n,m)`.
pub fn catalog(name: &str, seed: u64) -> Result<LieAlgebra, AlgebraError> {
    let unknown = || AlgebraError::UnknownName(name.to_owned());
    match name {
        "L22" => LieAlgebra::from_int_brackets(names(&["e1", "e2"]), &[(0, 1, &[(0, 1)])], None),
        "heisenberg3" => {
            LieAlgebra::from_int_brackets(names(&["e1", "e2", "e3"]), &[(0, 1, &[(2, 1)])], None)
        }
        "sl2" => sl2(&["e", "f", "h"]),
        "so3" => LieAlgebra::from_int_brackets(
            names(&["e1", "e2", "e3"]),
            &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])],
            None,
        ),
        "sl3" => Ok(sl3()),
        "sl2_plus_sl2" => {
            let a = sl2(&["e1", "f1", "h1"])?;
            let b = sl2(&["e2", "f2", "h2"])?;
            Ok(a.direct_sum(&b))
        }
        _ => {
            if let Some(args) = parse_args(name, "abelian") {
                match args[..] {
                    [n] => Ok(LieAlgebra::abelian(n)),
                    _ => Err(unknown()),
                }
            } else if let Some(args) = parse_args(name, "twostep") {
                match args[..] {
                    [n, m] => Ok(twostep(n, m, seed)),
                    _ => Err(unknown()),
                }
            } else {
                Err(unknown())
            }
        }
    }
}

fn sl2(labels: &[&str; 3]) -> Result<LieAlgebra, AlgebraError> {
    // basis order (e, f, h)
    LieAlgebra::from_int_brackets(
        names(labels),
        &[(0, 1, &[(2, 1)]), (2, 0, &[(0, 2)]), (2, 1, &[(1, -2)])],
        None,
    )
}

/// `sl(3)`: constants read off 3×3 matrix commutators.
fn sl3() -> LieAlgebra {
    type M3 = [[i64; 3]; 3];
    let unit = |a: usize, b: usize| {
        let mut m: M3 = [[0; 3]; 3];
        m[a][b] = 1;
        m
    };
    let offdiag = [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)];
    let mut basis: Vec<M3> = offdiag.iter().map(|&(a, b)| unit(a, b)).collect();
    basis.push([[1, 0, 0], [0, -1, 0], [0, 0, 0]]);
    basis.push([[0, 0, 0], [0, 1, 0], [0, 0, -1]]);

    let mul = |x: &M3, y: &M3| {
        let mut out: M3 = [[0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|t| x[i][t] * y[t][j]).sum();
            }
        }
        out
    };
    let coords = |m: &M3| {
        let mut c = [0i64; 8];
        for (idx, &(a, b)) in offdiag.iter().enumerate() {
            c[idx] = m[a][b];
        }
        // diag(d0, d1, d2) = d0 H1 + (-d2) H2, trace zero forces d1 = -d0 - d2
        c[6] = m[0][0];
        c[7] = -m[2][2];
        debug_assert_eq!(m[1][1], -m[0][0] - m[2][2]);
        c
    };

    let mut constants = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let xy = mul(&basis[i], &basis[j]);
            let yx = mul(&basis[j], &basis[i]);
            let mut comm: M3 = [[0; 3]; 3];
            for a in 0..3 {
                for b in 0..3 {
                    comm[a][b] = xy[a][b] - yx[a][b];
                }
            }
            for (k, c) in coords(&comm).into_iter().enumerate() {
                if c != 0 {
                    constants.push(((i, j, k), rational::int(c)));
                }
            }
        }
    }
    LieAlgebra::new(
        names(&["E12", "E13", "E23", "E21", "E31", "E32", "H1", "H2"]),
        constants,
        None,
    )
    .expect("sl3 satisfies Jacobi")
}

/// Random two-step nilpotent algebra: `n` generators whose brackets land in
/// an `m`-dimensional central ideal. Jacobi holds because every bracket of
/// three elements passes through the center.
fn twostep(n: usize, m: usize, seed: u64) -> LieAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = default_names("x", n);
    labels.extend((1..=m).map(|i| format!("z{i}")));
    let mut constants: Vec<((usize, usize, usize), Rational)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..m {
                let c: i64 = rng.random_range(-2..=2);
                if c != 0 {
                    constants.push(((i, j, n + k), rational::int(c)));
                }
            }
        }
    }
    LieAlgebra::new(labels, constants, None).expect("two-step tables satisfy Jacobi")
}
