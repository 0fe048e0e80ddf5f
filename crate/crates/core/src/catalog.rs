//! Small named algebras and representations used as fixtures and CLI shortcuts.
//!
//! Brackets below use 1-based basis indices to match the usual `e_1..e_n`.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{int, Rational};
use crate::rep::Representation;

fn table(dim: usize, entries: &[(usize, usize, usize, i64)]) -> LeibnizAlgebra {
    let entries: Vec<(usize, usize, usize, Rational)> = entries
        .iter()
        .map(|&(i, j, k, v)| (i - 1, j - 1, k - 1, int(v)))
        .collect();
    LeibnizAlgebra::from_entries(dim, &entries).expect("catalog indices in range")
}

/// Catalog names in listing order.
pub const ALGEBRA_NAMES: &[&str] = &[
    "abelian1", "abelian2", "abelian3", "L2", "nf3", "lie2", "heis3", "sl2",
];

/// One-line descriptions for `catalog list`.
pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "abelian1" => "abelian, dim 1",
        "abelian2" => "abelian, dim 2",
        "abelian3" => "abelian, dim 3",
        "L2" => "non-Lie Leibniz, dim 2: [e2,e2]=e1",
        "nf3" => "null-filiform Leibniz, dim 3: [e1,e1]=e2, [e1,e2]=e3",
        "lie2" => "non-abelian Lie, dim 2: [e1,e2]=e2",
        "heis3" => "Heisenberg Lie, dim 3: [e1,e2]=e3",
        "sl2" => "sl(2) with [g,g]=g: [e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2",
        _ => return None,
    })
}

pub fn algebra(name: &str) -> Result<LeibnizAlgebra> {
    Ok(match name {
        "abelian1" => LeibnizAlgebra::abelian(1),
        "abelian2" => LeibnizAlgebra::abelian(2),
        "abelian3" => LeibnizAlgebra::abelian(3),
        "L2" => table(2, &[(2, 2, 1, 1)]),
        "nf3" => table(3, &[(1, 1, 2, 1), (1, 2, 3, 1)]),
        "lie2" => table(2, &[(1, 2, 2, 1), (2, 1, 2, -1)]),
        "heis3" => table(3, &[(1, 2, 3, 1), (2, 1, 3, -1)]),
        "sl2" => table(
            3,
            &[
                (1, 2, 3, 1),
                (2, 1, 3, -1),
                (3, 1, 1, 2),
                (1, 3, 1, -2),
                (3, 2, 2, -2),
                (2, 3, 2, 2),
            ],
        ),
        _ => return Err(Error::NotFound(name.to_string())),
    })
}

pub fn algebras() -> Vec<(&'static str, LeibnizAlgebra)> {
    ALGEBRA_NAMES
        .iter()
        .map(|&name| (name, algebra(name).expect("listed name")))
        .collect()
}

/// `[e1,e1]=e2, [e2,e1]=e1`: fails the Leibniz identity at `(e1,e1,e1)`.
pub fn non_leibniz_example() -> LeibnizAlgebra {
    table(2, &[(1, 1, 2, 1), (2, 1, 1, 1)])
}

/// Named representations beyond the trivial and adjoint ones.
pub const REP_NAMES: &[&str] = &["L2_line", "lie2_sym", "sl2_std_sym", "sl2_std_anti"];

fn mats(d: usize, rows: &[&[i64]]) -> Vec<Matrix> {
    rows.iter().map(|m| Matrix::from_i64(d, d, m)).collect()
}

pub fn rep(name: &str) -> Result<Representation> {
    let (alg, d, left, right) = match name {
        // l_{e2} = -1, r_{e2} = 1 on a line
        "L2_line" => ("L2", 1, mats(1, &[&[0], &[-1]]), mats(1, &[&[0], &[1]])),
        // (V, ρ, -ρ) for the defining action of lie2 on Q^2 by ad
        "lie2_sym" => (
            "lie2",
            2,
            mats(2, &[&[0, 0, 0, 1], &[0, 0, -1, 0]]),
            mats(2, &[&[0, 0, 0, -1], &[0, 0, 1, 0]]),
        ),
        "sl2_std_sym" | "sl2_std_anti" => {
            // e = E12, f = E21, h = diag(1, -1)
            let left = mats(2, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, -1]]);
            let right = if name == "sl2_std_sym" {
                left.iter().map(|m| m.scale(&int(-1))).collect()
            } else {
                vec![Matrix::zeros(2, 2); 3]
            };
            ("sl2", 2, left, right)
        }
        _ => return Err(Error::NotFound(name.to_string())),
    };
    Representation::new(algebra(alg)?, d, left, right)
}

/// Every catalog representation: trivial (d = 1) and adjoint for each algebra, then the named ones.
pub fn reps() -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for (name, alg) in algebras() {
        out.push((format!("{name}/trivial"), Representation::trivial(alg.clone(), 1)));
        out.push((format!("{name}/adjoint"), Representation::adjoint(alg)));
    }
    for &name in REP_NAMES {
        out.push((name.to_string(), rep(name).expect("listed name")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_algebra_is_leibniz() {
        for (name, alg) in algebras() {
            assert!(alg.is_leibniz(), "{name}: {:?}", alg.check());
        }
    }

    #[test]
    fn catalog_shape() {
        assert!(ALGEBRA_NAMES.len() >= 7);
        let l2 = algebra("L2").unwrap();
        assert_eq!(l2.constant(1, 1, 0), &int(1));
        assert_eq!(l2.constants().iter().filter(|c| **c != int(0)).count(), 1);
        assert_eq!(algebra("abelian2").unwrap(), LeibnizAlgebra::abelian(2));
        assert!(matches!(algebra("nope"), Err(Error::NotFound(_))));
        for name in ALGEBRA_NAMES {
            assert!(describe(name).is_some());
        }
    }

    #[test]
    fn catalog_covers_required_kinds() {
        assert!(!algebra("L2").unwrap().is_skew());
        assert!(!algebra("nf3").unwrap().is_skew());
        assert!(algebra("lie2").unwrap().is_skew());
        assert!(algebra("heis3").unwrap().is_skew());
        assert_eq!(algebra("sl2").unwrap().derived_subalgebra().len(), 3);
    }

    #[test]
    fn every_rep_is_valid() {
        for (name, rep) in reps() {
            assert!(rep.is_valid(), "{name}: {:?}", rep.check());
        }
    }

    #[test]
    fn non_example_fails() {
        assert!(!non_leibniz_example().is_leibniz());
    }
}
