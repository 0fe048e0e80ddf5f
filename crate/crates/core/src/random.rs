//! Seeded generators for randomized checks.
//!
//! All generators draw from a caller-supplied RNG so that a seed fully
//! determines every instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::LeibnizAlgebra;
use crate::catalog;
use crate::cochain::Cochain;
use crate::linalg::{inverse, rref_rank, Matrix};
use crate::omni::{is_embedding_tensor, phi_of, theta_is_surjective, OmniRep};
use crate::rational::{frac, int, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational: mostly integers in `-3..=3`, sometimes halves or thirds.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.random_range(-3i64..=3);
    match rng.random_range(0..6) {
        0 => frac(num, 2),
        1 => frac(num, 3),
        _ => int(num),
    }
}

/// Like [`small_rational`] but zero with probability `zero_prob`.
pub fn sparse_rational(rng: &mut impl Rng, zero_prob: f64) -> Rational {
    if rng.random_bool(zero_prob) {
        int(0)
    } else {
        small_rational(rng)
    }
}

pub fn vector(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small_rational(rng)).collect()
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

pub fn sparse_matrix(rng: &mut impl Rng, rows: usize, cols: usize, zero_prob: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| sparse_rational(rng, zero_prob))
}

pub fn invertible_matrix(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| int(rng.random_range(-2i64..=2)));
        if inverse(&m).is_some() {
            return m;
        }
    }
}

pub fn cochain(rng: &mut impl Rng, degree: usize, arity_dim: usize, codomain_dim: usize) -> Cochain {
    let len = arity_dim.pow(degree as u32) * codomain_dim;
    let coeffs = (0..len).map(|_| sparse_rational(rng, 0.4)).collect();
    Cochain::from_coeffs(degree, arity_dim, codomain_dim, coeffs).expect("matching length")
}

/// Random structure constants with roughly `density` nonzero entries; usually not Leibniz.
pub fn structure_table(rng: &mut impl Rng, dim: usize, density: f64) -> LeibnizAlgebra {
    let constants = (0..dim * dim * dim)
        .map(|_| sparse_rational(rng, 1.0 - density))
        .collect();
    LeibnizAlgebra::new(dim, constants).expect("n^3 constants")
}

/// A catalog algebra of the given dimension rewritten in a random basis.
pub fn leibniz_algebra(rng: &mut impl Rng, dim: usize) -> LeibnizAlgebra {
    let candidates: Vec<LeibnizAlgebra> = catalog::algebras()
        .into_iter()
        .map(|(_, a)| a)
        .filter(|a| a.dim() == dim)
        .collect();
    let base = if candidates.is_empty() {
        LeibnizAlgebra::abelian(dim)
    } else {
        candidates[rng.random_range(0..candidates.len())].clone()
    };
    let p = invertible_matrix(rng, dim);
    base.change_basis(&p).expect("invertible change of basis")
}

/// Left multiplications of a random Leibniz algebra: always an embedding tensor.
pub fn embedding_tensor(rng: &mut impl Rng, dim: usize) -> Vec<Matrix> {
    let alg = leibniz_algebra(rng, dim);
    (0..dim).map(|i| alg.left_mult(i)).collect()
}

/// Arbitrary `φ: V → gl(V)`; for `dim ≥ 1` almost never an embedding tensor.
pub fn phi_map(rng: &mut impl Rng, dim: usize) -> Vec<Matrix> {
    (0..dim).map(|_| sparse_matrix(rng, dim, dim, 0.5)).collect()
}

/// A `ρ` with image in the graph of an embedding tensor `φ`, together with that `φ`.
#[derive(Debug, Clone)]
pub struct GraphInstance {
    pub algebra_name: &'static str,
    pub rho: OmniRep,
    pub phi: Vec<Matrix>,
}

/// The map `φ(u) v = θ([s(u), s(v)])` for a section `s` of a surjective `θ`.
///
/// When `ker θ` is compatible with the bracket this is the unique `φ` whose
/// graph contains `ρ = φ∘θ + θ`; otherwise the result is rejected later.
fn phi_through_section(alg: &LeibnizAlgebra, theta: &[Vec<Rational>], d: usize) -> Option<Vec<Matrix>> {
    let n = alg.dim();
    let t = Matrix::from_fn(d, n, |a, i| theta[i][a].clone());
    let pivots = rref_rank(&t).pivot_columns;
    if pivots.len() < d {
        return None;
    }
    let b = Matrix::from_fn(d, d, |a, c| t[(a, pivots[c])].clone());
    let b_inv = inverse(&b)?;
    let section = |u: &[Rational]| {
        let w = b_inv.mul_vec(u);
        let mut x = vec![int(0); n];
        for (c, &p) in pivots.iter().enumerate() {
            x[p] = w[c].clone();
        }
        x
    };
    let unit = |a: usize| (0..d).map(|k| int((k == a) as i64)).collect::<Vec<_>>();
    let phi = (0..d)
        .map(|a| {
            let su = section(&unit(a));
            let cols: Vec<Vec<Rational>> = (0..d)
                .map(|c| {
                    let br = alg.bracket(&su, &section(&unit(c))).expect("matching dims");
                    t.mul_vec(&br)
                })
                .collect();
            Matrix::from_fn(d, d, |r, c| cols[c][r].clone())
        })
        .collect();
    Some(phi)
}

/// Searches for admissible `(φ, θ)` pairs with `d ≤ max_dim_v`.
///
/// For each catalog algebra and each trial, draws a map `θ: g → V` onto `V`
/// with entries in `{-1, 0, 1}` and takes `φ` either zero or induced through
/// a section of `θ`. The pair is kept when `φ` is an embedding tensor and
/// `ρ = φ∘θ + θ` is an omni-representation.
pub fn graph_instances(seed: u64, max_dim_v: usize, trials_per_algebra: usize) -> Vec<GraphInstance> {
    let mut rng = rng(seed);
    let mut found = Vec::new();
    for (name, alg) in catalog::algebras() {
        let n = alg.dim();
        for _ in 0..trials_per_algebra {
            let d = rng.random_range(1..=max_dim_v.min(n));
            let theta: Vec<Vec<Rational>> = (0..n)
                .map(|_| (0..d).map(|_| int(rng.random_range(-1i64..=1))).collect())
                .collect();
            let phi = if rng.random_bool(0.2) {
                vec![Matrix::zeros(d, d); d]
            } else {
                match phi_through_section(&alg, &theta, d) {
                    Some(phi) => phi,
                    None => continue,
                }
            };
            if !is_embedding_tensor(&phi) {
                continue;
            }
            let matrices = theta.iter().map(|t| phi_of(&phi, t)).collect();
            let Ok(rho) = OmniRep::new(alg.clone(), d, matrices, theta) else {
                continue;
            };
            if theta_is_surjective(&rho) && rho.is_valid() {
                found.push(GraphInstance {
                    algebra_name: name,
                    rho,
                    phi,
                });
            }
        }
    }
    found
}
