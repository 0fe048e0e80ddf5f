//! Loday-Pirashvili cochain complex `C^k(g, V) = Hom(⊗^k g, V)` and its cohomology.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::cochain::{encode_multi_index, multi_index_count, Cochain, MultiIndices};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix};
use crate::rational::{sign, Rational};
use crate::rep::Representation;

pub const DEFAULT_MAX_DEGREE: usize = 3;
pub const MAX_DEGREE_CAP: usize = 6;
/// Largest cochain table (in coefficients) a dimension computation may build.
pub const MAX_COEFFICIENTS: usize = 1_000_000;

fn check_shape(rep: &Representation, c: &Cochain) -> Result<()> {
    if c.arity_dim() != rep.algebra().dim() {
        return Err(Error::DimensionMismatch {
            context: "cochain arity dimension",
            expected: rep.algebra().dim(),
            found: c.arity_dim(),
        });
    }
    if c.codomain_dim() != rep.dim_v() {
        return Err(Error::DimensionMismatch {
            context: "cochain codomain dimension",
            expected: rep.dim_v(),
            found: c.codomain_dim(),
        });
    }
    Ok(())
}

fn add_into(out: &mut [Rational], s: &Rational, v: &[Rational]) {
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += s * x;
        }
    }
}

/// The coboundary `∂c` evaluated term by term on every basis multi-index.
///
/// ```text
/// ∂c(x_1..x_{k+1}) = Σ_{i≤k} (-1)^{i+1} l_{x_i} c(..x̂_i..)
///                  + (-1)^{k+1} r_{x_{k+1}} c(x_1..x_k)
///                  + Σ_{i<j} (-1)^i c(..x̂_i.., x_{j-1}, [x_i,x_j], x_{j+1}..)
/// ```
///
/// At `k = 0` only the middle term survives: `∂c(x) = -r_x c`.
pub fn coboundary(rep: &Representation, c: &Cochain) -> Result<Cochain> {
    check_shape(rep, c)?;
    let alg = rep.algebra();
    let n = alg.dim();
    let m = rep.dim_v();
    let k = c.degree();
    let mut out = Cochain::zero(k + 1, n, m);
    let mut reduced = vec![0usize; k];
    for x in MultiIndices::new(n, k + 1) {
        let mut value = vec![Rational::zero(); m];
        for i in 0..k {
            remove_slot(&x, i, &mut reduced);
            let inner = c.value(&reduced);
            let acted = rep.left()[x[i]].mul_vec(inner);
            add_into(&mut value, &sign(i % 2 == 1), &acted);
        }
        let acted = rep.right()[x[k]].mul_vec(c.value(&x[..k]));
        add_into(&mut value, &sign(k % 2 == 0), &acted);
        for i in 0..=k {
            for j in i + 1..=k {
                let bracket = alg.basis_bracket(x[i], x[j]);
                if bracket.iter().all(Zero::is_zero) {
                    continue;
                }
                remove_slot(&x, i, &mut reduced);
                let inner = c.value_with_vector(&mut reduced, j - 1, bracket);
                add_into(&mut value, &sign(i % 2 == 0), &inner);
            }
        }
        out.value_mut(&x).clone_from_slice(&value);
    }
    Ok(out)
}

fn remove_slot(x: &[usize], i: usize, out: &mut [usize]) {
    let mut p = 0;
    for (q, &v) in x.iter().enumerate() {
        if q != i {
            out[p] = v;
            p += 1;
        }
    }
}

pub fn is_cocycle(rep: &Representation, c: &Cochain) -> Result<bool> {
    Ok(coboundary(rep, c)?.is_zero())
}

/// Matrix of `∂: C^k → C^{k+1}` in the row-major multi-index bases.
///
/// Shape `(n^{k+1} m) × (n^k m)`. Column `(y, b)` is the image of the cochain
/// sending `y` to the `b`-th basis vector and every other multi-index to zero.
pub fn coboundary_matrix(rep: &Representation, k: usize) -> SparseMatrix {
    let alg = rep.algebra();
    let n = alg.dim();
    let m = rep.dim_v();
    let rows = multi_index_count(n, k + 1) * m;
    let cols = multi_index_count(n, k) * m;
    let mut maps: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); rows];
    let mut reduced = vec![0usize; k];
    for x in MultiIndices::new(n, k + 1) {
        let row_base = encode_multi_index(n, &x) * m;
        let push = |maps: &mut Vec<BTreeMap<usize, Rational>>, a: usize, col: usize, v: Rational| {
            *maps[row_base + a].entry(col).or_insert_with(Rational::zero) += v;
        };
        for i in 0..k {
            remove_slot(&x, i, &mut reduced);
            let col_base = encode_multi_index(n, &reduced) * m;
            let s = sign(i % 2 == 1);
            let l = &rep.left()[x[i]];
            for a in 0..m {
                for b in 0..m {
                    if !l[(a, b)].is_zero() {
                        push(&mut maps, a, col_base + b, &s * &l[(a, b)]);
                    }
                }
            }
        }
        {
            let col_base = encode_multi_index(n, &x[..k]) * m;
            let s = sign(k % 2 == 0);
            let r = &rep.right()[x[k]];
            for a in 0..m {
                for b in 0..m {
                    if !r[(a, b)].is_zero() {
                        push(&mut maps, a, col_base + b, &s * &r[(a, b)]);
                    }
                }
            }
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let s = sign(i % 2 == 0);
                for (t, coef) in alg.basis_bracket_terms(x[i], x[j]) {
                    remove_slot(&x, i, &mut reduced);
                    reduced[j - 1] = t;
                    let col_base = encode_multi_index(n, &reduced) * m;
                    let v = &s * coef;
                    for a in 0..m {
                        push(&mut maps, a, col_base + a, v.clone());
                    }
                }
            }
        }
    }
    SparseMatrix::from_row_maps(rows, cols, maps)
}

/// Dense version of [`coboundary_matrix`].
pub fn coboundary_matrix_dense(rep: &Representation, k: usize) -> Matrix {
    coboundary_matrix(rep, k).to_dense()
}

/// Rank of the coboundary `∂_k`, eliminating along the shorter side.
pub fn coboundary_rank(rep: &Representation, k: usize) -> usize {
    let d = coboundary_matrix(rep, k);
    if d.rows() > d.cols() {
        d.transpose().rank()
    } else {
        d.rank()
    }
}

pub(crate) fn guard_size(n: usize, m: usize, max_degree: usize) -> Result<()> {
    if max_degree > MAX_DEGREE_CAP {
        return Err(Error::OutOfRange {
            what: "max degree",
            value: max_degree,
            min: 0,
            max: MAX_DEGREE_CAP,
        });
    }
    let coefficients = multi_index_count(n, max_degree + 1).saturating_mul(m);
    if coefficients > MAX_COEFFICIENTS {
        return Err(Error::TooLarge {
            coefficients,
            limit: MAX_COEFFICIENTS,
        });
    }
    Ok(())
}

/// Dimensions of `H^k(g; l, r)` for `k = 0..=max_degree`.
///
/// `dim H^k = (dim C^k - rank ∂_k) - rank ∂_{k-1}`. The per-degree ranks are
/// independent and computed in parallel.
pub fn cohomology_dims(rep: &Representation, max_degree: usize) -> Result<Vec<usize>> {
    rep.require_valid()?;
    let n = rep.algebra().dim();
    let m = rep.dim_v();
    guard_size(n, m, max_degree)?;
    let ranks: Vec<usize> = (0..=max_degree)
        .into_par_iter()
        .map(|k| coboundary_rank(rep, k))
        .collect();
    Ok(dims_from_ranks(n, m, &ranks))
}

pub(crate) fn dims_from_ranks(n: usize, m: usize, ranks: &[usize]) -> Vec<usize> {
    ranks
        .iter()
        .enumerate()
        .map(|(k, &rk)| {
            let cochains = multi_index_count(n, k) * m;
            let previous = if k == 0 { 0 } else { ranks[k - 1] };
            let kernel = cochains - rk;
            assert!(previous <= kernel, "rank ∂_(k-1) exceeds dim ker ∂_k at k = {k}");
            kernel - previous
        })
        .collect()
}
