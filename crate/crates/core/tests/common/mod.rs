//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use omnilie::cochain::MultiIndices;
use omnilie::rational::int;
use omnilie::{Cochain, LeibnizAlgebra, Matrix, Rational, Representation};

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| int((k == i) as i64)).collect()
}

/// Rank by fraction-free Bareiss elimination after clearing denominators row by row.
pub fn bareiss_rank(m: &Matrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| num_integer_lcm(&acc, q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut x, mut y) = (a.abs(), b.abs());
    while !y.is_zero() {
        let t = &x % &y;
        x = y;
        y = t;
    }
    (a * b).abs() / x
}

/// Loday-Pirashvili coboundary evaluated term by term on basis tuples (1-based
/// bookkeeping, vector-valued evaluation through `Cochain::eval`).
pub fn brute_coboundary(rep: &Representation, c: &Cochain) -> Cochain {
    let alg = rep.algebra();
    let n = alg.dim();
    let k = c.degree();
    Cochain::from_fn(k + 1, n, rep.dim_v(), |idx| {
        let x: Vec<Vec<Rational>> = idx.iter().map(|&i| unit(n, i)).collect();
        let mut total = vec![Rational::zero(); rep.dim_v()];
        let mut acc = |v: Vec<Rational>, s: i64| {
            for (t, y) in total.iter_mut().zip(v) {
                *t += y * int(s);
            }
        };
        for i in 1..=k {
            let mut args = x.clone();
            let xi = args.remove(i - 1);
            let val = c.eval(&args).unwrap();
            acc(rep.left_of(&xi).mul_vec(&val), if i % 2 == 0 { -1 } else { 1 });
        }
        let val = c.eval(&x[..k]).unwrap();
        acc(rep.right_of(&x[k]).mul_vec(&val), if (k + 1) % 2 == 0 { 1 } else { -1 });
        for i in 1..=k + 1 {
            for j in i + 1..=k + 1 {
                let mut args = x.clone();
                args[j - 1] = alg.bracket(&x[i - 1], &x[j - 1]).unwrap();
                args.remove(i - 1);
                acc(c.eval(&args).unwrap(), if i % 2 == 0 { 1 } else { -1 });
            }
        }
        total
    })
}

/// Matrix of the brute-force coboundary on `C^k`, columns indexed by basis cochains.
pub fn brute_coboundary_matrix(rep: &Representation, k: usize) -> Matrix {
    let n = rep.algebra().dim();
    let m = rep.dim_v();
    let src = n.pow(k as u32) * m;
    let dst = n.pow(k as u32 + 1) * m;
    let mut out = Matrix::zeros(dst, src);
    let cols: Vec<Vec<Rational>> = (0..src)
        .map(|s| {
            let mut coeffs = vec![Rational::zero(); src];
            coeffs[s] = int(1);
            let c = Cochain::from_coeffs(k, n, m, coeffs).unwrap();
            brute_coboundary(rep, &c).into_coeffs()
        })
        .collect();
    for (s, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            if !v.is_zero() {
                out = set(out, r, s, v.clone());
            }
        }
    }
    out
}

fn set(m: Matrix, r: usize, c: usize, v: Rational) -> Matrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data = m.into_vec();
    data[r * cols + c] = v;
    Matrix::from_vec(rows, cols, data).unwrap()
}

/// Cohomology dimensions from brute-force matrices and Bareiss ranks.
pub fn brute_dims(rep: &Representation, max_degree: usize) -> Vec<usize> {
    let n = rep.algebra().dim();
    let m = rep.dim_v();
    let ranks: Vec<usize> = (0..=max_degree)
        .map(|k| bareiss_rank(&brute_coboundary_matrix(rep, k)))
        .collect();
    (0..=max_degree)
        .map(|k| {
            let cochains = n.pow(k as u32) * m;
            let kernel = cochains - ranks[k];
            kernel - if k == 0 { 0 } else { ranks[k - 1] }
        })
        .collect()
}

/// `[x,[y,z]] - [[x,y],z] - [y,[x,z]]` on basis vectors through the vector bracket.
pub fn brute_leibniz_defect(alg: &LeibnizAlgebra, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = alg.dim();
    let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
    let b = |a: &[Rational], c: &[Rational]| alg.bracket(a, c).unwrap();
    let lhs = b(&x, &b(&y, &z));
    let r1 = b(&b(&x, &y), &z);
    let r2 = b(&y, &b(&x, &z));
    (0..n).map(|t| &lhs[t] - &r1[t] - &r2[t]).collect()
}

pub fn brute_is_leibniz(alg: &LeibnizAlgebra) -> bool {
    let n = alg.dim();
    MultiIndices::new(n, 3).all(|idx| {
        brute_leibniz_defect(alg, idx[0], idx[1], idx[2])
            .iter()
            .all(Zero::is_zero)
    })
}

/// `2(α(α(x,y),z) - α(x,α(y,z)) + α(y,α(x,z)))` evaluated directly.
pub fn square_by_hand(alg: &LeibnizAlgebra) -> Cochain {
    let n = alg.dim();
    Cochain::from_fn(3, n, n, |idx| {
        let d = brute_leibniz_defect(alg, idx[0], idx[1], idx[2]);
        d.iter().map(|v| -v * int(2)).collect()
    })
}
