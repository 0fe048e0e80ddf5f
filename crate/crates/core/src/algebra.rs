//! Finite-dimensional Leibniz algebras given by structure constants.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{row_space_basis, Matrix};
use crate::rational::{format_rational, is_zero_vec, Rational};

/// An algebra with bracket `[e_i, e_j] = sum_k c[i][j][k] e_k`.
///
/// Construction does not require the Leibniz identity; call
/// [`LeibnizAlgebra::check`] (or [`LeibnizAlgebra::validated`]) to enforce it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    dim: usize,
    constants: Vec<Rational>,
}

/// First basis triple (0-based) where the left Leibniz identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]`
    pub defect: Vec<Rational>,
}

impl fmt::Display for LeibnizViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let defect: Vec<String> = self.defect.iter().map(format_rational).collect();
        write!(
            f,
            "Leibniz identity fails at ({},{},{}) with defect [{}]",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            defect.join(", ")
        )
    }
}

impl LeibnizAlgebra {
    /// `constants[(i * n + j) * n + k] = c[i][j][k]`.
    pub fn new(dim: usize, constants: Vec<Rational>) -> Result<Self> {
        let expected = dim * dim * dim;
        if constants.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "structure constants",
                expected,
                found: constants.len(),
            });
        }
        Ok(LeibnizAlgebra { dim, constants })
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra {
            dim,
            constants: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Builds from sparse 0-based `(i, j, k, value)` entries; repeated entries add up.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut alg = LeibnizAlgebra::abelian(dim);
        for (i, j, k, v) in entries {
            for idx in [*i, *j, *k] {
                if idx >= dim {
                    return Err(Error::OutOfRange {
                        what: "basis index",
                        value: idx + 1,
                        min: 1,
                        max: dim,
                    });
                }
            }
            alg.constants[(i * dim + j) * dim + k] += v;
        }
        Ok(alg)
    }

    /// Like [`LeibnizAlgebra::new`] but rejects tables violating the Leibniz identity.
    pub fn validated(dim: usize, constants: Vec<Rational>) -> Result<Self> {
        let alg = LeibnizAlgebra::new(dim, constants)?;
        alg.check().map_err(Error::NotLeibniz)?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    /// Nonzero `(k, c[i][j][k])` pairs.
    pub fn basis_bracket_terms(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.basis_bracket(i, j)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    context: "bracket argument",
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yj;
                for (k, c) in self.basis_bracket_terms(i, j) {
                    out[k] += &s * c;
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication `ad_L(e_i)` as a matrix: column `j` holds `[e_i, e_j]`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    /// Right multiplication `ad_R(e_i)`: column `j` holds `[e_j, e_i]`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(j, i, k).clone())
    }

    /// Defect of the left Leibniz identity on basis elements `(e_i, e_j, e_k)`.
    pub fn leibniz_defect(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        // [e_i, [e_j, e_k]]
        for (s, c) in self.basis_bracket_terms(j, k) {
            for (t, d) in self.basis_bracket_terms(i, s) {
                out[t] += c * d;
            }
        }
        // - [[e_i, e_j], e_k]
        for (s, c) in self.basis_bracket_terms(i, j) {
            for (t, d) in self.basis_bracket_terms(s, k) {
                out[t] -= c * d;
            }
        }
        // - [e_j, [e_i, e_k]]
        for (s, c) in self.basis_bracket_terms(i, k) {
            for (t, d) in self.basis_bracket_terms(j, s) {
                out[t] -= c * d;
            }
        }
        out
    }

    /// Checks the left Leibniz identity, reporting the lexicographically first failing triple.
    pub fn check(&self) -> std::result::Result<(), LeibnizViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let defect = self.leibniz_defect(i, j, k);
                    if !is_zero_vec(&defect) {
                        return Err(LeibnizViolation { i, j, k, defect });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_leibniz(&self) -> bool {
        self.check().is_ok()
    }

    /// True when `[x, y] = -[y, x]` on the basis.
    pub fn is_skew(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// Canonical basis of `[g, g]`: nonzero RREF rows of the span of all `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let mut values = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                values.push(self.basis_bracket(i, j).to_vec());
            }
        }
        row_space_basis(&values, n).0
    }

    /// Structure constants of the algebra written in a new basis `f_a = sum_b p[b][a] e_b`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LeibnizAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "change of basis",
                expected: n,
                found: p.rows().max(p.cols()),
            });
        }
        let p_inv = crate::linalg::inverse(p)
            .ok_or_else(|| Error::Invariant("change-of-basis matrix is singular".into()))?;
        let mut constants = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                let bracket = self.bracket(&p.column(a), &p.column(b))?;
                constants.extend(p_inv.mul_vec(&bracket));
            }
        }
        LeibnizAlgebra::new(n, constants)
    }
}

impl fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket_terms(i, j) {
                    entries.push(format!("[e{},e{}]_{}={}", i + 1, j + 1, k + 1, format_rational(c)));
                }
            }
        }
        write!(f, "LeibnizAlgebra(dim={}, {})", n, entries.join(" "))
    }
}
