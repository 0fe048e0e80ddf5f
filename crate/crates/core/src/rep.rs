//! Representations `(V, l, r)` of Leibniz algebras.

use std::fmt;

use num_traits::Zero;

use crate::algebra::LeibnizAlgebra;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// Which of the three representation identities failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepAxiom {
    /// `l_[x,y] = [l_x, l_y]`
    LeftBracket,
    /// `r_[x,y] = [l_x, r_y]`
    RightBracket,
    /// `r_y l_x = -r_y r_x`
    RightLeft,
}

impl fmt::Display for RepAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepAxiom::LeftBracket => "l_[x,y] = [l_x, l_y]",
            RepAxiom::RightBracket => "r_[x,y] = [l_x, r_y]",
            RepAxiom::RightLeft => "r_y l_x = -r_y r_x",
        })
    }
}

/// First basis pair (0-based, `x = e_i`, `y = e_j`) where an axiom fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepViolation {
    pub axiom: RepAxiom,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for RepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at x = e{}, y = e{}",
            self.axiom,
            self.i + 1,
            self.j + 1
        )
    }
}

/// A module `V` of dimension `dim_v` with left and right actions given on basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LeibnizAlgebra,
    dim_v: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        algebra: LeibnizAlgebra,
        dim_v: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        for family in [&left, &right] {
            if family.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "number of action matrices",
                    expected: n,
                    found: family.len(),
                });
            }
            for m in family {
                if m.rows() != dim_v || m.cols() != dim_v {
                    return Err(Error::DimensionMismatch {
                        context: "action matrix size",
                        expected: dim_v,
                        found: if m.rows() != dim_v { m.rows() } else { m.cols() },
                    });
                }
            }
        }
        Ok(Representation {
            algebra,
            dim_v,
            left,
            right,
        })
    }

    /// `(Q^d, 0, 0)`.
    pub fn trivial(algebra: LeibnizAlgebra, dim_v: usize) -> Self {
        let n = algebra.dim();
        Representation {
            algebra,
            dim_v,
            left: vec![Matrix::zeros(dim_v, dim_v); n],
            right: vec![Matrix::zeros(dim_v, dim_v); n],
        }
    }

    /// `(g, ad_L, ad_R)` with `ad_L(x) y = [x, y]` and `ad_R(x) y = [y, x]`.
    pub fn adjoint(algebra: LeibnizAlgebra) -> Self {
        let n = algebra.dim();
        let left = (0..n).map(|i| algebra.left_mult(i)).collect();
        let right = (0..n).map(|i| algebra.right_mult(i)).collect();
        Representation {
            algebra,
            dim_v: n,
            left,
            right,
        }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    /// `(V, l, 0)`.
    pub fn without_right(&self) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            dim_v: self.dim_v,
            left: self.left.clone(),
            right: vec![Matrix::zeros(self.dim_v, self.dim_v); self.algebra.dim()],
        }
    }

    /// `sum_k coeffs[k] * family[k]`
    fn combine(&self, family: &[Matrix], coeffs: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (m, c) in family.iter().zip(coeffs) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// `l` applied to an arbitrary element of `g`.
    pub fn left_of(&self, x: &[Rational]) -> Matrix {
        self.combine(&self.left, x)
    }

    pub fn right_of(&self, x: &[Rational]) -> Matrix {
        self.combine(&self.right, x)
    }

    /// Checks the three identities on every basis pair, in `(i, j)` order and axiom order.
    pub fn check(&self) -> std::result::Result<(), RepViolation> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let bracket = self.algebra.basis_bracket(i, j);
                let (li, lj, rj, ri) = (&self.left[i], &self.left[j], &self.right[j], &self.right[i]);
                if self.left_of(bracket) != li.commutator(lj) {
                    return Err(RepViolation {
                        axiom: RepAxiom::LeftBracket,
                        i,
                        j,
                    });
                }
                if self.right_of(bracket) != li.commutator(rj) {
                    return Err(RepViolation {
                        axiom: RepAxiom::RightBracket,
                        i,
                        j,
                    });
                }
                if !rj.mul(li).add(&rj.mul(ri)).is_zero() {
                    return Err(RepViolation {
                        axiom: RepAxiom::RightLeft,
                        i,
                        j,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// Rejects the representation if either the algebra or the actions are invalid.
    pub(crate) fn require_valid(&self) -> Result<()> {
        self.algebra.check().map_err(Error::NotLeibniz)?;
        self.check().map_err(Error::InvalidRep)
    }

    /// `g ⋉ V` on the ordered basis `(e_1..e_n, f_1..f_d)` with bracket
    /// `[x+u, y+v] = [x,y] + l_x v + r_y u`; the `r` term is dropped when `use_right` is false.
    pub fn semidirect_product(&self, use_right: bool) -> Result<LeibnizAlgebra> {
        let check = if use_right {
            self.check()
        } else {
            self.without_right().check()
        };
        check.map_err(Error::InvalidRep)?;
        Ok(self.semidirect_unchecked(use_right))
    }

    pub(crate) fn semidirect_unchecked(&self, use_right: bool) -> LeibnizAlgebra {
        let n = self.algebra.dim();
        let d = self.dim_v;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.algebra.basis_bracket_terms(i, j) {
                    entries.push((i, j, k, c.clone()));
                }
            }
        }
        for i in 0..n {
            for b in 0..d {
                // [e_i, f_b] = l_i f_b
                for a in 0..d {
                    let v = &self.left[i][(a, b)];
                    if !v.is_zero() {
                        entries.push((i, n + b, n + a, v.clone()));
                    }
                }
                // [f_b, e_i] = r_i f_b
                if use_right {
                    for a in 0..d {
                        let v = &self.right[i][(a, b)];
                        if !v.is_zero() {
                            entries.push((n + b, i, n + a, v.clone()));
                        }
                    }
                }
            }
        }
        LeibnizAlgebra::from_entries(n + d, &entries).expect("indices in range")
    }

    /// The degree-2 cochain `rbar(x+u, y+v) = r_y u` on `g ⋉_(l,0) V`, valued in the same space.
    pub fn rbar_cochain(&self) -> Cochain {
        let n = self.algebra.dim();
        let d = self.dim_v;
        let total = n + d;
        let mut c = Cochain::zero(2, total, total);
        for a in 0..d {
            for j in 0..n {
                let value = c.value_mut(&[n + a, j]);
                for b in 0..d {
                    value[n + b] = self.right[j][(b, a)].clone();
                }
            }
        }
        c
    }

    /// `(V* ⊗ V, l* ⊗ 1 + 1 ⊗ l, 0)` on `gl(V)` with matrix units `E_ab` in row-major order.
    ///
    /// `ξ ⊗ u` is identified with the matrix `A_ab = u_a ξ_b`. The action is built
    /// from the tensor formula `(l*_x ξ) ⊗ u + ξ ⊗ l_x u` with `<l*_x ξ, v> = -<ξ, l_x v>`.
    pub fn dual_tensor_rep(&self) -> Result<Representation> {
        self.without_right().require_valid()?;
        let d = self.dim_v;
        let dd = d * d;
        let left: Vec<Matrix> = self
            .left
            .iter()
            .map(|lx| {
                let mut action = Matrix::zeros(dd, dd);
                // E_ab = e_a ⊗ e_b*, i.e. u = e_a, ξ = e_b*.
                for a in 0..d {
                    for b in 0..d {
                        let col = a * d + b;
                        // (l*_x e_b*)_c = -(l_x)_{bc}; contributes u_a' ξ_c at (a, c)
                        for c in 0..d {
                            let v = &lx[(b, c)];
                            if !v.is_zero() {
                                action[(a * d + c, col)] -= v;
                            }
                        }
                        // ξ ⊗ l_x e_a: (l_x e_a)_c at (c, b)
                        for c in 0..d {
                            let v = &lx[(c, a)];
                            if !v.is_zero() {
                                action[(c * d + b, col)] += v;
                            }
                        }
                    }
                }
                action
            })
            .collect();
        let n = self.algebra.dim();
        Ok(Representation {
            algebra: self.algebra.clone(),
            dim_v: dd,
            left,
            right: vec![Matrix::zeros(dd, dd); n],
        })
    }

    /// The right action `x ↦ r_x` as a 1-cochain valued in `gl(V)` (row-major).
    pub fn right_action_cochain(&self) -> Cochain {
        let n = self.algebra.dim();
        let dd = self.dim_v * self.dim_v;
        let mut c = Cochain::zero(1, n, dd);
        for i in 0..n {
            c.value_mut(&[i]).clone_from_slice(self.right[i].as_slice());
        }
        c
    }
}

/// Flattens a matrix into `gl(V)` coordinates (row-major).
pub fn flatten(m: &Matrix) -> Vec<Rational> {
    m.as_slice().to_vec()
}

/// Inverse of [`flatten`].
pub fn unflatten(d: usize, v: &[Rational]) -> Matrix {
    Matrix::from_vec(d, d, v.to_vec()).expect("d*d coordinates")
}
