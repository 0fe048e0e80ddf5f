use std::fmt;

use num_traits::Zero;

use super::element::{omni_bracket, OmniElement};
use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Matrix};
use crate::rational::{one, Rational};
use crate::rep::{flatten, Representation};

/// Which half of the homomorphism condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmniEquation {
    /// `φ([x,y]) = [φ(x), φ(y)]`
    MatrixPart,
    /// `θ([x,y]) = φ(x) θ(y)`
    VectorPart,
}

impl fmt::Display for OmniEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OmniEquation::MatrixPart => "phi([x,y]) = [phi(x), phi(y)]",
            OmniEquation::VectorPart => "theta([x,y]) = phi(x) theta(y)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmniRepViolation {
    pub equation: OmniEquation,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for OmniRepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at x = e{}, y = e{}",
            self.equation,
            self.i + 1,
            self.j + 1
        )
    }
}

/// A linear map `ρ = φ + θ : g → gl(V) ⊕ V` given on basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmniRep {
    algebra: LeibnizAlgebra,
    dim_v: usize,
    phi: Vec<Matrix>,
    theta: Vec<Vec<Rational>>,
}

impl OmniRep {
    pub fn new(
        algebra: LeibnizAlgebra,
        dim_v: usize,
        phi: Vec<Matrix>,
        theta: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        for len in [phi.len(), theta.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    context: "number of omni-representation components",
                    expected: n,
                    found: len,
                });
            }
        }
        for m in &phi {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(Error::DimensionMismatch {
                    context: "phi matrix size",
                    expected: dim_v,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        for t in &theta {
            if t.len() != dim_v {
                return Err(Error::DimensionMismatch {
                    context: "theta vector length",
                    expected: dim_v,
                    found: t.len(),
                });
            }
        }
        Ok(OmniRep {
            algebra,
            dim_v,
            phi,
            theta,
        })
    }

    /// `ρ = 0` on `V = Q^d`.
    pub fn zero(algebra: LeibnizAlgebra, dim_v: usize) -> Self {
        let n = algebra.dim();
        OmniRep {
            algebra,
            dim_v,
            phi: vec![Matrix::zeros(dim_v, dim_v); n],
            theta: vec![vec![Rational::zero(); dim_v]; n],
        }
    }

    /// `ad = ad_L + id : g → gl(g) ⊕ g`.
    pub fn adjoint(algebra: LeibnizAlgebra) -> Self {
        let n = algebra.dim();
        let phi = (0..n).map(|i| algebra.left_mult(i)).collect();
        let theta = (0..n)
            .map(|i| (0..n).map(|k| if k == i { one() } else { Rational::zero() }).collect())
            .collect();
        OmniRep {
            algebra,
            dim_v: n,
            phi,
            theta,
        }
    }

    /// The trivial omni-representation on `Q` with `φ = 0` and `θ = ξ`.
    pub fn trivial(algebra: LeibnizAlgebra, xi: &[Rational]) -> Result<Self> {
        let n = algebra.dim();
        if xi.len() != n {
            return Err(Error::DimensionMismatch {
                context: "functional length",
                expected: n,
                found: xi.len(),
            });
        }
        let theta = xi.iter().map(|x| vec![x.clone()]).collect();
        OmniRep::new(algebra, 1, vec![Matrix::zeros(1, 1); n], theta)
    }

    /// `ρ = (l* ⊗ 1 + 1 ⊗ l) + r` on `V* ⊗ V ≅ gl(V)`.
    pub fn from_usual_rep(rep: &Representation) -> Result<Self> {
        rep.require_valid()?;
        let dual = rep.dual_tensor_rep()?;
        let theta = rep.right().iter().map(flatten).collect();
        OmniRep::new(rep.algebra().clone(), dual.dim_v(), dual.left().to_vec(), theta)
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn phi(&self) -> &[Matrix] {
        &self.phi
    }

    pub fn theta(&self) -> &[Vec<Rational>] {
        &self.theta
    }

    /// `ρ(e_i)`.
    pub fn image_of_basis(&self, i: usize) -> OmniElement {
        OmniElement {
            a: self.phi[i].clone(),
            u: self.theta[i].clone(),
        }
    }

    /// `ρ(x)` for an arbitrary `x ∈ g`.
    pub fn apply(&self, x: &[Rational]) -> OmniElement {
        let mut out = OmniElement::zero(self.dim_v);
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = out.add(&self.image_of_basis(i).scale(c));
        }
        out
    }

    fn check_split(&self) -> std::result::Result<(), OmniRepViolation> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let bracket = self.algebra.basis_bracket(i, j);
                let image = self.apply(bracket);
                if image.a != self.phi[i].commutator(&self.phi[j]) {
                    return Err(OmniRepViolation {
                        equation: OmniEquation::MatrixPart,
                        i,
                        j,
                    });
                }
                if image.u != self.phi[i].mul_vec(&self.theta[j]) {
                    return Err(OmniRepViolation {
                        equation: OmniEquation::VectorPart,
                        i,
                        j,
                    });
                }
            }
        }
        Ok(())
    }

    /// True iff `⟦ρ(e_i), ρ(e_j)⟧ = ρ([e_i, e_j])` for every basis pair, computed in `ol(V)`.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.algebra.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = omni_bracket(&self.image_of_basis(i), &self.image_of_basis(j))
                    .expect("same module");
                lhs == self.apply(self.algebra.basis_bracket(i, j))
            })
        })
    }

    /// Checks the split equations for `φ` and `θ`, and cross-checks the verdict
    /// against the direct homomorphism condition.
    pub fn check(&self) -> Result<std::result::Result<(), OmniRepViolation>> {
        let split = self.check_split();
        if split.is_ok() != self.is_homomorphism() {
            return Err(Error::Invariant(
                "split omni-representation equations disagree with the homomorphism condition".into(),
            ));
        }
        Ok(split)
    }

    pub fn is_valid(&self) -> bool {
        matches!(self.check(), Ok(Ok(())))
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        self.algebra.check().map_err(Error::NotLeibniz)?;
        self.check()?.map_err(Error::InvalidOmniRep)
    }
}

/// Basis of `{ξ ∈ g* : ξ|_[g,g] = 0}`, one functional per free coordinate.
pub fn trivial_omnireps(algebra: &LeibnizAlgebra) -> Vec<Vec<Rational>> {
    let derived = algebra.derived_subalgebra();
    let n = algebra.dim();
    let constraints = if derived.is_empty() {
        Matrix::zeros(0, n)
    } else {
        Matrix::from_rows(derived).expect("equal lengths")
    };
    kernel_basis(&constraints)
}
