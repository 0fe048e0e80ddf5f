use num_traits::Zero;

use super::element::OmniElement;
use super::rep::OmniRep;
use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::rep::Representation;

fn check_phi_shape(phi: &[Matrix]) -> Result<usize> {
    let d = phi.len();
    for m in phi {
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "phi: V -> gl(V) matrix size",
                expected: d,
                found: m.rows().max(m.cols()),
            });
        }
    }
    Ok(d)
}

/// `φ(u) = Σ u_a φ(e_a)`.
pub fn phi_of(phi: &[Matrix], u: &[Rational]) -> Matrix {
    let d = phi.len();
    let mut out = Matrix::zeros(d, d);
    for (m, c) in phi.iter().zip(u).filter(|(_, c)| !c.is_zero()) {
        out = out.add(&m.scale(c));
    }
    out
}

/// The graph element `φ(u) + u`.
pub fn graph_element(phi: &[Matrix], u: &[Rational]) -> OmniElement {
    OmniElement {
        a: phi_of(phi, u),
        u: u.to_vec(),
    }
}

/// Checks `[φ(e_a), φ(e_b)] = φ(φ(e_a) e_b)` for all basis pairs, i.e. that `φ` is an
/// embedding tensor and its graph is a Leibniz subalgebra of `ol(V)`.
pub fn graph_check(phi: &[Matrix]) -> Result<()> {
    let d = check_phi_shape(phi)?;
    for a in 0..d {
        for b in 0..d {
            let lhs = phi[a].commutator(&phi[b]);
            let rhs = phi_of(phi, &phi[a].column(b));
            if lhs != rhs {
                return Err(Error::NotEmbeddingTensor(a + 1, b + 1));
            }
        }
    }
    Ok(())
}

pub fn is_embedding_tensor(phi: &[Matrix]) -> bool {
    graph_check(phi).is_ok()
}

/// The Leibniz algebra `(V, [u,v]_φ = φ(u) v)`.
pub fn induced_bracket(phi: &[Matrix]) -> Result<LeibnizAlgebra> {
    graph_check(phi)?;
    let d = phi.len();
    let mut constants = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                constants.push(phi[i][(k, j)].clone());
            }
        }
    }
    LeibnizAlgebra::new(d, constants)
}

/// Verifies `ρ(e_i) = φ(θ(e_i)) + θ(e_i)` for every basis element.
pub fn check_in_graph(rho: &OmniRep, phi: &[Matrix]) -> Result<()> {
    let d = check_phi_shape(phi)?;
    if d != rho.dim_v() {
        return Err(Error::DimensionMismatch {
            context: "graph map module dimension",
            expected: rho.dim_v(),
            found: d,
        });
    }
    for (i, (p, t)) in rho.phi().iter().zip(rho.theta()).enumerate() {
        if *p != phi_of(phi, t) {
            return Err(Error::NotInGraph(i + 1));
        }
    }
    Ok(())
}

/// The representation `(V, l, r)` with `l_x u = φ(θ(x)) u` and `r_x u = φ(u) θ(x)`,
/// for an omni-representation whose image lies in the graph of an embedding tensor `φ`.
pub fn induced_lr(rho: &OmniRep, phi: &[Matrix]) -> Result<Representation> {
    rho.require_valid()?;
    graph_check(phi)?;
    check_in_graph(rho, phi)?;
    let d = rho.dim_v();
    let left: Vec<Matrix> = rho.theta().iter().map(|t| phi_of(phi, t)).collect();
    let right: Vec<Matrix> = rho
        .theta()
        .iter()
        .map(|t| {
            let cols: Vec<Vec<Rational>> = phi.iter().map(|m| m.mul_vec(t)).collect();
            Matrix::from_fn(d, d, |a, b| cols[b][a].clone())
        })
        .collect();
    Representation::new(rho.algebra().clone(), d, left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    #[test]
    fn zero_phi_is_embedding_tensor() {
        let phi = vec![Matrix::zeros(2, 2); 2];
        assert!(is_embedding_tensor(&phi));
        assert_eq!(induced_bracket(&phi).unwrap(), LeibnizAlgebra::abelian(2));
    }

    #[test]
    fn scalar_phi_in_dimension_one() {
        for lambda in [-2, -1, 0, 1, 3] {
            let phi = vec![Matrix::from_i64(1, 1, &[lambda])];
            assert_eq!(is_embedding_tensor(&phi), lambda == 0, "lambda = {lambda}");
        }
    }

    #[test]
    fn functional_times_identity_fails() {
        // φ(u) = ξ(u) I with ξ = (1, 2)
        let phi = vec![Matrix::identity(2), Matrix::identity(2).scale(&int(2))];
        assert!(matches!(graph_check(&phi), Err(Error::NotEmbeddingTensor(..))));
        assert!(induced_bracket(&phi).is_err());
    }

    #[test]
    fn left_multiplications_are_embedding_tensors() {
        for (_, alg) in catalog::algebras() {
            let phi: Vec<Matrix> = (0..alg.dim()).map(|i| alg.left_mult(i)).collect();
            assert!(is_embedding_tensor(&phi));
            assert_eq!(induced_bracket(&phi).unwrap(), alg);
        }
    }

    #[test]
    fn induced_lr_for_zero_theta() {
        let alg = catalog::algebra("L2").unwrap();
        let rho = OmniRep::zero(alg, 2);
        let phi: Vec<Matrix> = {
            let l2 = catalog::algebra("L2").unwrap();
            (0..2).map(|i| l2.left_mult(i)).collect()
        };
        let rep = induced_lr(&rho, &phi).unwrap();
        assert!(rep.left().iter().chain(rep.right()).all(Matrix::is_zero));
    }

    #[test]
    fn induced_lr_for_zero_phi() {
        let alg = catalog::algebra("L2").unwrap();
        let rho = OmniRep::trivial(alg, &[int(0), int(1)]).unwrap();
        let rep = induced_lr(&rho, &[Matrix::zeros(1, 1)]).unwrap();
        assert!(rep.left().iter().chain(rep.right()).all(Matrix::is_zero));
    }

    #[test]
    fn adjoint_lies_in_graph_of_left_multiplication() {
        let alg = catalog::algebra("nf3").unwrap();
        let phi: Vec<Matrix> = (0..3).map(|i| alg.left_mult(i)).collect();
        let rho = OmniRep::adjoint(alg.clone());
        let rep = induced_lr(&rho, &phi).unwrap();
        assert_eq!(rep, Representation::adjoint(alg));
    }

    #[test]
    fn image_outside_graph_is_rejected() {
        let alg = catalog::algebra("L2").unwrap();
        let rho = OmniRep::adjoint(alg);
        let phi = vec![Matrix::zeros(2, 2); 2];
        assert!(matches!(induced_lr(&rho, &phi), Err(Error::NotInGraph(2))));
    }
}
