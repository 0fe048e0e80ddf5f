use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// An element `A + u` of the omni-Lie algebra `gl(V) ⊕ V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmniElement {
    pub a: Matrix,
    pub u: Vec<Rational>,
}

impl OmniElement {
    pub fn new(a: Matrix, u: Vec<Rational>) -> Result<Self> {
        let d = u.len();
        if a.rows() != d || a.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "omni element matrix",
                expected: d,
                found: a.rows().max(a.cols()),
            });
        }
        Ok(OmniElement { a, u })
    }

    pub fn zero(d: usize) -> Self {
        OmniElement {
            a: Matrix::zeros(d, d),
            u: vec![Rational::zero(); d],
        }
    }

    pub fn dim_v(&self) -> usize {
        self.u.len()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.u.iter().all(Zero::is_zero)
    }

    /// Coordinates `(A row-major, u)` of length `d² + d`.
    pub fn coords(&self) -> Vec<Rational> {
        let mut out = self.a.as_slice().to_vec();
        out.extend(self.u.iter().cloned());
        out
    }

    pub fn from_coords(d: usize, coords: &[Rational]) -> Result<Self> {
        if coords.len() != d * d + d {
            return Err(Error::DimensionMismatch {
                context: "omni element coordinates",
                expected: d * d + d,
                found: coords.len(),
            });
        }
        Ok(OmniElement {
            a: Matrix::from_vec(d, d, coords[..d * d].to_vec())?,
            u: coords[d * d..].to_vec(),
        })
    }

    pub fn add(&self, other: &OmniElement) -> OmniElement {
        OmniElement {
            a: self.a.add(&other.a),
            u: self.u.iter().zip(&other.u).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> OmniElement {
        OmniElement {
            a: self.a.scale(s),
            u: self.u.iter().map(|x| x * s).collect(),
        }
    }
}

/// `⟦A+u, B+v⟧ = [A,B] + Av`. A left Leibniz bracket; not skew.
pub fn omni_bracket(x: &OmniElement, y: &OmniElement) -> Result<OmniElement> {
    if x.dim_v() != y.dim_v() {
        return Err(Error::DimensionMismatch {
            context: "omni bracket operands",
            expected: x.dim_v(),
            found: y.dim_v(),
        });
    }
    Ok(OmniElement {
        a: x.a.commutator(&y.a),
        u: x.a.mul_vec(&y.u),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_acts_on_vector() {
        let x = OmniElement::new(Matrix::identity(2), v(&[0, 0])).unwrap();
        let y = OmniElement::new(Matrix::zeros(2, 2), v(&[3, -1])).unwrap();
        let b = omni_bracket(&x, &y).unwrap();
        assert!(b.a.is_zero());
        assert_eq!(b.u, v(&[3, -1]));
    }

    #[test]
    fn vectors_commute() {
        let x = OmniElement::new(Matrix::zeros(2, 2), v(&[1, 2])).unwrap();
        let y = OmniElement::new(Matrix::zeros(2, 2), v(&[5, 7])).unwrap();
        assert!(omni_bracket(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn matrices_bracket_by_commutator() {
        let a = Matrix::from_i64(2, 2, &[1, 2, 0, -1]);
        let b = Matrix::from_i64(2, 2, &[0, 1, 3, 2]);
        let x = OmniElement::new(a.clone(), v(&[0, 0])).unwrap();
        let y = OmniElement::new(b.clone(), v(&[0, 0])).unwrap();
        let r = omni_bracket(&x, &y).unwrap();
        assert_eq!(r.a, a.mul(&b).sub(&b.mul(&a)));
        assert_eq!(r.u, v(&[0, 0]));
    }

    #[test]
    fn not_skew() {
        let x = OmniElement::new(Matrix::identity(1), v(&[0])).unwrap();
        let y = OmniElement::new(Matrix::zeros(1, 1), v(&[1])).unwrap();
        assert_eq!(omni_bracket(&x, &y).unwrap().u, v(&[1]));
        assert_eq!(omni_bracket(&y, &x).unwrap().u, v(&[0]));
    }

    #[test]
    fn mismatched_dims() {
        assert!(omni_bracket(&OmniElement::zero(1), &OmniElement::zero(2)).is_err());
        assert!(OmniElement::new(Matrix::zeros(2, 2), v(&[1])).is_err());
    }

    #[test]
    fn coords_round_trip() {
        let x = OmniElement::new(Matrix::from_i64(2, 2, &[1, 2, 3, 4]), v(&[5, 6])).unwrap();
        assert_eq!(x.coords(), v(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(OmniElement::from_coords(2, &x.coords()).unwrap(), x);
    }
}
