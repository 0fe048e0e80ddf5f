//! Dense multilinear maps `⊗^k g → W` on basis multi-indices.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A degree-`k` cochain on an `n`-dimensional algebra with values in an `m`-dimensional space.
///
/// Coefficients are stored row-major over `(i_1, ..., i_k)` with the codomain
/// coordinate varying fastest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cochain {
    degree: usize,
    arity_dim: usize,
    codomain_dim: usize,
    coeffs: Vec<Rational>,
}

/// Number of basis multi-indices of length `k` over `n` letters.
pub fn multi_index_count(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

/// Row-major position of a multi-index.
pub fn encode_multi_index(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn decode_multi_index(n: usize, k: usize, mut pos: usize, out: &mut [usize]) {
    debug_assert_eq!(out.len(), k);
    for slot in out.iter_mut().rev() {
        *slot = pos % n;
        pos /= n;
    }
}

/// Iterates all multi-indices of length `k` in row-major order.
pub struct MultiIndices {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl MultiIndices {
    pub fn new(n: usize, k: usize) -> Self {
        MultiIndices {
            n,
            current: vec![0; k],
            done: n == 0 && k > 0,
        }
    }
}

impl Iterator for MultiIndices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut pos = self.current.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.current[pos] += 1;
            if self.current[pos] < self.n {
                break;
            }
            self.current[pos] = 0;
        }
        Some(out)
    }
}

impl Cochain {
    pub fn zero(degree: usize, arity_dim: usize, codomain_dim: usize) -> Self {
        let len = multi_index_count(arity_dim, degree) * codomain_dim;
        Cochain {
            degree,
            arity_dim,
            codomain_dim,
            coeffs: vec![Rational::zero(); len],
        }
    }

    pub fn from_coeffs(
        degree: usize,
        arity_dim: usize,
        codomain_dim: usize,
        coeffs: Vec<Rational>,
    ) -> Result<Self> {
        let expected = multi_index_count(arity_dim, degree) * codomain_dim;
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "cochain coefficients",
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Cochain {
            degree,
            arity_dim,
            codomain_dim,
            coeffs,
        })
    }

    /// Builds a cochain from its values on basis multi-indices.
    pub fn from_fn(
        degree: usize,
        arity_dim: usize,
        codomain_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Self {
        let mut c = Cochain::zero(degree, arity_dim, codomain_dim);
        for idx in MultiIndices::new(arity_dim, degree) {
            let v = f(&idx);
            assert_eq!(v.len(), codomain_dim, "cochain value length");
            c.value_mut(&idx).clone_from_slice(&v);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn arity_dim(&self) -> usize {
        self.arity_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.degree);
        encode_multi_index(self.arity_dim, idx) * self.codomain_dim
    }

    /// Value on basis elements `(e_{idx[0]}, ..., e_{idx[k-1]})`.
    pub fn value(&self, idx: &[usize]) -> &[Rational] {
        let start = self.offset(idx);
        &self.coeffs[start..start + self.codomain_dim]
    }

    pub fn value_mut(&mut self, idx: &[usize]) -> &mut [Rational] {
        let start = self.offset(idx);
        &mut self.coeffs[start..start + self.codomain_dim]
    }

    /// Value with a general vector in slot `slot` and basis elements elsewhere.
    pub fn value_with_vector(&self, idx: &mut [usize], slot: usize, v: &[Rational]) -> Vec<Rational> {
        let saved = idx[slot];
        let mut out = vec![Rational::zero(); self.codomain_dim];
        for (s, vs) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            idx[slot] = s;
            for (o, c) in out.iter_mut().zip(self.value(idx)) {
                if !c.is_zero() {
                    *o += vs * c;
                }
            }
        }
        idx[slot] = saved;
        out
    }

    /// Evaluates on arbitrary vectors by multilinear expansion.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch {
                context: "cochain arity",
                expected: self.degree,
                found: args.len(),
            });
        }
        for a in args {
            if a.len() != self.arity_dim {
                return Err(Error::DimensionMismatch {
                    context: "cochain argument",
                    expected: self.arity_dim,
                    found: a.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); self.codomain_dim];
        for idx in MultiIndices::new(self.arity_dim, self.degree) {
            let mut w = Rational::from_integer(1.into());
            for (a, &i) in args.iter().zip(&idx) {
                if a[i].is_zero() {
                    w = Rational::zero();
                    break;
                }
                w *= &a[i];
            }
            if w.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.value(&idx)) {
                *o += &w * c;
            }
        }
        Ok(out)
    }

    pub fn same_shape(&self, other: &Cochain) -> bool {
        self.degree == other.degree
            && self.arity_dim == other.arity_dim
            && self.codomain_dim == other.codomain_dim
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain shapes differ");
        Cochain {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain shapes differ");
        Cochain {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn multi_index_order_is_row_major() {
        let all: Vec<Vec<usize>> = MultiIndices::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        for (pos, idx) in all.iter().enumerate() {
            assert_eq!(encode_multi_index(2, idx), pos);
            let mut out = [0; 2];
            decode_multi_index(2, 2, pos, &mut out);
            assert_eq!(&out[..], &idx[..]);
        }
    }

    #[test]
    fn degree_zero_has_one_index() {
        assert_eq!(MultiIndices::new(3, 0).count(), 1);
        assert_eq!(MultiIndices::new(0, 0).count(), 1);
        assert_eq!(MultiIndices::new(0, 2).count(), 0);
        assert_eq!(Cochain::zero(0, 3, 2).coeffs().len(), 2);
    }

    #[test]
    fn codomain_index_is_fastest() {
        let mut c = Cochain::zero(1, 2, 3);
        c.value_mut(&[1])[2] = int(5);
        assert_eq!(c.coeffs()[5], int(5));
    }

    #[test]
    fn eval_is_multilinear() {
        let c = Cochain::from_fn(2, 2, 1, |idx| vec![int((idx[0] * 2 + idx[1] + 1) as i64)]);
        // c(e1 + 2 e2, 3 e1) = 3 c(e1,e1) + 6 c(e2,e1) = 3*1 + 6*3
        let v = c.eval(&[vec![int(1), int(2)], vec![int(3), int(0)]]).unwrap();
        assert_eq!(v, vec![int(21)]);
    }

    #[test]
    fn bad_shapes() {
        assert!(Cochain::from_coeffs(2, 2, 1, vec![int(0); 3]).is_err());
        let c = Cochain::zero(2, 2, 1);
        assert!(c.eval(&[vec![int(1), int(0)]]).is_err());
    }
}
