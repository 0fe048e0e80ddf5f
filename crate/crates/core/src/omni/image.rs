use num_traits::Zero;

use super::element::{omni_bracket, OmniElement};
use super::rep::OmniRep;
use crate::error::{Error, Result};
use crate::linalg::{row_space_basis, Matrix};
use crate::rational::Rational;
use crate::rep::Representation;

/// Canonical basis of `img(ρ) ⊂ gl(V) ⊕ V` with exact coordinate solving.
///
/// The basis is the nonzero rows of the RREF of the matrix whose rows are
/// `ρ(e_1), ..., ρ(e_n)` in `(A row-major, u)` coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageSubspace {
    dim_v: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl ImageSubspace {
    /// Builds the basis and verifies that it is closed under `⟦·,·⟧`.
    pub fn new(rho: &OmniRep) -> Result<Self> {
        let img = ImageSubspace::spanned_by(
            rho.dim_v(),
            (0..rho.algebra().dim()).map(|i| rho.image_of_basis(i)),
        );
        img.verify_closed()?;
        Ok(img)
    }

    /// Span of arbitrary omni elements, without a closure check.
    pub fn spanned_by(dim_v: usize, elements: impl IntoIterator<Item = OmniElement>) -> Self {
        let vectors: Vec<Vec<Rational>> = elements.into_iter().map(|e| e.coords()).collect();
        let (rows, pivots) = row_space_basis(&vectors, dim_v * dim_v + dim_v);
        ImageSubspace {
            dim_v,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn basis(&self) -> Vec<OmniElement> {
        self.rows
            .iter()
            .map(|r| OmniElement::from_coords(self.dim_v, r).expect("ambient width"))
            .collect()
    }

    pub fn basis_element(&self, p: usize) -> OmniElement {
        OmniElement::from_coords(self.dim_v, &self.rows[p]).expect("ambient width")
    }

    /// Coordinates in the basis, or `None` when the element is outside the span.
    ///
    /// RREF rows carry an identity block on the pivot columns, so the candidate
    /// coordinates are read off there and then verified.
    pub fn coords(&self, x: &OmniElement) -> Option<Vec<Rational>> {
        let v = x.coords();
        if v.len() != self.dim_v * self.dim_v + self.dim_v {
            return None;
        }
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v;
        for (ci, row) in c.iter().zip(&self.rows) {
            if ci.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *r -= ci * b;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, x: &OmniElement) -> bool {
        self.coords(x).is_some()
    }

    /// The element with the given basis coordinates.
    pub fn lift(&self, coords: &[Rational]) -> OmniElement {
        assert_eq!(coords.len(), self.dim());
        let width = self.dim_v * self.dim_v + self.dim_v;
        let mut v = vec![Rational::zero(); width];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                *x += c * b;
            }
        }
        OmniElement::from_coords(self.dim_v, &v).expect("ambient width")
    }

    fn verify_closed(&self) -> Result<()> {
        let basis = self.basis();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let b = omni_bracket(x, y)?;
                if !self.contains(&b) {
                    return Err(Error::Invariant(format!(
                        "image of rho is not closed: bracket of basis elements {} and {} leaves the span",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Coordinates of `x`, treating failure as a broken invariant.
    pub(crate) fn solve(&self, x: &OmniElement) -> Result<Vec<Rational>> {
        self.coords(x)
            .ok_or_else(|| Error::Invariant("element expected in img(rho) could not be solved".into()))
    }

    /// The representation of `g` on `img(ρ)` with `l_x(u) = ⟦ρ(x), u⟧` and `r_x(u) = ⟦u, ρ(x)⟧`.
    pub fn induced_rep(&self, rho: &OmniRep) -> Result<Representation> {
        let p = self.dim();
        let n = rho.algebra().dim();
        let basis = self.basis();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for i in 0..n {
            let rx = rho.image_of_basis(i);
            let mut l = Matrix::zeros(p, p);
            let mut r = Matrix::zeros(p, p);
            for (q, b) in basis.iter().enumerate() {
                let lc = self.solve(&omni_bracket(&rx, b)?)?;
                let rc = self.solve(&omni_bracket(b, &rx)?)?;
                for a in 0..p {
                    l[(a, q)] = lc[a].clone();
                    r[(a, q)] = rc[a].clone();
                }
            }
            left.push(l);
            right.push(r);
        }
        Representation::new(rho.algebra().clone(), p, left, right)
    }
}
