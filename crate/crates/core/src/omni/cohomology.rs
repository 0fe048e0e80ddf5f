use num_traits::Zero;
use rayon::prelude::*;

use super::element::{omni_bracket, OmniElement};
use super::graph::{check_in_graph, induced_lr};
use super::image::ImageSubspace;
use super::rep::{trivial_omnireps, OmniRep};
use crate::algebra::LeibnizAlgebra;
use crate::cochain::{Cochain, MultiIndices};
use crate::cohomology::{coboundary_rank, cohomology_dims, dims_from_ranks, guard_size};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{sign, Rational};
use crate::rep::Representation;

/// `ρ` together with its validated image basis.
#[derive(Debug, Clone)]
pub struct OmniComplex {
    rho: OmniRep,
    image: ImageSubspace,
}

impl OmniComplex {
    pub fn new(rho: OmniRep) -> Result<Self> {
        rho.require_valid()?;
        let image = ImageSubspace::new(&rho)?;
        Ok(OmniComplex { rho, image })
    }

    pub fn rho(&self) -> &OmniRep {
        &self.rho
    }

    pub fn image(&self) -> &ImageSubspace {
        &self.image
    }

    /// Dimension of `C^k(g; ρ)`: `n^k · dim img(ρ)`.
    pub fn cochain_dim(&self, k: usize) -> usize {
        self.rho.algebra().dim().pow(k as u32) * self.image.dim()
    }

    fn check_cochain(&self, f: &Cochain) -> Result<()> {
        if f.arity_dim() != self.rho.algebra().dim() || f.codomain_dim() != self.image.dim() {
            return Err(Error::DimensionMismatch {
                context: "omni-cochain shape",
                expected: self.image.dim(),
                found: f.codomain_dim(),
            });
        }
        Ok(())
    }

    /// Value of an omni-cochain as an element of `ol(V)`.
    pub fn value(&self, f: &Cochain, idx: &[usize]) -> OmniElement {
        self.image.lift(f.value(idx))
    }

    /// `δf`, evaluated with the brackets computed in `ol(V)` and the results
    /// re-expressed in the image basis:
    ///
    /// ```text
    /// δf(x_1..x_{k+1}) = Σ_{i≤k} (-1)^{i+1} ⟦ρ(x_i), f(..x̂_i..)⟧
    ///                  + (-1)^{k+1} ⟦f(x_1..x_k), ρ(x_{k+1})⟧
    ///                  + Σ_{i<j} (-1)^i f(..x̂_i.., x_{j-1}, [x_i,x_j], x_{j+1}..)
    /// ```
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        self.check_cochain(f)?;
        let alg = self.rho.algebra();
        let n = alg.dim();
        let d = self.rho.dim_v();
        let k = f.degree();
        let mut out = Cochain::zero(k + 1, n, self.image.dim());
        let mut reduced = vec![0usize; k];
        for x in MultiIndices::new(n, k + 1) {
            let mut acc = OmniElement::zero(d);
            for i in 0..k {
                remove_slot(&x, i, &mut reduced);
                let value = self.value(f, &reduced);
                let b = omni_bracket(&self.rho.image_of_basis(x[i]), &value)?;
                acc = acc.add(&b.scale(&sign(i % 2 == 1)));
            }
            let value = self.value(f, &x[..k]);
            let b = omni_bracket(&value, &self.rho.image_of_basis(x[k]))?;
            acc = acc.add(&b.scale(&sign(k % 2 == 0)));
            let mut coords = self.image.solve(&acc)?;
            for i in 0..=k {
                for j in i + 1..=k {
                    let bracket = alg.basis_bracket(x[i], x[j]);
                    if bracket.iter().all(Zero::is_zero) {
                        continue;
                    }
                    remove_slot(&x, i, &mut reduced);
                    let inner = f.value_with_vector(&mut reduced, j - 1, bracket);
                    let s = sign(i % 2 == 0);
                    for (c, v) in coords.iter_mut().zip(&inner) {
                        if !v.is_zero() {
                            *c += &s * v;
                        }
                    }
                }
            }
            out.value_mut(&x).clone_from_slice(&coords);
        }
        Ok(out)
    }

    /// The representation `(img ρ; l, r)` for which `δ` is the ordinary coboundary.
    pub fn induced_rep(&self) -> Result<Representation> {
        self.image.induced_rep(&self.rho)
    }

    /// `dim H^k_omni(g; ρ)` for `k = 0..=max_degree`.
    pub fn dims(&self, max_degree: usize) -> Result<Vec<usize>> {
        let n = self.rho.algebra().dim();
        let p = self.image.dim();
        guard_size(n, p, max_degree)?;
        let rep = self.induced_rep()?;
        if !rep.is_valid() {
            return Err(Error::Invariant(
                "action of g on img(rho) is not a representation".into(),
            ));
        }
        let ranks: Vec<usize> = (0..=max_degree)
            .into_par_iter()
            .map(|k| coboundary_rank(&rep, k))
            .collect();
        Ok(dims_from_ranks(n, p, &ranks))
    }
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

pub fn omni_coboundary(rho: &OmniRep, f: &Cochain) -> Result<Cochain> {
    OmniComplex::new(rho.clone())?.coboundary(f)
}

pub fn omni_cohomology_dims(rho: &OmniRep, max_degree: usize) -> Result<Vec<usize>> {
    OmniComplex::new(rho.clone())?.dims(max_degree)
}

/// The bijection `𝔣 ↔ f = (ad_L ∘ 𝔣, 𝔣)` between `g`-valued cochains and
/// cochains valued in `img(ad)`.
#[derive(Debug, Clone)]
pub struct AdjointCorrespondence {
    complex: OmniComplex,
    adjoint: Representation,
}

impl AdjointCorrespondence {
    pub fn new(algebra: LeibnizAlgebra) -> Result<Self> {
        let complex = OmniComplex::new(OmniRep::adjoint(algebra.clone()))?;
        Ok(AdjointCorrespondence {
            complex,
            adjoint: Representation::adjoint(algebra),
        })
    }

    pub fn complex(&self) -> &OmniComplex {
        &self.complex
    }

    pub fn adjoint_rep(&self) -> &Representation {
        &self.adjoint
    }

    /// `𝔣 ↦ f`.
    pub fn to_omni(&self, frak: &Cochain) -> Result<Cochain> {
        let alg = self.complex.rho.algebra();
        let n = alg.dim();
        if frak.arity_dim() != n || frak.codomain_dim() != n {
            return Err(Error::DimensionMismatch {
                context: "g-valued cochain",
                expected: n,
                found: frak.codomain_dim(),
            });
        }
        let img = &self.complex.image;
        let mut out = Cochain::zero(frak.degree(), n, img.dim());
        for idx in MultiIndices::new(n, frak.degree()) {
            let v = frak.value(&idx);
            let element = OmniElement {
                a: left_mult_of(alg, v),
                u: v.to_vec(),
            };
            out.value_mut(&idx).clone_from_slice(&img.solve(&element)?);
        }
        Ok(out)
    }

    /// `f ↦ 𝔣`, the `g` component of each value.
    pub fn to_frak(&self, f: &Cochain) -> Result<Cochain> {
        self.complex.check_cochain(f)?;
        let n = self.complex.rho.algebra().dim();
        let mut out = Cochain::zero(f.degree(), n, n);
        for idx in MultiIndices::new(n, f.degree()) {
            let element = self.complex.value(f, &idx);
            out.value_mut(&idx).clone_from_slice(&element.u);
        }
        Ok(out)
    }
}

fn left_mult_of(alg: &LeibnizAlgebra, v: &[Rational]) -> Matrix {
    let n = alg.dim();
    let mut out = Matrix::zeros(n, n);
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out = out.add(&alg.left_mult(i).scale(c));
    }
    out
}

/// Side-by-side Loday-Pirashvili and omni-cohomology dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lp: Vec<usize>,
    pub omni: Vec<usize>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.lp == self.omni
    }
}

/// Trivial omni-representations against the trivial representation on `Q`.
///
/// One comparison per basis functional of the annihilator of `[g,g]`; when
/// `[g,g] = g` the only trivial omni-representation is `ρ = 0`.
pub fn compare_trivial(algebra: &LeibnizAlgebra, max_degree: usize) -> Result<Vec<Comparison>> {
    algebra.check().map_err(Error::NotLeibniz)?;
    let lp = cohomology_dims(&Representation::trivial(algebra.clone(), 1), max_degree)?;
    let basis = trivial_omnireps(algebra);
    let reps: Vec<(String, OmniRep)> = if basis.is_empty() {
        vec![("rho = 0".to_string(), OmniRep::zero(algebra.clone(), 1))]
    } else {
        basis
            .iter()
            .enumerate()
            .map(|(i, xi)| Ok((format!("xi_{}", i + 1), OmniRep::trivial(algebra.clone(), xi)?)))
            .collect::<Result<_>>()?
    };
    reps.into_iter()
        .map(|(label, rho)| {
            Ok(Comparison {
                label,
                lp: lp.clone(),
                omni: omni_cohomology_dims(&rho, max_degree)?,
            })
        })
        .collect()
}

/// `H_omni(g; ad)` against `H(g; ad_L, ad_R)`.
pub fn compare_adjoint(algebra: &LeibnizAlgebra, max_degree: usize) -> Result<Comparison> {
    algebra.check().map_err(Error::NotLeibniz)?;
    Ok(Comparison {
        label: "adjoint".to_string(),
        lp: cohomology_dims(&Representation::adjoint(algebra.clone()), max_degree)?,
        omni: omni_cohomology_dims(&OmniRep::adjoint(algebra.clone()), max_degree)?,
    })
}

/// True when `θ: g → V` is onto, i.e. `img(ρ)` is the whole graph of `φ`.
pub fn theta_is_surjective(rho: &OmniRep) -> bool {
    let rows: Vec<Vec<Rational>> = rho.theta().to_vec();
    let m = if rows.is_empty() {
        Matrix::zeros(0, rho.dim_v())
    } else {
        Matrix::from_rows(rows).expect("theta vectors share a length")
    };
    crate::linalg::rank(&m) == rho.dim_v()
}

/// `H_omni(g; ρ)` against `H(g; l, r)` for `ρ` with image in the graph of `φ`.
///
/// The two complexes coincide only when every `V`-valued cochain lifts to an
/// `img(ρ)`-valued one, which requires `θ` to be onto `V`; other inputs are rejected.
pub fn compare_graph(rho: &OmniRep, phi: &[Matrix], max_degree: usize) -> Result<Comparison> {
    let rep = induced_lr(rho, phi)?;
    check_in_graph(rho, phi)?;
    if !theta_is_surjective(rho) {
        return Err(Error::HypothesisNotMet(
            "theta must be onto V so that img(rho) is the whole graph of phi".into(),
        ));
    }
    Ok(Comparison {
        label: "graph".to_string(),
        lp: cohomology_dims(&rep, max_degree)?,
        omni: omni_cohomology_dims(rho, max_degree)?,
    })
}
