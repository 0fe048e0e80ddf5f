//! Shuffles, insertion products and the Balavoine bracket on `C*(g, g)`.

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::catalog;
use crate::cochain::{Cochain, MultiIndices};
use crate::cohomology::coboundary;
use crate::error::{Error, Result};
use crate::random;
use crate::rational::{frac, sign, Rational};
use crate::rep::Representation;

/// An `(i, j)`-shuffle of `{0, .., i+j-1}` (stored 0-based) and its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shuffle {
    /// `perm[t] = σ(t+1) - 1`.
    pub perm: Vec<usize>,
    pub negative: bool,
}

impl Shuffle {
    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                count += 1;
            }
        }
    }
    count
}

/// All `(i, j)`-shuffles in lexicographic order of `(σ(1), ..., σ(i+j))`.
pub fn shuffles(i: usize, j: usize) -> Vec<Shuffle> {
    let n = i + j;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = (0..i).collect();
    loop {
        let mut perm = chosen.clone();
        perm.extend((0..n).filter(|x| !chosen.contains(x)));
        let negative = inversions(&perm) % 2 == 1;
        out.push(Shuffle { perm, negative });
        // next i-combination of 0..n in lex order
        let Some(pos) = (0..i).rev().find(|&p| chosen[p] < n - i + p) else {
            break;
        };
        chosen[pos] += 1;
        for q in pos + 1..i {
            chosen[q] = chosen[q - 1] + 1;
        }
    }
    out
}

fn require_endomorphism(c: &Cochain, what: &'static str) -> Result<()> {
    if c.arity_dim() != c.codomain_dim() {
        return Err(Error::DimensionMismatch {
            context: what,
            expected: c.arity_dim(),
            found: c.codomain_dim(),
        });
    }
    if c.degree() == 0 {
        return Err(Error::OutOfRange {
            what: "Balavoine cochain degree",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    Ok(())
}

fn require_same_algebra(p: &Cochain, q: &Cochain) -> Result<()> {
    require_endomorphism(p, "left operand codomain")?;
    require_endomorphism(q, "right operand codomain")?;
    if p.arity_dim() != q.arity_dim() {
        return Err(Error::DimensionMismatch {
            context: "operand algebra dimension",
            expected: p.arity_dim(),
            found: q.arity_dim(),
        });
    }
    Ok(())
}

/// `P ∘_k Q` for `P ∈ C^{p+1}(g,g)`, `Q ∈ C^{q+1}(g,g)` and `1 ≤ k ≤ p+1`:
///
/// ```text
/// Σ_{σ ∈ S(k-1,q)} (-1)^σ (-1)^{(k-1)q}
///     P(x_σ(1), .., x_σ(k-1), Q(x_σ(k), .., x_σ(k+q-1), x_{k+q}), x_{k+q+1}, .., x_{p+q+1})
/// ```
pub fn circ_k(pc: &Cochain, qc: &Cochain, k: usize) -> Result<Cochain> {
    require_same_algebra(pc, qc)?;
    let p = pc.degree() - 1;
    let q = qc.degree() - 1;
    if k == 0 || k > p + 1 {
        return Err(Error::OutOfRange {
            what: "insertion slot",
            value: k,
            min: 1,
            max: p + 1,
        });
    }
    let n = pc.arity_dim();
    let total = p + q + 1;
    let outer_sign = (k - 1) * q % 2 == 1;
    let perms = shuffles(k - 1, q);
    let mut out = Cochain::zero(total, n, n);
    let mut q_args = vec![0usize; q + 1];
    let mut p_args = vec![0usize; p + 1];
    for x in MultiIndices::new(n, total) {
        let mut value = vec![Rational::zero(); n];
        for sh in &perms {
            let s = sign(sh.negative ^ outer_sign);
            for t in 0..q {
                q_args[t] = x[sh.perm[k - 1 + t]];
            }
            q_args[q] = x[k + q - 1];
            let inner = qc.value(&q_args);
            if inner.iter().all(Zero::is_zero) {
                continue;
            }
            for t in 0..k - 1 {
                p_args[t] = x[sh.perm[t]];
            }
            for t in k..=p {
                p_args[t] = x[q + t];
            }
            let outer = pc.value_with_vector(&mut p_args, k - 1, inner);
            for (v, o) in value.iter_mut().zip(&outer) {
                if !o.is_zero() {
                    *v += &s * o;
                }
            }
        }
        out.value_mut(&x).clone_from_slice(&value);
    }
    Ok(out)
}

/// `P ∘̄ Q = Σ_{k=1}^{p+1} P ∘_k Q`.
pub fn circ_bar(pc: &Cochain, qc: &Cochain) -> Result<Cochain> {
    require_same_algebra(pc, qc)?;
    let mut acc = circ_k(pc, qc, 1)?;
    for k in 2..=pc.degree() {
        acc = acc.add(&circ_k(pc, qc, k)?);
    }
    Ok(acc)
}

/// `[P, Q]_B = P ∘̄ Q - (-1)^{pq} Q ∘̄ P`.
pub fn bracket_b(pc: &Cochain, qc: &Cochain) -> Result<Cochain> {
    require_same_algebra(pc, qc)?;
    let p = pc.degree() - 1;
    let q = qc.degree() - 1;
    let left = circ_bar(pc, qc)?;
    let right = circ_bar(qc, pc)?;
    Ok(if p * q % 2 == 0 {
        left.sub(&right)
    } else {
        left.add(&right)
    })
}

impl LeibnizAlgebra {
    /// The bracket as a 2-cochain `α ∈ C^2(g, g)`.
    pub fn bracket_cochain(&self) -> Cochain {
        Cochain::from_coeffs(2, self.dim(), self.dim(), self.constants().to_vec())
            .expect("n^3 structure constants")
    }

    /// Reads structure constants back from a 2-cochain on `g` valued in `g`.
    pub fn from_bracket_cochain(alpha: &Cochain) -> Result<LeibnizAlgebra> {
        if alpha.degree() != 2 || alpha.arity_dim() != alpha.codomain_dim() {
            return Err(Error::DimensionMismatch {
                context: "bracket cochain degree",
                expected: 2,
                found: alpha.degree(),
            });
        }
        LeibnizAlgebra::new(alpha.arity_dim(), alpha.coeffs().to_vec())
    }
}

/// Outcome of the Maurer-Cartan check for `rbar` on `g ⋉_(l,0) V`.
#[derive(Debug, Clone)]
pub struct MaurerCartan {
    /// `∂ rbar - ½ [rbar, rbar]_B`.
    pub residual: Cochain,
}

impl MaurerCartan {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }

    /// First basis triple (0-based, semidirect basis) with a nonzero residual.
    pub fn witness(&self) -> Option<(Vec<usize>, Vec<Rational>)> {
        let n = self.residual.arity_dim();
        MultiIndices::new(n, 3).find_map(|idx| {
            let v = self.residual.value(&idx);
            (!v.iter().all(Zero::is_zero)).then(|| (idx.clone(), v.to_vec()))
        })
    }
}

/// Builds `h = g ⋉_(l,0) V`, `rbar`, and evaluates `∂ rbar - ½ [rbar, rbar]_B` with
/// `∂` the coboundary of the adjoint representation of `h`.
pub fn mc_check(rep: &Representation) -> Result<MaurerCartan> {
    rep.require_valid()?;
    Ok(mc_residual(rep))
}

/// Same as [`mc_check`] without validating `rep`; only `(V, l, 0)` must be a representation.
pub fn mc_residual(rep: &Representation) -> MaurerCartan {
    let h = rep.semidirect_unchecked(false);
    let adjoint = Representation::adjoint(h);
    let rbar = rep.rbar_cochain();
    let d = coboundary(&adjoint, &rbar).expect("rbar lives on the semidirect product");
    let sq = bracket_b(&rbar, &rbar).expect("rbar is an endomorphism cochain");
    MaurerCartan {
        residual: d.sub(&sq.scale(&frac(1, 2))),
    }
}

/// Outcome of [`selftest`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub trials: usize,
    pub skew_failures: usize,
    pub jacobi_failures: usize,
    pub square_checks: usize,
    pub square_leibniz: usize,
    pub square_mismatches: usize,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.skew_failures == 0 && self.jacobi_failures == 0 && self.square_mismatches == 0
    }
}

/// Largest `n^arity` allowed for the output of a random Jacobi triple.
const SELFTEST_TABLE_LIMIT: usize = 729;

fn graded_sign(p: usize, q: usize) -> Rational {
    sign(p * q % 2 == 1)
}

/// Graded skew-symmetry and Jacobi on `trials` random triples of arity `1..=3`
/// over dimensions `1..=3`, then `[α, α]_B = 0 ⇔ Leibniz` on the catalog plus
/// `trials / 2` random structure tables.
pub fn selftest(seed: u64, trials: usize) -> SelftestReport {
    let mut rng = random::rng(seed);
    let mut report = SelftestReport {
        seed,
        trials,
        skew_failures: 0,
        jacobi_failures: 0,
        square_checks: 0,
        square_leibniz: 0,
        square_mismatches: 0,
    };
    for _ in 0..trials {
        let arities: Vec<usize> = (0..3).map(|_| rng.random_range(1..=3usize)).collect();
        let out_arity = arities.iter().sum::<usize>() - 2;
        let mut n = rng.random_range(1..=3usize);
        while n > 1 && n.pow(out_arity as u32) > SELFTEST_TABLE_LIMIT {
            n -= 1;
        }
        let [a, b, c] = [0, 1, 2].map(|t| random::cochain(&mut rng, arities[t], n, n));
        let [p, q, _] = [0, 1, 2].map(|t| arities[t] - 1);

        let ab = bracket_b(&a, &b).expect("same algebra");
        let ba = bracket_b(&b, &a).expect("same algebra");
        if ab.add(&ba.scale(&graded_sign(p, q))).coeffs().iter().any(|x| !x.is_zero()) {
            report.skew_failures += 1;
        }

        let lhs = bracket_b(&a, &bracket_b(&b, &c).expect("same algebra")).expect("same algebra");
        let first = bracket_b(&ab, &c).expect("same algebra");
        let second = bracket_b(&b, &bracket_b(&a, &c).expect("same algebra")).expect("same algebra");
        let rhs = first.add(&second.scale(&graded_sign(p, q)));
        if lhs != rhs {
            report.jacobi_failures += 1;
        }
    }

    let mut tables: Vec<LeibnizAlgebra> = catalog::algebras().into_iter().map(|(_, a)| a).collect();
    tables.push(catalog::non_leibniz_example());
    for t in 0..trials / 2 {
        let dim = rng.random_range(1..=3usize);
        tables.push(if t % 2 == 0 {
            random::structure_table(&mut rng, dim, 0.3)
        } else {
            random::leibniz_algebra(&mut rng, dim)
        });
    }
    for alg in &tables {
        let alpha = alg.bracket_cochain();
        let square_zero = bracket_b(&alpha, &alpha).expect("endomorphism cochain").is_zero();
        let leibniz = alg.is_leibniz();
        report.square_checks += 1;
        report.square_leibniz += leibniz as usize;
        if square_zero != leibniz {
            report.square_mismatches += 1;
        }
    }
    report
}
