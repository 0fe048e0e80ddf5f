//! Python bindings. Rationals cross the boundary as strings like `"-1/2"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use omnilie::balavoine::{mc_check, selftest};
use omnilie::catalog;
use omnilie::io;
use omnilie::omni::{self, compare_adjoint, compare_trivial, omni_cohomology_dims};
use omnilie::rational::{format_rational, parse_rational};
use omnilie::{cohomology_dims, Matrix, Rational};

fn err(e: omnilie::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rationals(values: &[String]) -> PyResult<Vec<Rational>> {
    values
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| PyValueError::new_err(format!("invalid rational {s:?}"))))
        .collect()
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn matrix(rows: &[Vec<String>]) -> PyResult<Matrix> {
    let rows = rows.iter().map(|r| rationals(r)).collect::<PyResult<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows).map_err(err)
}

#[pyclass(name = "LeibnizAlgebra", module = "omnilie")]
struct PyAlgebra {
    inner: omnilie::LeibnizAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// Builds an algebra from 1-based entries `(i, j, k, "value")` meaning `[e_i, e_j] ∋ value e_k`.
    #[new]
    fn new(dim: usize, entries: Vec<(usize, usize, usize, String)>) -> PyResult<Self> {
        let mut parsed = Vec::with_capacity(entries.len());
        for (i, j, k, v) in entries {
            if i == 0 || j == 0 || k == 0 {
                return Err(PyValueError::new_err("indices are 1-based"));
            }
            let v = parse_rational(&v).ok_or_else(|| PyValueError::new_err(format!("invalid rational {v:?}")))?;
            parsed.push((i - 1, j - 1, k - 1, v));
        }
        let inner = omnilie::LeibnizAlgebra::from_entries(dim, &parsed).map_err(err)?;
        Ok(PyAlgebra { inner })
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: catalog::algebra(name).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (text, validate = true))]
    fn from_json(text: &str, validate: bool) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: io::parse_algebra(text, validate).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&io::algebra_document(&self.inner))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn is_leibniz(&self) -> bool {
        self.inner.is_leibniz()
    }

    /// `None` when the Leibniz identity holds, otherwise the failure message.
    fn check(&self) -> Option<String> {
        self.inner.check().err().map(|v| v.to_string())
    }

    fn bracket(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let b = self
            .inner
            .bracket(&rationals(&x)?, &rationals(&y)?)
            .map_err(err)?;
        Ok(strings(&b))
    }

    fn trivial_omnireps(&self) -> Vec<Vec<String>> {
        omni::trivial_omnireps(&self.inner).iter().map(|v| strings(v)).collect()
    }

    /// `(label, lp_dims, omni_dims)` per trivial omni-representation.
    #[pyo3(signature = (max_degree = 3))]
    fn compare_trivial(&self, max_degree: usize) -> PyResult<Vec<(String, Vec<usize>, Vec<usize>)>> {
        let rows = compare_trivial(&self.inner, max_degree).map_err(err)?;
        Ok(rows.into_iter().map(|c| (c.label, c.lp, c.omni)).collect())
    }

    #[pyo3(signature = (max_degree = 3))]
    fn compare_adjoint(&self, max_degree: usize) -> PyResult<(Vec<usize>, Vec<usize>)> {
        let c = compare_adjoint(&self.inner, max_degree).map_err(err)?;
        Ok((c.lp, c.omni))
    }

    fn __repr__(&self) -> String {
        format!("LeibnizAlgebra(dim={})", self.inner.dim())
    }
}

#[pyclass(name = "Representation", module = "omnilie")]
struct PyRepresentation {
    inner: omnilie::Representation,
}

#[pymethods]
impl PyRepresentation {
    #[new]
    fn new(
        algebra: &PyAlgebra,
        dim_v: usize,
        left: Vec<Vec<Vec<String>>>,
        right: Vec<Vec<Vec<String>>>,
    ) -> PyResult<Self> {
        let left = left.iter().map(|m| matrix(m)).collect::<PyResult<Vec<_>>>()?;
        let right = right.iter().map(|m| matrix(m)).collect::<PyResult<Vec<_>>>()?;
        let inner = omnilie::Representation::new(algebra.inner.clone(), dim_v, left, right).map_err(err)?;
        Ok(PyRepresentation { inner })
    }

    #[staticmethod]
    fn trivial(algebra: &PyAlgebra, dim_v: usize) -> Self {
        PyRepresentation {
            inner: omnilie::Representation::trivial(algebra.inner.clone(), dim_v),
        }
    }

    #[staticmethod]
    fn adjoint(algebra: &PyAlgebra) -> Self {
        PyRepresentation {
            inner: omnilie::Representation::adjoint(algebra.inner.clone()),
        }
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        Ok(PyRepresentation {
            inner: catalog::rep(name).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (text, validate = true))]
    fn from_json(text: &str, validate: bool) -> PyResult<Self> {
        Ok(PyRepresentation {
            inner: io::parse_rep(text, validate).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&io::rep_document(&self.inner))
    }

    #[getter]
    fn dim_v(&self) -> usize {
        self.inner.dim_v()
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    fn dual_tensor(&self) -> PyResult<Self> {
        Ok(PyRepresentation {
            inner: self.inner.dual_tensor_rep().map_err(err)?,
        })
    }

    #[pyo3(signature = (max_degree = 3))]
    fn cohomology_dims(&self, max_degree: usize) -> PyResult<Vec<usize>> {
        cohomology_dims(&self.inner, max_degree).map_err(err)
    }

    fn mc_check(&self) -> PyResult<bool> {
        Ok(mc_check(&self.inner).map_err(err)?.holds())
    }

    fn __repr__(&self) -> String {
        format!(
            "Representation(dim_g={}, dim_v={})",
            self.inner.algebra().dim(),
            self.inner.dim_v()
        )
    }
}

#[pyclass(name = "OmniRep", module = "omnilie")]
struct PyOmniRep {
    inner: omni::OmniRep,
}

#[pymethods]
impl PyOmniRep {
    #[new]
    fn new(
        algebra: &PyAlgebra,
        dim_v: usize,
        phi: Vec<Vec<Vec<String>>>,
        theta: Vec<Vec<String>>,
    ) -> PyResult<Self> {
        let phi = phi.iter().map(|m| matrix(m)).collect::<PyResult<Vec<_>>>()?;
        let theta = theta.iter().map(|v| rationals(v)).collect::<PyResult<Vec<_>>>()?;
        let inner = omni::OmniRep::new(algebra.inner.clone(), dim_v, phi, theta).map_err(err)?;
        Ok(PyOmniRep { inner })
    }

    #[staticmethod]
    fn adjoint(algebra: &PyAlgebra) -> Self {
        PyOmniRep {
            inner: omni::OmniRep::adjoint(algebra.inner.clone()),
        }
    }

    #[staticmethod]
    fn trivial(algebra: &PyAlgebra, xi: Vec<String>) -> PyResult<Self> {
        Ok(PyOmniRep {
            inner: omni::OmniRep::trivial(algebra.inner.clone(), &rationals(&xi)?).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_usual(rep: &PyRepresentation) -> PyResult<Self> {
        Ok(PyOmniRep {
            inner: omni::OmniRep::from_usual_rep(&rep.inner).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (text, validate = true))]
    fn from_json(text: &str, validate: bool) -> PyResult<Self> {
        Ok(PyOmniRep {
            inner: io::parse_omnirep(text, validate).map_err(err)?.rho,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&io::omnirep_document(&self.inner, None))
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    fn image_dim(&self) -> PyResult<usize> {
        Ok(omni::ImageSubspace::new(&self.inner).map_err(err)?.dim())
    }

    #[pyo3(signature = (max_degree = 3))]
    fn cohomology_dims(&self, max_degree: usize) -> PyResult<Vec<usize>> {
        omni_cohomology_dims(&self.inner, max_degree).map_err(err)
    }

    /// Loday-Pirashvili against omni dimensions for `ρ` in the graph of `phi`.
    #[pyo3(signature = (phi, max_degree = 3))]
    fn compare_graph(&self, phi: Vec<Vec<Vec<String>>>, max_degree: usize) -> PyResult<(Vec<usize>, Vec<usize>)> {
        let phi = phi.iter().map(|m| matrix(m)).collect::<PyResult<Vec<_>>>()?;
        let c = omni::compare_graph(&self.inner, &phi, max_degree).map_err(err)?;
        Ok((c.lp, c.omni))
    }
}

/// `⟦A+u, B+v⟧` for matrices and vectors of rational strings.
#[pyfunction]
fn omni_bracket(
    a: Vec<Vec<String>>,
    u: Vec<String>,
    b: Vec<Vec<String>>,
    v: Vec<String>,
) -> PyResult<(Vec<Vec<String>>, Vec<String>)> {
    let x = omni::OmniElement::new(matrix(&a)?, rationals(&u)?).map_err(err)?;
    let y = omni::OmniElement::new(matrix(&b)?, rationals(&v)?).map_err(err)?;
    let z = omni::omni_bracket(&x, &y).map_err(err)?;
    let rows = (0..z.a.rows()).map(|i| strings(z.a.row(i))).collect();
    Ok((rows, strings(&z.u)))
}

#[pyfunction]
fn is_embedding_tensor(phi: Vec<Vec<Vec<String>>>) -> PyResult<bool> {
    let phi = phi.iter().map(|m| matrix(m)).collect::<PyResult<Vec<_>>>()?;
    Ok(omni::is_embedding_tensor(&phi))
}

#[pyfunction]
fn catalog_names() -> (Vec<&'static str>, Vec<&'static str>) {
    (catalog::ALGEBRA_NAMES.to_vec(), catalog::REP_NAMES.to_vec())
}

#[pyfunction]
#[pyo3(signature = (seed = 0, trials = 200))]
fn balavoine_selftest(py: Python<'_>, seed: u64, trials: usize) -> PyResult<Bound<'_, PyDict>> {
    let r = selftest(seed, trials);
    let d = PyDict::new(py);
    d.set_item("seed", r.seed)?;
    d.set_item("trials", r.trials)?;
    d.set_item("skew_failures", r.skew_failures)?;
    d.set_item("jacobi_failures", r.jacobi_failures)?;
    d.set_item("square_checks", r.square_checks)?;
    d.set_item("square_leibniz", r.square_leibniz)?;
    d.set_item("square_mismatches", r.square_mismatches)?;
    d.set_item("passed", r.passed())?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "omnilie")]
fn omnilie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_class::<PyOmniRep>()?;
    m.add_function(wrap_pyfunction!(omni_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(is_embedding_tensor, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(balavoine_selftest, m)?)?;
    Ok(())
}
