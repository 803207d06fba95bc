//! Python bindings. Rationals cross the boundary as strings such as `"3/7"`;
//! vector entries may also be given as Python ints.

use perfdel_core as core;
use perfdel_core::{Normalization, Rational, RationalVector};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::BudgetExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Rational::from(i));
    }
    let s: String = obj.extract()?;
    s.parse().map_err(err)
}

fn vector(obj: &Bound<'_, PyAny>) -> PyResult<RationalVector> {
    obj.try_iter()?
        .map(|item| rational(&item?))
        .collect::<PyResult<Vec<_>>>()
        .map(RationalVector::new)
}

fn strings(v: &RationalVector) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Parses a JSON string into Python objects via the stdlib `json` module.
fn to_py_json<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// `A·|x|² + B·(j·x)²`.
#[pyclass(module = "perfdel", name = "RadialForm", frozen)]
struct PyRadialForm(core::RadialForm);

#[pymethods]
impl PyRadialForm {
    #[new]
    fn new(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, d: usize) -> PyResult<Self> {
        Ok(PyRadialForm(core::RadialForm::new(rational(a)?, rational(b)?, d)))
    }

    #[getter]
    fn a(&self) -> String {
        self.0.a.to_string()
    }

    #[getter]
    fn b(&self) -> String {
        self.0.b.to_string()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d
    }

    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<String> {
        let v = vector(x)?;
        if v.len() != self.0.d {
            return Err(err(core::Error::DimensionMismatch {
                expected: self.0.d,
                got: v.len(),
            }));
        }
        Ok(self.0.eval(&v).to_string())
    }

    fn is_positive_definite(&self) -> bool {
        self.0.is_positive_definite()
    }

    /// `c` with `other = c·self`, or `None`.
    fn ratio_to(&self, other: &PyRadialForm) -> Option<String> {
        self.0.ratio_to(&other.0).map(|c| c.to_string())
    }

    fn __eq__(&self, other: &PyRadialForm) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("RadialForm(A={}, B={}, d={})", self.0.a, self.0.b, self.0.d)
    }
}

#[pyclass(module = "perfdel", name = "CanonicalRep", frozen)]
struct PyCanonicalRep(core::CanonicalRep);

#[pymethods]
impl PyCanonicalRep {
    #[getter]
    fn l(&self) -> i64 {
        self.0.l
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.a
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    fn parity(&self) -> u8 {
        self.0.parity()
    }

    fn point(&self) -> Vec<String> {
        strings(&self.0.point())
    }

    fn __eq__(&self, other: &PyCanonicalRep) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        (self.0.l, self.0.a, self.0.d, self.0.n).hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("CanonicalRep(l={}, a={}, d={}, n={})", self.0.l, self.0.a, self.0.d, self.0.n)
    }
}

#[pyclass(module = "perfdel", name = "VertexSet", frozen)]
struct PyVertexSet(core::VertexSet);

#[pymethods]
impl PyVertexSet {
    fn __len__(&self) -> usize {
        self.0.len()
    }

    #[getter]
    fn vertices(&self) -> Vec<Vec<String>> {
        self.0.vertices.iter().map(strings).collect()
    }

    #[getter]
    fn family(&self) -> String {
        self.0.meta.family.to_string()
    }

    #[getter]
    fn affine_dim(&self) -> usize {
        self.0.meta.affine_dim
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.0.meta.ambient_dim
    }

    fn contains(&self, x: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.0.contains(&vector(x)?))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn __repr__(&self) -> String {
        format!("VertexSet(family={}, vertices={})", self.0.meta.family, self.0.len())
    }
}

#[pyclass(module = "perfdel", name = "DelaunayCertificate", frozen)]
struct PyDelaunayCertificate(core::DelaunayCertificate);

#[pymethods]
impl PyDelaunayCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PyDelaunayCertificate)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn alpha(&self) -> String {
        self.0.alpha.to_string()
    }

    #[getter]
    fn beta(&self) -> String {
        self.0.beta.to_string()
    }

    #[getter]
    fn min_margin(&self) -> Option<String> {
        self.0.min_margin.as_ref().map(ToString::to_string)
    }

    #[getter]
    fn derived_form(&self) -> PyRadialForm {
        PyRadialForm(self.0.derived_form.clone())
    }

    fn is_certified(&self) -> bool {
        self.0.is_certified()
    }

    /// Raises `ValueError` if the payload does not re-validate.
    fn recheck(&self) -> PyResult<()> {
        self.0.recheck().map_err(PyValueError::new_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.0).expect("certificate serializes")
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py_json(py, &self.0)
    }
}

#[pyclass(module = "perfdel", name = "PerfectionCertificate", frozen)]
struct PyPerfectionCertificate(core::PerfectionCertificate);

#[pymethods]
impl PyPerfectionCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PyPerfectionCertificate)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank
    }

    #[getter]
    fn nullity(&self) -> usize {
        self.0.nullity
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count
    }

    fn is_perfect(&self) -> bool {
        self.0.is_perfect()
    }

    fn recheck(&self) -> PyResult<()> {
        self.0.recheck().map_err(PyValueError::new_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.0).expect("certificate serializes")
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py_json(py, &self.0)
    }
}

#[pyfunction]
fn phi_main(d: usize, s: usize, k: usize) -> PyResult<PyRadialForm> {
    core::phi_main(d, s, k).map(PyRadialForm).map_err(err)
}

/// The radial form of `alpha·φ₁ + beta·φ₂`.
#[pyfunction]
fn pair_to_radial(alpha: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>, d: usize) -> PyResult<PyRadialForm> {
    let pf = core::PairForm::new(rational(alpha)?, rational(beta)?, d);
    Ok(PyRadialForm(core::pair_to_radial(&pf)))
}

/// `(φ₁(x), φ₂(x))`.
#[pyfunction]
fn eval_phi12(x: &Bound<'_, PyAny>) -> PyResult<(String, String)> {
    let (a, b) = core::eval_phi12(&vector(x)?);
    Ok((a.to_string(), b.to_string()))
}

#[pyfunction]
fn canonical_rep(x: &Bound<'_, PyAny>, d: usize, n: usize) -> PyResult<PyCanonicalRep> {
    let lat = core::ScaledLattice::new(d, n).map_err(err)?;
    core::canonical_rep(&vector(x)?, &lat).map(PyCanonicalRep).map_err(err)
}

#[pyfunction]
fn enumerate_m(d: usize, k: usize) -> PyResult<Vec<PyCanonicalRep>> {
    Ok(core::enumerate_m(d, k).map_err(err)?.into_iter().map(PyCanonicalRep).collect())
}

#[pyfunction]
#[pyo3(signature = (d, s, k, normalization = "half"))]
fn construct_p(d: usize, s: usize, k: usize, normalization: &str) -> PyResult<PyVertexSet> {
    let norm: Normalization = normalization.parse().map_err(err)?;
    core::construct_p(d, s, k, norm).map(PyVertexSet).map_err(err)
}

#[pyfunction]
fn construct_g(d: usize) -> PyResult<PyVertexSet> {
    core::construct_g(d).map(PyVertexSet).map_err(err)
}

#[pyfunction]
fn delaunay_certificate(d: usize, s: usize, k: usize) -> PyResult<PyDelaunayCertificate> {
    core::delaunay_certificate(d, s, k).map(PyDelaunayCertificate).map_err(err)
}

#[pyfunction]
fn perfection_certificate(vertex_set: &PyVertexSet) -> PyResult<PyPerfectionCertificate> {
    core::perfection_certificate(&vertex_set.0).map(PyPerfectionCertificate).map_err(err)
}

/// Brute-force check that the vertices of `P(d,s,k)` (integral
/// normalization) are exactly the odd-class lattice points on the empty
/// ellipsoid of the diagram-derived form.
#[pyfunction]
#[pyo3(signature = (d, s, k, max_nodes = None))]
fn bruteforce_delaunay<'py>(py: Python<'py>, d: usize, s: usize, k: usize, max_nodes: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let cert = core::delaunay_certificate(d, s, k).map_err(err)?;
    let verts = core::construct_p(d, s, k, Normalization::Integral).map_err(err)?.vertices;
    let lat = core::ScaledLattice::for_family(d, k).map_err(err)?.odd_class();
    let f = core::as_inhom(&cert.derived_form, &RationalVector::zeros(d), &Rational::zero());
    let out = py
        .detach(|| core::bruteforce_delaunay(&verts, &f, &lat, max_nodes))
        .map_err(err)?;
    to_py_json(py, &out)
}

#[pyfunction]
#[pyo3(signature = (d, s, k, max_nodes = None))]
fn cross_minimality_check<'py>(py: Python<'py>, d: usize, s: usize, k: usize, max_nodes: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let out = core::cross_minimality_check(d, s, k, max_nodes).map_err(err)?;
    to_py_json(py, &out)
}

#[pyfunction]
fn thm7_determinants<'py>(py: Python<'py>, d: usize, k: usize, s: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py_json(py, &core::thm7_determinants(d, k, s).map_err(err)?)
}

/// Rows `{rep: {l, a, d, n}, phi1, phi2}` sorted by `phi2`, then `phi1`.
#[pyfunction]
fn diagram<'py>(py: Python<'py>, d: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py_json(py, &core::diagram(d, k).map_err(err)?)
}

#[pymodule]
fn perfdel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRadialForm>()?;
    m.add_class::<PyCanonicalRep>()?;
    m.add_class::<PyVertexSet>()?;
    m.add_class::<PyDelaunayCertificate>()?;
    m.add_class::<PyPerfectionCertificate>()?;
    m.add_function(wrap_pyfunction!(phi_main, m)?)?;
    m.add_function(wrap_pyfunction!(pair_to_radial, m)?)?;
    m.add_function(wrap_pyfunction!(eval_phi12, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_rep, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_m, m)?)?;
    m.add_function(wrap_pyfunction!(construct_p, m)?)?;
    m.add_function(wrap_pyfunction!(construct_g, m)?)?;
    m.add_function(wrap_pyfunction!(delaunay_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(perfection_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(bruteforce_delaunay, m)?)?;
    m.add_function(wrap_pyfunction!(cross_minimality_check, m)?)?;
    m.add_function(wrap_pyfunction!(thm7_determinants, m)?)?;
    m.add_function(wrap_pyfunction!(diagram, m)?)?;
    Ok(())
}
