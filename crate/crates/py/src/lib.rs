//! Python bindings: elements of `L`, lines of the standard space over `F`,
//! parallelism tests, translations, polarities and the verification runner.

use clifford_core::clifford::{CliffordError, CliffordSpace};
use clifford_core::collineation::TranslationL;
use clifford_core::field::{random_nonzero_elem, FElem, LElem};
use clifford_core::harness::{self, RunConfig};
use clifford_core::polarity::{LinearFormF, PolarityF, PolarityKind};
use clifford_core::projective::LineF;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn space() -> &'static CliffordSpace {
    static SPACE: OnceLock<CliffordSpace> = OnceLock::new();
    SPACE.get_or_init(CliffordSpace::standard)
}

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn clifford_error(e: CliffordError) -> PyErr {
    value_error(e)
}

/// An element of `GF(2)(u, v)`.
#[pyclass(name = "Elem", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyElem(LElem);

#[pymethods]
impl PyElem {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyElem).map_err(value_error)
    }

    #[staticmethod]
    fn random(seed: u64, deg_bound: u32) -> Self {
        PyElem(random_nonzero_elem(&mut ChaCha8Rng::seed_from_u64(seed), deg_bound))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyElem(&self.0 + &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyElem(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_div(&other.0).map(PyElem).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.try_inv().map(PyElem).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    /// `x^2`, which always lies in the subfield of squares.
    fn square(&self) -> Self {
        PyElem(self.0.square().into_l())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_square(&self) -> bool {
        self.0.is_in_f()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Elem('{}')", self.0)
    }
}

/// A line `F a + F b` of the space `L` over the subfield of squares.
#[pyclass(name = "Line", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLine(LineF);

#[pymethods]
impl PyLine {
    #[new]
    fn new(a: &PyElem, b: &PyElem) -> PyResult<Self> {
        space().line_through(&a.0, &b.0).map(PyLine).map_err(clifford_error)
    }

    /// Two elements spanning the line, in canonical form.
    fn elements(&self) -> PyResult<(PyElem, PyElem)> {
        let [x, y] = space().line_elements(&self.0).map_err(clifford_error)?;
        Ok((PyElem(x), PyElem(y)))
    }

    /// The line `{ m b : m in M }`.
    fn times(&self, b: &PyElem) -> PyResult<Self> {
        space().line_times_scalar(&self.0, &b.0).map(PyLine).map_err(clifford_error)
    }

    /// The parallel of this line through `F * 1`.
    fn class_representative(&self) -> PyResult<Self> {
        space().canonical_rep(&self.0).map(|c| PyLine(c.line)).map_err(clifford_error)
    }

    fn is_parallel(&self, other: &Self) -> PyResult<bool> {
        space().is_parallel_algebraic(&self.0, &other.0).map_err(clifford_error)
    }

    /// Parallelism decided through the absolute pencil instead.
    fn is_parallel_geometric(&self, other: &Self) -> PyResult<bool> {
        space().is_parallel_geometric(&self.0, &other.0).map_err(clifford_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let [x, y] = match space().line_elements(&self.0) {
            Ok(e) => e,
            Err(_) => return "Line(?)".into(),
        };
        format!("Line(Elem('{x}'), Elem('{y}'))")
    }
}

/// Matrix of `x -> x b` on the tensor algebra in the ideal basis, as rows
/// of strings.
#[pyfunction]
fn translation_matrix(b: &PyElem) -> PyResult<Vec<Vec<String>>> {
    let t = TranslationL::new(space().algebra(), &b.0).map_err(clifford_error)?;
    Ok(t.ideal_matrix.0.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect())
}

/// `"null"` or `"elliptic"` for the polarity of the form with the given
/// values on the standard basis; each value must be a square.
#[pyfunction]
fn polarity_kind(values: [PyElem; 4]) -> PyResult<&'static str> {
    let values = values.map(|x| FElem::new(x.0).map_err(value_error));
    let [a, b, c, d] = values;
    let form = LinearFormF::new([a?, b?, c?, d?], space().basis()).map_err(clifford_error)?;
    let pol = PolarityF::from_form(form).map_err(clifford_error)?;
    Ok(match pol.kind {
        PolarityKind::Null => "null",
        PolarityKind::Elliptic => "elliptic",
    })
}

/// Runs the verification suites and returns `(passed, json_report)`.
#[pyfunction]
#[pyo3(signature = (seed = harness::DEFAULT_SEED, samples = harness::DEFAULT_SAMPLES, suites = Vec::new(), deg_bound = harness::DEFAULT_DEG_BOUND))]
fn verify_all(py: Python<'_>, seed: u64, samples: usize, suites: Vec<String>, deg_bound: u32) -> PyResult<(bool, String)> {
    let config = RunConfig { seed, samples, deg_bound, suites, ..RunConfig::default() };
    let report = py.detach(|| harness::run(&config)).map_err(PyValueError::new_err)?;
    Ok((report.passed(), report.to_json()))
}

#[pymodule]
fn clifford_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElem>()?;
    m.add_class::<PyLine>()?;
    m.add_function(wrap_pyfunction!(translation_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(polarity_kind, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
