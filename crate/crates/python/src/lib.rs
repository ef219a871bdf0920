//! Python bindings: `import threshold_spectra_py`.
//!
//! Reports come back as plain dicts (via the JSON form), matrices as lists of rows.

use pyo3::exceptions::{PyArithmeticError, PyIndexError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use threshold_spectra as ts;
use threshold_spectra::spectra::{assemble_condensed, assemble_q, eigenvalues, DEFAULT_TOLERANCE};
use threshold_spectra::{AnalyzeOptions, Block, Check, SweepConfig, SymMatrix, CHECK_TOLERANCE};

fn py_err(e: ts::Error) -> PyErr {
    match e {
        ts::Error::NoConvergence { .. } => PyArithmeticError::new_err(e.to_string()),
        ts::Error::VertexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A threshold graph in normalized block form.
#[pyclass(name = "ThresholdGraph", module = "threshold_spectra_py", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph {
    inner: ts::ThresholdGraph,
}

impl From<ts::ThresholdGraph> for PyGraph {
    fn from(inner: ts::ThresholdGraph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyGraph {
    /// Parses `"001101010111"` or run-length text such as `"0^2,1^2,0,1"`.
    #[new]
    fn new(sequence: &str) -> PyResult<Self> {
        let raw = ts::parse_sequence(sequence).map_err(py_err)?;
        Ok(ts::ThresholdGraph::normalize(&raw).into())
    }

    /// From `[(bit, size), ...]` already in alternating normalized form.
    #[staticmethod]
    fn from_blocks(blocks: Vec<(u8, usize)>) -> PyResult<Self> {
        let blocks = blocks.into_iter().map(|(b, q)| Block::new(b != 0, q)).collect();
        ts::ThresholdGraph::from_blocks(blocks).map(Into::into).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn kbar(&self) -> usize {
        self.inner.kbar()
    }

    #[getter]
    fn blocks(&self) -> Vec<(u8, usize)> {
        self.inner.blocks().iter().map(|b| (b.b() as u8, b.size)).collect()
    }

    #[getter]
    fn sequence(&self) -> String {
        self.inner.bit_string()
    }

    #[getter]
    fn block_degrees(&self) -> Vec<usize> {
        self.inner.degrees().block_degrees.clone()
    }

    /// Ascending.
    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees().degree_sequence.clone()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// 1-based vertices.
    fn is_edge(&self, i: usize, j: usize) -> PyResult<bool> {
        self.inner.is_edge(i, j).map_err(py_err)
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn append_one(&self) -> Self {
        self.inner.append_one().into()
    }

    fn ferrers(&self) -> String {
        ts::ferrers(&self.inner)
    }

    /// Ascending eigenvalues of Q, merged from block values and the condensed matrix.
    fn spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(ts::full_spectrum(&self.inner).map_err(py_err)?.values)
    }

    /// `{"n", "values", "provenance"}`.
    fn spectrum_report(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &ts::full_spectrum(&self.inner).map_err(py_err)?)
    }

    fn signless_laplacian(&self) -> Vec<Vec<f64>> {
        assemble_q(&self.inner).rows()
    }

    fn condensed_matrix(&self) -> Vec<Vec<f64>> {
        assemble_condensed(&self.inner).rows()
    }

    #[pyo3(signature = (tol = CHECK_TOLERANCE))]
    fn check_condensed_interlacing(&self, py: Python<'_>, tol: f64) -> PyResult<Py<PyAny>> {
        to_py(py, &ts::check_condensed_interlacing(&self.inner, tol).map_err(py_err)?)
    }

    #[pyo3(signature = (tol = CHECK_TOLERANCE))]
    fn check_degree_interlacing(&self, py: Python<'_>, tol: f64) -> PyResult<Py<PyAny>> {
        to_py(py, &ts::check_degree_interlacing(&self.inner, tol).map_err(py_err)?)
    }

    #[pyo3(signature = (tol = CHECK_TOLERANCE))]
    fn check_complement_interlacing(&self, py: Python<'_>, tol: f64) -> PyResult<Py<PyAny>> {
        to_py(py, &ts::check_complement_interlacing(&self.inner, tol).map_err(py_err)?)
    }

    #[pyo3(signature = (tol = CHECK_TOLERANCE))]
    fn check_append_one(&self, py: Python<'_>, tol: f64) -> PyResult<Py<PyAny>> {
        to_py(py, &ts::check_append_one(&self.inner, tol).map_err(py_err)?)
    }

    #[pyo3(signature = (tol = CHECK_TOLERANCE))]
    fn check_brouwer(&self, py: Python<'_>, tol: f64) -> PyResult<Py<PyAny>> {
        to_py(py, &ts::check_brouwer(&self.inner, tol).map_err(py_err)?)
    }

    #[pyo3(signature = (tol = CHECK_TOLERANCE, append_one = false))]
    fn analyze(&self, py: Python<'_>, tol: f64, append_one: bool) -> PyResult<Py<PyAny>> {
        let bundle = ts::analyze(&self.inner, AnalyzeOptions { tol, append_one }).map_err(py_err)?;
        to_py(py, &bundle)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ThresholdGraph('{}')", self.inner)
    }
}

#[pyfunction]
fn parse(sequence: &str) -> PyResult<PyGraph> {
    PyGraph::new(sequence)
}

/// All `2^(n-1)` graphs on `n >= 2` vertices, in counter order.
#[pyfunction]
fn enumerate(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(ts::enumerate(n).map_err(py_err)?.map(|(_, g)| g.into()).collect())
}

/// Ascending eigenvalues of a real symmetric matrix given as rows.
#[pyfunction]
#[pyo3(signature = (rows, tol = DEFAULT_TOLERANCE))]
fn eigensolve(rows: Vec<Vec<f64>>, tol: f64) -> PyResult<Vec<f64>> {
    let m = SymMatrix::from_rows(&rows).map_err(py_err)?;
    eigenvalues(&m, tol).map_err(py_err)
}

/// Exhaustive sweep over `2 <= n <= max_n`; returns the summary dict.
#[pyfunction]
#[pyo3(signature = (max_n, checks = "all", jobs = 1, tol = CHECK_TOLERANCE))]
fn verify(py: Python<'_>, max_n: usize, checks: &str, jobs: usize, tol: f64) -> PyResult<Py<PyAny>> {
    let config = SweepConfig {
        jobs: jobs.max(1),
        tol,
        ..SweepConfig::new(max_n, Check::parse_list(checks).map_err(py_err)?)
    };
    let (summary, _) = py.detach(|| ts::verify(&config)).map_err(py_err)?;
    to_py(py, &summary)
}

#[pymodule]
fn threshold_spectra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(eigensolve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("CHECK_TOLERANCE", CHECK_TOLERANCE)?;
    Ok(())
}
