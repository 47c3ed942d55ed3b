//! Python bindings. Exact rationals cross the boundary as `"p/q"` strings,
//! which `fractions.Fraction` accepts directly; structured reports arrive
//! as plain dicts.

use c4flag::arith::{parse_rational, rational_to_string};
use c4flag::extremal::{self, Pattern, SearchOptions};
use c4flag::flag::{density_vector, enumerate_flags, TypeGraph};
use c4flag::graph::{
    canonical_form, chromatic_number, count_induced, count_subgraphs, enumerate_graphs, has_color_critical_edge,
    induced_catalog_counts, is_complete_multipartite, parse_graph, to_graph6, SmallGraph,
};
use c4flag::multipartite::{self, PartProfile};
use c4flag::{certificate, Error};
use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    if e.is_size_cap() {
        PyOverflowError::new_err(e.to_string())
    } else if matches!(e, Error::Parse(_) | Error::Precondition(_) | Error::InvalidFlag(_)) {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn to_dict<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple graph on at most 12 vertices.
#[pyclass(name = "Graph", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph {
    inner: SmallGraph,
}

#[pymethods]
impl PyGraph {
    /// Parses a name (`C4`, `K3,3`, `T3(7)`, `paw`, ...) or a graph6 string.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph(spec).map_err(py_err)? })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: SmallGraph::from_edges(n, &edges).map_err(py_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn graph6(&self) -> String {
        to_graph6(&self.inner)
    }

    fn canonical(&self) -> Self {
        PyGraph { inner: canonical_form(&self.inner).graph }
    }

    /// Number of copies of `pattern` (induced copies with `induced=True`).
    #[pyo3(signature = (pattern, induced = false))]
    fn count(&self, pattern: &PyGraph, induced: bool) -> PyResult<u64> {
        let f = if induced { count_induced } else { count_subgraphs };
        f(&pattern.inner, &self.inner).map_err(py_err)
    }

    fn c4_count(&self) -> u64 {
        let i = induced_catalog_counts(&self.inner);
        i[8] + i[9] + 3 * i[10]
    }

    /// Induced densities of the eleven 4-vertex graphs.
    fn catalog_densities(&self) -> PyResult<Vec<String>> {
        Ok(density_vector(&self.inner).map_err(py_err)?.iter().map(rational_to_string).collect())
    }

    fn chromatic_number(&self) -> usize {
        chromatic_number(&self.inner)
    }

    fn color_critical_edge(&self) -> PyResult<Option<(usize, usize)>> {
        has_color_critical_edge(&self.inner).map_err(py_err)
    }

    /// The parts when the graph is complete multipartite, else `None`.
    fn multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        is_complete_multipartite(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph({:?})", to_graph6(&self.inner))
    }
}

/// Part sizes of a complete multipartite graph.
#[pyclass(name = "PartProfile", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPartProfile {
    inner: PartProfile,
}

#[pymethods]
impl PyPartProfile {
    #[new]
    fn new(parts: Vec<u64>) -> PyResult<Self> {
        Ok(PyPartProfile { inner: PartProfile::new(parts).map_err(py_err)? })
    }

    #[staticmethod]
    fn balanced(r: u64, n: u64) -> PyResult<Self> {
        Ok(PyPartProfile { inner: PartProfile::balanced(r, n).map_err(py_err)? })
    }

    #[getter]
    fn parts(&self) -> Vec<u64> {
        self.inner.parts().to_vec()
    }

    fn c4_count(&self) -> String {
        multipartite::c4_count(&self.inner).to_string()
    }

    fn k4_count(&self) -> String {
        multipartite::k4_count(&self.inner).to_string()
    }

    /// C4 counts before and after moving a vertex from part `i` to part `j`.
    fn shift_check(&self, i: usize, j: usize) -> PyResult<(String, String)> {
        let (a, b) = multipartite::shift_check(&self.inner, i, j).map_err(py_err)?;
        Ok((a.to_string(), b.to_string()))
    }

    fn graph(&self) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: self.inner.to_graph().map_err(py_err)? })
    }

    fn __repr__(&self) -> String {
        format!("PartProfile({})", self.inner)
    }
}

/// `{"exact", "density", "asymptotic_density"}` for the Turan graph `T_r(n)`.
#[pyfunction]
fn turan(py: Python<'_>, r: u64, n: u64) -> PyResult<Bound<'_, PyAny>> {
    let value = serde_json::json!({
        "exact": multipartite::turan_c4_count(r, n).map_err(py_err)?.to_string(),
        "density": rational_to_string(&multipartite::turan_c4_density(r, n).map_err(py_err)?),
        "asymptotic_density": rational_to_string(&multipartite::turan_c4_asymptotic(r).map_err(py_err)?),
    });
    to_dict(py, &value)
}

/// `g(r)` and the coefficients of the expansion in `eta` at `r`.
#[pyfunction]
fn stability<'py>(py: Python<'py>, r: &str) -> PyResult<Bound<'py, PyAny>> {
    let r = parse_rational(r).map_err(py_err)?;
    let s = multipartite::stability_expansion();
    let at = s.at(&r).map_err(py_err)?;
    let value = serde_json::json!({
        "identity_holds": s.agree(),
        "g": rational_to_string(&s.g.eval(&r).map_err(py_err)?),
        "coefficients": at.coeffs().iter().map(rational_to_string).collect::<Vec<_>>(),
    });
    to_dict(py, &value)
}

/// The full certificate report as a dict.
#[pyfunction]
fn verify_certificate(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_dict(py, &certificate::verify_bound().map_err(py_err)?)
}

/// Exact slacks `bound - c_i` at `r >= 3`.
#[pyfunction]
fn certificate_slacks(r: &str) -> PyResult<Vec<String>> {
    let r = parse_rational(r).map_err(py_err)?;
    Ok(certificate::evaluate_at(&r).map_err(py_err)?.iter().map(rational_to_string).collect())
}

#[pyfunction]
#[pyo3(signature = (n, target = "C4", forbid = "K4", jobs = None))]
fn extremal_search<'py>(
    py: Python<'py>,
    n: usize,
    target: &str,
    forbid: &str,
    jobs: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let h = Pattern::from_graph(&parse_graph(target).map_err(py_err)?);
    let f = Pattern::from_graph(&parse_graph(forbid).map_err(py_err)?);
    let opts = SearchOptions { jobs, ..Default::default() };
    let res = py.detach(|| extremal::search(n, &h, &f, &opts)).map_err(py_err)?;
    to_dict(py, &res)
}

#[pyfunction]
#[pyo3(signature = (n, r, jobs = None))]
fn k4_bound(py: Python<'_>, n: usize, r: usize, jobs: Option<usize>) -> PyResult<Bound<'_, PyAny>> {
    let opts = SearchOptions { jobs, ..Default::default() };
    let res = py.detach(|| extremal::k4_bound_check(n, r, &opts)).map_err(py_err)?;
    to_dict(py, &res)
}

/// All graphs on `k <= 7` vertices up to isomorphism.
#[pyfunction]
fn graphs(k: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate_graphs(k).map_err(py_err)?.into_iter().map(|inner| PyGraph { inner }).collect())
}

/// Flags of order `order` over `sigma1` or `sigma2`, as `graph6:labels` text.
#[pyfunction]
fn flags(sigma: &str, order: usize) -> PyResult<Vec<String>> {
    let t = match sigma {
        "sigma1" => TypeGraph::sigma1(),
        "sigma2" => TypeGraph::sigma2(),
        other => return Err(PyValueError::new_err(format!("unknown type {other:?}"))),
    };
    Ok(enumerate_flags(&t, order).map_err(py_err)?.iter().map(|f| f.to_text()).collect())
}

#[pymodule]
#[pyo3(name = "c4flag")]
fn c4flag_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPartProfile>()?;
    m.add_function(wrap_pyfunction!(turan, m)?)?;
    m.add_function(wrap_pyfunction!(stability, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(certificate_slacks, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_search, m)?)?;
    m.add_function(wrap_pyfunction!(k4_bound, m)?)?;
    m.add_function(wrap_pyfunction!(graphs, m)?)?;
    m.add_function(wrap_pyfunction!(flags, m)?)?;
    Ok(())
}
