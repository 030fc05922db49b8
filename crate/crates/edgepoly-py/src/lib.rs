//! Python bindings: a `Graph` class plus module-level experiment
//! helpers. Exact rationals cross the boundary as "p/q" strings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use edgepoly::facets::{self, FacetKind, FacetOptions};
use edgepoly::graph;
use edgepoly::neighborly::{self, ForbiddenWitness, Neighborliness};
use edgepoly::oracle;
use edgepoly::{randexp, skeleton, walks, Error};
use num::BigRational;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Validation(m) => PyValueError::new_err(m),
        Error::Domain(m) => PyValueError::new_err(m),
        Error::Resource(m) => PyRuntimeError::new_err(m),
    }
}

fn rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[pyclass(name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

fn witness_dict<'py>(py: Python<'py>, w: &ForbiddenWitness) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new_bound(py);
    match w {
        ForbiddenWitness::EvenCycle(c) => {
            d.set_item("type", "even-cycle")?;
            d.set_item("cycle", c.clone())?;
        }
        ForbiddenWitness::TwoOddCycles {
            cycle_a,
            cycle_b,
            path,
        } => {
            d.set_item("type", "two-odd-cycles")?;
            d.set_item("cycle_a", cycle_a.clone())?;
            d.set_item("cycle_b", cycle_b.clone())?;
            d.set_item("path", path.clone())?;
        }
    }
    Ok(d)
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::Graph::build(n, &edges).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::complete(n).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::complete_bipartite(a, b).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::cycle(n).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn windmill(k: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::windmill(k).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn gnp(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::gnp(n, p, seed).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_edge_list(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn to_edge_list(&self) -> String {
        graph::to_edge_list(&self.inner)
    }

    fn dimension(&self) -> PyResult<usize> {
        skeleton::dimension(&self.inner).map_err(to_py_err)
    }

    fn summary<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = skeleton::summary(&self.inner).map_err(to_py_err)?;
        let d = PyDict::new_bound(py);
        d.set_item("n", s.n)?;
        d.set_item("e", s.e)?;
        d.set_item("dim", s.dim)?;
        d.set_item("f0", s.f0)?;
        d.set_item("f1", s.f1)?;
        d.set_item("edge_bound_ok", s.edge_bound_ok)?;
        d.set_item("f1_bound_ok", s.f1_bound_ok)?;
        Ok(d)
    }

    fn is_skeleton_edge(&self, e1: (usize, usize), e2: (usize, usize)) -> PyResult<bool> {
        skeleton::is_skeleton_edge(&self.inner, e1, e2).map_err(to_py_err)
    }

    fn is_simplex(&self) -> PyResult<bool> {
        neighborly::is_simplex(&self.inner).map_err(to_py_err)
    }

    fn is_k_neighborly(&self, k: usize) -> PyResult<bool> {
        neighborly::is_k_neighborly(&self.inner, k).map_err(to_py_err)
    }

    fn find_forbidden<'py>(
        &self,
        py: Python<'py>,
        k: usize,
    ) -> PyResult<Option<Bound<'py, PyDict>>> {
        match neighborly::find_forbidden(&self.inner, k).map_err(to_py_err)? {
            Some(w) => Ok(Some(witness_dict(py, &w)?)),
            None => Ok(None),
        }
    }

    /// None for a simplex, otherwise the largest k.
    fn max_neighborliness(&self) -> PyResult<Option<usize>> {
        match neighborly::max_neighborliness(&self.inner).map_err(to_py_err)? {
            Neighborliness::Simplex => Ok(None),
            Neighborliness::K(k) => Ok(Some(k)),
        }
    }

    #[pyo3(signature = (max_n=None))]
    fn facets<'py>(
        &self,
        py: Python<'py>,
        max_n: Option<usize>,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let opts = match max_n {
            Some(m) => FacetOptions {
                max_n: m,
                override_cap: true,
            },
            None => FacetOptions::default(),
        };
        let out = facets::enumerate_facets(&self.inner, &opts).map_err(to_py_err)?;
        out.facets
            .iter()
            .map(|f| {
                let d = PyDict::new_bound(py);
                match &f.kind {
                    FacetKind::Coordinate(i) => {
                        d.set_item("kind", "coordinate")?;
                        d.set_item("vertex", i)?;
                    }
                    FacetKind::IndependentSet(a) => {
                        d.set_item("kind", "independent-set")?;
                        d.set_item("set", a.clone())?;
                    }
                }
                d.set_item("coeffs", f.coeffs.clone())?;
                d.set_item("tight_edges", f.tight_edges.clone())?;
                Ok(d)
            })
            .collect()
    }

    fn is_face(&self, edges: Vec<(usize, usize)>) -> PyResult<bool> {
        oracle::is_face(&self.inner, &edges).map_err(to_py_err)
    }

    fn walks<'py>(&self, py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyDict>> {
        let s = walks::non_returning_walks(&self.inner, k).map_err(to_py_err)?;
        let d = PyDict::new_bound(py);
        d.set_item("k", s.k)?;
        d.set_item("total", s.total)?;
        d.set_item("nu", rat(&s.nu))?;
        d.set_item("moore_bound", s.moore_bound.as_ref().map(rat))?;
        d.set_item("bound_holds", s.bound_holds)?;
        Ok(d)
    }

    fn count_k_paths(&self, u: usize, v: usize, k: usize) -> PyResult<u64> {
        walks::count_k_paths(&self.inner, u, v, k).map_err(to_py_err)
    }

    /// Exact discrepancy as a "p/q" string.
    fn discrepancy(&self, s: Vec<usize>, t: Vec<usize>) -> PyResult<String> {
        walks::discrepancy(&self.inner, &s, &t)
            .map(|r| rat(&r))
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, e={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn expected_f1(n: usize, p: f64) -> PyResult<f64> {
    randexp::expected_f1(n, p).map_err(to_py_err)
}

#[pyfunction]
fn estimate_f1<'py>(
    py: Python<'py>,
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = randexp::estimate_f1_mc(n, p, trials, seed).map_err(to_py_err)?;
    let d = PyDict::new_bound(py);
    d.set_item("n", r.n)?;
    d.set_item("p", r.p)?;
    d.set_item("trials", r.trials)?;
    d.set_item("seed", r.seed)?;
    d.set_item("mean_f1", rat(&r.mean_f1))?;
    d.set_item("stderr", r.stderr)?;
    d.set_item("expected_f1", r.expected_f1)?;
    d.set_item("z_score", r.z_score)?;
    Ok(d)
}

#[pyfunction]
fn turan_bound(n: usize, k: usize) -> PyResult<f64> {
    walks::turan_bound(n, k).map_err(to_py_err)
}

#[pymodule]
fn edgepoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(expected_f1, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_f1, m)?)?;
    m.add_function(wrap_pyfunction!(turan_bound, m)?)?;
    Ok(())
}
