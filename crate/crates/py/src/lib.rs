//! Python bindings: `import sfdepth`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sfd::family::FamilyKind;
use sfd::sdepth::{validate_partition as validate, IntervalPartition, SdepthOutcome, SearchConfig, SearchMode};
use sfd::{Error, FieldSpec, Monomial, Poset};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Capability { .. } | Error::Verification(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn field(characteristic: u32) -> PyResult<FieldSpec> {
    FieldSpec::new(characteristic).map_err(py_err)
}

fn vars(m: Monomial) -> Vec<usize> {
    m.vars().collect()
}

/// A square-free monomial ideal, stored by its minimal generators.
#[pyclass(name = "Ideal", module = "sfdepth", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyIdeal {
    inner: sfd::Ideal,
}

#[pymethods]
impl PyIdeal {
    /// Parses the text form, e.g. `"n=3 {1,2} {2,3}"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let parsed = sfd::Ideal::parse_text(text).map_err(py_err)?;
        Ok(PyIdeal { inner: parsed.ideal })
    }

    /// Builds an ideal from generator variable lists (1-based).
    #[staticmethod]
    fn from_generators(n: usize, gens: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = sfd::Ideal::from_index_lists(n, gens).map_err(py_err)?;
        Ok(PyIdeal { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn mu(&self) -> usize {
        self.inner.mu()
    }

    #[getter]
    fn gens(&self) -> Vec<Vec<usize>> {
        self.inner.gens().iter().map(|&g| vars(g)).collect()
    }

    fn contains(&self, monomial: Vec<usize>) -> PyResult<bool> {
        let m = Monomial::from_vars(monomial).map_err(py_err)?;
        Ok(self.inner.contains(m))
    }

    fn rho(&self, d: usize) -> PyResult<u128> {
        self.inner.rho(d).map_err(py_err)
    }

    fn poset(&self) -> PyResult<Vec<Vec<usize>>> {
        let p = Poset::of(&self.inner).map_err(py_err)?;
        Ok(p.elements().iter().map(|&m| vars(m)).collect())
    }

    fn colon(&self, i: usize) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.colon_by_var(i).map_err(py_err)? })
    }

    #[pyo3(signature = (field = 2))]
    fn depth(&self, field: u32) -> PyResult<usize> {
        depth(self, field)
    }

    #[pyo3(signature = (budget = None, full = false))]
    fn sdepth(&self, budget: Option<u64>, full: bool) -> PyResult<Option<usize>> {
        sdepth(self, budget, full)
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({:?})", self.inner.to_text())
    }
}

/// `depth_S I` over GF(p), or over the rationals for `field=0`.
#[pyfunction]
#[pyo3(signature = (ideal, field = 2))]
fn depth(ideal: &PyIdeal, field: u32) -> PyResult<usize> {
    sfd::depth_ideal(&ideal.inner, self::field(field)?).map_err(py_err)
}

/// Stanley depth; `None` when the node budget ran out first.
#[pyfunction]
#[pyo3(signature = (ideal, budget = None, full = false))]
fn sdepth(ideal: &PyIdeal, budget: Option<u64>, full: bool) -> PyResult<Option<usize>> {
    let config =
        SearchConfig { mode: if full { SearchMode::Full } else { SearchMode::Truncated }, node_budget: budget };
    match sfd::sdepth::sdepth_with(&ideal.inner, config).map_err(py_err)? {
        SdepthOutcome::Exact { value, .. } => Ok(Some(value)),
        SdepthOutcome::Unknown { .. } => Ok(None),
    }
}

/// Checks an interval partition given one `[{..},{..}]` per line and returns its value.
#[pyfunction]
fn validate_partition(ideal: &PyIdeal, text: &str) -> PyResult<usize> {
    let part = IntervalPartition::parse_text(text).map_err(py_err)?;
    let poset = Poset::of(&ideal.inner).map_err(py_err)?;
    validate(&poset, &part).map_err(py_err)
}

#[pyfunction]
fn fixture(name: &str) -> PyResult<PyIdeal> {
    Ok(PyIdeal { inner: sfd::family::fixture(name).map_err(py_err)? })
}

/// `family("L", 5)` or `family("I", 5)`.
#[pyfunction]
fn family(kind: &str, n: usize) -> PyResult<PyIdeal> {
    let kind: FamilyKind = kind.parse().map_err(py_err)?;
    Ok(PyIdeal { inner: kind.build(n).map_err(py_err)? })
}

#[pyfunction]
#[pyo3(signature = (n, min_degree = 1))]
fn enumerate_ideals(n: usize, min_degree: usize) -> PyResult<Vec<PyIdeal>> {
    let all = sfd::verify::enumerate_ideals(n, min_degree).map_err(py_err)?;
    Ok(all.into_iter().map(|inner| PyIdeal { inner }).collect())
}

/// Rows comparing `((n-d)/(n-d+1)) C(n,d)` with `C(n,d+1)` for `2 <= n <= max_n`.
#[pyfunction]
fn remark_st_probe<'py>(py: Python<'py>, max_n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    sfd::verify::remark_st_threshold_probe(max_n)
        .into_iter()
        .map(|r| {
            let row = PyDict::new(py);
            row.set_item("n", r.n)?;
            row.set_item("d", r.d)?;
            row.set_item("left", (r.left_num, r.left_den))?;
            row.set_item("right", r.right)?;
            row.set_item("holds", r.holds)?;
            row.set_item("equal", r.equal)?;
            Ok(row)
        })
        .collect()
}

#[pymodule]
fn sfdepth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(depth, m)?)?;
    m.add_function(wrap_pyfunction!(sdepth, m)?)?;
    m.add_function(wrap_pyfunction!(validate_partition, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ideals, m)?)?;
    m.add_function(wrap_pyfunction!(remark_st_probe, m)?)?;
    Ok(())
}
