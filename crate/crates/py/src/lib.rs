//! Python bindings: build codes, enumerate weights, analyze bounds and
//! certify walk-regularity from Python.

use std::collections::BTreeMap;

use anticode::{self as ac, Error, Limits, LinearCode};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    pyanticode,
    CapExceeded,
    PyException,
    "An enumeration needed more work than the configured cap."
);

fn to_py(e: Error) -> PyErr {
    if e.is_cap() {
        CapExceeded::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn json_to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn limits() -> Limits {
    Limits::from_env()
}

/// A linear code given by a full-rank generator matrix.
#[pyclass(module = "pyanticode", frozen)]
struct Code {
    inner: LinearCode,
}

#[pymethods]
impl Code {
    /// Code over GF(q) from generator rows of integer-coded field elements.
    #[staticmethod]
    #[pyo3(signature = (q, rows, label = String::new()))]
    fn from_rows(q: u64, rows: Vec<Vec<u32>>, label: String) -> PyResult<Code> {
        let field = ac::Field::with_order(q).map_err(to_py)?;
        Ok(Code {
            inner: LinearCode::from_rows(&field, &rows, label).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Code> {
        let file = ac::CodeFile::from_json(text).map_err(to_py)?;
        Ok(Code {
            inner: file.to_code().map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        ac::CodeFile::from_code(&self.inner, None).to_json()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    fn generator(&self) -> Vec<Vec<u32>> {
        self.inner.generator().to_rows()
    }

    /// `{weight: count}` including weight 0.
    fn weight_distribution(&self) -> PyResult<BTreeMap<usize, u64>> {
        Ok(self
            .inner
            .weight_distribution(&limits())
            .map_err(to_py)?
            .counts)
    }

    fn min_distance(&self) -> PyResult<usize> {
        self.inner.min_distance(&limits()).map_err(to_py)
    }

    fn max_weight(&self) -> PyResult<usize> {
        self.inner.max_weight(&limits()).map_err(to_py)
    }

    fn is_projective(&self) -> bool {
        self.inner.is_projective()
    }

    fn is_minimal(&self) -> PyResult<bool> {
        Ok(self
            .inner
            .is_minimal_exact(&limits())
            .map_err(to_py)?
            .minimal)
    }

    /// Full report as a dict: parameters, distribution, bounds, minimality, optimality.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report =
            ac::analyze(&self.inner, &limits(), ac::BestKnownTable::bundled()).map_err(to_py)?;
        json_to_py(py, &report)
    }

    fn complement(&self, big_k: usize) -> PyResult<Code> {
        Ok(Code {
            inner: ac::complement(&self.inner, big_k).map_err(to_py)?,
        })
    }

    fn concatenate_with_simplex(&self) -> PyResult<Code> {
        Ok(Code {
            inner: ac::concatenate_with_simplex(&self.inner).map_err(to_py)?,
        })
    }

    /// Certificate for l-strong walk-regularity of the coset graph, as a dict.
    #[pyo3(signature = (l = 3))]
    fn verify_swrg<'py>(&self, py: Python<'py>, l: usize) -> PyResult<Bound<'py, PyAny>> {
        let cert = ac::verify_swrg(&self.inner, l, &limits()).map_err(to_py)?;
        json_to_py(py, &cert)
    }

    fn __repr__(&self) -> String {
        format!(
            "Code([{}, {}]_{}, {:?})",
            self.inner.n(),
            self.inner.k(),
            self.inner.q(),
            self.inner.label()
        )
    }
}

fn wrap(r: ac::Result<LinearCode>) -> PyResult<Code> {
    Ok(Code {
        inner: r.map_err(to_py)?,
    })
}

#[pyfunction]
fn simplex(q: u32, k: usize) -> PyResult<Code> {
    wrap(ac::simplex(q, k))
}

#[pyfunction]
fn rs_code(q: u32, k: usize) -> PyResult<Code> {
    wrap(ac::rs_code(q, k))
}

#[pyfunction]
#[pyo3(signature = (q, k, h = 0))]
fn complementary_rs(q: u32, k: usize, h: usize) -> PyResult<Code> {
    wrap(ac::complementary_rs(q, k, h))
}

#[pyfunction]
#[pyo3(signature = (q, k, h = 0))]
fn complementary_mds(q: u32, k: usize, h: usize) -> PyResult<Code> {
    wrap(ac::complementary_mds_trivial(q, k, h))
}

#[pyfunction]
fn fixed_weight_anticode(k: usize, w: usize) -> PyResult<Code> {
    wrap(ac::fixed_weight_anticode(k, w))
}

#[pyfunction]
fn two_subspace_code(q: u32) -> PyResult<Code> {
    wrap(ac::two_subspace_code(q))
}

#[pyfunction]
fn ovoid_code(q: u32) -> PyResult<Code> {
    wrap(ac::ovoid_code(q))
}

#[pyfunction]
fn dual_bch_code(m: usize) -> PyResult<Code> {
    wrap(ac::dual_bch_code(m))
}

#[pyfunction]
fn kasami_code(m: usize) -> PyResult<Code> {
    wrap(ac::kasami_code(m))
}

#[pyfunction]
fn griesmer_sum(q: u32, k: usize, d: usize) -> u128 {
    ac::griesmer_sum(q, k, d)
}

#[pyfunction]
fn antigriesmer_sum(q: u32, k: usize, delta: usize) -> u128 {
    ac::antigriesmer_sum(q, k, delta)
}

/// Weight distribution of the complement in dimension `big_k`, from the
/// input's `{weight: count}`.
#[pyfunction]
fn transform_wd(
    q: u32,
    n: usize,
    k: usize,
    counts: BTreeMap<usize, u64>,
    big_k: usize,
) -> PyResult<BTreeMap<usize, u64>> {
    let base = ac::WeightDistribution { q, n, k, counts };
    base.validate().map_err(to_py)?;
    Ok(ac::transform_wd(&ac::WdTransformSpec { base, big_k })
        .map_err(to_py)?
        .counts)
}

/// Verifies the bundled catalog and returns the summary counts.
#[pyfunction]
fn catalog_summary<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let report = ac::verify_manifest(
        &ac::Manifest::bundled(),
        &limits(),
        ac::BestKnownTable::bundled(),
    );
    let out = PyDict::new(py);
    out.set_item("pass", report.summary.pass)?;
    out.set_item("fail", report.summary.fail)?;
    out.set_item("known_discrepancy", report.summary.known_discrepancy)?;
    out.set_item("error", report.summary.error)?;
    out.set_item("ok", report.ok())?;
    Ok(out)
}

#[pymodule]
fn pyanticode(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Code>()?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add_function(wrap_pyfunction!(simplex, m)?)?;
    m.add_function(wrap_pyfunction!(rs_code, m)?)?;
    m.add_function(wrap_pyfunction!(complementary_rs, m)?)?;
    m.add_function(wrap_pyfunction!(complementary_mds, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_weight_anticode, m)?)?;
    m.add_function(wrap_pyfunction!(two_subspace_code, m)?)?;
    m.add_function(wrap_pyfunction!(ovoid_code, m)?)?;
    m.add_function(wrap_pyfunction!(dual_bch_code, m)?)?;
    m.add_function(wrap_pyfunction!(kasami_code, m)?)?;
    m.add_function(wrap_pyfunction!(griesmer_sum, m)?)?;
    m.add_function(wrap_pyfunction!(antigriesmer_sum, m)?)?;
    m.add_function(wrap_pyfunction!(transform_wd, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_summary, m)?)?;
    Ok(())
}
