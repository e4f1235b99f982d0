//! Python module `graphmub`.

use graphmub::catalog::{derive_catalog, TRIDIAGONAL_CATALOG};
use graphmub::export::to_dot;
use graphmub::sim::digits;
use graphmub::{
    analyze, census, classify_basis, congruence_reduce_p2, congruence_reduce_podd,
    connectivity_rank, design_purity_check, emit_circuit, mub_set, poly_is_irreducible,
    poly_is_primitive, shift_set, tridiag_char_poly, verify_lemma1, verify_mu_numeric,
    AdjacencyMatrix, Bipartition, Lemma1Outcome, MatZp, MethodChoice, MubOptions, PolyZp,
    PrimeModulus, TridiagSpec, VerifyMode,
};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

type Rows = Vec<Vec<u64>>;

/// `(p, d, c)` catalog row.
type CatalogRow = (u64, Vec<u64>, Vec<u64>);

fn value_err(e: graphmub::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn modulus(p: u64) -> PyResult<PrimeModulus> {
    PrimeModulus::new(p).map_err(value_err)
}

fn adjacency(p: u64, rows: Rows) -> PyResult<AdjacencyMatrix> {
    AdjacencyMatrix::from_rows(modulus(p)?, &rows).map_err(value_err)
}

/// A complete set of `p^n` adjacency matrices.
#[pyclass(name = "MubSet", module = "graphmub", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMubSet {
    inner: graphmub::MubSet,
}

#[pymethods]
impl PyMubSet {
    /// Build a set. `method` is "auto", "tridiag" or "companion"; `poly`
    /// holds ascending coefficients and `d` a tridiagonal diagonal.
    #[new]
    #[pyo3(signature = (p, n, method = "auto", poly = None, d = None, primitive = false))]
    fn new(
        p: u64,
        n: usize,
        method: &str,
        poly: Option<Vec<u64>>,
        d: Option<Vec<u64>>,
        primitive: bool,
    ) -> PyResult<Self> {
        let pm = modulus(p)?;
        let method = match method {
            "auto" => MethodChoice::Auto,
            "tridiag" => MethodChoice::Tridiagonal,
            "companion" => MethodChoice::Companion,
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        };
        let opts = MubOptions {
            method,
            polynomial: poly.map(|c| PolyZp::new(pm, c)),
            diagonal: d,
            primitive,
        };
        Ok(PyMubSet {
            inner: mub_set(pm, n, &opts).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyMubSet {
            inner: graphmub::MubSet::from_json(text).map_err(value_err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.modulus().value()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.qupits()
    }

    #[getter]
    fn method(&self) -> Option<String> {
        self.inner.method().map(|m| m.to_string())
    }

    /// Ascending coefficients of the characteristic polynomial.
    #[getter]
    fn polynomial(&self) -> Option<Vec<u64>> {
        self.inner.polynomial().map(|f| f.coeffs().to_vec())
    }

    #[getter]
    fn diagonal(&self) -> Option<Vec<u64>> {
        self.inner.diagonal().map(|d| d.to_vec())
    }

    #[getter]
    fn matrices(&self) -> Vec<Rows> {
        self.inner
            .matrices()
            .iter()
            .map(|a| a.matrix().rows())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.dimension()
    }

    fn __repr__(&self) -> String {
        format!(
            "MubSet(p={}, n={}, bases={})",
            self.p(),
            self.n(),
            self.inner.dimension() + 1
        )
    }

    /// True when every pairwise difference is nonsingular.
    fn verify_algebraic(&self) -> bool {
        matches!(verify_lemma1(&self.inner), Lemma1Outcome::Pass)
    }

    /// Overlap check over all pairs, or `sample` random ones.
    #[pyo3(signature = (tol = 1e-10, sample = None, seed = 0))]
    fn verify_numeric<'py>(
        &self,
        py: Python<'py>,
        tol: f64,
        sample: Option<usize>,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let mode = match sample {
            Some(count) => VerifyMode::Sampled { count, seed },
            None => VerifyMode::Full,
        };
        let r = py
            .detach(|| verify_mu_numeric(&self.inner, tol, mode))
            .map_err(value_err)?;
        let out = PyDict::new(py);
        out.set_item("pass", r.pass)?;
        out.set_item("checked", r.checked)?;
        out.set_item("worst_deviation", r.worst_deviation)?;
        out.set_item("violation_count", r.violation_count)?;
        Ok(out)
    }

    /// The set with a symmetric matrix added to every element.
    fn shift(&self, m: Rows) -> PyResult<Self> {
        let m = adjacency(self.p(), m)?;
        Ok(PyMubSet {
            inner: shift_set(&self.inner, &m).map_err(value_err)?,
        })
    }

    /// Graph bases per entanglement label.
    fn census<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = census(&self.inner);
        let out = PyDict::new(py);
        for (label, count) in &c.graphs {
            out.set_item(label.to_string(), count)?;
        }
        Ok(out)
    }

    /// Exact `(lhs, rhs, pass)` of the purity identity for the split with
    /// one side `x` (1-based qupits).
    fn design_check(&self, x: Vec<usize>) -> PyResult<(String, String, bool)> {
        let b = Bipartition::new(self.n(), &x).map_err(value_err)?;
        let c = design_purity_check(&self.inner, &b).map_err(value_err)?;
        Ok((c.lhs.to_string(), c.rhs.to_string(), c.pass))
    }

    /// Full analysis report as JSON text.
    #[pyo3(signature = (bipartition = None))]
    fn analyze_json(&self, bipartition: Option<Vec<usize>>) -> PyResult<String> {
        let splits = match bipartition {
            Some(x) => vec![Bipartition::new(self.n(), &x).map_err(value_err)?],
            None => Vec::new(),
        };
        let r = analyze(&self.inner, &splits).map_err(value_err)?;
        Ok(serde_json::to_string(&r).expect("report serializes"))
    }
}

#[pyfunction]
fn is_irreducible(p: u64, coeffs: Vec<u64>) -> PyResult<bool> {
    poly_is_irreducible(&PolyZp::new(modulus(p)?, coeffs)).map_err(value_err)
}

#[pyfunction]
fn is_primitive(p: u64, coeffs: Vec<u64>) -> PyResult<bool> {
    poly_is_primitive(&PolyZp::new(modulus(p)?, coeffs)).map_err(value_err)
}

/// Ascending coefficients of the characteristic polynomial of the
/// tridiagonal matrix with diagonal `d`.
#[pyfunction]
fn tridiagonal_char_poly(p: u64, d: Vec<u64>) -> PyResult<Vec<u64>> {
    let spec = TridiagSpec::new(modulus(p)?, d).map_err(value_err)?;
    Ok(tridiag_char_poly(&spec).coeffs().to_vec())
}

/// `P` with `P B P^T = I`.
#[pyfunction]
fn congruence_reduce(p: u64, rows: Rows) -> PyResult<Rows> {
    let b = MatZp::from_rows(modulus(p)?, &rows).map_err(value_err)?;
    let r = if p == 2 {
        congruence_reduce_p2(&b)
    } else {
        congruence_reduce_podd(&b)
    };
    Ok(r.map_err(value_err)?.rows())
}

#[pyfunction]
fn classify(p: u64, rows: Rows) -> PyResult<String> {
    Ok(classify_basis(&adjacency(p, rows)?).to_string())
}

#[pyfunction]
fn split_rank(p: u64, rows: Rows, x: Vec<usize>) -> PyResult<usize> {
    let a = adjacency(p, rows)?;
    let b = Bipartition::new(a.dim(), &x).map_err(value_err)?;
    connectivity_rank(&a, &b).map_err(value_err)
}

/// Amplitudes of `|G(m)>`, with `m` given as a basis index.
#[pyfunction]
fn basis_state(p: u64, rows: Rows, m: usize) -> PyResult<Vec<Complex64>> {
    let a = adjacency(p, rows)?;
    let label = digits(a.modulus(), a.dim(), m);
    Ok(graphmub::basis_element(&a, &label)
        .map_err(value_err)?
        .amplitudes()
        .to_vec())
}

#[pyfunction]
fn circuit_text(p: u64, rows: Rows) -> PyResult<String> {
    Ok(emit_circuit(&adjacency(p, rows)?).to_text())
}

#[pyfunction]
#[pyo3(signature = (p, rows, name = "G"))]
fn dot(p: u64, rows: Rows, name: &str) -> PyResult<String> {
    Ok(to_dot(&adjacency(p, rows)?, name))
}

/// Catalog rows `(p, d, c)` with `c` listed from `c_{n-1}` down to `c_0`.
#[pyfunction]
#[pyo3(signature = (primes = None))]
fn catalog(primes: Option<Vec<u64>>) -> PyResult<Vec<CatalogRow>> {
    let primes = primes.unwrap_or_else(|| {
        let mut ps: Vec<u64> = TRIDIAGONAL_CATALOG.iter().map(|r| r.0).collect();
        ps.dedup();
        ps
    });
    Ok(derive_catalog(&primes)
        .map_err(value_err)?
        .into_iter()
        .map(|e| (e.p, e.d, e.c))
        .collect())
}

#[pymodule]
#[pyo3(name = "graphmub")]
fn graphmub_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMubSet>()?;
    m.add_function(wrap_pyfunction!(is_irreducible, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(tridiagonal_char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(congruence_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(split_rank, m)?)?;
    m.add_function(wrap_pyfunction!(basis_state, m)?)?;
    m.add_function(wrap_pyfunction!(circuit_text, m)?)?;
    m.add_function(wrap_pyfunction!(dot, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    Ok(())
}
