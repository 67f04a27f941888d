//! Python bindings for `stablerc`.
//!
//! Half-integers cross the boundary as `fractions.Fraction`, partitions as
//! lists of ints and quantum spaces as lists of `(a, i, multiplicity)`.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use stablerc::affine_data::minimum_rank as min_rank;
use stablerc::bijection::psi_tilde;
use stablerc::rigged::{check_stability, enumerate_rc as enumerate, DEFAULT_MAX_CONFIGS};
use stablerc::tableaux::{is_lr, lr_coefficient as lr, reverse_row_word};
use stablerc::{AffineType, Error, Family, Half, Kind, Partition, QuantumSpace};

create_exception!(
    stablerc_py,
    InvalidInputError,
    PyValueError,
    "Malformed input or violated precondition."
);
create_exception!(
    stablerc_py,
    BudgetExceededError,
    PyRuntimeError,
    "A work budget was exhausted."
);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Budget { .. } => BudgetExceededError::new_err(err.to_string()),
        _ => InvalidInputError::new_err(err.to_string()),
    }
}

fn json_err(err: serde_json::Error) -> PyErr {
    InvalidInputError::new_err(err.to_string())
}

fn fraction<'py>(py: Python<'py>, h: Half) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((h.twice(), 2))
}

fn half(v: &Bound<'_, PyAny>) -> PyResult<Half> {
    if let Ok(i) = v.extract::<i64>() {
        return Ok(Half::from_int(i));
    }
    v.str()?.to_string().parse().map_err(to_py)
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py)
}

fn space(triples: Vec<(usize, usize, usize)>) -> PyResult<QuantumSpace> {
    let t: Vec<[usize; 3]> = triples.into_iter().map(|(a, i, m)| [a, i, m]).collect();
    QuantumSpace::from_triples(&t).map_err(to_py)
}

fn affine_type(family: &str, rank: usize) -> PyResult<AffineType> {
    let f: Family = family.parse().map_err(to_py)?;
    AffineType::new(f, rank).map_err(to_py)
}

fn kind(name: &str) -> PyResult<Kind> {
    name.parse().map_err(to_py)
}

/// A rigged configuration together with its quantum space.
#[pyclass(name = "RiggedConfiguration", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRc(stablerc::RiggedConfiguration);

#[pymethods]
impl PyRc {
    /// Build from `rows[a - 1] = [(length, rigging), ...]`; lengths may be
    /// ints, `Fraction`s or `"p/2"` strings.
    #[new]
    fn new(
        family: &str,
        rank: usize,
        space_triples: Vec<(usize, usize, usize)>,
        rows: Vec<Vec<(Bound<'_, PyAny>, i64)>>,
    ) -> PyResult<Self> {
        let ty = affine_type(family, rank)?;
        let nodes = rows
            .into_iter()
            .map(|node| {
                node.into_iter()
                    .map(|(len, j)| Ok(stablerc::Row::new(half(&len)?, j)))
                    .collect()
            })
            .collect::<PyResult<Vec<_>>>()?;
        stablerc::RiggedConfiguration::new(ty, space(space_triples)?, nodes)
            .map(PyRc)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyRc).map_err(json_err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(json_err)
    }

    #[getter]
    fn family(&self) -> String {
        self.0.affine_type().family().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.affine_type().rank()
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind().to_string()
    }

    fn is_relaxed(&self) -> bool {
        self.0.is_relaxed()
    }

    /// Rows per node as `(length, vacancy, rigging)`.
    #[allow(clippy::type_complexity)]
    fn annotated<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<(Bound<'py, PyAny>, i64, i64)>>> {
        self.0
            .annotated()
            .into_iter()
            .map(|node| node.into_iter().map(|(l, p, j)| Ok((fraction(py, l)?, p, j))).collect())
            .collect()
    }

    fn weight(&self) -> PyResult<Vec<usize>> {
        Ok(self.0.weight().map_err(to_py)?.parts().to_vec())
    }

    fn charge<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.0.charge().map_err(to_py)?)
    }

    /// Violated membership conditions; empty when valid.
    #[pyo3(signature = (lam = None))]
    fn validate(&self, lam: Option<Vec<usize>>) -> PyResult<Vec<String>> {
        let lambda = match lam {
            Some(p) => partition(p)?,
            None => self.0.weight().map_err(to_py)?,
        };
        Ok(self.0.validate(&lambda).iter().map(ToString::to_string).collect())
    }

    fn stability_violations(&self) -> Vec<String> {
        check_stability(&self.0)
    }

    fn psi(&self) -> PyResult<PsiResult> {
        let out = stablerc::psi(&self.0).map_err(to_py)?;
        Ok(PsiResult {
            rc: PyRc(out.rc),
            tableau: PyTableau(out.tableau),
            lam: out.lambda.parts().to_vec(),
            mu: out.mu.parts().to_vec(),
            eta: out.eta.parts().to_vec(),
            arrows: out.trace.iter().map(|s| (s.l.to_string(), s.k)).collect(),
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RiggedConfiguration({})", self.to_json().unwrap_or_default())
    }
}

/// A skew tableau `outer / inner` filled row by row.
#[pyclass(name = "SkewTableau", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyTableau(stablerc::SkewTableau);

#[pymethods]
impl PyTableau {
    #[new]
    fn new(inner: Vec<usize>, outer: Vec<usize>, rows: Vec<Vec<u32>>) -> PyResult<Self> {
        stablerc::SkewTableau::new(partition(inner)?, partition(outer)?, rows)
            .map(PyTableau)
            .map_err(to_py)
    }

    #[getter]
    fn inner(&self) -> Vec<usize> {
        self.0.inner.parts().to_vec()
    }

    #[getter]
    fn outer(&self) -> Vec<usize> {
        self.0.outer.parts().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u32>> {
        self.0.rows.clone()
    }

    fn is_lr(&self) -> bool {
        is_lr(&self.0)
    }

    fn reverse_row_word(&self) -> Vec<u32> {
        reverse_row_word(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Output of `RiggedConfiguration.psi`.
#[pyclass(frozen)]
struct PsiResult {
    #[pyo3(get)]
    rc: PyRc,
    #[pyo3(get)]
    tableau: PyTableau,
    #[pyo3(get, name = "lam")]
    lam: Vec<usize>,
    #[pyo3(get)]
    mu: Vec<usize>,
    #[pyo3(get)]
    eta: Vec<usize>,
    /// `(l, k)` for every box removal, in order.
    #[pyo3(get)]
    arrows: Vec<(String, usize)>,
}

/// A Laurent polynomial in `q^(1/2)`.
#[pyclass(name = "QPolynomial", frozen)]
struct PyPoly(stablerc::QPolynomial);

#[pymethods]
impl PyPoly {
    /// Exponent to coefficient.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (e, c) in self.0.terms() {
            d.set_item(fraction(py, e)?, c)?;
        }
        Ok(d)
    }

    fn at_one(&self) -> i64 {
        self.0.at_one()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QPolynomial({})", self.0)
    }
}

/// Invert `psi` onto the given target type.
#[pyfunction]
fn psi_inverse(rc: &PyRc, tableau: &PyTableau, family: &str, rank: usize) -> PyResult<PyRc> {
    psi_tilde(&rc.0, &tableau.0, affine_type(family, rank)?)
        .map(PyRc)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (family, rank, lam, space_triples, max_configs = DEFAULT_MAX_CONFIGS))]
fn enumerate_rc(
    family: &str,
    rank: usize,
    lam: Vec<usize>,
    space_triples: Vec<(usize, usize, usize)>,
    max_configs: u64,
) -> PyResult<Vec<PyRc>> {
    let ty = affine_type(family, rank)?;
    let rcs = enumerate(ty, &partition(lam)?, &space(space_triples)?, max_configs).map_err(to_py)?;
    Ok(rcs.into_iter().map(PyRc).collect())
}

#[pyfunction]
#[pyo3(signature = (family, rank, lam, space_triples, max_configs = DEFAULT_MAX_CONFIGS))]
fn fermionic(
    family: &str,
    rank: usize,
    lam: Vec<usize>,
    space_triples: Vec<(usize, usize, usize)>,
    max_configs: u64,
) -> PyResult<PyPoly> {
    let ty = affine_type(family, rank)?;
    let r = stablerc::fermionic_m(ty, &partition(lam)?, &space(space_triples)?, max_configs).map_err(to_py)?;
    Ok(PyPoly(r.polynomial))
}

#[pyfunction]
#[pyo3(signature = (kind_name, lam, space_triples, margin = 1, max_configs = DEFAULT_MAX_CONFIGS))]
fn stable_m(
    kind_name: &str,
    lam: Vec<usize>,
    space_triples: Vec<(usize, usize, usize)>,
    margin: usize,
    max_configs: u64,
) -> PyResult<PyPoly> {
    stablerc::stable_m(
        kind(kind_name)?,
        &partition(lam)?,
        &space(space_triples)?,
        margin,
        max_configs,
    )
    .map(PyPoly)
    .map_err(to_py)
}

/// Returns `(equal, lhs, rhs, witnesses)` with witnesses `(mu, eta, c)`.
#[pyfunction]
#[pyo3(signature = (kind_name, lam, space_triples, margin = 1, max_configs = DEFAULT_MAX_CONFIGS))]
#[allow(clippy::type_complexity)]
fn verify_identity(
    kind_name: &str,
    lam: Vec<usize>,
    space_triples: Vec<(usize, usize, usize)>,
    margin: usize,
    max_configs: u64,
) -> PyResult<(bool, PyPoly, PyPoly, Vec<(Vec<usize>, Vec<usize>, u64)>)> {
    let check = stablerc::verify_identity(
        kind(kind_name)?,
        &partition(lam)?,
        &space(space_triples)?,
        margin,
        max_configs,
    )
    .map_err(to_py)?;
    let witnesses = check
        .witnesses
        .iter()
        .map(|w| (w.mu.parts().to_vec(), w.eta.parts().to_vec(), w.coefficient))
        .collect();
    Ok((check.equal, PyPoly(check.lhs), PyPoly(check.rhs), witnesses))
}

#[pyfunction]
fn lr_coefficient(lam: Vec<usize>, mu: Vec<usize>, eta: Vec<usize>) -> PyResult<u64> {
    Ok(lr(&partition(lam)?, &partition(mu)?, &partition(eta)?))
}

/// `[p + m choose m]` in the variable `q^step`.
#[pyfunction]
#[pyo3(signature = (p, m, step = 1))]
fn qbinomial(p: i64, m: i64, step: i64) -> PyResult<PyPoly> {
    stablerc::qbinomial(p, m, step).map(PyPoly).map_err(to_py)
}

#[pyfunction]
fn minimum_rank(kind_name: &str, lam: Vec<usize>, space_triples: Vec<(usize, usize, usize)>) -> PyResult<usize> {
    min_rank(kind(kind_name)?, &partition(lam)?, &space(space_triples)?).map_err(to_py)
}

#[pymodule]
fn stablerc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("InvalidInputError", m.py().get_type::<InvalidInputError>())?;
    m.add("BudgetExceededError", m.py().get_type::<BudgetExceededError>())?;
    m.add_class::<PyRc>()?;
    m.add_class::<PyTableau>()?;
    m.add_class::<PsiResult>()?;
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(psi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_rc, m)?)?;
    m.add_function(wrap_pyfunction!(fermionic, m)?)?;
    m.add_function(wrap_pyfunction!(stable_m, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(qbinomial, m)?)?;
    m.add_function(wrap_pyfunction!(minimum_rank, m)?)?;
    Ok(())
}
