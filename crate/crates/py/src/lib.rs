use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use trinom_core::trinomial::{self, Method};
use trinom_core::{Error, FamilyPoint, RiordanSpec};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::ZeroDivisor => PyZeroDivisionError::new_err(e.to_string()),
        Error::Inconsistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn point(p: u64, k: BigInt) -> PyResult<FamilyPoint> {
    FamilyPoint::new(p, k).map_err(to_py_err)
}

/// Dense integer polynomial, coefficients in ascending order.
#[pyclass(name = "Poly", module = "trinom", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly(trinom_core::Poly);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> Self {
        PyPoly(trinom_core::Poly::from_coeffs(coeffs))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyPoly).map_err(to_py_err)
    }

    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn divrem(&self, divisor: &PyPoly) -> PyResult<(PyPoly, PyPoly)> {
        let (q, r) = self.0.divrem(&divisor.0).map_err(to_py_err)?;
        Ok((PyPoly(q), PyPoly(r)))
    }

    fn eval(&self, v: BigInt) -> BigInt {
        self.0.eval(&v)
    }

    fn is_palindromic(&self) -> bool {
        self.0.is_palindromic()
    }

    fn inflate(&self, t: usize) -> PyResult<PyPoly> {
        self.0.inflate(t).map(PyPoly).map_err(to_py_err)
    }

    fn __add__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

#[pyclass(name = "FactorizationCertificate", module = "trinom", frozen)]
struct PyCertificate(trinomial::FactorizationCertificate);

#[pymethods]
impl PyCertificate {
    #[getter]
    fn p(&self) -> u64 {
        self.0.point.p()
    }

    #[getter]
    fn k(&self) -> BigInt {
        self.0.point.k().clone()
    }

    #[getter(A)]
    fn a(&self) -> BigInt {
        self.0.a.clone()
    }

    #[getter]
    fn quadratic(&self) -> PyPoly {
        PyPoly(self.0.quadratic.clone())
    }

    #[getter]
    fn cofactor(&self) -> PyPoly {
        PyPoly(self.0.cofactor.clone())
    }

    #[getter]
    fn verified(&self) -> bool {
        self.0.verified
    }

    fn trinomial(&self) -> PyPoly {
        PyPoly(self.0.trinomial())
    }

    fn __repr__(&self) -> String {
        format!(
            "FactorizationCertificate(p={}, k={}, A={}, verified={})",
            self.0.point.p(),
            self.0.point.k(),
            self.0.a,
            if self.0.verified { "True" } else { "False" }
        )
    }
}

#[pyfunction]
fn lucas_term(k: BigInt, i: u64) -> PyResult<BigInt> {
    trinom_core::lucas_term(&k, i).map_err(to_py_err)
}

#[pyfunction]
fn lucas_term_fast(k: BigInt, i: u64) -> PyResult<BigInt> {
    trinom_core::lucas_term_fast(&k, i).map_err(to_py_err)
}

#[pyfunction]
fn lucas_prefix(k: BigInt, n: usize) -> Vec<BigInt> {
    trinom_core::lucas_prefix(&k, n)
}

/// `A(k, p)`; `method` is one of `closed`, `recurrence`, `gf`.
#[pyfunction]
#[pyo3(signature = (p, k, method = "recurrence"))]
fn coeff_a(p: u64, k: BigInt, method: &str) -> PyResult<BigInt> {
    let method: Method = method.parse().map_err(PyValueError::new_err)?;
    trinomial::coeff_A(&point(p, k)?, method).map_err(to_py_err)
}

#[pyfunction]
fn gf_coefficient_a(k: BigInt, p: u64) -> PyResult<BigInt> {
    trinom_core::gf_coefficient_A(&k, p).map_err(to_py_err)
}

#[pyfunction]
fn row_polynomial(p: u64) -> PyResult<Vec<BigInt>> {
    trinom_core::row_polynomial(p).map_err(to_py_err)
}

#[pyfunction]
fn riordan_row_poly(p: u64) -> PyResult<Vec<BigInt>> {
    trinom_core::riordan_row_poly(p).map_err(to_py_err)
}

#[pyfunction]
fn riordan_entry(n: usize, j: usize) -> PyResult<BigInt> {
    RiordanSpec::new(n).entry(n, j).map_err(to_py_err)
}

#[pyfunction]
fn cofactor_q(p: u64, k: BigInt) -> PyResult<PyPoly> {
    Ok(PyPoly(trinom_core::cofactor_Q(&point(p, k)?)))
}

#[pyfunction]
fn build_certificate(p: u64, k: BigInt) -> PyResult<PyCertificate> {
    trinom_core::build_certificate(&point(p, k)?)
        .map(PyCertificate)
        .map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (a, p, k))]
fn verify_divides(a: BigInt, p: u64, k: BigInt) -> PyResult<bool> {
    trinom_core::verify_divides(&a, p, &k).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (a, p))]
fn solve_k(a: BigInt, p: u64) -> PyResult<Option<BigInt>> {
    trinom_core::solve_k(&a, p).map_err(to_py_err)
}

#[pyfunction]
fn is_probable_prime(p: u64) -> bool {
    trinom_core::is_probable_prime(p)
}

/// List of `(p, k, A)` tuples.
#[pyfunction]
#[pyo3(signature = (p_list, k_max, verify_all = false))]
fn scan_table(
    py: Python<'_>,
    p_list: Vec<u64>,
    k_max: u64,
    verify_all: bool,
) -> PyResult<Vec<(u64, u64, BigInt)>> {
    let rows = py
        .detach(|| trinom_core::scan_table(&p_list, k_max, verify_all))
        .map_err(to_py_err)?;
    Ok(rows.into_iter().map(|r| (r.p, r.k, r.a)).collect())
}

#[pymodule]
fn trinom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(lucas_term, m)?)?;
    m.add_function(wrap_pyfunction!(lucas_term_fast, m)?)?;
    m.add_function(wrap_pyfunction!(lucas_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_a, m)?)?;
    m.add_function(wrap_pyfunction!(gf_coefficient_a, m)?)?;
    m.add_function(wrap_pyfunction!(row_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(riordan_row_poly, m)?)?;
    m.add_function(wrap_pyfunction!(riordan_entry, m)?)?;
    m.add_function(wrap_pyfunction!(cofactor_q, m)?)?;
    m.add_function(wrap_pyfunction!(build_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_divides, m)?)?;
    m.add_function(wrap_pyfunction!(solve_k, m)?)?;
    m.add_function(wrap_pyfunction!(is_probable_prime, m)?)?;
    m.add_function(wrap_pyfunction!(scan_table, m)?)?;
    Ok(())
}
