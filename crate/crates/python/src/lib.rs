use pyo3::basic::CompareOp;
use pyo3::create_exception;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use imcircle::circle::{self, LinearPrime};
use imcircle::error::{Error, ErrorKind};
use imcircle::expr::{format_circle, format_upoly, parse_poly, parse_univariate};
use imcircle::json;
use imcircle::realalg::{self, DEFAULT_DEGREE_BOUND};
use imcircle::resultant::{self as res, ResultantMode};
use imcircle::ring::{rat_from_str, Rat, Ring};

create_exception!(imcircle, AlgebraError, PyValueError, "A domain error from the algebra kernel.");
create_exception!(imcircle, ParseError, AlgebraError, "Malformed polynomial or number text.");
create_exception!(imcircle, DegreeBoundError, AlgebraError, "An algebraic degree exceeded its bound.");

fn err(e: Error) -> PyErr {
    match (e.kind(), &e) {
        (_, Error::DivisionByZero) => PyZeroDivisionError::new_err(e.to_string()),
        (ErrorKind::Parse, _) => ParseError::new_err(e.to_string()),
        (ErrorKind::Resource, _) => DegreeBoundError::new_err(e.to_string()),
        _ => AlgebraError::new_err(e.to_string()),
    }
}

fn rational(text: &str) -> PyResult<Rat> {
    rat_from_str(text).ok_or_else(|| ParseError::new_err(format!("invalid rational {text:?}")))
}

/// A real algebraic number: a minimal polynomial and an isolating interval.
#[pyclass(frozen, from_py_object, name = "RealAlg", module = "imcircle")]
#[derive(Clone)]
struct PyRealAlg(realalg::RealAlg);

#[pymethods]
impl PyRealAlg {
    /// Accepts an int or a rational string such as "-3/4".
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(n) = value.extract::<i64>() {
            return Ok(PyRealAlg(realalg::RealAlg::from_int(n)));
        }
        let text: String = value.extract()?;
        Ok(PyRealAlg(realalg::RealAlg::from_rat(rational(&text)?)))
    }

    /// The unique root of `poly` (integer coefficients, constant term
    /// first) in the rational interval `[lo, hi]`.
    #[staticmethod]
    fn from_interval(poly: Vec<i64>, lo: &str, hi: &str) -> PyResult<Self> {
        let p = imcircle::upoly::ZPoly::new(poly.into_iter().map(Into::into).collect());
        realalg::RealAlg::from_poly_interval(&p, rational(lo)?, rational(hi)?).map(PyRealAlg).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError::new_err(e.to_string()))?;
        json::realalg_from_json(&v).map(PyRealAlg).map_err(err)
    }

    fn sqrt(&self) -> PyResult<Self> {
        self.0.checked_sqrt(DEFAULT_DEGREE_BOUND).map(PyRealAlg).map_err(err)
    }

    fn sign(&self) -> i32 {
        self.0.sign()
    }

    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    /// Minimal polynomial coefficients, constant term first.
    fn poly(&self) -> Vec<String> {
        self.0.poly().coeffs().iter().map(|c| c.to_string()).collect()
    }

    fn interval(&self) -> (String, String) {
        (self.0.lo().to_string(), self.0.hi().to_string())
    }

    fn decimal(&self, digits: u32) -> String {
        self.0.to_decimal(digits)
    }

    fn to_json(&self) -> String {
        json::realalg_to_json(&self.0).to_string()
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_add(&o.0, DEFAULT_DEGREE_BOUND).map(PyRealAlg).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_sub(&o.0, DEFAULT_DEGREE_BOUND).map(PyRealAlg).map_err(err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_mul(&o.0, DEFAULT_DEGREE_BOUND).map(PyRealAlg).map_err(err)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_div(&o.0, DEFAULT_DEGREE_BOUND).map(PyRealAlg).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyRealAlg(self.0.neg())
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64()
    }

    fn __richcmp__(&self, o: &Self, op: CompareOp) -> bool {
        op.matches(self.0.compare(&o.0))
    }

    fn __hash__(&self) -> u64 {
        // equal numbers share a minimal polynomial
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.poly().coeffs().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RealAlg({})", self.0)
    }
}

/// An element `re + im*i` of `F(i)`.
#[pyclass(frozen, skip_from_py_object, name = "ComplexAlg", module = "imcircle")]
#[derive(Clone)]
struct PyComplexAlg(realalg::ComplexAlg);

#[pymethods]
impl PyComplexAlg {
    #[getter]
    fn re(&self) -> PyRealAlg {
        PyRealAlg(self.0.re.clone())
    }

    #[getter]
    fn im(&self) -> PyRealAlg {
        PyRealAlg(self.0.im.clone())
    }

    fn to_json(&self) -> String {
        json::complex_to_json(&self.0).to_string()
    }

    fn __richcmp__(&self, o: &Self, op: CompareOp) -> PyResult<bool> {
        match op {
            CompareOp::Eq => Ok(self.0 == o.0),
            CompareOp::Ne => Ok(self.0 != o.0),
            _ => Err(pyo3::exceptions::PyTypeError::new_err("complex numbers are unordered")),
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ComplexAlg({})", self.0)
    }
}

/// An element `p(Y) + q(Y)*X` of `F[X,Y]/(X^2+Y^2+1)`.
#[pyclass(frozen, from_py_object, name = "CircleElem", module = "imcircle")]
#[derive(Clone)]
struct PyCircleElem(circle::CircleElem);

#[pymethods]
impl PyCircleElem {
    /// Parses and reduces a polynomial such as "X^2 + 1/2*Y".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let f = parse_poly(text).map_err(err)?;
        Ok(PyCircleElem(circle::CircleElem::from_rational(&circle::CircleElem::reduce(&f))))
    }

    /// Coefficients of `p` and `q`, constant term first.
    #[staticmethod]
    fn from_coeffs(p: Vec<PyRealAlg>, q: Vec<PyRealAlg>) -> Self {
        let up = |v: Vec<PyRealAlg>| imcircle::upoly::UPoly::new(v.into_iter().map(|c| c.0).collect());
        PyCircleElem(circle::CircleElem::new(up(p), up(q)))
    }

    #[getter]
    fn p(&self) -> Vec<PyRealAlg> {
        self.0.p().coeffs().iter().cloned().map(PyRealAlg).collect()
    }

    #[getter]
    fn q(&self) -> Vec<PyRealAlg> {
        self.0.q().coeffs().iter().cloned().map(PyRealAlg).collect()
    }

    /// `p^2 + q^2 (Y^2+1)`, coefficients constant term first.
    fn norm(&self) -> Vec<PyRealAlg> {
        self.0.norm().coeffs().iter().cloned().map(PyRealAlg).collect()
    }

    fn conj(&self) -> Self {
        PyCircleElem(self.0.conj())
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    fn is_prime(&self) -> bool {
        circle::is_prime(&self.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `(unit, prime)` with `self = unit * prime`.
    fn as_prime(&self) -> PyResult<(PyRealAlg, PyLinearPrime)> {
        let (u, p) = circle::as_prime(&self.0).map_err(err)?;
        Ok((PyRealAlg(u), PyLinearPrime(p)))
    }

    /// `w` with `w * d == self`, or `None`.
    fn exact_divide(&self, d: &Self) -> PyResult<Option<Self>> {
        Ok(self.0.exact_divide(&d.0).map_err(err)?.map(PyCircleElem))
    }

    fn to_json(&self) -> String {
        json::circle_to_json(&self.0).to_string()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyCircleElem(self.0.add(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyCircleElem(self.0.sub(&o.0))
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyCircleElem(self.0.mul(&o.0))
    }

    fn __neg__(&self) -> Self {
        PyCircleElem(self.0.neg())
    }

    fn __pow__(&self, exp: u32, _modulo: Option<Py<PyAny>>) -> Self {
        PyCircleElem(self.0.pow(exp))
    }

    fn __richcmp__(&self, o: &Self, op: CompareOp) -> PyResult<bool> {
        match op {
            CompareOp::Eq => Ok(self.0 == o.0),
            CompareOp::Ne => Ok(self.0 != o.0),
            _ => Err(pyo3::exceptions::PyTypeError::new_err("ring elements are unordered")),
        }
    }

    fn __str__(&self) -> String {
        format_circle(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("CircleElem({:?})", format_circle(&self.0))
    }
}

/// A normalized prime `aX + bY + c`.
#[pyclass(frozen, skip_from_py_object, name = "LinearPrime", module = "imcircle")]
#[derive(Clone)]
struct PyLinearPrime(LinearPrime);

#[pymethods]
impl PyLinearPrime {
    /// Normalizes `aX + bY + c`.
    #[new]
    fn new(a: PyRealAlg, b: PyRealAlg, c: PyRealAlg) -> PyResult<Self> {
        let (_, p) = LinearPrime::normalize(a.0, b.0, c.0).map_err(err)?;
        Ok(PyLinearPrime(p))
    }

    #[getter]
    fn a(&self) -> PyRealAlg {
        PyRealAlg(self.0.a().clone())
    }

    #[getter]
    fn b(&self) -> PyRealAlg {
        PyRealAlg(self.0.b().clone())
    }

    #[getter]
    fn c(&self) -> PyRealAlg {
        PyRealAlg(self.0.c().clone())
    }

    fn to_elem(&self) -> PyCircleElem {
        PyCircleElem(self.0.to_elem())
    }

    fn to_json(&self) -> String {
        json::prime_to_json(&self.0).to_string()
    }

    fn __richcmp__(&self, o: &Self, op: CompareOp) -> bool {
        op.matches(self.0.cmp(&o.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }
}

#[pyclass(frozen, name = "Factorization", module = "imcircle")]
struct PyFactorization(circle::Factorization);

#[pymethods]
impl PyFactorization {
    #[getter]
    fn unit(&self) -> PyRealAlg {
        PyRealAlg(self.0.unit.clone())
    }

    #[getter]
    fn factors(&self) -> Vec<(PyLinearPrime, usize)> {
        self.0.factors.iter().map(|(p, m)| (PyLinearPrime(p.clone()), *m)).collect()
    }

    fn reconstruct(&self) -> PyCircleElem {
        PyCircleElem(self.0.reconstruct())
    }

    fn to_json(&self) -> String {
        json::factorization_to_json(&self.0).to_string()
    }

    fn __repr__(&self) -> String {
        self.to_json()
    }
}

#[pyclass(frozen, name = "ObstructionCertificate", module = "imcircle")]
struct PyCertificate(circle::ObstructionCertificate);

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError::new_err(e.to_string()))?;
        json::certificate_from_json(&v).map(PyCertificate).map_err(err)
    }

    #[getter]
    fn prime(&self) -> PyLinearPrime {
        PyLinearPrime(self.0.prime.clone())
    }

    #[getter]
    fn witness(&self) -> PyCircleElem {
        PyCircleElem(self.0.witness.clone())
    }

    #[getter]
    fn phi_witness(&self) -> PyComplexAlg {
        PyComplexAlg(self.0.phi_witness.clone())
    }

    /// Recomputes the image of the witness and checks that it is nonreal.
    fn verify(&self) -> bool {
        self.0.verify()
    }

    fn to_json(&self) -> String {
        json::certificate_to_json(&self.0).to_string()
    }
}

/// Factors an element with rational coefficients into linear primes.
#[pyfunction]
#[pyo3(signature = (u, max_algdeg = DEFAULT_DEGREE_BOUND))]
fn factor(u: &PyCircleElem, max_algdeg: usize) -> PyResult<PyFactorization> {
    circle::factor_bounded(&u.0, max_algdeg).map(PyFactorization).map_err(err)
}

#[pyfunction]
fn ideal_gcd(gens: Vec<PyCircleElem>) -> PyResult<PyCircleElem> {
    let gens: Vec<_> = gens.into_iter().map(|g| g.0).collect();
    circle::ideal_gcd(&gens).map(PyCircleElem).map_err(err)
}

/// `(d, s, t)` with `s*u + t*v == d`.
#[pyfunction]
fn extended_gcd(u: &PyCircleElem, v: &PyCircleElem) -> PyResult<(PyCircleElem, PyCircleElem, PyCircleElem)> {
    let g = circle::extended_gcd(&u.0, &v.0).map_err(err)?;
    Ok((PyCircleElem(g.d), PyCircleElem(g.s), PyCircleElem(g.t)))
}

#[pyfunction]
fn quotient_map_eval(prime: &PyLinearPrime, f: &PyCircleElem) -> PyComplexAlg {
    PyComplexAlg(circle::quotient_map_eval(&prime.0, &f.0))
}

#[pyfunction]
fn unit_image_test(prime: &PyLinearPrime, f: &PyCircleElem) -> bool {
    circle::unit_image_test(&prime.0, &f.0)
}

#[pyfunction]
fn obstruction_certificate(prime: &PyLinearPrime) -> PyCertificate {
    PyCertificate(circle::obstruction_certificate(&prime.0))
}

/// Resultant of two univariate polynomials given as text.
#[pyfunction]
#[pyo3(signature = (f, g, mode = "prs"))]
fn resultant(f: &str, g: &str, mode: &str) -> PyResult<String> {
    let mode: ResultantMode = mode.parse().map_err(PyValueError::new_err)?;
    let (f, _) = parse_univariate(f).map_err(err)?;
    let (g, _) = parse_univariate(g).map_err(err)?;
    Ok(res::resultant(&f, &g, mode).map_err(err)?.to_string())
}

/// Resultant of two bivariate polynomials eliminating `var` ("X" or "Y").
#[pyfunction]
fn resultant_bivar(f: &str, g: &str, var: &str) -> PyResult<String> {
    let v = match var {
        "X" => imcircle::bipoly::Var::X,
        "Y" => imcircle::bipoly::Var::Y,
        _ => return Err(PyValueError::new_err("var must be \"X\" or \"Y\"")),
    };
    let r = res::resultant_bivar(&parse_poly(f).map_err(err)?, &parse_poly(g).map_err(err)?, v).map_err(err)?;
    Ok(format_upoly(&r, v.other()))
}

#[pyfunction]
fn isolate_real_roots(h: &str) -> PyResult<Vec<(PyRealAlg, usize)>> {
    let (h, _) = parse_univariate(h).map_err(err)?;
    let roots = realalg::isolate_real_roots_bounded(&h, DEFAULT_DEGREE_BOUND).map_err(err)?;
    Ok(roots.into_iter().map(|(a, m)| (PyRealAlg(a), m)).collect())
}

#[pyfunction]
fn complex_root_pairs(h: &str) -> PyResult<Vec<(PyComplexAlg, usize)>> {
    let (h, _) = parse_univariate(h).map_err(err)?;
    let pairs = realalg::complex_root_pairs_bounded(&h, DEFAULT_DEGREE_BOUND).map_err(err)?;
    Ok(pairs.into_iter().map(|(z, m)| (PyComplexAlg(z), m)).collect())
}

#[pyfunction]
fn odd_degree_root(h: &str) -> PyResult<PyRealAlg> {
    let (h, _) = parse_univariate(h).map_err(err)?;
    realalg::odd_degree_root(&h).map(PyRealAlg).map_err(err)
}

#[pymodule]
#[pyo3(name = "imcircle")]
fn imcircle_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("AlgebraError", py.get_type::<AlgebraError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("DegreeBoundError", py.get_type::<DegreeBoundError>())?;
    m.add_class::<PyRealAlg>()?;
    m.add_class::<PyComplexAlg>()?;
    m.add_class::<PyCircleElem>()?;
    m.add_class::<PyLinearPrime>()?;
    m.add_class::<PyFactorization>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(extended_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_map_eval, m)?)?;
    m.add_function(wrap_pyfunction!(unit_image_test, m)?)?;
    m.add_function(wrap_pyfunction!(obstruction_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(resultant, m)?)?;
    m.add_function(wrap_pyfunction!(resultant_bivar, m)?)?;
    m.add_function(wrap_pyfunction!(isolate_real_roots, m)?)?;
    m.add_function(wrap_pyfunction!(complex_root_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(odd_degree_root, m)?)?;
    Ok(())
}
