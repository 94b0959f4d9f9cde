use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use qhankel_core::families::{generate, FamilyId, FamilyKind, Route};
use qhankel_core::hankel::{hankel_det as det_of, DetAlgorithm};
use qhankel_core::jfraction::{extract as extract_coeffs, MomentSequence};
use qhankel_core::motzkin::{build_table, ClassicalInstance};
use qhankel_core::qkernel;
use qhankel_core::verify::{self, IdentityId};
use qhankel_core::{BiPoly, QImage, RatFunc, RingError, XImage};

fn ring_err(e: RingError) -> PyErr {
    match e {
        RingError::DivisionByZero | RingError::SubstitutionSingular => {
            PyZeroDivisionError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Polynomial in `Z[q, x]`.
#[pyclass(
    name = "BiPoly",
    module = "qhankel",
    eq,
    hash,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyBiPoly {
    inner: BiPoly,
}

impl From<BiPoly> for PyBiPoly {
    fn from(inner: BiPoly) -> Self {
        PyBiPoly { inner }
    }
}

fn as_poly(obj: &Bound<'_, PyAny>) -> PyResult<BiPoly> {
    if let Ok(p) = obj.extract::<PyRef<'_, PyBiPoly>>() {
        return Ok(p.inner.clone());
    }
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(BiPoly::constant(n));
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(ring_err);
    }
    Err(PyValueError::new_err("expected BiPoly, int or str"))
}

fn as_rat(obj: &Bound<'_, PyAny>) -> PyResult<RatFunc> {
    if let Ok(r) = obj.extract::<PyRef<'_, PyRatFunc>>() {
        return Ok(r.inner.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(ring_err);
    }
    as_poly(obj).map(RatFunc::from)
}

#[pymethods]
impl PyBiPoly {
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse::<BiPoly>().map(Self::from).map_err(ring_err)
    }

    #[staticmethod]
    fn q() -> Self {
        BiPoly::q().into()
    }

    #[staticmethod]
    fn x() -> Self {
        BiPoly::x().into()
    }

    /// `(e_q, e_x, coefficient)` triples in canonical order.
    fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        self.inner.terms()
    }

    fn coefficient(&self, e_q: u32, e_x: u32) -> BigInt {
        self.inner.coefficient(e_q, e_x)
    }

    fn degree_x(&self) -> Option<u32> {
        self.inner.degree_x()
    }

    fn degree_q(&self) -> Option<u32> {
        self.inner.degree_q()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn gcd(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(self.inner.gcd(&as_poly(other)?).into())
    }

    fn at_q_one(&self) -> Self {
        self.inner.at_q_one().into()
    }

    /// `q -> q^c`.
    fn scale_q(&self, c: u32) -> Self {
        self.inner.scale_q(c).into()
    }

    /// `x -> q^k x`.
    fn dilate(&self, k: i32) -> PyRatFunc {
        self.inner.dilate(k).into()
    }

    /// Substitute for `x` (and optionally `q`); `None` keeps the variable.
    #[pyo3(signature = (x = None, q = None))]
    fn substitute(
        &self,
        x: Option<&Bound<'_, PyAny>>,
        q: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<PyRatFunc> {
        let x_image = match x {
            Some(v) => XImage::Value(as_rat(v)?),
            None => XImage::Keep,
        };
        let q_image = match q {
            Some(v) => QImage::Value(as_rat(v)?),
            None => QImage::Keep,
        };
        Ok(self.inner.substitute(&q_image, &x_image).into())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BiPoly('{}')", self.inner)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner + &as_poly(other)?).into())
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner - &as_poly(other)?).into())
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&as_poly(other)? - &self.inner).into())
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner * &as_poly(other)?).into())
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, e: u32, _modulo: Option<&Bound<'_, PyAny>>) -> Self {
        self.inner.pow(e).into()
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<PyRatFunc> {
        RatFunc::from(&self.inner)
            .checked_div(&as_rat(other)?)
            .map(PyRatFunc::from)
            .map_err(ring_err)
    }

    /// Exact quotient; raises `ValueError` when the division leaves a remainder.
    fn exact_div(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.inner
            .exact_div(&as_poly(other)?)
            .map(Self::from)
            .map_err(ring_err)
    }
}

/// Reduced quotient of two polynomials.
#[pyclass(
    name = "RatFunc",
    module = "qhankel",
    eq,
    hash,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyRatFunc {
    inner: RatFunc,
}

impl From<RatFunc> for PyRatFunc {
    fn from(inner: RatFunc) -> Self {
        PyRatFunc { inner }
    }
}

#[pymethods]
impl PyRatFunc {
    #[new]
    #[pyo3(signature = (num, den = None))]
    fn new(num: &Bound<'_, PyAny>, den: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let r = match den {
            None => as_rat(num)?,
            Some(d) => RatFunc::new(as_poly(num)?, as_poly(d)?).map_err(ring_err)?,
        };
        Ok(r.into())
    }

    #[getter]
    fn numerator(&self) -> PyBiPoly {
        self.inner.numerator().clone().into()
    }

    #[getter]
    fn denominator(&self) -> PyBiPoly {
        self.inner.denominator().clone().into()
    }

    fn is_polynomial(&self) -> bool {
        self.inner.is_polynomial()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RatFunc('{}')", self.inner)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner + &as_rat(other)?).into())
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner - &as_rat(other)?).into())
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&as_rat(other)? - &self.inner).into())
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner * &as_rat(other)?).into())
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.inner
            .checked_div(&as_rat(other)?)
            .map(Self::from)
            .map_err(ring_err)
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        as_rat(other)?
            .checked_div(&self.inner)
            .map(Self::from)
            .map_err(ring_err)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, e: u32, _modulo: Option<&Bound<'_, PyAny>>) -> Self {
        self.inner.pow(e).into()
    }
}

fn family_id(name: &str, c: u32) -> PyResult<FamilyId> {
    let kind: FamilyKind = name.parse().map_err(value_err)?;
    if c == 0 {
        return Err(PyValueError::new_err("c must be at least 1"));
    }
    Ok(FamilyId::new(kind, c))
}

fn polys(values: Vec<BiPoly>) -> Vec<PyBiPoly> {
    values.into_iter().map(PyBiPoly::from).collect()
}

#[pyfunction]
fn q_int(n: u32) -> PyBiPoly {
    qkernel::q_int(n).into()
}

#[pyfunction]
fn q_factorial(n: u32) -> PyBiPoly {
    qkernel::q_factorial(n).into()
}

#[pyfunction]
fn q_binomial(n: i64, k: i64) -> PyBiPoly {
    qkernel::q_binomial(n, k).into()
}

/// `(a; q^c)_n`.
#[pyfunction]
#[pyo3(signature = (a, n, c = 1))]
fn q_pochhammer(a: &Bound<'_, PyAny>, n: u32, c: u32) -> PyResult<PyBiPoly> {
    Ok(qkernel::q_pochhammer(&as_poly(a)?, n, c).into())
}

#[pyfunction]
#[pyo3(signature = (n, k, c = 1))]
fn stirling2(n: u32, k: i64, c: u32) -> PyBiPoly {
    qkernel::stirling2_q(n, k, c).into()
}

#[pyfunction]
fn stirling1(n: u32, k: i64) -> PyBiPoly {
    qkernel::stirling1_q(n, k).into()
}

/// Members `0..=n_max` of a family.
#[pyfunction]
#[pyo3(signature = (name, n_max, c = 1, route = "closed"))]
fn sequence(name: &str, n_max: usize, c: u32, route: &str) -> PyResult<Vec<PyBiPoly>> {
    let route = match route {
        "closed" => Route::ClosedForm,
        "recurrence" => Route::RecurrenceOrOperator,
        other => return Err(PyValueError::new_err(format!("unknown route `{other}`"))),
    };
    Ok(polys(generate(family_id(name, c)?, n_max, route).values))
}

#[pyfunction]
#[pyo3(signature = (name, n, c = 1))]
fn family(name: &str, n: usize, c: u32) -> PyResult<PyBiPoly> {
    Ok(generate(family_id(name, c)?, n, Route::ClosedForm)
        .values
        .pop()
        .unwrap()
        .into())
}

#[pyfunction]
#[pyo3(signature = (seq, n, shift = 0, alg = "bareiss"))]
fn hankel_det(seq: Vec<Bound<'_, PyAny>>, n: usize, shift: usize, alg: &str) -> PyResult<PyBiPoly> {
    let algorithm: DetAlgorithm = alg.parse().map_err(value_err)?;
    let seq = seq.iter().map(as_poly).collect::<PyResult<Vec<_>>>()?;
    det_of(&seq, n, shift, algorithm)
        .map(PyBiPoly::from)
        .map_err(value_err)
}

/// `(lhs, rhs, equal)` for one catalog entry.
#[pyfunction]
#[pyo3(signature = (id, n, c = 1))]
fn check_identity(id: &str, n: usize, c: u32) -> PyResult<(PyBiPoly, PyBiPoly, bool)> {
    let id: IdentityId = id.parse().map_err(value_err)?;
    if n == 0 || c == 0 {
        return Err(PyValueError::new_err("n and c must be at least 1"));
    }
    let case = verify::check_identity(id, n, c);
    Ok((case.lhs.into(), case.rhs.into(), case.equal))
}

/// JSON report for the given identity tags (or all of them).
#[pyfunction]
#[pyo3(signature = (n_max, ids = None, c_values = vec![1], timings = false))]
fn run_suite(
    n_max: usize,
    ids: Option<Vec<String>>,
    c_values: Vec<u32>,
    timings: bool,
) -> PyResult<String> {
    if n_max == 0 || c_values.contains(&0) {
        return Err(PyValueError::new_err(
            "n_max and c values must be at least 1",
        ));
    }
    let (name, ids) = match ids {
        None => ("all".to_string(), IdentityId::ALL.to_vec()),
        Some(tags) => {
            let ids = tags
                .iter()
                .map(|t| t.parse::<IdentityId>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(value_err)?;
            (tags.join(","), ids)
        }
    };
    Ok(verify::run_suite(&name, &ids, n_max, &c_values).to_json(timings))
}

/// Jacobi coefficients `(s, t)` of a moment sequence, to the given depth.
#[pyfunction]
fn extract(
    moments: Vec<Bound<'_, PyAny>>,
    depth: usize,
) -> PyResult<(Vec<PyRatFunc>, Vec<PyRatFunc>)> {
    let moments = moments.iter().map(as_rat).collect::<PyResult<Vec<_>>>()?;
    let seq = MomentSequence::new(moments).map_err(value_err)?;
    let coeffs = extract_coeffs(&seq, depth).map_err(value_err)?;
    Ok((
        coeffs.s.into_iter().map(PyRatFunc::from).collect(),
        coeffs.t.into_iter().map(PyRatFunc::from).collect(),
    ))
}

/// Rows of the weighted Motzkin triangle for `rs`, `poch` or `hermite`.
#[pyfunction]
fn motzkin_table(name: &str, depth: usize) -> PyResult<Vec<Vec<PyRatFunc>>> {
    let inst = ClassicalInstance::from_name(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown instance `{name}`")))?;
    let table = build_table(&inst.coefficients(depth.max(1)), depth).map_err(value_err)?;
    Ok(table
        .rows()
        .iter()
        .map(|r| r.iter().cloned().map(PyRatFunc::from).collect())
        .collect())
}

#[pymodule]
fn qhankel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBiPoly>()?;
    m.add_class::<PyRatFunc>()?;
    m.add_function(wrap_pyfunction!(q_int, m)?)?;
    m.add_function(wrap_pyfunction!(q_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(q_pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(stirling1, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_det, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(extract, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin_table, m)?)?;
    Ok(())
}
