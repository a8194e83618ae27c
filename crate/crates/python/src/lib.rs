//! Python bindings: the completion engine, census, cross products and the
//! Clifford frame search, over plain lists and dicts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use orthoext::census::{self, Budget, Witness};
use orthoext::clifford::{self, BitVec, CliffordElement};
use orthoext::completion;
use orthoext::error::Error;
use orthoext::intvec::{verify_ortho_set, IntVector};
use orthoext::octonion::{self, Octonion};
use orthoext::quaternion::{self, PureUnit, Quaternion};

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::BudgetExceeded { .. } | Error::Internal(_) => {
            PyRuntimeError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn vector(coords: Vec<i64>) -> PyResult<IntVector> {
    IntVector::new(coords).map_err(to_py_err)
}

fn vectors(rows: Vec<Vec<i64>>) -> PyResult<Vec<IntVector>> {
    rows.into_iter().map(vector).collect()
}

fn coords(v: &IntVector) -> Vec<i64> {
    v.coords().to_vec()
}

fn budget_from(max_n: Option<i64>) -> Budget {
    max_n.map(Budget::new).unwrap_or_default()
}

fn quaternion_from(c: [i64; 4]) -> Quaternion {
    Quaternion::new(c[0], c[1], c[2], c[3])
}

fn unit_from(name: &str) -> PyResult<PureUnit> {
    match name {
        "i" => Ok(PureUnit::I),
        "j" => Ok(PureUnit::J),
        "k" => Ok(PureUnit::K),
        other => Err(PyValueError::new_err(format!(
            "unit must be one of 'i', 'j', 'k', got {other:?}"
        ))),
    }
}

fn unit_name(u: PureUnit) -> &'static str {
    match u {
        PureUnit::I => "i",
        PureUnit::J => "j",
        PureUnit::K => "k",
    }
}

/// Extends an orthogonal set of equal-norm integer vectors; returns a dict
/// with `status`, `added`, `n_squared` and optionally `reason`.
#[pyfunction]
fn complete<'py>(py: Python<'py>, rows: Vec<Vec<i64>>) -> PyResult<Bound<'py, PyDict>> {
    let vs = vectors(rows)?;
    if vs.is_empty() {
        return Err(PyValueError::new_err("empty input"));
    }
    let n_squared = vs[0].squared_norm().map_err(to_py_err)?;
    let result = completion::complete(&vs).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("status", result.status.as_str())?;
    out.set_item("added", result.added.iter().map(coords).collect::<Vec<_>>())?;
    out.set_item("n_squared", n_squared)?;
    if let Some(reason) = result.reason {
        out.set_item("reason", reason.to_string())?;
    }
    Ok(out)
}

/// Validates an orthogonal equal-norm set and returns its squared norm.
#[pyfunction]
fn verify(rows: Vec<Vec<i64>>) -> PyResult<i64> {
    let set = verify_ortho_set(vectors(rows)?).map_err(to_py_err)?;
    Ok(set.squared_norm())
}

/// Sorted absolute values: the canonical signed-permutation representative.
#[pyfunction]
fn canonicalize(row: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(coords(&vector(row)?.canonicalize_signed_perm()))
}

/// One equal-norm orthogonal partner in dimension 3, or None (exhaustive).
#[pyfunction]
#[pyo3(signature = (row, budget=None))]
fn find_partner(row: Vec<i64>, budget: Option<i64>) -> PyResult<Option<Vec<i64>>> {
    let v = vector(row)?;
    Ok(census::find_partner(&v, &budget_from(budget))
        .map_err(to_py_err)?
        .as_ref()
        .map(coords))
}

/// Canonical representations of `n` as a sum of `dim` squares.
#[pyfunction]
#[pyo3(signature = (n, dim=3, budget=None))]
fn enumerate_reps(n: i64, dim: usize, budget: Option<i64>) -> PyResult<Vec<Vec<i64>>> {
    Ok(census::enumerate_reps(n, dim, &budget_from(budget))
        .map_err(to_py_err)?
        .iter()
        .map(coords)
        .collect())
}

/// Extendability classification of one squared norm in dimension 3.
#[pyfunction]
#[pyo3(signature = (n, budget=None))]
fn classify<'py>(py: Python<'py>, n: i64, budget: Option<i64>) -> PyResult<Bound<'py, PyDict>> {
    let report = census::classify_d3(n, &budget_from(budget)).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("n", report.n)?;
    out.set_item("dim", report.dim)?;
    out.set_item(
        "reps",
        report.reps_canonical.iter().map(coords).collect::<Vec<_>>(),
    )?;
    out.set_item("in_c3_1_2", report.in_c3_1_2)?;
    out.set_item("in_c3_1_3", report.in_c3_1_3)?;
    out.set_item("trivial", report.trivial)?;
    let witnesses = PyDict::new(py);
    for (rep, w) in &report.witnesses {
        let key = pyo3::types::PyTuple::new(py, rep.coords())?;
        match w {
            Witness::Partner(p) => witnesses.set_item(key, ("partner", coords(p)))?,
            Witness::Basis(vs) => {
                witnesses.set_item(key, ("basis", vs.iter().map(coords).collect::<Vec<_>>()))?
            }
            Witness::NoPartner => witnesses.set_item(key, ("none", Vec::<i64>::new()))?,
        }
    }
    out.set_item("witnesses", witnesses)?;
    Ok(out)
}

/// Norms below `limit` extending to pairs but never to bases (non-trivial).
#[pyfunction]
#[pyo3(signature = (limit, budget=None))]
fn diffset(limit: i64, budget: Option<i64>) -> PyResult<Vec<i64>> {
    census::difference_set_d3(limit, &budget_from(budget)).map_err(to_py_err)
}

/// Whether `n` is a sum of two integer squares.
#[pyfunction]
fn sum_two_squares(n: i64) -> bool {
    census::sum_two_squares(n)
}

/// The 7-dimensional cross product.
#[pyfunction]
fn cross7(v: Vec<i64>, w: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(coords(
        &octonion::cross7(&vector(v)?, &vector(w)?).map_err(to_py_err)?,
    ))
}

/// The 8-dimensional ternary cross product.
#[pyfunction]
fn cross8(x: Vec<i64>, y: Vec<i64>, z: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(coords(
        &octonion::cross8_ternary(&vector(x)?, &vector(y)?, &vector(z)?).map_err(to_py_err)?,
    ))
}

/// The Cayley product of two octonions given as 8 coordinates each.
#[pyfunction]
fn cayley_mul(x: [i64; 8], y: [i64; 8]) -> PyResult<[i64; 8]> {
    let p = octonion::cayley_mul(&Octonion::new(x), &Octonion::new(y)).map_err(to_py_err)?;
    Ok(p.coords)
}

/// The Hamilton product of two quaternions given as (1, i, j, k) coefficients.
#[pyfunction]
fn quat_mul(p: [i64; 4], q: [i64; 4]) -> PyResult<[i64; 4]> {
    let r = quaternion_from(p)
        .mul(&quaternion_from(q))
        .map_err(to_py_err)?;
    Ok([r.w, r.x, r.y, r.z])
}

/// Parametrizes a primitive vector of square norm as a conjugated unit:
/// returns `(q, unit)` with `q * unit * conj(q)` embedding the input.
#[pyfunction]
fn pythagorean_param(row: Vec<i64>) -> PyResult<([i64; 4], String)> {
    let (q, u) = quaternion::pythagorean_param(&vector(row)?).map_err(to_py_err)?;
    Ok(([q.w, q.x, q.y, q.z], unit_name(u).to_string()))
}

/// Cofactors `(q1, q2)` with `q1*q + q2*q*u = 2` for a pure unit `u`.
#[pyfunction]
fn quat_bezout(q: [i64; 4], unit: &str) -> PyResult<([i64; 4], [i64; 4])> {
    let (q1, q2) =
        quaternion::bezout_pair(&quaternion_from(q), unit_from(unit)?).map_err(to_py_err)?;
    Ok(([q1.w, q1.x, q1.y, q1.z], [q2.w, q2.x, q2.y, q2.z]))
}

/// The largest index family for the Clifford frame construction, as bit
/// strings (first coordinate leftmost).
#[pyfunction]
fn clifford_search(n: usize) -> PyResult<Vec<String>> {
    Ok(clifford::search_max_family(n)
        .map_err(to_py_err)?
        .iter()
        .map(|b| b.tuple_string())
        .collect())
}

fn bitvec_from(pattern: &str) -> PyResult<BitVec> {
    let tuple: Vec<u8> = pattern
        .chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            other => Err(PyValueError::new_err(format!(
                "bit string may contain only 0 and 1, got {other:?}"
            ))),
        })
        .collect::<PyResult<_>>()?;
    BitVec::from_tuple(&tuple).map_err(to_py_err)
}

/// Rows of the orthogonal family built from an even-subalgebra element
/// (2^(n-1) coefficients) and an index family of bit strings.
#[pyfunction]
fn clifford_frame(coeffs: Vec<i64>, family: Vec<String>) -> PyResult<Vec<Vec<i64>>> {
    let n = match family.first() {
        Some(pattern) => pattern.len(),
        None => return Err(PyValueError::new_err("family must be nonempty")),
    };
    let element = CliffordElement::new(n, coeffs).map_err(to_py_err)?;
    let bits = family
        .iter()
        .map(|p| bitvec_from(p))
        .collect::<PyResult<Vec<_>>>()?;
    let set = clifford::orthogonal_family(&element, &bits).map_err(to_py_err)?;
    Ok(set.vectors().iter().map(coords).collect())
}

#[pymodule]
fn orthoext_py(_py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    m.add_function(wrap_pyfunction!(find_partner, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_reps, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(diffset, m)?)?;
    m.add_function(wrap_pyfunction!(sum_two_squares, m)?)?;
    m.add_function(wrap_pyfunction!(cross7, m)?)?;
    m.add_function(wrap_pyfunction!(cross8, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_mul, m)?)?;
    m.add_function(wrap_pyfunction!(quat_mul, m)?)?;
    m.add_function(wrap_pyfunction!(pythagorean_param, m)?)?;
    m.add_function(wrap_pyfunction!(quat_bezout, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_search, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_frame, m)?)?;
    Ok(())
}
