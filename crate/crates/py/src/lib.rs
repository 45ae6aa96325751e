//! Python bindings for `repst-core`.
//!
//! JSON-shaped inputs accept either a `str` of JSON or plain Python
//! containers; structured outputs are returned as Python containers with the
//! same layout as the `repst` CLI.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde_json::Value;

use repst_core::arith::{rational_json, Cyclotomic};
use repst_core::centralizer::wreath_character_table;
use repst_core::combinatorics::{lr_coefficient, IntPartition, SetPartition};
use repst_core::diagrams::{self, build_d1, check_center, GroupMatrixElement};
use repst_core::oracle;
use repst_core::perm::Perm;
use repst_core::sn;
use repst_core::tower;

create_exception!(repst, RepstError, PyException, "Raised for domain errors (caps, shape mismatches, invalid input).");

fn err(e: repst_core::Error) -> PyErr {
    RepstError::new_err(format!("{}: {e}", e.code()))
}

fn to_value(obj: &Bound<'_, PyAny>) -> PyResult<Value> {
    let text: String = if let Ok(s) = obj.cast::<PyString>() {
        s.to_str()?.to_owned()
    } else {
        obj.py().import("json")?.call_method1("dumps", (obj,))?.extract()?
    };
    serde_json::from_str(&text).map_err(|e| RepstError::new_err(format!("invalid_input: {e}")))
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn partition(parts: Vec<u32>) -> PyResult<IntPartition> {
    IntPartition::new(parts).map_err(err)
}

/// A linear combination of partition diagrams `k → l` with coefficients in `ℚ[t]`.
#[pyclass(module = "repst", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct DiagramMorphism(diagrams::DiagramMorphism);

#[pymethods]
impl DiagramMorphism {
    /// Builds a morphism from its JSON form (`str` or `dict`).
    #[new]
    fn new(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(diagrams::DiagramMorphism::from_json(&to_value(obj)?).map_err(err)?))
    }

    #[staticmethod]
    fn identity(k: usize) -> Self {
        Self(diagrams::DiagramMorphism::identity(k))
    }

    #[staticmethod]
    fn unit() -> Self {
        Self(diagrams::DiagramMorphism::unit())
    }

    #[staticmethod]
    fn counit() -> Self {
        Self(diagrams::DiagramMorphism::counit())
    }

    #[staticmethod]
    fn crossing() -> Self {
        Self(diagrams::DiagramMorphism::crossing())
    }

    #[staticmethod]
    fn merge() -> Self {
        Self(diagrams::DiagramMorphism::merge())
    }

    /// `x_π` for the set partition `{"k":…,"l":…,"blocks":[[1,-1],…]}`.
    #[staticmethod]
    fn x_basis(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        let v = to_value(obj)?;
        let bad = || RepstError::new_err("invalid_input: expected {\"k\", \"l\", \"blocks\"}");
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let l = v.get("l").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let blocks: Vec<Vec<i64>> = serde_json::from_value(v.get("blocks").cloned().ok_or_else(bad)?).map_err(|_| bad())?;
        let pi = SetPartition::from_signed_blocks(k, l, &blocks).map_err(err)?;
        Ok(Self(diagrams::x_basis(&pi)))
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn l(&self) -> usize {
        self.0.l()
    }

    /// `other ∘ self`: `self` on top.
    fn then(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(diagrams::compose(&self.0, &other.0).map_err(err)?))
    }

    fn tensor(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(diagrams::tensor(&self.0, &other.0).map_err(err)?))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(self.0.add(&other.0).map_err(err)?))
    }

    /// The matrix of `F_d`, rows of ints or `"p/q"` strings.
    fn evaluate<'py>(&self, py: Python<'py>, d: usize) -> PyResult<Bound<'py, PyAny>> {
        let m = diagrams::evaluate_fd(&self.0, d).map_err(err)?;
        let rows: Vec<Vec<Value>> = (0..m.rows()).map(|r| m.row(r).iter().map(rational_json).collect()).collect();
        to_py(py, &Value::from(rows))
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    fn __repr__(&self) -> String {
        format!("DiagramMorphism({})", self.0.to_json())
    }
}

/// A simple object `W_{μ,Λ}` of `Z(Rep S_n)`.
#[pyclass(module = "repst", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct CenterSimple(tower::CenterSimple);

#[pymethods]
impl CenterSimple {
    /// From `{"mu": [...], "irrep": "triv" | "sign" | {"factors": ...}}`.
    #[new]
    fn new(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(tower::CenterSimple::from_json(&to_value(obj)?).map_err(err)?))
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn mu(&self) -> Vec<u32> {
        self.0.mu().parts().to_vec()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.0.name()
    }

    /// Dimension of the underlying object of `Rep S_n`.
    #[getter]
    fn dim(&self) -> PyResult<u128> {
        self.0.dim().map_err(err)
    }

    /// `self ⊙ other` as a list of `(simple, multiplicity)`.
    fn odot(&self, other: &Self) -> PyResult<Vec<(CenterSimple, i64)>> {
        let prod = tower::odot(&self.0, &other.0).map_err(err)?;
        Ok(prod.terms().iter().map(|(s, k)| (CenterSimple(s.clone()), *k)).collect())
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    fn __repr__(&self) -> String {
        match self.0.name() {
            Some(name) => format!("CenterSimple({}, {name})", self.0),
            None => format!("CenterSimple({})", self.0),
        }
    }
}

/// All simples of `Z(Rep S_n)`.
#[pyfunction]
fn center_simples(n: u32) -> PyResult<Vec<CenterSimple>> {
    Ok(tower::center_simples(n).map_err(err)?.into_iter().map(CenterSimple).collect())
}

/// Rank of the Grothendieck group of `Z(Rep S_n)`.
#[pyfunction]
fn k0_rank_center(n: u32) -> PyResult<u64> {
    tower::k0_rank_center(n).map_err(err)
}

/// Character table of `S_n`: `{"classes": [...], "rows": [{"irrep": λ, "values": [...]}]}`
/// with values in class order.
#[pyfunction]
fn sn_character_table<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    let t = sn::character_table(n).map_err(err)?;
    let rows: Vec<Value> = t
        .characters()
        .iter()
        .map(|(lambda, chi)| serde_json::json!({"irrep": lambda, "values": chi.value_list()}))
        .collect();
    to_py(py, &serde_json::json!({"classes": t.classes(), "rows": rows}))
}

/// Character table of `Z_c ≀ S_m`; irrational values are
/// `{"conductor": N, "coeffs": [...]}` in the power basis of `ζ_N`.
#[pyfunction]
fn wreath_table<'py>(py: Python<'py>, c: u32, m: u32) -> PyResult<Bound<'py, PyAny>> {
    let t = wreath_character_table(c, m).map_err(err)?;
    let rows: Vec<Value> = (0..t.irreps().len())
        .map(|i| {
            let values: Vec<Value> = t.row(i).iter().map(Cyclotomic::to_json).collect();
            serde_json::json!({"irrep": t.irreps()[i], "dim": t.dim(i), "values": values})
        })
        .collect();
    let sizes: Vec<u64> = (0..t.classes().len()).map(|i| t.class_size(i) as u64).collect();
    to_py(py, &serde_json::json!({"classes": t.classes(), "class_sizes": sizes, "rows": rows}))
}

/// Labels of `Res X_λ` (Pieri rule) as `(μ, multiplicity)` pairs.
#[pyfunction]
fn pieri_induction(lambda: Vec<u32>) -> PyResult<Vec<(Vec<u32>, u64)>> {
    let out = sn::pieri_induction(&partition(lambda)?).map_err(err)?;
    Ok(out.into_iter().map(|(mu, k)| (mu.parts().to_vec(), k)).collect())
}

/// `[X_λ]·[X_μ]` in `gr K_0(Rep S_t)`.
#[pyfunction]
fn grk0_repst_product(lambda: Vec<u32>, mu: Vec<u32>) -> PyResult<Vec<(Vec<u32>, u64)>> {
    let out = sn::grk0_repst_product(&partition(lambda)?, &partition(mu)?);
    Ok(out.into_iter().map(|(nu, k)| (nu.parts().to_vec(), k)).collect())
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}`.
#[pyfunction]
fn littlewood_richardson(lambda: Vec<u32>, mu: Vec<u32>, nu: Vec<u32>) -> PyResult<u64> {
    Ok(lr_coefficient(&partition(lambda)?, &partition(mu)?, &partition(nu)?))
}

/// Builds the half-braiding of `W_{σ,e}` for `σ` given by its images and
/// `e` one of `"one"`, `"trivial"`, `"sign"`, and checks the center equations.
#[pyfunction]
fn check_half_braiding<'py>(py: Python<'py>, sigma: Vec<usize>, idempotent: &str) -> PyResult<Bound<'py, PyAny>> {
    let sigma = Perm::from_images(sigma).map_err(err)?;
    let e = match idempotent {
        "one" => GroupMatrixElement::one(sigma.degree()),
        "trivial" => GroupMatrixElement::trivial_idempotent(&sigma).map_err(err)?,
        "sign" => GroupMatrixElement::sign_idempotent(&sigma).map_err(err)?,
        other => return Err(RepstError::new_err(format!("invalid_input: unknown idempotent {other:?}"))),
    };
    let candidate = build_d1(&sigma, &e).map_err(err)?;
    to_py(py, &check_center(&candidate).map_err(err)?.to_json())
}

/// Runs an oracle suite (`realize`, `odot`, `yd`, `frobenius`).
#[pyfunction]
fn verify<'py>(py: Python<'py>, suite: &str) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &oracle::verify_suite(suite).map_err(err)?.to_json())
}

#[pymodule]
fn repst(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("RepstError", m.py().get_type::<RepstError>())?;
    m.add_class::<DiagramMorphism>()?;
    m.add_class::<CenterSimple>()?;
    m.add_function(wrap_pyfunction!(center_simples, m)?)?;
    m.add_function(wrap_pyfunction!(k0_rank_center, m)?)?;
    m.add_function(wrap_pyfunction!(sn_character_table, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_table, m)?)?;
    m.add_function(wrap_pyfunction!(pieri_induction, m)?)?;
    m.add_function(wrap_pyfunction!(grk0_repst_product, m)?)?;
    m.add_function(wrap_pyfunction!(littlewood_richardson, m)?)?;
    m.add_function(wrap_pyfunction!(check_half_braiding, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
