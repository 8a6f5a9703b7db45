//! Python bindings: catalog lookup, solving, certificate checks and sweeps.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hamcert::catalog::{builtin_catalog, parametric_group, route, CATALOG_MAX_ORDER};
use hamcert::constructions::{solve_with, Certificate, SolveOptions};
use hamcert::group::{Elem, GroupTable};
use hamcert::sweep::{run_sweep, SweepConfig};

/// The group with this catalog or family name.
pub fn group_by_name(name: &str) -> Result<GroupTable, String> {
    if let Some(g) = parametric_group(name) {
        return g.map_err(|e| e.to_string());
    }
    builtin_catalog(CATALOG_MAX_ORDER)
        .into_iter()
        .find(|e| e.answers_to(name))
        .map(|e| e.table)
        .ok_or_else(|| format!("no group named {name}"))
}

/// Certificate text for `Cay(group; gens)`.
pub fn solve_text(group: &str, gens: &[usize], allow_fallback: bool) -> Result<String, String> {
    let g = group_by_name(group)?;
    if let Some(&bad) = gens.iter().find(|&&i| i >= g.order()) {
        return Err(format!("element {bad} outside a group of order {}", g.order()));
    }
    let gens: Vec<Elem> = gens.iter().map(|&i| Elem::new(i)).collect();
    let opts = SolveOptions { allow_fallback, ..SolveOptions::default() };
    solve_with(&g, &gens, &opts).map(|c| c.to_text()).map_err(|e| e.to_string())
}

/// Whether a certificate passes both verifiers against its named group.
pub fn verify_text(text: &str) -> Result<bool, String> {
    let cert = Certificate::from_text(text).map_err(|e| e.to_string())?;
    let g = group_by_name(&cert.group)?;
    Ok(g.order() == cert.order && cert.verify_both(&g))
}

#[pyfunction]
#[pyo3(name = "catalog")]
fn py_catalog(max_order: usize) -> Vec<(String, usize)> {
    builtin_catalog(max_order).into_iter().map(|e| (e.name, e.order)).collect()
}

#[pyfunction]
#[pyo3(name = "route")]
fn py_route(order: usize) -> String {
    route(order).to_string()
}

#[pyfunction]
#[pyo3(name = "solve", signature = (group, gens, allow_fallback = false))]
fn py_solve(group: &str, gens: Vec<usize>, allow_fallback: bool) -> PyResult<String> {
    solve_text(group, &gens, allow_fallback).map_err(PyValueError::new_err)
}

#[pyfunction]
#[pyo3(name = "verify")]
fn py_verify(text: &str) -> PyResult<bool> {
    verify_text(text).map_err(PyValueError::new_err)
}

/// Sweep report as TSV text and whether every row passed.
#[pyfunction]
#[pyo3(name = "sweep", signature = (min_order, max_order, max_gens = 3, jobs = 1))]
fn py_sweep(min_order: usize, max_order: usize, max_gens: usize, jobs: usize) -> PyResult<(String, bool)> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(PyRuntimeError::new_err(format!("the catalog stops at order {CATALOG_MAX_ORDER}")));
    }
    let cat = builtin_catalog(max_order);
    let cfg = SweepConfig { min_order, max_order, max_gens, jobs, ..SweepConfig::default() };
    let r = run_sweep(&cat, &cfg);
    Ok((r.to_tsv(false), r.success()))
}

#[pymodule]
fn hamcert_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(py_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(py_route, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify, m)?)?;
    m.add_function(wrap_pyfunction!(py_sweep, m)?)?;
    Ok(())
}
