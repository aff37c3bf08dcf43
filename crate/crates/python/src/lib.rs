use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use periplectic_core::affine;
use periplectic_core::brauer::{self, ADElement};
use periplectic_core::document::{ElementDocument, ElementKind};
use periplectic_core::expr::parse_expression;
use periplectic_core::render::{render_ascii, render_svg};
use periplectic_core::verify::{run_suite, Suite, VerifyParams};

fn err(e: periplectic_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn document(d: usize, algebra: &str, expression: &str) -> Result<ElementDocument, periplectic_core::Error> {
    let combo = parse_expression(expression, d)?;
    match algebra {
        "affine" => Ok(ElementDocument::from_affine(&affine::normalize_combination(&combo, d)?)),
        "daha" => Ok(ElementDocument::from_daha(&affine::to_daha_combination(&combo, d)?)),
        "brauer" => {
            let mut x = ADElement::zero(d);
            for (c, w) in &combo {
                if w.iter().any(|t| t.is_dot()) {
                    return Err(periplectic_core::Error::InvalidParameter("dot generators are not in the Brauer algebra".into()));
                }
                x = x.add(&ADElement::from_word(w, d)?.scale(c))?;
            }
            Ok(ElementDocument::from_brauer(&x))
        }
        other => Err(periplectic_core::Error::InvalidParameter(format!("unknown algebra {other:?}"))),
    }
}

/// Normal form of a word expression, as a JSON element document.
#[pyfunction]
#[pyo3(signature = (expression, d, algebra = "affine"))]
fn normalize(expression: &str, d: usize, algebra: &str) -> PyResult<String> {
    document(d, algebra, expression).map(|doc| doc.to_json()).map_err(err)
}

/// Product of two JSON element documents of the same kind.
#[pyfunction]
fn multiply(a: &str, b: &str) -> PyResult<String> {
    let x = ElementDocument::from_json(a).map_err(err)?;
    let y = ElementDocument::from_json(b).map_err(err)?;
    if x.kind != y.kind {
        return Err(PyValueError::new_err("documents have different kinds"));
    }
    let out = match x.kind {
        ElementKind::Affine => affine::multiply(&x.to_affine().map_err(err)?, &y.to_affine().map_err(err)?).map(|p| ElementDocument::from_affine(&p)),
        ElementKind::Brauer => brauer::multiply(&x.to_brauer().map_err(err)?, &y.to_brauer().map_err(err)?).map(|p| ElementDocument::from_brauer(&p)),
        ElementKind::Daha => x.to_daha().map_err(err)?.multiply(&y.to_daha().map_err(err)?).map(|p| ElementDocument::from_daha(&p)),
    };
    Ok(out.map_err(err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (document, format = "ascii"))]
fn render(document: &str, format: &str) -> PyResult<String> {
    let doc = ElementDocument::from_json(document).map_err(err)?;
    match format {
        "ascii" => Ok(render_ascii(&doc)),
        "svg" => Ok(render_svg(&doc)),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

/// Runs a verification suite; returns whether it passed and the JSON report.
#[pyfunction]
#[pyo3(signature = (suite, n = 2, m = 1, d = 2, max_degree = 1))]
fn verify(suite: &str, n: usize, m: usize, d: usize, max_degree: usize) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(err)?;
    let report = run_suite(suite, VerifyParams { n, m, d, max_degree }).map_err(err)?;
    let json = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((report.passed, json))
}

#[pyfunction]
fn pbw_rank_check(d: usize, max_degree: usize, n: usize) -> PyResult<(usize, usize)> {
    let r = affine::pbw_rank_check(d, max_degree, n).map_err(err)?;
    Ok((r.count, r.rank))
}

#[pyfunction]
fn regular_count(d: usize, max_degree: usize) -> usize {
    affine::enumerate_regular(d, max_degree).len()
}

#[pymodule]
fn periplectic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(render, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(pbw_rank_check, m)?)?;
    m.add_function(wrap_pyfunction!(regular_count, m)?)?;
    Ok(())
}
