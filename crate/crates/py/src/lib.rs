//! Python bindings: the main types and operations of the toolkit.
//!
//! Structured results come back as JSON strings in the same format the CLI
//! emits, so `json.loads` gives dictionaries on the Python side.

use postlie::exact::parse_rat;
use postlie::liealg::{catalog, PairOnSameSpace};
use postlie::report;
use postlie::solver::classify::classify_commutative;
use postlie::solver::{
    setup_commutative, setup_general, setup_phi, solve, SolveOptions,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn options(budget: Option<u64>, depth: Option<u32>) -> SolveOptions {
    let mut opts = SolveOptions::default();
    if let Some(b) = budget {
        opts.budget = b;
    }
    if let Some(d) = depth {
        opts.depth = d;
    }
    opts
}

/// A finite-dimensional Lie algebra over the rationals.
#[pyclass(frozen)]
struct LieAlgebra {
    inner: postlie::liealg::LieAlgebra,
}

#[pymethods]
impl LieAlgebra {
    /// Look up a catalog algebra, e.g. `catalog("r3_diag", "1")`.
    #[staticmethod]
    #[pyo3(signature = (name, param=None))]
    fn catalog(name: &str, param: Option<&str>) -> PyResult<Self> {
        let param = param.map(parse_rat).transpose().map_err(err)?;
        let inner = catalog::get(name, param.as_ref()).map_err(err)?;
        Ok(LieAlgebra { inner })
    }

    /// Load from the JSON algebra file format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(LieAlgebra {
            inner: postlie::io::load_algebra_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        postlie::io::algebra_canonical_json(&self.inner)
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn basis(&self) -> Vec<String> {
        self.inner.basis_names().to_vec()
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.is_nilpotent()
    }

    fn is_solvable(&self) -> bool {
        self.inner.is_solvable()
    }

    fn is_semisimple(&self) -> bool {
        self.inner.is_semisimple()
    }

    fn is_perfect(&self) -> bool {
        self.inner.is_perfect()
    }

    fn lower_central_dims(&self) -> Vec<usize> {
        self.inner
            .series(postlie::liealg::SeriesKind::LowerCentral)
            .iter()
            .map(|s| s.dim())
            .collect()
    }

    fn derivations_dim(&self) -> usize {
        postlie::derivcoh::derivations(&self.inner).dim()
    }

    /// Full structural analysis as a JSON report.
    #[pyo3(signature = (show_basis=false))]
    fn analyze(&self, show_basis: bool) -> PyResult<String> {
        serde_json::to_string(&report::analyze_report(&self.inner, show_basis)).map_err(err)
    }
}

/// A candidate bilinear product on a fixed-dimensional space.
#[pyclass(frozen)]
struct Product {
    inner: postlie::postlie::BilinearProduct,
}

#[pymethods]
impl Product {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Product {
            inner: postlie::io::load_product_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        postlie::io::product_canonical_json(&self.inner)
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }
}

/// Check the commutative identities; returns the JSON verification report.
#[pyfunction]
fn verify_commutative(algebra: &LieAlgebra, product: &Product) -> PyResult<String> {
    let axioms = postlie::postlie::verify_commutative(&algebra.inner, &product.inner).map_err(err)?;
    let nilpotency = axioms
        .pass
        .then(|| postlie::postlie::all_left_nilpotent(&product.inner));
    serde_json::to_string(&report::VerifyReport { axioms, nilpotency }).map_err(err)
}

/// Check the pair identities; returns the JSON verification report.
#[pyfunction]
fn verify_pair(g: &LieAlgebra, n: &LieAlgebra, product: &Product) -> PyResult<String> {
    let pair = PairOnSameSpace::new(g.inner.clone(), n.inner.clone()).map_err(err)?;
    let axioms = postlie::postlie::verify_pair(&pair, &product.inner).map_err(err)?;
    serde_json::to_string(&report::VerifyReport {
        axioms,
        nilpotency: None,
    })
    .map_err(err)
}

/// Symbolic nilpotency of all left operators, with a witness when false.
#[pyfunction]
fn all_left_nilpotent(product: &Product) -> PyResult<String> {
    serde_json::to_string(&postlie::postlie::all_left_nilpotent(&product.inner)).map_err(err)
}

/// Solve for all commutative structures; returns the JSON solver report.
#[pyfunction]
#[pyo3(signature = (algebra, budget=None, depth=None))]
fn solve_commutative(
    algebra: &LieAlgebra,
    budget: Option<u64>,
    depth: Option<u32>,
) -> PyResult<String> {
    let sys = setup_commutative(&algebra.inner);
    let outcome = solve(&sys, &options(budget, depth));
    serde_json::to_string(&report::solve_report(&sys, &outcome)).map_err(err)
}

/// Solve for all structures on the pair (g, n); the φ-reduction is used
/// when the second bracket is semisimple.
#[pyfunction]
#[pyo3(signature = (g, n, budget=None, depth=None))]
fn solve_pair(
    g: &LieAlgebra,
    n: &LieAlgebra,
    budget: Option<u64>,
    depth: Option<u32>,
) -> PyResult<String> {
    let pair = PairOnSameSpace::new(g.inner.clone(), n.inner.clone()).map_err(err)?;
    let sys = if pair.n.is_semisimple() {
        setup_phi(&pair).map_err(err)?
    } else {
        setup_general(&pair)
    };
    let outcome = solve(&sys, &options(budget, depth));
    serde_json::to_string(&report::solve_report(&sys, &outcome)).map_err(err)
}

/// Classify commutative structures up to isomorphism; JSON report.
#[pyfunction]
#[pyo3(signature = (algebra, budget=None, depth=None))]
fn classify(algebra: &LieAlgebra, budget: Option<u64>, depth: Option<u32>) -> PyResult<String> {
    let sys = setup_commutative(&algebra.inner);
    let result = classify_commutative(&algebra.inner, &options(budget, depth)).map_err(err)?;
    serde_json::to_string(&report::classify_report(&sys, result)).map_err(err)
}

/// The catalog names with one-line descriptions.
#[pyfunction]
fn catalog_entries() -> Vec<(String, String)> {
    catalog::entries()
        .iter()
        .map(|(n, d)| (n.to_string(), d.to_string()))
        .collect()
}

#[pymodule]
fn postlie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LieAlgebra>()?;
    m.add_class::<Product>()?;
    m.add_function(wrap_pyfunction!(verify_commutative, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pair, m)?)?;
    m.add_function(wrap_pyfunction!(all_left_nilpotent, m)?)?;
    m.add_function(wrap_pyfunction!(solve_commutative, m)?)?;
    m.add_function(wrap_pyfunction!(solve_pair, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_entries, m)?)?;
    Ok(())
}
