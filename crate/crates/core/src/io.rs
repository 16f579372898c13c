//! JSON file formats for algebras and products, plus canonical digests.
//!
//! Algebra files: `{"dim": n, "basis": [...], "brackets": [{"i": i, "j": j,
//! "coeffs": {"k": "p/q"}}]}` with 1-based indices and `i < j`; omitted
//! pairs are zero brackets. Product files use the same scheme under
//! `"products"`, with all `(i, j)` pairs allowed.

use crate::error::Error;
use crate::exact::{format_rat, parse_rat};
use crate::liealg::LieAlgebra;
use crate::postlie::BilinearProduct;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<CoeffEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductFile {
    pub dim: usize,
    pub products: Vec<CoeffEntry>,
}

fn parse_coeffs(
    dim: usize,
    entry: &CoeffEntry,
) -> Result<Vec<(usize, crate::exact::Rat)>, Error> {
    if entry.i < 1 || entry.i > dim || entry.j < 1 || entry.j > dim {
        return Err(Error::Parse(format!(
            "indices ({}, {}) out of range 1..={dim}",
            entry.i, entry.j
        )));
    }
    let mut out = Vec::new();
    for (k, v) in &entry.coeffs {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad basis index `{k}`")))?;
        if k < 1 || k > dim {
            return Err(Error::Parse(format!("index {k} out of range 1..={dim}")));
        }
        out.push((k - 1, parse_rat(v)?));
    }
    Ok(out)
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<LieAlgebra, Error> {
    if file.basis.len() != file.dim {
        return Err(Error::Parse(format!(
            "dim is {} but {} basis names given",
            file.dim,
            file.basis.len()
        )));
    }
    let mut brackets = Vec::new();
    for entry in &file.brackets {
        if entry.i >= entry.j {
            return Err(Error::Parse(format!(
                "bracket entries need i < j, got ({}, {})",
                entry.i, entry.j
            )));
        }
        brackets.push(((entry.i - 1, entry.j - 1), parse_coeffs(file.dim, entry)?));
    }
    LieAlgebra::new(file.dim, file.basis.clone(), &brackets)
}

pub fn algebra_to_file(g: &LieAlgebra) -> AlgebraFile {
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let coeffs: BTreeMap<String, String> = (0..g.dim())
                .filter(|&k| !g.constant(i, j, k).is_zero())
                .map(|k| ((k + 1).to_string(), format_rat(g.constant(i, j, k))))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(CoeffEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }
    AlgebraFile {
        dim: g.dim(),
        basis: g.basis_names().to_vec(),
        brackets,
    }
}

pub fn product_from_file(file: &ProductFile) -> Result<BilinearProduct, Error> {
    let mut entries = Vec::new();
    for entry in &file.products {
        for (k, v) in parse_coeffs(file.dim, entry)? {
            entries.push(((entry.i - 1, entry.j - 1, k), v));
        }
    }
    Ok(BilinearProduct::from_entries(file.dim, &entries))
}

pub fn product_to_file(p: &BilinearProduct) -> ProductFile {
    let mut products = Vec::new();
    for i in 0..p.dim() {
        for j in 0..p.dim() {
            let coeffs: BTreeMap<String, String> = (0..p.dim())
                .filter(|&k| !p.coeff(i, j, k).is_zero())
                .map(|k| ((k + 1).to_string(), format_rat(p.coeff(i, j, k))))
                .collect();
            if !coeffs.is_empty() {
                products.push(CoeffEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }
    ProductFile {
        dim: p.dim(),
        products,
    }
}

pub fn load_algebra_str(s: &str) -> Result<LieAlgebra, Error> {
    let file: AlgebraFile = serde_json::from_str(s)?;
    algebra_from_file(&file)
}

pub fn load_product_str(s: &str) -> Result<BilinearProduct, Error> {
    let file: ProductFile = serde_json::from_str(s)?;
    product_from_file(&file)
}

/// Canonical JSON for an algebra; the digest input.
pub fn algebra_canonical_json(g: &LieAlgebra) -> String {
    serde_json::to_string(&algebra_to_file(g)).expect("serialization cannot fail")
}

pub fn product_canonical_json(p: &BilinearProduct) -> String {
    serde_json::to_string(&product_to_file(p)).expect("serialization cannot fail")
}

/// Hex SHA-256 of a canonical serialization.
pub fn digest(data: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data.as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::liealg::catalog;

    #[test]
    fn algebra_round_trip() {
        for name in ["r2", "heisenberg", "f23", "sl2", "sl3_chevalley", "h1_plus_C"] {
            let g = catalog::get(name, None).unwrap();
            let json = algebra_canonical_json(&g);
            let back = load_algebra_str(&json).unwrap();
            assert_eq!(g, back, "round trip for {name}");
        }
        let g = catalog::get("r3_diag", Some(&crate::exact::ratio(-3, 2))).unwrap();
        let back = load_algebra_str(&algebra_canonical_json(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn product_round_trip() {
        let p = BilinearProduct::from_entries(
            3,
            &[((0, 0, 1), rat(1)), ((0, 1, 2), crate::exact::ratio(1, 2))],
        );
        let json = product_canonical_json(&p);
        let back = load_product_str(&json).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn loader_rejects_bad_files() {
        // i >= j
        let bad = r#"{"dim":2,"basis":["e1","e2"],"brackets":[{"i":2,"j":1,"coeffs":{"1":"1"}}]}"#;
        assert!(load_algebra_str(bad).is_err());
        // Jacobi failure: [e1,e2]=e1, [e1,e3]=e2 breaks J(e1,e2,e3)
        let bad = r#"{"dim":3,"basis":["e1","e2","e3"],"brackets":[
            {"i":1,"j":2,"coeffs":{"1":"1"}},
            {"i":1,"j":3,"coeffs":{"2":"1"}}]}"#;
        assert!(matches!(
            load_algebra_str(bad),
            Err(Error::JacobiFailure(_))
        ));
        // malformed rational
        let bad = r#"{"dim":2,"basis":["e1","e2"],"brackets":[{"i":1,"j":2,"coeffs":{"1":"0.5"}}]}"#;
        assert!(load_algebra_str(bad).is_err());
    }

    #[test]
    fn digest_is_stable() {
        let g = catalog::heisenberg();
        let d1 = digest(&algebra_canonical_json(&g));
        let d2 = digest(&algebra_canonical_json(&catalog::heisenberg()));
        assert_eq!(d1, d2);
        assert_eq!(d1.len(), 64);
    }
}
