//! Structured reports shared by the CLI and the verification suite.
//!
//! Structured output must be byte-identical across reruns on identical
//! inputs, so nothing timing-dependent is serialized; wall-clock times go
//! to the text renderers only.

use crate::exact::format_rat;
use crate::io::{product_to_file, ProductFile};
use crate::liealg::{LieAlgebra, SeriesKind};
use crate::poly::{ComponentStatus, PolyRing, Polynomial};
use crate::postlie::NilpotencyReport;
use crate::solver::classify::ClassificationResult;
use crate::solver::{SolutionFamily, SolveOutcome, StructureSystem};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

/// The envelope every command serializes.
#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub budget_consumed: Option<u64>,
    pub result: T,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub dim: usize,
    pub basis: Vec<String>,
    pub predicates: crate::liealg::Predicates,
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub radical_dim: usize,
    pub dim_der: usize,
    pub dim_inner: usize,
    pub dim_h1: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation_basis: Option<Vec<Vec<String>>>,
}

pub fn analyze_report(g: &LieAlgebra, show_basis: bool) -> AnalyzeReport {
    let der = crate::derivcoh::derivations(g);
    let outer = crate::derivcoh::inner_and_outer(g);
    AnalyzeReport {
        dim: g.dim(),
        basis: g.basis_names().to_vec(),
        predicates: g.predicates(),
        lower_central_dims: g
            .series(SeriesKind::LowerCentral)
            .iter()
            .map(|s| s.dim())
            .collect(),
        derived_dims: g
            .series(SeriesKind::Derived)
            .iter()
            .map(|s| s.dim())
            .collect(),
        radical_dim: g.killing_radical().dim(),
        dim_der: outer.dim_der,
        dim_inner: outer.dim_inner,
        dim_h1: outer.dim_h1,
        derivation_basis: show_basis.then(|| {
            der.matrices()
                .iter()
                .map(|m| m.flatten().iter().map(format_rat).collect())
                .collect()
        }),
    }
}

/// A product whose coefficients are polynomial strings in the family's
/// parameters.
#[derive(Debug, Clone, Serialize)]
pub struct ParamProductReport {
    pub dim: usize,
    pub products: Vec<ParamCoeffEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamCoeffEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub params: Vec<String>,
    pub product: ParamProductReport,
    pub constraints: Vec<String>,
    pub nonvanishing: Vec<String>,
    pub status: ComponentStatus,
    pub samples: Vec<ProductFile>,
}

fn family_product_report(sys: &StructureSystem, family: &SolutionFamily) -> ParamProductReport {
    let dim = sys.kind.dim();
    let ring = &family.ring;
    let mut products = Vec::new();
    match &sys.kind {
        crate::solver::SystemKind::Phi(_) => {
            // report the φ matrix entries as a dim×dim "product" block
            for r in 0..dim {
                let coeffs: BTreeMap<String, String> = (0..dim)
                    .filter(|c| !family.exprs[r * dim + c].is_zero())
                    .map(|c| {
                        (
                            (c + 1).to_string(),
                            ring.poly_to_string(&family.exprs[r * dim + c]),
                        )
                    })
                    .collect();
                if !coeffs.is_empty() {
                    products.push(ParamCoeffEntry {
                        i: r + 1,
                        j: r + 1,
                        coeffs,
                    });
                }
            }
        }
        _ => {
            for (u, &(i, j, k)) in sys.product_unknowns.iter().enumerate() {
                let expr = &family.exprs[u];
                if expr.is_zero() {
                    continue;
                }
                let entry = products
                    .iter_mut()
                    .find(|e: &&mut ParamCoeffEntry| e.i == i + 1 && e.j == j + 1);
                let coeff = ring.poly_to_string(expr);
                match entry {
                    Some(e) => {
                        e.coeffs.insert((k + 1).to_string(), coeff);
                    }
                    None => {
                        let mut coeffs = BTreeMap::new();
                        coeffs.insert((k + 1).to_string(), coeff);
                        products.push(ParamCoeffEntry {
                            i: i + 1,
                            j: j + 1,
                            coeffs,
                        });
                    }
                }
            }
        }
    }
    ParamProductReport { dim, products }
}

pub fn family_report(sys: &StructureSystem, family: &SolutionFamily) -> FamilyReport {
    let ring = &family.ring;
    FamilyReport {
        params: family.param_names(),
        product: family_product_report(sys, family),
        constraints: family
            .residual
            .iter()
            .map(|p| ring.poly_to_string(p))
            .collect(),
        nonvanishing: family
            .nonvanishing
            .iter()
            .map(|p| ring.poly_to_string(p))
            .collect(),
        status: family.status,
        samples: family
            .samples
            .iter()
            .map(|point| {
                let sol = sys.build_solution(point).expect("verified sample");
                product_to_file(&sol.product)
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub product: ProductFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    pub families: Vec<FamilyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_consumed: Option<u64>,
}

pub fn render_polys(ring: &PolyRing, polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| ring.poly_to_string(p)).collect()
}

pub fn solve_report(sys: &StructureSystem, outcome: &SolveOutcome) -> SolveReport {
    match outcome {
        SolveOutcome::Empty { certificate, ring } => SolveReport {
            status: "empty".into(),
            certificate: Some(render_polys(ring, certificate)),
            witness: None,
            families: Vec::new(),
            budget_consumed: None,
        },
        SolveOutcome::Witness { solution, .. } => SolveReport {
            status: "witness".into(),
            certificate: None,
            witness: Some(WitnessReport {
                product: product_to_file(&solution.product),
                phi: solution.phi.as_ref().map(|m| {
                    (0..m.rows())
                        .map(|i| m.row(i).iter().map(format_rat).collect())
                        .collect()
                }),
            }),
            families: Vec::new(),
            budget_consumed: None,
        },
        SolveOutcome::Families(families) => SolveReport {
            status: "families".into(),
            certificate: None,
            witness: None,
            families: families.iter().map(|f| family_report(sys, f)).collect(),
            budget_consumed: None,
        },
        SolveOutcome::Inconclusive { consumed } => SolveReport {
            status: "inconclusive".into(),
            certificate: None,
            witness: None,
            families: Vec::new(),
            budget_consumed: Some(*consumed),
        },
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub axioms: crate::postlie::AxiomReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<NilpotencyReport>,
}

#[derive(Debug, Serialize)]
pub struct RepresentativeReport {
    pub label: String,
    pub parametrized: bool,
    pub product: ParamProductReport,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub classes: Vec<crate::solver::classify::ClassEntry>,
    pub representatives: Vec<RepresentativeReport>,
    pub distinctness: Vec<crate::solver::classify::Distinctness>,
    pub coverage: Vec<crate::solver::classify::CoverageEntry>,
    pub unclassified_families: Vec<usize>,
    pub exploratory: bool,
    pub families: Vec<FamilyReport>,
}

pub fn classify_report(sys: &StructureSystem, result: ClassificationResult) -> ClassifyReport {
    let representatives = result
        .representatives
        .iter()
        .map(|rep| match rep {
            crate::solver::classify::Representative::Concrete { label, product } => {
                let file = product_to_file(product);
                RepresentativeReport {
                    label: label.clone(),
                    parametrized: false,
                    product: ParamProductReport {
                        dim: file.dim,
                        products: file
                            .products
                            .iter()
                            .map(|e| ParamCoeffEntry {
                                i: e.i,
                                j: e.j,
                                coeffs: e.coeffs.clone(),
                            })
                            .collect(),
                    },
                }
            }
            crate::solver::classify::Representative::OneParam { label, family } => {
                let dim = family.dim;
                let mut products = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        let coeffs: BTreeMap<String, String> = (0..dim)
                            .filter(|&k| !family.coeffs[(i * dim + j) * dim + k].is_zero())
                            .map(|k| {
                                (
                                    (k + 1).to_string(),
                                    family
                                        .ring
                                        .poly_to_string(&family.coeffs[(i * dim + j) * dim + k]),
                                )
                            })
                            .collect();
                        if !coeffs.is_empty() {
                            products.push(ParamCoeffEntry {
                                i: i + 1,
                                j: j + 1,
                                coeffs,
                            });
                        }
                    }
                }
                RepresentativeReport {
                    label: label.clone(),
                    parametrized: true,
                    product: ParamProductReport { dim, products },
                }
            }
        })
        .collect();
    ClassifyReport {
        classes: result.classes,
        representatives,
        distinctness: result.distinctness,
        coverage: result.coverage,
        unclassified_families: result.unclassified_families,
        exploratory: result.exploratory,
        families: result
            .families
            .iter()
            .map(|f| family_report(sys, f))
            .collect(),
    }
}
