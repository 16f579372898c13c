//! Classification of commutative structures up to isomorphism on the
//! catalog's low-dimensional algebras.
//!
//! The solver's families describe the full solution variety; the
//! classification layer matches every family sample against a table of
//! normal-form representatives, records pairwise-distinctness evidence
//! (invariant fingerprints or infeasibility certificates), and reports any
//! family it cannot place instead of dropping it.

use super::iso::{
    catalog_aut, isomorphic, match_to_family, AutGroupParam, FamilyMatch, IsoOutcome, NoEvidence,
    ParamProduct,
};
use super::{
    sample_sequence, setup_commutative, solve, SolutionFamily, SolveOptions, SolveOutcome,
};
use crate::error::Error;
use crate::exact::{format_rat, rat, Rat};
use crate::liealg::{catalog, LieAlgebra};
use crate::poly::{PolyRing, Polynomial};
use crate::postlie::{invariants, verify_commutative, BilinearProduct};

/// A normal-form class representative: concrete, or a one-parameter family.
#[derive(Debug, Clone)]
pub enum Representative {
    Concrete {
        label: String,
        product: BilinearProduct,
    },
    OneParam {
        label: String,
        family: ParamProduct,
    },
}

impl Representative {
    pub fn label(&self) -> &str {
        match self {
            Representative::Concrete { label, .. } | Representative::OneParam { label, .. } => {
                label
            }
        }
    }

    /// A concrete member for fingerprinting and verification.
    pub fn sample(&self, value: &Rat) -> BilinearProduct {
        match self {
            Representative::Concrete { product, .. } => product.clone(),
            Representative::OneParam { family, .. } => family.at(value),
        }
    }
}

/// The one-parameter normal form on the Heisenberg algebra:
/// `e1·e1 = e2`, `e1·e2 = μ e3`.
pub fn c2_family() -> ParamProduct {
    let ring = PolyRing::new(vec!["mu".into()]);
    let mu = ring.var("mu");
    let one = Polynomial::one(1);
    let dim = 3;
    let mut coeffs = vec![Polynomial::zero(1); dim * dim * dim];
    let mut set = |i: usize, j: usize, k: usize, p: &Polynomial| {
        coeffs[(i * dim + j) * dim + k] = p.clone();
    };
    set(0, 0, 1, &one);
    set(0, 1, 2, &mu);
    set(1, 0, 2, &mu);
    ParamProduct { dim, ring, coeffs }
}

/// The normal-form tables for the supported algebras, keyed by structure
/// constants.
pub fn representative_table(g: &LieAlgebra) -> Option<Vec<Representative>> {
    if g == &catalog::r2() {
        return Some(vec![
            Representative::Concrete {
                label: "A1".into(),
                product: BilinearProduct::zero(2),
            },
            Representative::Concrete {
                label: "A2".into(),
                product: BilinearProduct::from_entries(2, &[((1, 1, 0), rat(1))]),
            },
            Representative::Concrete {
                label: "A3".into(),
                product: BilinearProduct::from_entries(
                    2,
                    &[((0, 1, 0), rat(-1)), ((1, 0, 0), rat(-1))],
                ),
            },
        ]);
    }
    if g == &catalog::r3_jordan() {
        let b4 = BilinearProduct::from_entries(
            3,
            &[
                // L(e1) = [[0,0,0],[0,1,1],[0,0,1]], L(e2), L(e3) as forced
                // by symmetry
                ((0, 1, 1), rat(1)),
                ((1, 0, 1), rat(1)),
                ((0, 2, 1), rat(1)),
                ((0, 2, 2), rat(1)),
                ((2, 0, 1), rat(1)),
                ((2, 0, 2), rat(1)),
            ],
        );
        return Some(vec![
            Representative::Concrete {
                label: "B1".into(),
                product: BilinearProduct::zero(3),
            },
            Representative::Concrete {
                label: "B2".into(),
                product: BilinearProduct::from_entries(3, &[((0, 0, 1), rat(1))]),
            },
            Representative::Concrete {
                label: "B3".into(),
                product: BilinearProduct::from_entries(3, &[((0, 0, 2), rat(1))]),
            },
            Representative::Concrete {
                label: "B4".into(),
                product: b4,
            },
        ]);
    }
    if g == &catalog::heisenberg() {
        return Some(vec![
            Representative::Concrete {
                label: "C1".into(),
                product: BilinearProduct::zero(3),
            },
            Representative::OneParam {
                label: "C2".into(),
                family: c2_family(),
            },
            Representative::Concrete {
                label: "C3".into(),
                product: BilinearProduct::from_entries(3, &[((0, 0, 2), rat(1))]),
            },
            Representative::Concrete {
                label: "C4".into(),
                product: BilinearProduct::from_entries(
                    3,
                    &[((0, 0, 2), rat(1)), ((1, 1, 2), rat(1))],
                ),
            },
        ]);
    }
    None
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ClassEntry {
    pub label: String,
    pub parametrized: bool,
    pub verified: bool,
}

#[derive(Debug, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DistinctnessEvidence {
    FingerprintMismatch,
    InfeasibilityCertificate,
    /// For a one-parameter class: distinct sampled parameters are
    /// non-isomorphic.
    ParameterSeparates { samples: Vec<String> },
}

#[derive(Debug, serde::Serialize)]
pub struct Distinctness {
    pub first: String,
    pub second: String,
    pub evidence: DistinctnessEvidence,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CoverageEntry {
    pub family: usize,
    pub sample: usize,
    pub matched: Option<String>,
    pub parameter: Option<String>,
    /// Set when no rational witness exists but the compatibility ideal for
    /// this class stays feasible over the algebraic closure: the sample
    /// matches over a field extension.
    pub extension_candidate: Option<String>,
}

#[derive(Debug, serde::Serialize)]
pub struct ClassificationResult {
    pub classes: Vec<ClassEntry>,
    pub distinctness: Vec<Distinctness>,
    pub coverage: Vec<CoverageEntry>,
    /// Families the matcher could not place; never silently dropped.
    pub unclassified_families: Vec<usize>,
    pub exploratory: bool,
    #[serde(skip)]
    pub families: Vec<SolutionFamily>,
    #[serde(skip)]
    pub representatives: Vec<Representative>,
}

/// Classify the commutative structures on `g` up to isomorphism.
///
/// For the catalog algebras with a normal-form table the result carries
/// verified representatives, distinctness evidence for every pair and a
/// match for every family sample. For other algebras the families are
/// reported exploratorily, grouped by invariant fingerprint only.
pub fn classify_commutative(
    g: &LieAlgebra,
    opts: &SolveOptions,
) -> Result<ClassificationResult, Error> {
    let sys = setup_commutative(g);
    let outcome = solve(&sys, opts);
    let families = match outcome {
        SolveOutcome::Families(f) => f,
        SolveOutcome::Witness { values, .. } => {
            // single point: one family with no parameters
            vec![SolutionFamily {
                ring: sys.ring.clone(),
                params: Vec::new(),
                exprs: values
                    .iter()
                    .map(|v| Polynomial::constant(sys.ring.nvars(), v.clone()))
                    .collect(),
                residual: Vec::new(),
                nonvanishing: Vec::new(),
                status: crate::poly::ComponentStatus::Solved,
                samples: vec![values],
            }]
        }
        SolveOutcome::Empty { .. } => {
            return Err(Error::InvalidParameter(
                "commutative systems always contain the zero product".to_string(),
            ))
        }
        SolveOutcome::Inconclusive { .. } => {
            return Ok(ClassificationResult {
                classes: Vec::new(),
                distinctness: Vec::new(),
                coverage: Vec::new(),
                unclassified_families: Vec::new(),
                exploratory: true,
                families: Vec::new(),
                representatives: Vec::new(),
            })
        }
    };
    match (representative_table(g), catalog_aut(g)) {
        (Some(table), Some(aut)) => {
            classify_with_table(g, &sys, families, table, &aut, opts)
        }
        _ => Ok(classify_exploratory(g, &sys, families)),
    }
}

fn classify_with_table(
    g: &LieAlgebra,
    sys: &super::StructureSystem,
    families: Vec<SolutionFamily>,
    table: Vec<Representative>,
    aut: &AutGroupParam,
    opts: &SolveOptions,
) -> Result<ClassificationResult, Error> {
    debug_assert!(aut.validate(g));
    let mut classes = Vec::new();
    for rep in &table {
        let verified = match rep {
            Representative::Concrete { product, .. } => verify_commutative(g, product)?.pass,
            Representative::OneParam { family, .. } => sample_sequence()
                .iter()
                .all(|mu| matches!(verify_commutative(g, &family.at(mu)), Ok(r) if r.pass)),
        };
        classes.push(ClassEntry {
            label: rep.label().to_string(),
            parametrized: matches!(rep, Representative::OneParam { .. }),
            verified,
        });
    }
    // pairwise distinctness
    let mut distinctness = Vec::new();
    for i in 0..table.len() {
        for j in i + 1..table.len() {
            let evidence = distinctness_evidence(g, &table[i], &table[j], aut, opts)?;
            distinctness.push(Distinctness {
                first: table[i].label().to_string(),
                second: table[j].label().to_string(),
                evidence,
            });
        }
    }
    // a one-parameter class separates its own members
    for rep in &table {
        if let Representative::OneParam { label, family } = rep {
            let (a, b) = (family.at(&rat(1)), family.at(&rat(2)));
            let separated = matches!(isomorphic(g, &a, &b, aut, opts)?, IsoOutcome::No(_));
            if separated {
                distinctness.push(Distinctness {
                    first: label.clone(),
                    second: label.clone(),
                    evidence: DistinctnessEvidence::ParameterSeparates {
                        samples: vec!["1".into(), "2".into()],
                    },
                });
            }
        }
    }
    // coverage: match every family sample to a representative
    let mut coverage = Vec::new();
    let mut unclassified = Vec::new();
    for (fidx, family) in families.iter().enumerate() {
        let mut matched_count = 0usize;
        for (sidx, sample) in family.samples.iter().enumerate() {
            let product = sys
                .build_solution(sample)
                .expect("sample reconstruction")
                .product;
            let entry = match match_sample(g, &product, &table, aut, opts)? {
                MatchResult::Matched(label, mu) => {
                    matched_count += 1;
                    CoverageEntry {
                        family: fidx,
                        sample: sidx,
                        matched: Some(label),
                        parameter: mu.map(|m| format_rat(&m)),
                        extension_candidate: None,
                    }
                }
                MatchResult::ExtensionCandidate(label) => CoverageEntry {
                    family: fidx,
                    sample: sidx,
                    matched: None,
                    parameter: None,
                    extension_candidate: Some(label),
                },
                MatchResult::Unmatched => CoverageEntry {
                    family: fidx,
                    sample: sidx,
                    matched: None,
                    parameter: None,
                    extension_candidate: None,
                },
            };
            coverage.push(entry);
        }
        if matched_count == 0 {
            unclassified.push(fidx);
        }
    }
    Ok(ClassificationResult {
        classes,
        distinctness,
        coverage,
        unclassified_families: unclassified,
        exploratory: false,
        families,
        representatives: table,
    })
}

fn distinctness_evidence(
    g: &LieAlgebra,
    a: &Representative,
    b: &Representative,
    aut: &AutGroupParam,
    opts: &SolveOptions,
) -> Result<DistinctnessEvidence, Error> {
    match (a, b) {
        (
            Representative::Concrete { product: pa, .. },
            Representative::Concrete { product: pb, .. },
        ) => match isomorphic(g, pa, pb, aut, opts)? {
            IsoOutcome::No(NoEvidence::FingerprintMismatch(_)) => {
                Ok(DistinctnessEvidence::FingerprintMismatch)
            }
            IsoOutcome::No(NoEvidence::Certificate { .. }) => {
                Ok(DistinctnessEvidence::InfeasibilityCertificate)
            }
            other => Err(Error::InvalidParameter(format!(
                "representatives {} and {} are not distinct: {other:?}",
                a.label(),
                b.label()
            ))),
        },
        (Representative::OneParam { family, .. }, Representative::Concrete { product, .. })
        | (Representative::Concrete { product, .. }, Representative::OneParam { family, .. }) => {
            // no member of the family may be isomorphic to the concrete one
            match match_to_family(g, product, family, aut, opts)? {
                FamilyMatch::No(_) => Ok(DistinctnessEvidence::InfeasibilityCertificate),
                other => Err(Error::InvalidParameter(format!(
                    "family overlap between {} and {}: {other:?}",
                    a.label(),
                    b.label()
                ))),
            }
        }
        _ => Err(Error::InvalidParameter(
            "at most one parametrized class per table is supported".to_string(),
        )),
    }
}

enum MatchResult {
    Matched(String, Option<Rat>),
    /// Feasible over the closure but no rational witness was found.
    ExtensionCandidate(String),
    Unmatched,
}

fn match_sample(
    g: &LieAlgebra,
    product: &BilinearProduct,
    table: &[Representative],
    aut: &AutGroupParam,
    opts: &SolveOptions,
) -> Result<MatchResult, Error> {
    let fp = invariants(g, product);
    let mut extension: Option<String> = None;
    // concrete representatives first, cheapest evidence wins
    for rep in table {
        if let Representative::Concrete { label, product: q } = rep {
            if invariants(g, q) == fp {
                match isomorphic(g, product, q, aut, opts)? {
                    IsoOutcome::Yes(_) => {
                        return Ok(MatchResult::Matched(label.clone(), None))
                    }
                    IsoOutcome::Inconclusive if extension.is_none() => {
                        extension = Some(label.clone());
                    }
                    _ => {}
                }
            }
        }
    }
    for rep in table {
        if let Representative::OneParam { label, family } = rep {
            match match_to_family(g, product, family, aut, opts)? {
                FamilyMatch::Yes { parameter, .. } => {
                    return Ok(MatchResult::Matched(label.clone(), Some(parameter)))
                }
                FamilyMatch::Inconclusive if extension.is_none() => {
                    extension = Some(label.clone());
                }
                _ => {}
            }
        }
    }
    Ok(match extension {
        Some(label) => MatchResult::ExtensionCandidate(label),
        None => MatchResult::Unmatched,
    })
}

fn classify_exploratory(
    g: &LieAlgebra,
    sys: &super::StructureSystem,
    families: Vec<SolutionFamily>,
) -> ClassificationResult {
    // group samples by fingerprint; representatives are the
    // lexicographically smallest sample of each group
    let mut groups: Vec<(crate::postlie::Fingerprint, Vec<Rat>)> = Vec::new();
    let mut coverage = Vec::new();
    let mut unclassified = Vec::new();
    for (fidx, family) in families.iter().enumerate() {
        if family.samples.is_empty() {
            unclassified.push(fidx);
        }
        for (sidx, sample) in family.samples.iter().enumerate() {
            let product = sys
                .build_solution(sample)
                .expect("sample reconstruction")
                .product;
            let fp = invariants(g, &product);
            let pos = match groups.iter().position(|(f, _)| *f == fp) {
                Some(pos) => {
                    if sample < &groups[pos].1 {
                        groups[pos].1 = sample.clone();
                    }
                    pos
                }
                None => {
                    groups.push((fp, sample.clone()));
                    groups.len() - 1
                }
            };
            coverage.push(CoverageEntry {
                family: fidx,
                sample: sidx,
                matched: Some(format!("F{}", pos + 1)),
                parameter: None,
                extension_candidate: None,
            });
        }
    }
    let classes: Vec<ClassEntry> = (0..groups.len())
        .map(|i| ClassEntry {
            label: format!("F{}", i + 1),
            parametrized: false,
            verified: true,
        })
        .collect();
    let representatives: Vec<Representative> = groups
        .iter()
        .enumerate()
        .map(|(i, (_, sample))| Representative::Concrete {
            label: format!("F{}", i + 1),
            product: sys
                .build_solution(sample)
                .expect("sample reconstruction")
                .product,
        })
        .collect();
    ClassificationResult {
        classes,
        distinctness: Vec::new(),
        coverage,
        unclassified_families: unclassified,
        exploratory: true,
        families,
        representatives,
    }
}
