//! The built-in verification suite behind the `paper-suite` command.
//!
//! Each criterion is an independent end-to-end check with a pinned runtime
//! limit. Budget exhaustion is reported as `budget`, never as failure; the
//! one basis-dependent check reports `contingent` instead of failing when
//! the external basis convention cannot be reconstructed.

use crate::derivcoh;
use crate::exact::{rat, Matrix, Rat, Subspace};
use num_traits::Zero;
use crate::liealg::{catalog, jacobi_defect, semidirect, LieAlgebra, PairOnSameSpace, SeriesKind};
use crate::poly::{Budget, Ideal, Order, Polynomial};
use crate::postlie::{
    all_left_nilpotent, phi_to_product, verify_commutative, verify_pair, BilinearProduct,
};
use crate::solver::classify::{classify_commutative, representative_table};
use crate::solver::iso::{catalog_aut, isomorphic};
use crate::solver::{
    family_all_left_nilpotent, reduce_system, setup_commutative, setup_phi, solve,
    verify_certificate, ReductionOutcome, SolveOptions, SolveOutcome,
};
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionStatus {
    Pass,
    Fail,
    /// The step budget ran out; an honest "inconclusive", not a failure.
    Budget,
    /// The check depends on an external basis convention that could not be
    /// reconstructed; does not fail the suite.
    Contingent,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: String,
    pub status: CriterionStatus,
    pub details: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Duration,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.criteria
            .iter()
            .all(|c| c.status != CriterionStatus::Fail)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub budget: u64,
    pub depth: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            budget: 200_000,
            depth: 6,
        }
    }
}

impl SuiteOptions {
    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            order: Order::Lex,
            depth: self.depth,
            budget: self.budget,
        }
    }
}

/// Accumulates per-criterion evidence.
struct Check {
    details: Vec<String>,
    failed: bool,
    budget_hit: bool,
}

impl Check {
    fn new() -> Self {
        Check {
            details: Vec::new(),
            failed: false,
            budget_hit: false,
        }
    }

    fn expect(&mut self, cond: bool, msg: &str) {
        if cond {
            self.details.push(format!("ok: {msg}"));
        } else {
            self.failed = true;
            self.details.push(format!("FAIL: {msg}"));
        }
    }

    fn note(&mut self, msg: String) {
        self.details.push(msg);
    }

    fn budget(&mut self, msg: &str) {
        self.budget_hit = true;
        self.details.push(format!("budget exhausted: {msg}"));
    }

    fn status(&self) -> CriterionStatus {
        if self.failed {
            CriterionStatus::Fail
        } else if self.budget_hit {
            CriterionStatus::Budget
        } else {
            CriterionStatus::Pass
        }
    }
}

pub fn criteria_list() -> Vec<(u32, &'static str, u64)> {
    vec![
        (1, "catalog integrity and the f23 lower central series", 1),
        (2, "f23 derivation algebra matches the displayed 10-parameter pattern", 1),
        (3, "D(0,1,1) vanishes on sl2", 1),
        (4, "H1(sl2, V(m)) = 0 for m = 2, 3, 4", 1),
        (5, "dim H1(g,g) = dim End_s(a) = 1 for g = sl2⋉V(m)", 5),
        (6, "triple criterion equals the direct derivation computation on sl2⋉V(2)", 5),
        (7, "the commutative solver on sl2 finds exactly the zero product", 30),
        (8, "classification on r2 yields exactly A1, A2, A3", 30),
        (9, "classification on r3_jordan yields B1..B4 with the B(α,β,γ) family", 120),
        (10, "h1: reduced system equals the five displayed conditions; classes C1, C2(μ), C3, C4", 300),
        (11, "certified nonexistence on (heisenberg, sl2) and (abelian C3, sl2)", 240),
        (12, "existence witness on (r3_diag(1), sl2)", 120),
        (13, "left operators nilpotent across all h1 and f23 families", 300),
        (14, "h1⊕C product is commutative with a non-nilpotent left operator", 1),
        (15, "pair dichotomy on sl2: zero product or product equal to the bracket", 60),
        (16, "sl3 example under the reconstructed basis (contingent)", 300),
        (17, "structured reports are byte-identical across reruns", 120),
    ]
}

pub fn run_all(opts: &SuiteOptions) -> SuiteReport {
    let criteria = criteria_list()
        .iter()
        .map(|&(id, _, _)| run_one(id, opts))
        .collect();
    SuiteReport { criteria }
}

pub fn run_one(id: u32, opts: &SuiteOptions) -> CriterionResult {
    let (title, limit_secs) = criteria_list()
        .iter()
        .find(|&&(i, _, _)| i == id)
        .map(|&(_, t, l)| (t, l))
        .expect("criterion id in 1..=17");
    let start = Instant::now();
    let mut check = Check::new();
    match id {
        1 => criterion_catalog(&mut check),
        2 => criterion_f23_derivations(&mut check),
        3 => criterion_d011(&mut check),
        4 => criterion_whitehead(&mut check),
        5 => criterion_outer_dimensions(&mut check),
        6 => criterion_triples(&mut check),
        7 => criterion_sl2_trivial(&mut check, opts),
        8 => criterion_classify_r2(&mut check, opts),
        9 => criterion_classify_r3_jordan(&mut check, opts),
        10 => criterion_classify_h1(&mut check, opts),
        11 => criterion_nonexistence(&mut check, opts),
        12 => criterion_existence_witness(&mut check, opts),
        13 => criterion_nilpotency_families(&mut check, opts),
        14 => criterion_counterexample(&mut check),
        15 => criterion_sl2_dichotomy(&mut check, opts),
        16 => criterion_sl3_contingent(&mut check, opts),
        17 => criterion_determinism(&mut check, opts),
        _ => check.expect(false, "unknown criterion"),
    }
    let status = if id == 16 { contingent_status(&check) } else { check.status() };
    let mut details = check.details;
    if id == 16 && status == CriterionStatus::Contingent {
        details.push("contingent — external basis reference".into());
    }
    CriterionResult {
        id,
        title: title.to_string(),
        status,
        details,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit_secs),
    }
}

/// Criterion 16 reports `contingent` instead of failing.
fn contingent_status(check: &Check) -> CriterionStatus {
    match check.status() {
        CriterionStatus::Fail => CriterionStatus::Contingent,
        other => other,
    }
}

fn criterion_catalog(check: &mut Check) {
    let entries: Vec<(String, LieAlgebra)> = vec![
        ("abelian(3)".into(), catalog::abelian(3)),
        ("r2".into(), catalog::r2()),
        ("r3_diag(1)".into(), catalog::r3_diag(&rat(1)).unwrap()),
        ("r3_diag(-1)".into(), catalog::r3_diag(&rat(-1)).unwrap()),
        ("r3_jordan".into(), catalog::r3_jordan()),
        ("heisenberg".into(), catalog::heisenberg()),
        ("n3".into(), catalog::get("n3", None).unwrap()),
        ("f23".into(), catalog::f23()),
        ("sl2".into(), catalog::sl2()),
        ("sl3_chevalley".into(), catalog::sl3_chevalley()),
        ("sl2_ltimes_V2".into(), catalog::sl2_ltimes_v(2).unwrap()),
        ("sl2_ltimes_V3".into(), catalog::sl2_ltimes_v(3).unwrap()),
        ("sl2_ltimes_V4".into(), catalog::sl2_ltimes_v(4).unwrap()),
        ("h1_plus_C".into(), catalog::h1_plus_c()),
    ];
    for (name, g) in &entries {
        let defects = jacobi_defect(g.dim(), g.constants());
        check.expect(defects.is_empty(), &format!("{name} satisfies Jacobi"));
    }
    let dims: Vec<usize> = catalog::f23()
        .series(SeriesKind::LowerCentral)
        .iter()
        .map(Subspace::dim)
        .collect();
    check.expect(
        dims == vec![5, 3, 2, 0],
        &format!("f23 lower central dimensions are (5,3,2,0), got {dims:?}"),
    );
}

/// The displayed ten-parameter derivation pattern of f23: one generator per
/// free entry, diagonal tail forced as (a, b) ↦ (a+b, 2a+b, a+2b) plus the
/// two off-diagonal transfers.
fn f23_pattern() -> Vec<Matrix> {
    let gen = |entries: &[(usize, usize, i64)]| {
        let mut m = Matrix::zeros(5, 5);
        for &(i, j, v) in entries {
            m.set(i, j, rat(v));
        }
        m
    };
    vec![
        gen(&[(0, 0, 1), (2, 2, 1), (3, 3, 2), (4, 4, 1)]),
        gen(&[(0, 1, 1), (3, 4, 1)]),
        gen(&[(1, 0, 1), (4, 3, 1)]),
        gen(&[(1, 1, 1), (2, 2, 1), (3, 3, 1), (4, 4, 2)]),
        gen(&[(2, 0, 1), (4, 2, -1)]),
        gen(&[(2, 1, 1), (3, 2, 1)]),
        gen(&[(3, 0, 1)]),
        gen(&[(3, 1, 1)]),
        gen(&[(4, 0, 1)]),
        gen(&[(4, 1, 1)]),
    ]
}

fn criterion_f23_derivations(check: &mut Check) {
    let der = derivcoh::derivations(&catalog::f23());
    check.expect(der.dim() == 10, &format!("dim Der(f23) = 10, got {}", der.dim()));
    let pattern = Subspace::from_spanning(25, f23_pattern().iter().map(Matrix::flatten).collect());
    check.expect(
        der.space == pattern,
        "computed derivation space equals the displayed pattern as a subspace",
    );
}

fn criterion_d011(check: &mut Check) {
    let dim = derivcoh::d011(&catalog::sl2()).dim();
    check.expect(dim == 0, &format!("dim D(0,1,1)(sl2) = 0, got {dim}"));
}

fn criterion_whitehead(check: &mut Check) {
    for m in 2..=4 {
        let h1 = derivcoh::cohomology_h1(&catalog::v_rep(m).unwrap());
        check.expect(
            h1.dim_h1 == 0,
            &format!("H1(sl2, V({m})) = 0, got {}", h1.dim_h1),
        );
    }
}

fn sl2_ltimes_v_split(m: usize) -> crate::liealg::Semidirect {
    semidirect(
        &catalog::abelian(m),
        &catalog::sl2(),
        &catalog::v_rep(m).unwrap(),
    )
    .unwrap()
}

fn criterion_outer_dimensions(check: &mut Check) {
    for m in 2..=4 {
        let sd = sl2_ltimes_v_split(m);
        let outer = derivcoh::inner_and_outer(&sd.algebra);
        let ends = derivcoh::intertwiners(&sd.rep).dim();
        check.expect(
            outer.dim_h1 == 1 && ends == 1,
            &format!(
                "m = {m}: dim H1(g,g) = {} and dim End_s(a) = {ends}, both 1",
                outer.dim_h1
            ),
        );
    }
}

fn criterion_triples(check: &mut Check) {
    let sd = sl2_ltimes_v_split(2);
    let triples = derivcoh::triple_space(&sd);
    let radical = Subspace::from_spanning(
        5,
        (0..2)
            .map(|i| {
                let mut v = crate::exact::vec_zero(5);
                v[i] = rat(1);
                v
            })
            .collect(),
    );
    let direct = derivcoh::derivations_into(&sd.algebra, &radical);
    check.expect(
        triples == direct,
        "triple-condition subspace equals the direct Der(g, a) computation",
    );
    let z1 = derivcoh::z1_space(&sd.rep).dim();
    let ends = derivcoh::intertwiners(&sd.rep).dim();
    check.expect(
        triples.dim() == z1 + ends,
        &format!(
            "dim Der(g,a) = dim Z1 + dim End_s(a): {} = {z1} + {ends}",
            triples.dim()
        ),
    );
}

fn criterion_sl2_trivial(check: &mut Check, opts: &SuiteOptions) {
    let sys = setup_commutative(&catalog::sl2());
    match solve(&sys, &opts.solve_options()) {
        SolveOutcome::Witness { values, solution } => {
            check.expect(
                values.iter().all(Rat::is_zero),
                "the unique commutative structure on sl2 is the zero product",
            );
            check.expect(
                solution.product == BilinearProduct::zero(3),
                "witness product is zero",
            );
        }
        SolveOutcome::Inconclusive { .. } => check.budget("commutative solve on sl2"),
        other => check.expect(false, &format!("expected a unique point, got {}", other.status())),
    }
}

fn criterion_classify_r2(check: &mut Check, opts: &SuiteOptions) {
    let g = catalog::r2();
    let result = match classify_commutative(&g, &opts.solve_options()) {
        Ok(r) => r,
        Err(e) => {
            check.expect(false, &format!("classification failed: {e}"));
            return;
        }
    };
    if result.classes.is_empty() {
        check.budget("classification on r2");
        return;
    }
    let labels: Vec<&str> = result.classes.iter().map(|c| c.label.as_str()).collect();
    check.expect(labels == ["A1", "A2", "A3"], &format!("classes are A1, A2, A3, got {labels:?}"));
    check.expect(
        result.classes.iter().all(|c| c.verified),
        "every representative passes the axiom checker",
    );
    // the representatives are the displayed matrices
    let table = representative_table(&g).unwrap();
    let a2 = table[1].sample(&rat(0));
    check.expect(
        a2.left_op(0).is_zero() && a2.left_op(1) == Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        "A2 left operators match the display",
    );
    let a3 = table[2].sample(&rat(0));
    check.expect(
        a3.left_op(0) == Matrix::from_i64(&[&[0, -1], &[0, 0]])
            && a3.left_op(1) == Matrix::from_i64(&[&[-1, 0], &[0, 0]]),
        "A3 left operators match the display",
    );
    check.expect(
        result.distinctness.len() >= 3,
        "pairwise non-isomorphism evidence recorded for all pairs",
    );
    check.expect(
        result.unclassified_families.is_empty(),
        "every solution family matches a representative",
    );
    check.expect(
        result
            .coverage
            .iter()
            .all(|c| c.matched.is_some()),
        "every family sample is matched",
    );
}

fn criterion_classify_r3_jordan(check: &mut Check, opts: &SuiteOptions) {
    let g = catalog::r3_jordan();
    let sys = setup_commutative(&g);
    let mut budget = Budget::new(opts.budget);
    match reduce_system(&sys, &opts.solve_options(), &mut budget) {
        Ok(ReductionOutcome::Reduced(red)) => {
            let nv = sys.ring.nvars();
            let alpha = sys.unknown_index(0, 0, 1);
            let beta = sys.unknown_index(0, 0, 2);
            let gamma = sys.unknown_index(0, 2, 2);
            let mut expected_free = vec![alpha, beta, gamma];
            expected_free.sort_unstable();
            check.expect(
                red.free == expected_free,
                "three reduced parameters: e1·e1 coefficients α, β and the e1·e3 weight γ",
            );
            let gamma_var = Polynomial::var(gamma, nv);
            check.expect(
                red.exprs[sys.unknown_index(0, 1, 1)] == gamma_var
                    && red.exprs[sys.unknown_index(0, 2, 1)] == gamma_var,
                "family shape: e1·e2 = γe2 and e1·e3 = γe2 + γe3",
            );
            let others_zero = sys
                .product_unknowns
                .iter()
                .enumerate()
                .filter(|&(_, &(i, j, _))| (i, j) != (0, 0) && (i, j) != (0, 1) && (i, j) != (0, 2))
                .all(|(u, _)| red.exprs[u].is_zero());
            check.expect(others_zero, "all products outside e1-rows vanish");
            let target = Ideal::new(
                vec![gamma_var.mul(&gamma_var).sub(&gamma_var)],
                Order::Lex,
            );
            let residual = Ideal::new(red.residual.clone(), Order::Lex);
            match crate::poly::ideal_equal(&residual, &target, &mut budget) {
                Ok(eq) => check.expect(eq, "residual ideal equals ⟨γ(γ−1)⟩"),
                Err(_) => check.budget("ideal equality for the γ constraint"),
            }
        }
        Ok(ReductionOutcome::Empty) => check.expect(false, "reduction reported empty"),
        Err(_) => check.budget("reduction on r3_jordan"),
    }
    match classify_commutative(&g, &opts.solve_options()) {
        Ok(result) => {
            if result.classes.is_empty() {
                check.budget("classification on r3_jordan");
                return;
            }
            let labels: Vec<&str> = result.classes.iter().map(|c| c.label.as_str()).collect();
            check.expect(
                labels == ["B1", "B2", "B3", "B4"],
                &format!("classes are B1..B4, got {labels:?}"),
            );
            check.expect(
                result.classes.iter().all(|c| c.verified),
                "every representative passes the axiom checker",
            );
            check.expect(
                result.unclassified_families.is_empty()
                    && result.coverage.iter().all(|c| c.matched.is_some()),
                "every family sample is matched to a class",
            );
            check.expect(
                result.distinctness.len() >= 6,
                "pairwise non-isomorphism evidence recorded for all pairs",
            );
        }
        Err(e) => check.expect(false, &format!("classification failed: {e}")),
    }
}

fn criterion_classify_h1(check: &mut Check, opts: &SuiteOptions) {
    let g = catalog::heisenberg();
    let sys = setup_commutative(&g);
    let mut budget = Budget::new(opts.budget);
    match reduce_system(&sys, &opts.solve_options(), &mut budget) {
        Ok(ReductionOutcome::Reduced(red)) => {
            check.expect(
                red.free.len() == 7,
                &format!("seven reduced parameters, got {}", red.free.len()),
            );
            let nv = sys.ring.nvars();
            let v = |i: usize, j: usize, k: usize| {
                Polynomial::var(sys.unknown_index(i, j, k), nv)
            };
            let (alpha, beta, gamma) = (v(0, 0, 0), v(0, 0, 1), v(0, 0, 2));
            let (delta, eps) = (v(0, 1, 0), v(0, 1, 2));
            let (kappa, lambda) = (v(1, 1, 0), v(1, 1, 2));
            let two = |p: Polynomial| p.scale(&rat(2));
            let displayed = [
                alpha.mul(&delta).add(&beta.mul(&kappa)),
                alpha.mul(&kappa).sub(&delta.mul(&delta)),
                alpha.mul(&alpha).add(&beta.mul(&delta)),
                gamma
                    .mul(&delta)
                    .sub(&two(alpha.mul(&eps)))
                    .sub(&beta.mul(&lambda)),
                alpha
                    .mul(&lambda)
                    .add(&gamma.mul(&kappa))
                    .sub(&two(delta.mul(&eps))),
            ];
            let mapped: Vec<Polynomial> = displayed.iter().map(|p| red.rewrite(p)).collect();
            let residual = Ideal::new(red.residual.clone(), Order::Lex);
            let target = Ideal::new(mapped, Order::Lex);
            match crate::poly::ideal_equal(&residual, &target, &mut budget) {
                Ok(eq) => check.expect(
                    eq,
                    "reduced system is ideal-equal to the five displayed conditions",
                ),
                Err(_) => check.budget("ideal equality for the h1 conditions"),
            }
        }
        Ok(ReductionOutcome::Empty) => check.expect(false, "reduction reported empty"),
        Err(_) => check.budget("reduction on h1"),
    }
    match classify_commutative(&g, &opts.solve_options()) {
        Ok(result) => {
            if result.classes.is_empty() {
                check.budget("classification on h1");
                return;
            }
            let labels: Vec<&str> = result.classes.iter().map(|c| c.label.as_str()).collect();
            check.expect(
                labels == ["C1", "C2", "C3", "C4"],
                &format!("classes are C1, C2(μ), C3, C4, got {labels:?}"),
            );
            check.expect(
                result
                    .classes
                    .iter()
                    .map(|c| c.parametrized)
                    .collect::<Vec<_>>()
                    == vec![false, true, false, false],
                "exactly the C2 class carries a parameter",
            );
            check.expect(
                result.classes.iter().all(|c| c.verified),
                "every representative passes the axiom checker",
            );
            check.expect(
                result.unclassified_families.is_empty(),
                "every family has matched samples",
            );
        }
        Err(e) => check.expect(false, &format!("classification failed: {e}")),
    }
    // C2(μ) ≅ C2(ν) iff μ = ν, at the sampled parameters
    let aut = catalog_aut(&g).unwrap();
    let family = crate::solver::classify::c2_family();
    match isomorphic(&g, &family.at(&rat(1)), &family.at(&rat(2)), &aut, &opts.solve_options()) {
        Ok(out) => check.expect(out.is_no(), "C2(1) and C2(2) are not isomorphic"),
        Err(e) => check.expect(false, &format!("isomorphism query failed: {e}")),
    }
    for mu in crate::solver::sample_sequence() {
        match isomorphic(&g, &family.at(&mu), &family.at(&mu), &aut, &opts.solve_options()) {
            Ok(out) => check.expect(
                out.is_yes(),
                &format!("C2({}) is isomorphic to itself", crate::exact::format_rat(&mu)),
            ),
            Err(e) => check.expect(false, &format!("isomorphism query failed: {e}")),
        }
    }
}

fn criterion_nonexistence(check: &mut Check, opts: &SuiteOptions) {
    for (name, g) in [
        ("heisenberg", catalog::heisenberg()),
        ("abelian C3", catalog::abelian(3)),
    ] {
        let pair = PairOnSameSpace::new(g, catalog::sl2()).unwrap();
        let sys = setup_phi(&pair).unwrap();
        match solve(&sys, &opts.solve_options()) {
            SolveOutcome::Empty { certificate, .. } => {
                let mut budget = Budget::new(opts.budget);
                match verify_certificate(&sys, &certificate, Order::Lex, &mut budget) {
                    Ok(ok) => check.expect(
                        ok,
                        &format!("({name}, sl2): certificate contains 1 and reduces the system"),
                    ),
                    Err(_) => check.budget("certificate verification"),
                }
            }
            SolveOutcome::Inconclusive { .. } => check.budget(&format!("({name}, sl2) solve")),
            other => check.expect(
                false,
                &format!("({name}, sl2): expected empty, got {}", other.status()),
            ),
        }
    }
}

fn criterion_existence_witness(check: &mut Check, opts: &SuiteOptions) {
    let g = catalog::r3_diag(&rat(1)).unwrap();
    let pair = PairOnSameSpace::new(g, catalog::sl2()).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts.solve_options()) {
        SolveOutcome::Witness { solution, .. } => {
            let report = verify_pair(&pair, &solution.product).unwrap();
            check.expect(report.pass, "witness passes the full pair axiom checker");
            let phi = solution.phi.as_ref().unwrap();
            let (_, phi_report) = phi_to_product(phi, &pair).unwrap();
            check.expect(phi_report.pass, "witness φ satisfies both φ-form conditions");
        }
        SolveOutcome::Inconclusive { .. } => check.budget("(r3_diag(1), sl2) solve"),
        other => check.expect(
            false,
            &format!("expected a witness, got {}", other.status()),
        ),
    }
}

fn criterion_nilpotency_families(check: &mut Check, opts: &SuiteOptions) {
    for (name, g) in [("h1", catalog::heisenberg()), ("f23", catalog::f23())] {
        let sys = setup_commutative(&g);
        let families = match solve(&sys, &opts.solve_options()) {
            SolveOutcome::Families(f) => f,
            SolveOutcome::Witness { values, .. } => {
                let product = sys.build_solution(&values).unwrap().product;
                check.expect(
                    all_left_nilpotent(&product).nilpotent,
                    &format!("{name}: unique structure has nilpotent left operators"),
                );
                continue;
            }
            SolveOutcome::Inconclusive { .. } => {
                check.budget(&format!("{name} commutative solve"));
                continue;
            }
            other => {
                check.expect(false, &format!("{name}: unexpected {}", other.status()));
                continue;
            }
        };
        let mut budget = Budget::new(opts.budget);
        for (fidx, family) in families.iter().enumerate() {
            check.expect(
                !family.samples.is_empty(),
                &format!("{name} family {fidx}: sampled members exist"),
            );
            let mut all_samples = true;
            for sample in &family.samples {
                let product = sys.build_solution(sample).unwrap().product;
                if !all_left_nilpotent(&product).nilpotent {
                    all_samples = false;
                }
            }
            check.expect(
                all_samples,
                &format!("{name} family {fidx}: all sampled members left-nilpotent"),
            );
            match family_all_left_nilpotent(&g, &sys, family, &mut budget) {
                Ok(Some(symbolic)) => check.expect(
                    symbolic,
                    &format!("{name} family {fidx}: symbolically nilpotent for the whole family"),
                ),
                Ok(None) => check.note(format!(
                    "{name} family {fidx}: parameters enter nonlinearly; sample evidence only"
                )),
                Err(_) => check.budget(&format!("{name} family {fidx} symbolic nilpotency")),
            }
        }
    }
}

fn criterion_counterexample(check: &mut Check) {
    let g = catalog::h1_plus_c();
    let p = BilinearProduct::from_entries(
        4,
        &[
            ((0, 0, 3), rat(1)),
            ((0, 3, 3), rat(1)),
            ((3, 0, 3), rat(1)),
            ((3, 3, 3), rat(1)),
        ],
    );
    check.expect(
        verify_commutative(&g, &p).unwrap().pass,
        "the product passes the commutative axioms",
    );
    let nil = all_left_nilpotent(&p);
    check.expect(!nil.nilpotent, "some left operator is not nilpotent");
    check.expect(
        nil.witness == Some(vec!["1".into(), "0".into(), "0".into(), "0".into()]),
        "the witness is e1",
    );
}

fn criterion_sl2_dichotomy(check: &mut Check, opts: &SuiteOptions) {
    let sl2 = catalog::sl2();
    // same bracket: the only point is φ = 0, the trivial product
    let pair = PairOnSameSpace::new(sl2.clone(), sl2.clone()).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts.solve_options()) {
        SolveOutcome::Witness { values, solution } => {
            check.expect(
                values.iter().all(Rat::is_zero),
                "bracket pair ({,} = [,]): the unique point is φ = 0",
            );
            check.expect(
                solution.product == BilinearProduct::zero(3),
                "the product is trivial",
            );
        }
        SolveOutcome::Inconclusive { .. } => check.budget("(sl2, sl2) solve"),
        other => check.expect(false, &format!("expected one point, got {}", other.status())),
    }
    // negated bracket: the unique point is φ = −id, the product is [x,y]
    let neg = LieAlgebra::from_constants(
        3,
        sl2.basis_names().to_vec(),
        sl2.constants().iter().map(|c| -c.clone()).collect(),
    )
    .unwrap();
    let pair = PairOnSameSpace::new(sl2.clone(), neg).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts.solve_options()) {
        SolveOutcome::Witness { solution, .. } => {
            check.expect(
                solution.phi == Some(Matrix::identity(3).neg()),
                "bracket pair ({,} = −[,]): the unique point is φ = −id",
            );
            let bracket_product = (0..3).all(|i| {
                (0..3).all(|j| solution.product.apply_basis(i, j) == pair.g.bracket_basis(i, j))
            });
            check.expect(bracket_product, "the second structure is x·y = [x,y]");
            check.expect(
                verify_pair(&pair, &solution.product).unwrap().pass,
                "the second structure passes the pair axioms",
            );
        }
        SolveOutcome::Inconclusive { .. } => check.budget("(sl2, −sl2) solve"),
        other => check.expect(false, &format!("expected one point, got {}", other.status())),
    }
}

/// The displayed brackets of the 8-dimensional companion algebra.
fn sl3_companion_g() -> Result<LieAlgebra, crate::error::Error> {
    let e = |k: usize, v: i64| (k - 1, rat(v));
    LieAlgebra::new(
        8,
        (1..=8).map(|i| format!("e{i}")).collect(),
        &[
            ((0, 3), vec![e(2, 1)]),
            ((0, 6), vec![e(1, -2)]),
            ((0, 7), vec![e(1, 1)]),
            ((1, 5), vec![e(1, 1)]),
            ((1, 6), vec![e(2, -1)]),
            ((1, 7), vec![e(2, -1)]),
            ((3, 5), vec![e(8, 1)]),
            ((3, 6), vec![e(4, 1)]),
            ((3, 7), vec![e(4, -2)]),
            ((5, 6), vec![e(6, -1)]),
            ((5, 7), vec![e(6, 2)]),
        ],
    )
}

/// The displayed nonzero products.
fn sl3_products() -> BilinearProduct {
    let entries: Vec<((usize, usize, usize), Rat)> = vec![
        ((2, 0, 6), rat(1)),
        ((2, 1, 3), rat(-1)),
        ((2, 5, 4), rat(1)),
        ((2, 6, 2), rat(-2)),
        ((2, 7, 2), rat(1)),
        ((4, 0, 5), rat(-1)),
        ((4, 1, 6), rat(1)),
        ((4, 1, 7), rat(1)),
        ((4, 3, 2), rat(1)),
        ((4, 6, 4), rat(-1)),
        ((4, 7, 4), rat(-1)),
    ];
    BilinearProduct::from_entries(8, &entries)
}

fn criterion_sl3_contingent(check: &mut Check, _opts: &SuiteOptions) {
    let g = match sl3_companion_g() {
        Ok(g) => g,
        Err(e) => {
            check.expect(
                false,
                &format!("contingent — external basis reference (companion brackets: {e})"),
            );
            return;
        }
    };
    let p = sl3_products();
    // reconstruct the second bracket from the first identity:
    // {x,y} = [x,y] − x·y + y·x
    let n = 8;
    let mut c = vec![Rat::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let mut v = g.bracket_basis(i, j);
            v = crate::exact::vec_sub(&v, &p.apply_basis(i, j));
            v = crate::exact::vec_add(&v, &p.apply_basis(j, i));
            for k in 0..n {
                c[(i * n + j) * n + k] = v[k].clone();
            }
        }
    }
    let n_alg = match LieAlgebra::from_constants(n, g.basis_names().to_vec(), c) {
        Ok(a) => a,
        Err(_) => {
            check.expect(
                false,
                "contingent — external basis reference (reconstructed bracket is not a Lie algebra)",
            );
            return;
        }
    };
    check.expect(
        n_alg.is_semisimple(),
        "reconstructed second bracket is semisimple of dimension 8",
    );
    let pair = PairOnSameSpace::new(g, n_alg).unwrap();
    let report = verify_pair(&pair, &p).unwrap();
    check.expect(report.pass, "displayed products satisfy all pair axioms");
    let mut phi = Matrix::zeros(8, 8);
    for (i, v) in [0, 0, -1, 0, -1, 0, 0, 0].iter().enumerate() {
        phi.set(i, i, rat(*v));
    }
    match phi_to_product(&phi, &pair) {
        Ok((product, phi_report)) => {
            check.expect(
                phi_report.pass,
                "φ = diag(0,0,−1,0,−1,0,0,0) satisfies both φ-form conditions",
            );
            check.expect(product == p, "the φ-form reproduces the displayed products");
        }
        Err(e) => check.expect(false, &format!("φ-form check failed: {e}")),
    }
}

fn criterion_determinism(check: &mut Check, opts: &SuiteOptions) {
    let snapshot = || -> String {
        let mut parts = Vec::new();
        let f23 = catalog::f23();
        parts.push(
            serde_json::to_string(&crate::report::analyze_report(&f23, false)).unwrap(),
        );
        let r2 = catalog::r2();
        let sys = setup_commutative(&r2);
        let outcome = solve(&sys, &opts.solve_options());
        parts.push(serde_json::to_string(&crate::report::solve_report(&sys, &outcome)).unwrap());
        let pair = PairOnSameSpace::new(catalog::heisenberg(), catalog::sl2()).unwrap();
        let psys = setup_phi(&pair).unwrap();
        let poutcome = solve(&psys, &opts.solve_options());
        parts.push(serde_json::to_string(&crate::report::solve_report(&psys, &poutcome)).unwrap());
        let h1 = catalog::heisenberg();
        if let Ok(result) = classify_commutative(&h1, &opts.solve_options()) {
            let hsys = setup_commutative(&h1);
            parts.push(
                serde_json::to_string(&crate::report::classify_report(&hsys, result)).unwrap(),
            );
        }
        parts.join("\n")
    };
    let first = snapshot();
    let second = snapshot();
    check.expect(
        first == second,
        "re-running the reproduction pipeline yields byte-identical structured reports",
    );
    check.note(format!("snapshot bytes: {}", first.len()));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_list_is_complete() {
        let ids: Vec<u32> = criteria_list().iter().map(|&(i, _, _)| i).collect();
        assert_eq!(ids, (1..=17).collect::<Vec<u32>>());
    }

    #[test]
    fn fast_criteria_pass() {
        let opts = SuiteOptions::default();
        for id in [1, 2, 3, 4, 5, 6, 14] {
            let result = run_one(id, &opts);
            assert_eq!(
                result.status,
                CriterionStatus::Pass,
                "criterion {id}: {:?}",
                result.details
            );
        }
    }

    #[test]
    fn tiny_budget_marks_solver_criteria_as_budget() {
        let opts = SuiteOptions {
            budget: 10,
            depth: 6,
        };
        // the sl2 check passes even on a tiny budget (its linear stage
        // needs no reduction steps), while the h1 machinery cannot
        let result = run_one(7, &opts);
        assert_eq!(result.status, CriterionStatus::Pass);
        let result = run_one(10, &opts);
        assert_eq!(result.status, CriterionStatus::Budget);
    }
}
