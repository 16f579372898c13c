//! Command-line front end: catalog access, verification, solving,
//! classification and the built-in reproduction suite.

use clap::{Args, Parser, Subcommand, ValueEnum};
use postlie::error::Error;
use postlie::exact::{parse_rat, Rat};
use postlie::io;
use postlie::liealg::{catalog, LieAlgebra, PairOnSameSpace};
use postlie::poly::Order;
use postlie::postlie::{all_left_nilpotent, verify_commutative, verify_pair, BilinearProduct};
use postlie::report::{self, InputDigest, Report};
use postlie::solver::classify::classify_commutative;
use postlie::solver::{
    setup_commutative, setup_general, setup_phi, solve, SolveOptions, SolveOutcome,
};
use postlie::suite::{self, CriterionStatus, SuiteOptions};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_EMPTY: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Pair,
    Commutative,
}

#[derive(Debug, Args)]
struct Common {
    /// Term order for solver ideals.
    #[arg(long, value_enum, default_value = "lex", global = true)]
    order: OrderArg,
    /// Case-split depth (at most 12).
    #[arg(long = "split-depth", default_value_t = 6, global = true)]
    split_depth: u32,
    /// Reduction step budget (POSTLIE_BUDGET overrides the default 200000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Include basis matrices in reports.
    #[arg(long = "show-basis", default_value_t = false, global = true)]
    show_basis: bool,
    /// Parameter for parametrized catalog entries (a rational).
    #[arg(long, global = true)]
    param: Option<String>,
}

impl Common {
    fn budget(&self) -> u64 {
        self.budget.unwrap_or_else(|| {
            std::env::var("POSTLIE_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(200_000)
        })
    }

    fn order(&self) -> Order {
        match self.order {
            OrderArg::Lex => Order::Lex,
            OrderArg::Grevlex => Order::GrevLex,
        }
    }

    fn solve_options(&self) -> Result<SolveOptions, Error> {
        if self.split_depth > 12 {
            return Err(Error::InvalidParameter(
                "--split-depth is limited to 12".to_string(),
            ));
        }
        let budget = self.budget();
        if budget == 0 {
            return Err(Error::InvalidParameter(
                "--budget must be positive".to_string(),
            ));
        }
        Ok(SolveOptions {
            order: self.order(),
            depth: self.split_depth,
            budget,
        })
    }

    fn param_rat(&self) -> Result<Option<Rat>, Error> {
        self.param.as_deref().map(parse_rat).transpose()
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "postlie",
    about = "Exact toolkit for post-Lie algebra structures on pairs of Lie algebras"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural analysis: predicates, series, radical, derivations.
    Analyze { algebra: String },
    /// Check the defining identities of a candidate product.
    VerifyProduct {
        /// One algebra (commutative mode) or two (pair mode).
        algebras: Vec<String>,
        #[arg(long)]
        product: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Solve for all structures on a pair or all commutative structures.
    Solve {
        /// Two algebra references forming the pair (g, n); flags such as
        /// --param may appear between them.
        #[arg(long, num_args = 1..=2, action = clap::ArgAction::Append)]
        pair: Option<Vec<String>>,
        /// Remaining pair references when flags split the --pair values.
        #[arg(trailing_var_arg = true, hide = true)]
        rest: Vec<String>,
        /// One algebra for the commutative problem.
        #[arg(long)]
        commutative: Option<String>,
        /// Use raw product unknowns even when the φ-reduction applies.
        #[arg(long, default_value_t = false)]
        raw: bool,
    },
    /// Classify commutative structures up to isomorphism.
    Classify { algebra: String },
    /// The derivation algebra of an algebra.
    Derivations { algebra: String },
    /// List catalog entries or export one as JSON.
    Catalog { name: Option<String> },
    /// Run the built-in reproduction suite.
    PaperSuite {
        /// List the criteria without running them.
        #[arg(long, default_value_t = false)]
        list: bool,
    },
}

fn load_algebra(reference: &str, param: Option<&Rat>) -> Result<(LieAlgebra, InputDigest), Error> {
    let algebra = if let Some(name) = reference.strip_prefix("catalog:") {
        catalog::get(name, param)?
    } else {
        let text = std::fs::read_to_string(reference)?;
        io::load_algebra_str(&text)?
    };
    let digest = InputDigest {
        name: reference.to_string(),
        sha256: io::digest(&io::algebra_canonical_json(&algebra)),
    };
    Ok((algebra, digest))
}

fn load_product(path: &str) -> Result<(BilinearProduct, InputDigest), Error> {
    let text = std::fs::read_to_string(path)?;
    let product = io::load_product_str(&text)?;
    let digest = InputDigest {
        name: path.to_string(),
        sha256: io::digest(&io::product_canonical_json(&product)),
    };
    Ok((product, digest))
}

fn emit<T: serde::Serialize>(common: &Common, report: &Report<T>, text: String, started: Instant) {
    match common.format {
        Format::Json => {
            println!("{}", serde_json::to_string(report).expect("serialize"));
        }
        Format::Text => {
            print!("{text}");
            eprintln!("elapsed: {:?}", started.elapsed());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let started = Instant::now();
    let common = &cli.common;
    match &cli.command {
        Command::Analyze { algebra } => {
            let (g, digest) = load_algebra(algebra, common.param_rat()?.as_ref())?;
            let result = report::analyze_report(&g, common.show_basis);
            let text = render_analyze(&g, &result);
            let report = Report {
                command: "analyze".to_string(),
                inputs: vec![digest],
                budget_consumed: None,
                result,
            };
            emit(common, &report, text, started);
            Ok(EXIT_OK)
        }
        Command::VerifyProduct {
            algebras,
            product,
            mode,
        } => {
            let param = common.param_rat()?;
            let (p, pdigest) = load_product(product)?;
            let (result, inputs) = match mode {
                Mode::Commutative => {
                    let [a] = algebras.as_slice() else {
                        return Err(Error::InvalidParameter(
                            "commutative mode takes exactly one algebra".to_string(),
                        ));
                    };
                    let (g, d) = load_algebra(a, param.as_ref())?;
                    let axioms = verify_commutative(&g, &p)?;
                    let nilpotency = axioms.pass.then(|| all_left_nilpotent(&p));
                    (
                        report::VerifyReport { axioms, nilpotency },
                        vec![d, pdigest],
                    )
                }
                Mode::Pair => {
                    let [a, b] = algebras.as_slice() else {
                        return Err(Error::InvalidParameter(
                            "pair mode takes exactly two algebras".to_string(),
                        ));
                    };
                    let (g, dg) = load_algebra(a, param.as_ref())?;
                    let (n, dn) = load_algebra(b, param.as_ref())?;
                    let pair = PairOnSameSpace::new(g, n)?;
                    let axioms = verify_pair(&pair, &p)?;
                    (
                        report::VerifyReport {
                            axioms,
                            nilpotency: None,
                        },
                        vec![dg, dn, pdigest],
                    )
                }
            };
            let pass = result.axioms.pass;
            let text = render_verify(&result);
            let report = Report {
                command: "verify-product".to_string(),
                inputs,
                budget_consumed: None,
                result,
            };
            emit(common, &report, text, started);
            Ok(if pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Solve {
            pair,
            rest,
            commutative,
            raw,
        } => {
            let opts = common.solve_options()?;
            let param = common.param_rat()?;
            let pair = pair.as_ref().map(|p| {
                let mut refs = p.clone();
                refs.extend(rest.iter().cloned());
                refs
            });
            let (sys, inputs) = match (&pair, commutative) {
                (Some(refs), None) => {
                    if refs.len() != 2 {
                        return Err(Error::InvalidParameter(
                            "--pair needs exactly two algebra references".to_string(),
                        ));
                    }
                    let (g, dg) = load_algebra(&refs[0], param.as_ref())?;
                    let (n, dn) = load_algebra(&refs[1], param.as_ref())?;
                    let pair = PairOnSameSpace::new(g, n)?;
                    // the φ-reduction is lossless and far smaller, so it is
                    // preferred whenever the second bracket is semisimple
                    let sys = if !raw && pair.n.is_semisimple() {
                        setup_phi(&pair)?
                    } else {
                        setup_general(&pair)
                    };
                    (sys, vec![dg, dn])
                }
                (None, Some(reference)) => {
                    let (g, d) = load_algebra(reference, param.as_ref())?;
                    (setup_commutative(&g), vec![d])
                }
                _ => {
                    return Err(Error::InvalidParameter(
                        "solve needs exactly one of --pair or --commutative".to_string(),
                    ))
                }
            };
            let outcome = solve(&sys, &opts);
            let result = report::solve_report(&sys, &outcome);
            let code = match &outcome {
                SolveOutcome::Empty { .. } => EXIT_EMPTY,
                SolveOutcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
                _ => EXIT_OK,
            };
            let text = render_solve(&result);
            let report = Report {
                command: "solve".to_string(),
                inputs,
                budget_consumed: result.budget_consumed,
                result,
            };
            emit(common, &report, text, started);
            Ok(code)
        }
        Command::Classify { algebra } => {
            let opts = common.solve_options()?;
            let (g, digest) = load_algebra(algebra, common.param_rat()?.as_ref())?;
            let sys = setup_commutative(&g);
            let classification = classify_commutative(&g, &opts)?;
            let inconclusive = classification.classes.is_empty();
            let result = report::classify_report(&sys, classification);
            let text = render_classify(&result);
            let report = Report {
                command: "classify".to_string(),
                inputs: vec![digest],
                budget_consumed: None,
                result,
            };
            emit(common, &report, text, started);
            Ok(if inconclusive {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            })
        }
        Command::Derivations { algebra } => {
            let (g, digest) = load_algebra(algebra, common.param_rat()?.as_ref())?;
            let result = report::analyze_report(&g, common.show_basis);
            let mut text = format!("dim Der = {}\n", result.dim_der);
            if let Some(basis) = &result.derivation_basis {
                for (i, row) in basis.iter().enumerate() {
                    text.push_str(&format!(
                        "D{} = {}\n",
                        i + 1,
                        render_matrix_flat(row, g.dim())
                    ));
                }
            }
            let report = Report {
                command: "derivations".to_string(),
                inputs: vec![digest],
                budget_consumed: None,
                result,
            };
            emit(common, &report, text, started);
            Ok(EXIT_OK)
        }
        Command::Catalog { name } => match name {
            None => {
                let entries = catalog::entries();
                let text = entries
                    .iter()
                    .map(|(n, d)| format!("{n:16} {d}\n"))
                    .collect::<String>();
                let report = Report {
                    command: "catalog".to_string(),
                    inputs: Vec::new(),
                    budget_consumed: None,
                    result: entries
                        .iter()
                        .map(|(n, d)| (n.to_string(), d.to_string()))
                        .collect::<Vec<_>>(),
                };
                emit(common, &report, text, started);
                Ok(EXIT_OK)
            }
            Some(name) => {
                let g = catalog::get(name, common.param_rat()?.as_ref())?;
                let file = io::algebra_to_file(&g);
                println!("{}", serde_json::to_string(&file).expect("serialize"));
                Ok(EXIT_OK)
            }
        },
        Command::PaperSuite { list } => {
            if *list {
                for (id, title, limit) in suite::criteria_list() {
                    println!("{id:2}  [limit {limit:>4}s]  {title}");
                }
                return Ok(EXIT_OK);
            }
            let opts = SuiteOptions {
                budget: common.budget(),
                depth: common.split_depth,
            };
            let report_data = suite::run_all(&opts);
            let failed = !report_data.all_pass();
            match common.format {
                Format::Json => {
                    let report = Report {
                        command: "paper-suite".to_string(),
                        inputs: Vec::new(),
                        budget_consumed: None,
                        result: &report_data,
                    };
                    println!("{}", serde_json::to_string(&report).expect("serialize"));
                }
                Format::Text => {
                    for c in &report_data.criteria {
                        let status = match c.status {
                            CriterionStatus::Pass => "pass",
                            CriterionStatus::Fail => "FAIL",
                            CriterionStatus::Budget => "budget",
                            CriterionStatus::Contingent => "contingent",
                        };
                        println!("{status:10} {:2}  {}", c.id, c.title);
                        if c.status != CriterionStatus::Pass {
                            for d in &c.details {
                                println!("             {d}");
                            }
                        }
                        eprintln!("criterion {:2}: {:?} (limit {:?})", c.id, c.elapsed, c.limit);
                    }
                }
            }
            Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
        }
    }
}

fn render_matrix_flat(entries: &[String], dim: usize) -> String {
    let rows: Vec<String> = entries
        .chunks(dim)
        .map(|row| format!("[ {} ]", row.join("  ")))
        .collect();
    rows.join(" ")
}

fn render_analyze(g: &LieAlgebra, r: &report::AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("dimension: {}\n", r.dim));
    out.push_str(&format!("basis: {}\n", r.basis.join(", ")));
    out.push_str(&format!(
        "nilpotent: {}  solvable: {}  perfect: {}  semisimple: {}  unimodular: {}  abelian: {}\n",
        r.predicates.is_nilpotent,
        r.predicates.is_solvable,
        r.predicates.is_perfect,
        r.predicates.is_semisimple,
        r.predicates.is_unimodular,
        r.predicates.is_abelian,
    ));
    out.push_str(&format!("center dimension: {}\n", r.predicates.center_dim));
    out.push_str(&format!(
        "lower central dims: {:?}\nderived dims: {:?}\n",
        r.lower_central_dims, r.derived_dims
    ));
    out.push_str(&format!("radical dimension: {}\n", r.radical_dim));
    out.push_str(&format!(
        "dim Der = {}, inner = {}, dim H1(g,g) = {}\n",
        r.dim_der, r.dim_inner, r.dim_h1
    ));
    if let Some(basis) = &r.derivation_basis {
        for (i, row) in basis.iter().enumerate() {
            out.push_str(&format!(
                "D{} = {}\n",
                i + 1,
                render_matrix_flat(row, g.dim())
            ));
        }
    }
    out
}

fn render_verify(r: &report::VerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("pass: {}\n", r.axioms.pass));
    for (label, violations) in [
        ("identity (1)/(4)", &r.axioms.axiom1),
        ("identity (2)/(5)", &r.axioms.axiom2),
        ("identity (3)/(6)", &r.axioms.axiom3),
    ] {
        if violations.is_empty() {
            out.push_str(&format!("{label}: holds on all basis tuples\n"));
        } else {
            out.push_str(&format!("{label}: {} violations\n", violations.len()));
            for v in violations {
                out.push_str(&format!(
                    "  at {:?}: defect ({})\n",
                    v.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    v.defect.join(", ")
                ));
            }
        }
    }
    if let Some(nil) = &r.nilpotency {
        if nil.nilpotent {
            out.push_str("all left operators nilpotent\n");
        } else {
            out.push_str(&format!(
                "warning: non-nilpotent left operator at x = ({})\n",
                nil.witness.as_ref().unwrap().join(", ")
            ));
        }
    }
    out
}

fn render_solve(r: &report::SolveReport) -> String {
    let mut out = format!("status: {}\n", r.status);
    if let Some(cert) = &r.certificate {
        out.push_str("certificate (Gröbner basis containing 1):\n");
        for p in cert {
            out.push_str(&format!("  {p}\n"));
        }
    }
    if let Some(w) = &r.witness {
        out.push_str("witness product:\n");
        for e in &w.product.products {
            let coeffs: Vec<String> = e.coeffs.iter().map(|(k, v)| format!("{v}*e{k}")).collect();
            out.push_str(&format!("  e{}·e{} = {}\n", e.i, e.j, coeffs.join(" + ")));
        }
        if let Some(phi) = &w.phi {
            out.push_str("phi =\n");
            for row in phi {
                out.push_str(&format!("  [ {} ]\n", row.join("  ")));
            }
        }
    }
    for (i, f) in r.families.iter().enumerate() {
        out.push_str(&format!(
            "family {}: parameters [{}]{}\n",
            i + 1,
            f.params.join(", "),
            match f.status {
                postlie::poly::ComponentStatus::Solved => "",
                postlie::poly::ComponentStatus::Unresolved => " (unresolved residual)",
            }
        ));
        for e in &f.product.products {
            let coeffs: Vec<String> = e
                .coeffs
                .iter()
                .map(|(k, v)| format!("({v})*e{k}"))
                .collect();
            out.push_str(&format!("  e{}·e{} = {}\n", e.i, e.j, coeffs.join(" + ")));
        }
        for c in &f.constraints {
            out.push_str(&format!("  subject to {c} = 0\n"));
        }
        for nz in &f.nonvanishing {
            out.push_str(&format!("  assuming {nz} ≠ 0\n"));
        }
        out.push_str(&format!("  verified samples: {}\n", f.samples.len()));
    }
    if let Some(b) = r.budget_consumed {
        out.push_str(&format!("budget consumed: {b}\n"));
    }
    out
}

fn render_classify(r: &report::ClassifyReport) -> String {
    let mut out = String::new();
    if r.exploratory {
        out.push_str("exploratory classification (no normal-form table for this algebra)\n");
    }
    out.push_str(&format!("classes: {}\n", r.classes.len()));
    for (c, rep) in r.classes.iter().zip(&r.representatives) {
        out.push_str(&format!(
            "  {}{}: verified = {}\n",
            c.label,
            if c.parametrized { "(μ)" } else { "" },
            c.verified
        ));
        for e in &rep.product.products {
            let coeffs: Vec<String> = e
                .coeffs
                .iter()
                .map(|(k, v)| format!("({v})*e{k}"))
                .collect();
            out.push_str(&format!("    e{}·e{} = {}\n", e.i, e.j, coeffs.join(" + ")));
        }
    }
    for d in &r.distinctness {
        out.push_str(&format!("distinct: {} vs {}\n", d.first, d.second));
    }
    for c in &r.coverage {
        out.push_str(&format!(
            "coverage: family {} sample {} -> {}{}\n",
            c.family + 1,
            c.sample + 1,
            c.matched.as_deref().unwrap_or(match &c.extension_candidate {
                Some(_) => "matches only over a field extension",
                None => "unmatched",
            }),
            c.parameter
                .as_ref()
                .map(|p| format!(" (μ = {p})"))
                .unwrap_or_default()
        ));
    }
    if !r.unclassified_families.is_empty() {
        out.push_str(&format!(
            "unclassified families: {:?}\n",
            r.unclassified_families
        ));
    }
    out
}
