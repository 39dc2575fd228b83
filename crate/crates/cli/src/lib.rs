//! Command-line front end for fiberlab: ring spec files, command dispatch
//! and JSON reports.

pub mod spec;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fiberlab::catalog::{
    verify_corpus_formulas, verify_square_power_example, verify_type_two_example, CheckKind, CheckStatus, Report,
    VerifyConfig, MAX_POWER,
};
use fiberlab::fiber::{
    classify_fcmt_cm, classify_fcmt_depth_le1, classify_gorenstein_fiber, fiber_present, fiber_profile, Classification,
    FiberSpec, RingProfile, SeriesBudget,
};
use fiberlab::groebner::IdealSpec;
use fiberlab::homalg::SeriesTrunc;
use fiberlab::{Error, PolyRing, Rat, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

pub use spec::RingSpecFile;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fiberlab", version, about = "Invariants of fiber products of local rings over their residue field")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Degree through which series are computed [default: 10, 8 for the corpus].
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
    /// Largest i with Ext^i(C, C) computed.
    #[arg(long, global = true, default_value_t = 12)]
    pub ext_bound: usize,
    /// Largest n in length(R/m^(n+1)).
    #[arg(long, global = true, default_value_t = 12)]
    pub hilbert_max: usize,
    /// Parameter of the length 12 Gorenstein core; must not be 0 or a root of unity.
    #[arg(long, global = true, default_value = "2", value_parser = parse_rat)]
    pub alpha: Rat,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest free module dimension built while expanding series.
    #[arg(long, global = true, default_value_t = 150_000)]
    pub ceiling: usize,
}

fn parse_rat(s: &str) -> std::result::Result<Rat, String> {
    s.parse::<Rat>().map_err(|_| format!("not a rational number: {s}"))
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Invariants of the ring described by a spec file.
    Invariants { spec: PathBuf },
    /// Invariants of the fiber product of two rings, with a direct cross-check.
    Fiber {
        left: PathBuf,
        right: PathBuf,
        /// Skip the computation on the glued presentation.
        #[arg(long)]
        no_direct: bool,
    },
    /// Gorenstein and finite Cohen-Macaulay type verdicts for a fiber product.
    Classify { left: PathBuf, right: PathBuf },
    /// Recompute a published example.
    VerifyPaper {
        #[arg(long, value_enum)]
        theorem: Harness,
        /// Exponent of the tensor-power example.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Number of random pairs in the corpus.
        #[arg(long, default_value_t = 25)]
        count: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Harness {
    /// Type two curve glued from a length 12 Gorenstein algebra.
    #[value(name = "1.1", alias = "type-two")]
    TypeTwo,
    /// Glued tensor powers of k[x,y]/(x,y)^2.
    #[value(name = "1.2", alias = "square-power")]
    SquarePower,
    /// Random pairs of monomial algebras, formulas against direct computation.
    #[value(name = "corpus")]
    Corpus,
}

impl Harness {
    fn name(self) -> &'static str {
        match self {
            Harness::TypeTwo => "type_two",
            Harness::SquarePower => "square_power",
            Harness::Corpus => "corpus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub trunc: usize,
    pub ext_bound: usize,
    pub hilbert_max: usize,
}

/// The machine-readable result of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub bounds: Bounds,
    pub computed: Map<String, Value>,
    pub paper_asserted: Vec<String>,
    pub verdicts: Map<String, Value>,
}

impl CliReport {
    fn new(command: &str, bounds: Bounds) -> CliReport {
        CliReport {
            command: command.into(),
            inputs: Map::new(),
            bounds,
            computed: Map::new(),
            paper_asserted: Vec::new(),
            verdicts: Map::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn status(&self) -> Option<&str> {
        self.verdicts.get("status").and_then(Value::as_str)
    }

    /// Plain text rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        let b = &self.bounds;
        out.push_str(&format!("bounds: trunc {}, ext bound {}, hilbert max {}\n", b.trunc, b.ext_bound, b.hilbert_max));
        for (title, map) in [("inputs", &self.inputs), ("computed", &self.computed), ("verdicts", &self.verdicts)] {
            if map.is_empty() {
                continue;
            }
            out.push_str(&format!("{title}:\n"));
            for (k, v) in map {
                render_entry(&mut out, 1, k, v);
            }
        }
        if !self.paper_asserted.is_empty() {
            out.push_str("asserted in the literature, not recomputed:\n");
            for line in &self.paper_asserted {
                out.push_str(&format!("  {line}\n"));
            }
        }
        out
    }
}

fn render_entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) if depth < 3 => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, x) in m {
                render_entry(out, depth + 1, k, x);
            }
        }
        Value::String(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
        other => out.push_str(&format!("{pad}{key}: {other}\n")),
    }
}

pub struct Outcome {
    pub report: CliReport,
    pub exit_code: i32,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) => EXIT_MISMATCH,
        Error::LimitExceeded(_) | Error::Inconclusive(_) => EXIT_LIMIT,
        _ => EXIT_INPUT,
    }
}

fn effective_trunc(g: &GlobalArgs, cmd: &Command) -> usize {
    match (g.trunc, cmd) {
        (Some(t), _) => t,
        (None, Command::VerifyPaper { theorem: Harness::Corpus, .. }) => 8,
        (None, _) => 10,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let trunc = effective_trunc(g, &cli.command);
    let bounds = Bounds { trunc, ext_bound: g.ext_bound, hilbert_max: g.hilbert_max };
    let name = match &cli.command {
        Command::Invariants { .. } => "invariants",
        Command::Fiber { .. } => "fiber",
        Command::Classify { .. } => "classify",
        Command::VerifyPaper { .. } => "verify-paper",
    };
    let mut report = CliReport::new(name, bounds);
    let budget = SeriesBudget { trunc, ceiling: g.ceiling };
    let result = match &cli.command {
        Command::Invariants { spec } => cmd_invariants(&mut report, spec, budget),
        Command::Fiber { left, right, no_direct } => cmd_fiber(&mut report, left, right, budget, !no_direct),
        Command::Classify { left, right } => cmd_classify(&mut report, left, right, budget),
        Command::VerifyPaper { theorem, n, count } => cmd_verify_paper(&mut report, g, trunc, *theorem, *n, *count),
    };
    let exit_code = match result {
        Ok(code) => code,
        Err(e) => {
            report.verdicts.insert("status".into(), json!("error"));
            report.verdicts.insert("error".into(), json!(e.to_string()));
            if let Error::IncompleteProfile(missing) = &e {
                report.verdicts.insert("missing".into(), json!(missing));
            }
            exit_code_for(&e)
        }
    };
    Outcome { report, exit_code }
}

fn series_value(s: &Option<SeriesTrunc>) -> Value {
    match s {
        None => Value::Null,
        Some(s) => match s.to_i64() {
            Some(c) => json!(c),
            None => json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        },
    }
}

pub fn profile_value(p: &RingProfile) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(p.name));
    m.insert("dim".into(), json!(p.dim));
    m.insert("depth".into(), json!(p.depth));
    m.insert("edim".into(), json!(p.edim));
    m.insert("ecodepth".into(), json!(p.ecodepth()));
    m.insert("type".into(), json!(p.ring_type));
    m.insert("multiplicity".into(), json!(p.multiplicity));
    m.insert("length".into(), json!(p.length));
    m.insert("regular".into(), json!(p.regular));
    m.insert("cm".into(), json!(p.cm));
    m.insert("gorenstein".into(), json!(p.gorenstein));
    m.insert("analytically_unramified".into(), json!(p.analytically_unramified));
    m.insert("finite_cm_type".into(), json!(p.finite_cm_type));
    m.insert("poincare_k".into(), series_value(&p.poincare_k));
    m.insert("bass".into(), series_value(&p.bass));
    if let Some(pc) = &p.plane_curve {
        m.insert("plane_curve".into(), json!(format!("{}^2-{}^{}", pc.x, pc.y, pc.n)));
    }
    m.insert("provenance".into(), serde_json::to_value(&p.provenance).expect("provenance serializes"));
    Value::Object(m)
}

fn load(path: &Path) -> Result<RingSpecFile> {
    RingSpecFile::read(path)
}

fn spec_profile(spec: &RingSpecFile, budget: SeriesBudget) -> Result<RingProfile> {
    RingProfile::from_presentation(&spec.name, &spec.ideal_spec()?, spec.cone_vars.len(), &spec.declared, budget)
}

fn spec_input(path: &Path, spec: &RingSpecFile) -> Value {
    json!({ "path": path.display().to_string(), "ring": spec })
}

fn cmd_invariants(report: &mut CliReport, path: &Path, budget: SeriesBudget) -> Result<i32> {
    let spec = load(path)?;
    report.inputs.insert("spec".into(), spec_input(path, &spec));
    let p = spec_profile(&spec, budget)?;
    report.computed.insert("profile".into(), profile_value(&p));
    report.verdicts.insert("gorenstein".into(), json!(p.gorenstein));
    report.verdicts.insert("cm".into(), json!(p.cm));
    report.verdicts.insert("status".into(), json!("pass"));
    Ok(EXIT_PASS)
}

/// The ideal of `spec` with its cone variables made ordinary variables.
fn with_cone_as_vars(spec: &RingSpecFile) -> Result<IdealSpec> {
    let vars: Vec<&String> = spec.vars.iter().chain(spec.cone_vars.iter()).collect();
    let ring = PolyRing::new(&vars, spec.field_spec()?)?;
    IdealSpec::parse(&ring, &spec.ideal)
}

fn factors(
    report: &mut CliReport,
    left: &Path,
    right: &Path,
    budget: SeriesBudget,
) -> Result<(RingSpecFile, RingSpecFile, FiberSpec)> {
    let (ls, rs) = (load(left)?, load(right)?);
    report.inputs.insert("left".into(), spec_input(left, &ls));
    report.inputs.insert("right".into(), spec_input(right, &rs));
    let f = FiberSpec::new(spec_profile(&ls, budget)?, spec_profile(&rs, budget)?)?;
    Ok((ls, rs, f))
}

/// Agreement of the formula profile with the profile of the glued presentation.
fn cross_check(formula: &RingProfile, direct: &RingProfile) -> (Map<String, Value>, bool) {
    let mut m = Map::new();
    let mut ok = true;
    let mut put = |key: &str, a: Value, b: Value| {
        ok &= a == b;
        m.insert(key.into(), json!({ "formula": a, "direct": b, "agree": a == b }));
    };
    put("dim", json!(formula.dim), json!(direct.dim));
    put("depth", json!(formula.depth), json!(direct.depth));
    put("edim", json!(formula.edim), json!(direct.edim));
    put("type", json!(formula.ring_type), json!(direct.ring_type));
    put("multiplicity", json!(formula.multiplicity), json!(direct.multiplicity));
    put("cm", json!(formula.cm), json!(direct.cm));
    if let (Some(a), Some(b)) = (formula.length, direct.length) {
        put("length", json!(a), json!(b));
    }
    for (key, a, b) in [("poincare_k", &formula.poincare_k, &direct.poincare_k), ("bass", &formula.bass, &direct.bass)]
    {
        if let (Some(a), Some(b)) = (a, b) {
            let n = a.trunc().min(b.trunc());
            put(key, series_value(&Some(a.truncate(n))), series_value(&Some(b.truncate(n))));
        }
    }
    (m, ok)
}

fn cmd_fiber(
    report: &mut CliReport,
    left: &Path,
    right: &Path,
    budget: SeriesBudget,
    direct: bool,
) -> Result<i32> {
    let (ls, rs, f) = factors(report, left, right, budget)?;
    let formula = fiber_profile(&f, budget.trunc)?;
    report.computed.insert("left".into(), profile_value(&f.left));
    report.computed.insert("right".into(), profile_value(&f.right));
    report.computed.insert("fiber".into(), profile_value(&formula));
    let g = classify_gorenstein_fiber(&f);
    report.verdicts.insert("gorenstein".into(), classification_value(&g));
    let mut code = EXIT_PASS;
    let cross = if !direct {
        json!("skipped")
    } else {
        let glued = with_cone_as_vars(&ls).and_then(|a| with_cone_as_vars(&rs).and_then(|b| fiber_present(&a, &b)));
        match glued.and_then(|ideal| {
            RingProfile::from_presentation("glued", &ideal, 0, &fiberlab::fiber::DeclaredFlags::default(), budget)
        }) {
            Ok(d) => {
                let (m, ok) = cross_check(&formula, &d);
                report.computed.insert("direct".into(), Value::Object(m));
                if !ok {
                    code = EXIT_MISMATCH;
                }
                json!(if ok { "pass" } else { "fail" })
            }
            Err(e) => json!(format!("inconclusive: {e}")),
        }
    };
    report.verdicts.insert("cross_check".into(), cross);
    report.verdicts.insert("status".into(), json!(if code == EXIT_PASS { "pass" } else { "fail" }));
    Ok(code)
}

fn classification_value(c: &Classification) -> Value {
    json!({ "verdict": c.verdict, "matched": c.matched, "reason": c.reason })
}

/// `k[[x,y,z]]/(x^2 - y^n, xz, yz)` or `k[[x,z]]/(xz)` when the fiber
/// product is one of the glued curves of finite type.
fn normal_form(f: &FiberSpec) -> Option<String> {
    let dvr = |p: &RingProfile| p.regular && p.dim == 1;
    let (s, t) = (&f.left, &f.right);
    if dvr(s) && dvr(t) {
        return Some("xz".into());
    }
    for (a, b) in [(s, t), (t, s)] {
        if dvr(b) {
            if let Some(pc) = &a.plane_curve {
                return Some(format!("x^2-y^{},xz,yz", pc.n));
            }
        }
    }
    None
}

fn cmd_classify(report: &mut CliReport, left: &Path, right: &Path, budget: SeriesBudget) -> Result<i32> {
    let (_, _, f) = factors(report, left, right, budget)?;
    let formula = fiber_profile(&f, budget.trunc)?;
    let mut summary = Map::new();
    for (k, v) in [
        ("dim", json!(formula.dim)),
        ("depth", json!(formula.depth)),
        ("cm", json!(formula.cm)),
        ("type", json!(formula.ring_type)),
        ("multiplicity", json!(formula.multiplicity)),
        ("edim", json!(formula.edim)),
    ] {
        summary.insert(k.into(), v);
    }
    report.computed.insert("fiber".into(), Value::Object(summary));
    report.verdicts.insert("gorenstein".into(), classification_value(&classify_gorenstein_fiber(&f)));
    let (dim, cm) = (formula.dim, formula.cm);
    // the Cohen-Macaulay criterion decides first, so an incomplete profile
    // names the flags that criterion needs
    let by_cm = if cm && dim == 1 { Some(classify_fcmt_cm(&f)?) } else { None };
    let by_depth = match (dim <= 1, &by_cm) {
        (false, _) => None,
        (true, None) => Some(classify_fcmt_depth_le1(&f)?),
        (true, Some(_)) => classify_fcmt_depth_le1(&f).ok(),
    };
    if let (Some(a), Some(b)) = (&by_depth, &by_cm) {
        if a.verdict != b.verdict {
            return Err(Error::Inconsistent(format!(
                "finite type criteria disagree: {} by gluing pattern, {} by the Cohen-Macaulay criterion",
                a.verdict, b.verdict
            )));
        }
    }
    let fcmt = by_cm.clone().or(by_depth.clone());
    match &fcmt {
        Some(c) => {
            let mut v = classification_value(c);
            if let Some(cm_c) = &by_cm {
                v["cohen_macaulay_criterion"] = classification_value(cm_c);
            }
            if c.verdict {
                if let Some(nf) = normal_form(&f) {
                    v["normal_form"] = json!(nf);
                }
            }
            report.verdicts.insert("finite_cm_type".into(), v);
        }
        None => {
            report
                .verdicts
                .insert("finite_cm_type".into(), json!(format!("undecided: fiber product has dimension {dim}")));
        }
    }
    report.paper_asserted.push(
        "finite Cohen-Macaulay type of each factor comes from declarations or standard criteria, not from enumerating modules".into(),
    );
    report.verdicts.insert("status".into(), json!("pass"));
    Ok(EXIT_PASS)
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Inconclusive => "inconclusive",
        CheckStatus::Unverified => "unverified",
    }
}

fn absorb(report: &mut CliReport, r: &Report) -> i32 {
    for c in &r.checks {
        match c.kind {
            CheckKind::Computed => {
                report.computed.insert(
                    c.id.clone(),
                    json!({ "claim": c.claim, "expected": c.expected, "actual": c.actual, "status": status_word(c.status) }),
                );
            }
            CheckKind::PaperAsserted => report.paper_asserted.push(format!("{}: {}", c.id, c.claim)),
        }
    }
    let computed: Vec<_> = r.computed().collect();
    let (code, status) = if computed.iter().any(|c| c.status == CheckStatus::Fail) {
        (EXIT_MISMATCH, "fail")
    } else if computed.iter().all(|c| c.status == CheckStatus::Pass) {
        (EXIT_PASS, "pass")
    } else {
        (EXIT_LIMIT, "inconclusive")
    };
    if let Some(c) = r.first_failure() {
        report.verdicts.insert("first_failure".into(), json!(c.id));
    }
    report.verdicts.insert("status".into(), json!(status));
    code
}

fn cmd_verify_paper(
    report: &mut CliReport,
    g: &GlobalArgs,
    trunc: usize,
    harness: Harness,
    n: usize,
    count: usize,
) -> Result<i32> {
    report.inputs.insert("harness".into(), json!(harness.name()));
    report.inputs.insert("seed".into(), json!(g.seed));
    report.inputs.insert("ceiling".into(), json!(g.ceiling));
    let cfg = VerifyConfig {
        trunc,
        ext_bound: g.ext_bound,
        hilbert_max: g.hilbert_max,
        alpha: g.alpha.clone(),
        seed: g.seed,
        ceiling: g.ceiling,
        ..VerifyConfig::default()
    };
    let r = match harness {
        Harness::TypeTwo => {
            report.inputs.insert("alpha".into(), json!(g.alpha.to_string()));
            verify_type_two_example(&cfg)?
        }
        Harness::SquarePower => {
            if n == 0 || n > MAX_POWER {
                return Err(Error::OutOfRange(format!("n must lie in 1..={MAX_POWER}, got {n}")));
            }
            report.inputs.insert("n".into(), json!(n));
            verify_square_power_example(n, &cfg)?
        }
        Harness::Corpus => {
            report.inputs.insert("count".into(), json!(count));
            let out = verify_corpus_formulas(g.seed, count, trunc, g.ceiling)?;
            report.computed.insert(
                "summary".into(),
                json!({ "accepted": out.accepted, "rejected_heavy": out.rejected_heavy, "tallies": out.tallies }),
            );
            out.report
        }
    };
    report.inputs.insert("title".into(), json!(r.title));
    Ok(absorb(report, &r))
}
