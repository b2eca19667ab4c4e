//! The `repcoh` command line: argument parsing, selector validation, the
//! verification suites and report emission.
//!
//! Exit status is 0 when every comparison matches, 1 when any row or check
//! does not (or a computation fails), 2 on a usage error. Usage errors are
//! detected before any computation starts.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::library::CaseLibrary;
use crate::invariants::{case_generators, check_invariance};
use crate::linalg::F2;
use crate::ogring::{build_ring, default_trunc, mod2_injectivity_check, top_degree, typed_counts, OgKind, OgRing};
use crate::polyalg::Q;
use crate::rootsys::{poincare_product, RootDatum};
use crate::schubert::cache::{parse_word, word_text};
use crate::schubert::{engine_equivalence, Calculus, ConstantCache, Engine, SchubertClass, Space};
use crate::springer::{theta_torus, weight_system, BasisConfig};
use crate::ximap::corpus::{compare_theta, verify_checksums, GROUPS};
use crate::ximap::dn::{chern_quotient_d, verify_theorem_xi_d};
use crate::ximap::{report_section, ReportOptions, RowStatus, XiReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "repcoh", version, about = "Springer maps, Schubert calculus and the ξ map into H*(G/P)")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Structure-constant cache file; created if missing, appended to.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Worker threads (the report does not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Duan,
    Chevalley,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoefficientsArg {
    Q,
    F2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Duan and Chevalley products on every pair in A2, B2, G2, A3, B3.
    Rank3Engines,
    /// Checksums, Springer tables and the G2/F4 ξ tables.
    Corpus,
    /// Poincaré polynomials and the 56 classes of E7/P7.
    Weyl,
    /// Invariance and relations of the case library.
    Invariants,
    /// The type D identity for the three small Grassmannians.
    Dn,
    /// Presented cohomology rings of OG(n-k, 2n).
    Rings,
    /// Mod-2 injectivity for k = 2, 3.
    Mod2,
    /// Recompute cached structure constants.
    Cache,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// θ_λ restricted to the maximal torus.
    Theta {
        #[arg(long)]
        group: String,
        /// `omegaN` or comma-separated ω-coordinates; default is the tabulated weight.
        #[arg(long)]
        weight: Option<String>,
        /// Use t_i = e^{ω_i} coordinates even where a table uses others.
        #[arg(long)]
        omega_basis: bool,
    },
    /// The structure constant c^w_{u,v}.
    Duan {
        #[arg(long)]
        group: String,
        /// Reduced word of w, e.g. 2,3,2,1.
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Duan)]
        engine: EngineArg,
    },
    /// ξ rows for the tabulated parabolics of a group.
    Xi {
        #[arg(long)]
        group: String,
        /// Maximal parabolics (removed nodes); default all tabulated ones.
        #[arg(long, value_delimiter = ',')]
        parabolic: Vec<usize>,
        /// Skip generators above this degree.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ceiling: Option<u32>,
        /// Lift the built-in E6/E7 degree ceilings.
        #[arg(long)]
        allow_expensive: bool,
    },
    /// Presented cohomology of OG(n-k, 2n) or its stable limit.
    Ogring {
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "stable", required_unless_present = "stable")]
        n: Option<usize>,
        #[arg(long)]
        stable: bool,
        /// Truncation degree of the stable ring.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        trunc: Option<u32>,
        #[arg(long)]
        hilbert: bool,
        #[arg(long)]
        mod2_injectivity: bool,
        #[arg(long, value_enum, default_value_t = CoefficientsArg::Q)]
        coefficients: CoefficientsArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Directory holding a copy of the corpus files to check.
        #[arg(long)]
        corpus_dir: Option<PathBuf>,
        /// Fraction of cache entries to recompute.
        #[arg(long, default_value_t = 1.0)]
        fraction: f64,
    },
    /// Quick checks of every component.
    Selftest,
}

#[derive(Clone, Debug)]
pub enum Task {
    Theta { group: String, weight: Vec<i64>, basis: BasisConfig, tabulated: bool },
    Duan { group: String, w: Vec<usize>, u: Vec<usize>, v: Vec<usize>, engine: Engine },
    Xi { group: String, options: ReportOptions },
    Ogring { k: usize, kind: OgKind, rational: bool, hilbert: bool, mod2: bool },
    Verify { suite: Suite, corpus_dir: Option<PathBuf>, fraction: f64 },
    Selftest,
}

/// A validated command line.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

fn parse_weight(s: &str, rank: usize) -> std::result::Result<Vec<i64>, UsageError> {
    if let Some(i) = s.strip_prefix("omega") {
        let i: usize = i.parse().map_err(|_| UsageError(format!("bad weight {s:?}")))?;
        if i == 0 || i > rank {
            return Err(UsageError(format!("omega{i} out of range 1..={rank}")));
        }
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        return Ok(v);
    }
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| UsageError(format!("bad weight {s:?}")))?;
    if v.len() != rank {
        return Err(UsageError(format!("weight needs {rank} coordinates, got {}", v.len())));
    }
    if v.iter().any(|&x| x < 0) || v.iter().all(|&x| x == 0) {
        return Err(UsageError(format!("weight {v:?} is not a nonzero dominant weight")));
    }
    Ok(v)
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> std::result::Result<Self, UsageError> {
        let task = match cli.command {
            Command::Theta { group, weight, omega_basis } => {
                let d = RootDatum::from_label(&group).map_err(usage)?;
                let group = d.cartan_type.to_string();
                let entry = CaseLibrary::builtin().group(&group).ok();
                let weight = match (&weight, entry) {
                    (Some(w), _) => parse_weight(w, d.rank())?,
                    (None, Some(e)) => e.weight.clone(),
                    (None, None) => return Err(UsageError(format!("{group} has no tabulated weight; pass --weight"))),
                };
                let tabulated = entry.is_some_and(|e| e.weight == weight);
                let basis = match entry.and_then(|e| e.basis.clone()) {
                    Some(b) if tabulated && !omega_basis => BasisConfig { characters: b, prefix: "t".into() },
                    _ => BasisConfig::omega(d.rank()),
                };
                Task::Theta { group, weight, basis, tabulated: tabulated && !omega_basis }
            }
            Command::Duan { group, w, u, v, engine } => {
                let d = RootDatum::from_label(&group).map_err(usage)?;
                let mut words = Vec::new();
                for s in [&w, &u, &v] {
                    let word = if s.trim().is_empty() || s.trim() == "e" { Vec::new() } else { parse_word(s).map_err(usage)? };
                    let e = d.element_from_word(&word).map_err(usage)?;
                    if e.length != word.len() {
                        return Err(usage(Error::NotReduced(word)));
                    }
                    words.push(word);
                }
                let (lw, luv) = (words[0].len(), words[1].len() + words[2].len());
                if lw != luv {
                    return Err(usage(Error::LengthMismatch { lw, luv }));
                }
                let engine = match engine {
                    EngineArg::Duan => Engine::Duan,
                    EngineArg::Chevalley => Engine::Chevalley,
                };
                let v = words.pop().unwrap();
                let u = words.pop().unwrap();
                let w = words.pop().unwrap();
                Task::Duan { group: d.cartan_type.to_string(), w, u, v, engine }
            }
            Command::Xi { group, parabolic, ceiling, allow_expensive } => {
                let d = RootDatum::from_label(&group).map_err(usage)?;
                let group = d.cartan_type.to_string();
                let cases = crate::invariants::library::tabulated_cases();
                let known = cases.get(&group).ok_or_else(|| UsageError(format!("no tabulated cases for {group}")))?;
                for r in &parabolic {
                    if !known.contains(r) {
                        return Err(UsageError(format!("no tabulated case {group} r={r} (known: {known:?})")));
                    }
                }
                let options = ReportOptions {
                    ceiling: ceiling.map(|c| c as usize),
                    parabolics: if parabolic.is_empty() { None } else { Some(parabolic) },
                    allow_expensive,
                };
                Task::Xi { group, options }
            }
            Command::Ogring { k, n, stable, trunc, hilbert, mod2_injectivity, coefficients } => {
                if k < 2 {
                    return Err(UsageError(format!("need k >= 2, got {k}")));
                }
                if !stable && (mod2_injectivity || trunc.is_some()) {
                    return Err(UsageError("--trunc and --mod2-injectivity need --stable".into()));
                }
                let kind = match (n, stable) {
                    (Some(n), false) => {
                        if n < k + 2 {
                            return Err(UsageError(format!("need n >= k + 2, got n={n}, k={k}")));
                        }
                        OgKind::Finite { n }
                    }
                    (None, true) => OgKind::Stable {
                        trunc: trunc.map(|t| t as usize).unwrap_or(if mod2_injectivity { 4 * k } else { default_trunc(k) }),
                    },
                    _ => return Err(UsageError("give exactly one of --n and --stable".into())),
                };
                Task::Ogring {
                    k,
                    kind,
                    rational: coefficients == CoefficientsArg::Q,
                    hilbert: hilbert || !mod2_injectivity,
                    mod2: mod2_injectivity,
                }
            }
            Command::Verify { suite, corpus_dir, fraction } => {
                if !(0.0..=1.0).contains(&fraction) {
                    return Err(UsageError(format!("--fraction must lie in [0, 1], got {fraction}")));
                }
                if suite == Suite::Cache && cli.cache.is_none() {
                    return Err(UsageError("the cache suite needs --cache".into()));
                }
                if corpus_dir.is_some() && suite != Suite::Corpus {
                    return Err(UsageError("--corpus-dir only applies to the corpus suite".into()));
                }
                Task::Verify { suite, corpus_dir, fraction }
            }
            Command::Selftest => Task::Selftest,
        };
        Ok(RunConfig { task, format: cli.format, cache: cli.cache, jobs: cli.jobs.map(|j| j as usize) })
    }

    /// Parses and validates `args` (program name first).
    pub fn parse_from<I, T>(args: I) -> std::result::Result<Self, ParseFailure>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(ParseFailure::Clap)?;
        RunConfig::from_cli(cli).map_err(ParseFailure::Usage)
    }
}

#[derive(Debug)]
pub enum ParseFailure {
    /// Includes `--help` and `--version`, which clap reports as errors.
    Clap(clap::Error),
    Usage(UsageError),
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
    pub error: Option<String>,
}

/// One named pass/fail line of a suite.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

struct Ctx {
    cache: Arc<ConstantCache>,
}

impl Ctx {
    fn calc(&self, group: &str) -> Result<Calculus> {
        Ok(Calculus::from_label(group)?.with_cache(self.cache.clone()))
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let pool = match cfg.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(p) => Some(p),
            Err(e) => return failure(format!("thread pool: {e}")),
        },
        None => None,
    };
    let body = || -> Result<(bool, Value, String)> {
        let cache = match &cfg.cache {
            Some(p) => Arc::new(ConstantCache::open(p)?),
            None => Arc::new(ConstantCache::in_memory()),
        };
        let ctx = Ctx { cache: cache.clone() };
        let out = dispatch(&ctx, &cfg.task);
        cache.flush()?;
        out
    };
    let res = match &pool {
        Some(p) => p.install(body),
        None => body(),
    };
    match res {
        Ok((ok, json, text)) => Outcome {
            status: if ok { EXIT_OK } else { EXIT_MISMATCH },
            report: match cfg.format {
                Format::Json => serde_json::to_string_pretty(&json).expect("serializable") + "\n",
                Format::Text => text,
            },
            error: None,
        },
        Err(e) => failure(e.to_string()),
    }
}

fn failure(msg: String) -> Outcome {
    Outcome { status: EXIT_MISMATCH, report: String::new(), error: Some(msg) }
}

/// Parses, validates and runs; the entry point of the binary.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(ParseFailure::Clap(e)) => {
            let status = e.exit_code();
            let text = e.render().to_string();
            if status == 0 {
                Outcome { status, report: text, error: None }
            } else {
                Outcome { status: EXIT_USAGE, report: String::new(), error: Some(text.trim_end().to_string()) }
            }
        }
        Err(ParseFailure::Usage(e)) => Outcome { status: EXIT_USAGE, report: String::new(), error: Some(e.0) },
    }
}

fn dispatch(ctx: &Ctx, task: &Task) -> Result<(bool, Value, String)> {
    match task {
        Task::Theta { group, weight, basis, tabulated } => theta(group, weight, basis, *tabulated),
        Task::Duan { group, w, u, v, engine } => duan(ctx, group, w, u, v, *engine),
        Task::Xi { group, options } => {
            let rep = report_section(&ctx.calc(group)?, options)?;
            let ok = rep.rows.iter().all(|r| !matches!(r.status, RowStatus::Mismatch | RowStatus::MismatchPaper));
            let mut text = rep.to_text();
            text.push_str(&status_summary(&rep));
            Ok((ok, serde_json::to_value(&rep).expect("serializable"), text))
        }
        Task::Ogring { k, kind, rational, hilbert, mod2 } => ogring(*k, *kind, *rational, *hilbert, *mod2),
        Task::Verify { suite, corpus_dir, fraction } => verify(ctx, *suite, corpus_dir.as_deref(), *fraction),
        Task::Selftest => checks_output("selftest", selftest(ctx)?),
    }
}

fn status_summary(rep: &XiReport) -> String {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &rep.rows {
        *counts.entry(r.status.as_str()).or_default() += 1;
    }
    let parts: Vec<String> = counts.iter().map(|(s, c)| format!("{c} {s}")).collect();
    format!("{} rows: {}\n", rep.rows.len(), parts.join(", "))
}

fn theta(group: &str, weight: &[i64], basis: &BasisConfig, tabulated: bool) -> Result<(bool, Value, String)> {
    let d = RootDatum::from_label(group)?;
    let ws = weight_system(&d, weight)?;
    let map = theta_torus(&ws, basis)?;
    let mut text = format!("{group} lambda={weight:?} dim V={}\n", ws.dimension());
    text.push_str(&map.to_text());
    let coords: Vec<Value> = map
        .coordinates
        .iter()
        .enumerate()
        .map(|(i, p)| json!({"name": format!("Theta_{}", i + 1), "value": p.to_text()}))
        .collect();
    let mut out = json!({
        "group": group,
        "weight": weight,
        "dimension": ws.dimension(),
        "basis": basis.characters,
        "coordinates": coords,
    });
    let mut ok = true;
    if tabulated {
        let cmp = compare_theta(group)?;
        ok = cmp.passed();
        text.push_str(&format!(
            "table: {} ({} terms compared)\n",
            if ok { "match" } else { "mismatch" },
            cmp.terms
        ));
        if let Some(c) = cmp.table_scale.as_ref().filter(|x| !x.is_one()) {
            text.push_str(&format!("  the table's differential at 1 is {} x identity\n", crate::polyalg::q_to_string(c)));
        }
        for (i, diff) in &cmp.differences {
            text.push_str(&format!("  Theta_{i}: computed - table = {}\n", diff.to_text()));
        }
        out["table"] = json!({
            "status": if ok { "match" } else { "mismatch" },
            "terms": cmp.terms,
            "differences": cmp.differences.iter().map(|(i, d)| json!({"index": i, "difference": d.to_text()})).collect::<Vec<_>>(),
        });
    }
    Ok((ok, out, text))
}

fn duan(ctx: &Ctx, group: &str, w: &[usize], u: &[usize], v: &[usize], engine: Engine) -> Result<(bool, Value, String)> {
    let calc = ctx.calc(group)?;
    let d = &calc.datum;
    let (we, ue, ve) = (d.element_from_word(w)?, d.element_from_word(u)?, d.element_from_word(v)?);
    let value = match engine {
        Engine::Duan => Q::from_integer(calc.structure_constant(&ue, &ve, &we)?),
        Engine::Chevalley => {
            let g = calc.group();
            let a = SchubertClass::basis(g, Space::Borel, &ue.word);
            let b = SchubertClass::basis(g, Space::Borel, &ve.word);
            calc.cup_product(&a, &b, Engine::Chevalley)?.coefficient(&we.word)
        }
    };
    let value = crate::polyalg::q_to_string(&value);
    let out = json!({
        "group": group,
        "w": word_text(w),
        "u": word_text(u),
        "v": word_text(v),
        "engine": engine,
        "value": value,
    });
    Ok((true, out, format!("{value}\n")))
}

fn ring_json<F: crate::linalg::Field>(r: &OgRing<F>) -> Value {
    json!({"hilbert": r.hilbert(), "total": r.hilbert().iter().sum::<usize>()})
}

fn ogring(k: usize, kind: OgKind, rational: bool, hilbert: bool, mod2: bool) -> Result<(bool, Value, String)> {
    let field = if rational { "Q" } else { "F2" };
    let label = match kind {
        OgKind::Finite { n } => format!("OG({}, {})", n - k, 2 * n),
        OgKind::Stable { trunc } => format!("stable OG_{k}, degrees <= {trunc}"),
    };
    let mut ok = true;
    let mut text = String::new();
    let mut out = json!({"k": k, "coefficients": field, "ring": label});
    if let OgKind::Finite { n } = kind {
        out["n"] = json!(n);
    }
    if let OgKind::Stable { trunc } = kind {
        out["trunc"] = json!(trunc);
    }
    if hilbert {
        let (n, top) = match kind {
            OgKind::Finite { n } => (Some(n), top_degree(k, n)),
            OgKind::Stable { trunc } => (None, trunc),
        };
        let expected = typed_counts(k, n, top);
        let (h, failures, mut j) = if rational {
            let r = build_ring::<Q>(k, kind)?;
            (r.hilbert(), r.relation_failures()?, ring_json(&r))
        } else {
            let r = build_ring::<F2>(k, kind)?;
            (r.hilbert(), r.relation_failures()?, ring_json(&r))
        };
        let good = h == expected && failures.is_empty();
        ok &= good;
        let hs: Vec<String> = h.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!("{label} over {field}\n"));
        text.push_str(&format!("hilbert: {}\n", hs.join(" ")));
        text.push_str(&format!("total: {}\n", h.iter().sum::<usize>()));
        text.push_str(&format!(
            "typed {k}-strict partition counts: {}\n",
            if h == expected { "equal" } else { "differ" }
        ));
        text.push_str(&format!(
            "relations: {}\n",
            if failures.is_empty() { "all vanish".to_string() } else { failures.join(", ") }
        ));
        j["expected"] = json!(expected);
        j["relation_failures"] = json!(failures);
        j["status"] = json!(if good { "match" } else { "mismatch" });
        out["presentation"] = j;
    }
    if mod2 {
        let OgKind::Stable { trunc } = kind else {
            return Err(Error::Invalid("mod-2 check needs the stable ring".into()));
        };
        let rep = mod2_injectivity_check(k, trunc)?;
        ok &= rep.passed();
        text.push_str(&format!("mod-2 injectivity, k={k}, degrees <= {trunc}\n"));
        for d in &rep.degrees {
            text.push_str(&format!(
                "  degree {:>2}: source {:>3}, target {:>3}, rank {:>3}\n",
                d.degree, d.source_dim, d.target_dim, d.rank
            ));
        }
        text.push_str(&format!(
            "injective: {}; e_i -> c_i^2 (i<k): {}; e_k -> d^2 = c_k^2: {}; parity samples {}/{} clean\n",
            rep.injective(),
            rep.low_images_are_squares,
            rep.top_image_is_d_squared,
            rep.parity_samples - rep.parity_failures,
            rep.parity_samples
        ));
        let mut j = serde_json::to_value(&rep).expect("serializable");
        j["injective"] = json!(rep.injective());
        j["passed"] = json!(rep.passed());
        out["mod2"] = j;
    }
    Ok((ok, out, text))
}

fn checks_output(title: &str, checks: Vec<Check>) -> Result<(bool, Value, String)> {
    let ok = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    text.push_str(&format!("{title}: {passed}/{} passed\n", checks.len()));
    Ok((ok, json!({"suite": title, "passed": ok, "checks": checks}), text))
}

fn verify(ctx: &Ctx, suite: Suite, corpus_dir: Option<&Path>, fraction: f64) -> Result<(bool, Value, String)> {
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    if suite == Suite::Corpus {
        let rep = golden_corpus_check(corpus_dir, ctx.cache.clone())?;
        let text = rep.to_text();
        return Ok((rep.all_match(), serde_json::to_value(&rep).expect("serializable"), text));
    }
    let checks = match suite {
        Suite::Rank3Engines => rank3_engines(ctx)?,
        Suite::Weyl => weyl_checks()?,
        Suite::Invariants => invariant_checks()?,
        Suite::Dn => dn_checks(ctx)?,
        Suite::Rings => ring_checks()?,
        Suite::Mod2 => mod2_checks()?,
        Suite::Cache => cache_checks(ctx, fraction)?,
        Suite::Corpus => unreachable!(),
    };
    checks_output(&name, checks)
}

pub const RANK3_GROUPS: [&str; 5] = ["A2", "B2", "G2", "A3", "B3"];

fn rank3_engines(ctx: &Ctx) -> Result<Vec<Check>> {
    RANK3_GROUPS
        .iter()
        .map(|g| {
            let rep = engine_equivalence(&ctx.calc(g)?)?;
            Ok(Check::new(
                format!("{g} Duan = Chevalley"),
                rep.passed(),
                format!("{} elements, {} pairs, {} nonzero constants, {} disagreements", rep.elements, rep.pairs, rep.nonzero, rep.failures.len()),
            ))
        })
        .collect()
}

/// Groups whose Poincaré polynomial is compared with `Π [d_i]_q`.
pub const POINCARE_GROUPS: [&str; 9] = ["A1", "A2", "A3", "B2", "B3", "D4", "D5", "F4", "E6"];

fn weyl_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for g in POINCARE_GROUPS {
        let d = RootDatum::from_label(g)?;
        let by_length = d.poincare_polynomial();
        let product = poincare_product(d.cartan_type);
        out.push(Check::new(
            format!("{g} Poincaré polynomial"),
            by_length == product,
            format!("|W| = {}", by_length.iter().sum::<u64>()),
        ));
    }
    let e7 = RootDatum::from_label("E7")?;
    let reps = e7.minimal_coset_reps(&[7], 27)?.reps;
    out.push(Check::new("E7 |W^P7|", reps.len() == 56, format!("{} minimal coset representatives", reps.len())));
    Ok(out)
}

fn invariant_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (group, ranks) in crate::invariants::library::tabulated_cases() {
        let d = RootDatum::from_label(&group)?;
        for r in ranks {
            let fam = case_generators(&group, r)?;
            let mut bad = Vec::new();
            for g in &fam.generators {
                if !check_invariance(&d, r, &g.poly)?.passed() {
                    bad.push(g.name.clone());
                }
            }
            out.push(Check::new(
                format!("{group} r={r} invariance"),
                bad.is_empty(),
                if bad.is_empty() { format!("{} generators", fam.generators.len()) } else { format!("not invariant: {}", bad.join(", ")) },
            ));
            if !fam.relations.is_empty() {
                let bad: Vec<String> = fam.relations.iter().filter(|(_, p)| !p.is_zero()).map(|(n, p)| format!("{n} = {}", p.to_text())).collect();
                out.push(Check::new(
                    format!("{group} r={r} relations"),
                    bad.is_empty(),
                    if bad.is_empty() { format!("{} vanish", fam.relations.len()) } else { format!("nonzero: {}", bad.join("; ")) },
                ));
            }
        }
    }
    Ok(out)
}

pub const DN_CASES: [(usize, usize); 3] = [(4, 2), (5, 2), (5, 3)];

fn dn_checks(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, k) in DN_CASES {
        let calc = ctx.calc(&format!("D{n}"))?;
        let chern = chern_quotient_d(&calc, k)?;
        for i in 0..=k {
            let c = verify_theorem_xi_d(&calc, k, i, &chern)?;
            out.push(Check::new(format!("D{n} k={k} e_{i}"), c.passed(), c.lhs.to_text()));
        }
    }
    Ok(out)
}

fn ring_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, k) in DN_CASES {
        let r = build_ring::<Q>(k, OgKind::Finite { n })?;
        let expected = typed_counts(k, Some(n), top_degree(k, n));
        let d = RootDatum::from_label(&format!("D{n}"))?;
        let cosets = d.minimal_coset_reps(&[n - k], d.longest_length())?.reps.len();
        let failures = r.relation_failures()?;
        let total: usize = r.hilbert().iter().sum();
        out.push(Check::new(
            format!("OG({}, {}) presentation", n - k, 2 * n),
            r.hilbert() == expected && total == cosets && failures.is_empty(),
            format!("total {total}, |W^P| = {cosets}, relation failures {}", failures.len()),
        ));
    }
    Ok(out)
}

fn mod2_checks() -> Result<Vec<Check>> {
    [2, 3]
        .iter()
        .map(|&k| {
            let rep = mod2_injectivity_check(k, 4 * k)?;
            let ranks: Vec<String> = rep.degrees.iter().map(|d| format!("{}/{}", d.rank, d.source_dim)).collect();
            Ok(Check::new(format!("k={k} degrees <= {}", 4 * k), rep.passed(), format!("ranks {}", ranks.join(" "))))
        })
        .collect()
}

fn cache_checks(ctx: &Ctx, fraction: f64) -> Result<Vec<Check>> {
    let mut groups: Vec<String> = ctx.cache.entries().iter().map(|(k, _)| k.group.to_string()).collect();
    groups.dedup();
    groups.sort();
    groups.dedup();
    let mut out = vec![Check::new("cache entries", true, format!("{}", ctx.cache.len()))];
    for g in groups {
        let bad = ctx.calc(&g)?.verify_cache_sample(fraction, 0x5eed)?;
        out.push(Check::new(format!("{g} cached constants"), bad.is_empty(), format!("{} disagree", bad.len())));
    }
    Ok(out)
}

fn selftest(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let files = verify_checksums(None)?;
    out.push(Check::new("corpus checksums", true, format!("{} files", files.len())));
    let g2 = compare_theta("G2")?;
    out.push(Check::new("G2 Springer table", g2.passed(), format!("{} terms", g2.terms)));
    for g in ["A2", "B2"] {
        let rep = engine_equivalence(&ctx.calc(g)?)?;
        out.push(Check::new(format!("{g} engines"), rep.passed(), format!("{} pairs", rep.pairs)));
    }
    let rep = report_section(&ctx.calc("G2")?, &ReportOptions::default())?;
    let split = rep.count(RowStatus::Mismatch);
    out.push(Check::new("G2 xi engines agree", split == 0, format!("{} rows, {split} engine disagreements", rep.rows.len())));
    let r = build_ring::<Q>(2, OgKind::Finite { n: 4 })?;
    let total: usize = r.hilbert().iter().sum();
    out.push(Check::new("OG(2, 8) ring", total == 24 && r.relation_failures()?.is_empty(), format!("total {total}")));
    let m = mod2_injectivity_check(2, 8)?;
    out.push(Check::new("mod-2 injectivity k=2", m.passed(), format!("{} degrees", m.degrees.len())));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaSummary {
    pub group: String,
    pub terms: usize,
    pub status: String,
    /// `c` when the table equals `c` times a map with identity differential.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_scale: Option<String>,
}

/// A row where both engines agree with each other but not with the table.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub parabolic: usize,
    pub generator: String,
    pub computed: String,
    pub table: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableSummary {
    pub group: String,
    pub rows: usize,
    pub matched: usize,
    pub stable_discrepancies: Vec<Discrepancy>,
    /// Rows where the two engines disagree.
    pub engine_disagreements: Vec<String>,
    pub other: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub files: Vec<String>,
    pub theta: Vec<ThetaSummary>,
    pub tables: Vec<TableSummary>,
}

impl CorpusReport {
    /// Every row is either matched or a stable discrepancy.
    pub fn consistent(&self) -> bool {
        self.theta.iter().all(|t| t.status == "match") && self.tables.iter().all(|t| t.engine_disagreements.is_empty())
    }

    pub fn all_match(&self) -> bool {
        self.consistent() && self.tables.iter().all(|t| t.matched == t.rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("checksums: {} files verified\n", self.files.len());
        for t in &self.theta {
            s.push_str(&format!("{} Springer table: {} ({} terms)\n", t.group, t.status, t.terms));
            if let Some(c) = &t.table_scale {
                s.push_str(&format!("  table = {c} x computed; its differential at 1 is {c} x identity\n"));
            }
        }
        for t in &self.tables {
            s.push_str(&format!("{} xi table: {}/{} match\n", t.group, t.matched, t.rows));
            for d in &t.stable_discrepancies {
                s.push_str(&format!(
                    "  stable discrepancy P{} {}: computed {}, table {}\n",
                    d.parabolic, d.generator, d.computed, d.table
                ));
            }
            for e in &t.engine_disagreements {
                s.push_str(&format!("  engine disagreement {e}\n"));
            }
        }
        s
    }
}

/// Verifies the corpus checksums, then compares every Springer table and the
/// G2 and F4 ξ tables. A checksum failure stops before any computation.
pub fn golden_corpus_check(dir: Option<&Path>, cache: Arc<ConstantCache>) -> Result<CorpusReport> {
    let files = verify_checksums(dir)?;
    let mut theta = Vec::new();
    for g in GROUPS {
        let c = compare_theta(g)?;
        theta.push(ThetaSummary {
            group: g.to_string(),
            terms: c.terms,
            status: if c.passed() { "match" } else { "mismatch" }.to_string(),
            table_scale: c.table_scale.as_ref().filter(|x| !x.is_one()).map(crate::polyalg::q_to_string),
        });
    }
    let mut tables = Vec::new();
    for g in ["G2", "F4"] {
        let calc = Calculus::from_label(g)?.with_cache(cache.clone());
        let rep = report_section(&calc, &ReportOptions::default())?;
        let mut t = TableSummary {
            group: g.to_string(),
            rows: rep.rows.len(),
            matched: 0,
            stable_discrepancies: Vec::new(),
            engine_disagreements: Vec::new(),
            other: 0,
        };
        for r in &rep.rows {
            match r.status {
                RowStatus::Match => t.matched += 1,
                RowStatus::MismatchPaper => t.stable_discrepancies.push(Discrepancy {
                    parabolic: r.parabolic,
                    generator: r.generator.clone(),
                    computed: SchubertClass::from_json_terms(calc.group(), Space::maximal(r.parabolic), &r.image)?.to_text(),
                    table: r.paper.clone(),
                }),
                RowStatus::Mismatch => t.engine_disagreements.push(format!("P{} {}", r.parabolic, r.generator)),
                RowStatus::Untabulated | RowStatus::Skipped => t.other += 1,
            }
        }
        tables.push(t);
    }
    Ok(CorpusReport { files, theta, tables })
}
