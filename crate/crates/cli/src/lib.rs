//! Argument handling and report assembly for the `stardom` binary.
//!
//! [`run`] parses an argument vector, executes one verb and returns the exit
//! code with the JSON report envelope. Every outcome, usage errors included,
//! produces an envelope.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stardom_core::chains::{self, chain_report, lemma_counts, maps_table, Level, Witness};
use stardom_core::digraph::{
    directed_triangles, enumerate_induced_copies, export_graph, strongly_connected,
    weakly_connected_components, ExportFormat, GraphDocument, OrientedGraph, VertexSet,
};
use stardom_core::domination::{
    check_pm_dominating, epm_enumerate, gamma_pm_search, is_cuneiform, is_e_set_undirected,
    is_wced_with, sphere_packing_check, SearchStatus, SphereVerdict, StabilityRule,
};
use stardom_core::families::{calibrate_pancake, embedded_copy_in, guard_star};
use stardom_core::hamilton::{
    encode_step_type, enumerate_hamilton_paths, hamilton_search, preferred_hamilton_path,
    traceability_report, HamiltonMode, HamiltonOutcome,
};
use stardom_core::setfile::parse_set_file;
use stardom_core::{Budget, Family, FamilySpec, ReportEnvelope, Status, TernaryOrientation};

/// Graphs up to this many vertices (the host `ST_5`) get full witness sets.
const FULL_WITNESS_VERTICES: usize = 60;

/// Type strings the greedy encoding gives for the Hamilton paths of `ST_4`.
const ST4_PATH_TYPES: [&str; 2] = ["aababbb", "bbbabaa"];

#[derive(Debug, Parser)]
#[command(name = "stardom", version, about = "Worst-case efficient dominating sets in star digraphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Construct a graph and export it.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "json", value_parser = ["json", "dot", "edges"])]
        format: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check a property of one vertex set.
    Verify {
        #[arg(value_enum)]
        check: VerifyCheck,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive or budgeted searches.
    Search {
        #[arg(value_enum)]
        target: SearchTarget,
        #[command(flatten)]
        graph: GraphArgs,
        /// Largest size considered by the gamma search.
        #[arg(long)]
        cap: Option<usize>,
        /// Start vertex (word or id) for Hamilton searches.
        #[arg(long)]
        start: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Chain report for the star digraphs up to level N.
    Chain {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Classification of every insertion map of ST_N into ST_(N+1).
    Maps {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Hamilton path enumeration with step types, plus traceability.
    Hamilton {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        start: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyCheck {
    Wced,
    Cuneiform,
    Dominating,
    Sphere,
    Eset,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SearchTarget {
    Gamma,
    Epm,
    HamiltonCycle,
    HamiltonPath,
    Copies,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// st | std | pc | pcx | bst | tc
    #[arg(long, default_value = "std")]
    family: Family,
    #[arg(long)]
    n: usize,
    /// linear | cyclic (ternary cube only)
    #[arg(long)]
    orientation: Option<TernaryOrientation>,
}

#[derive(Debug, Args)]
struct SetArgs {
    /// File with one permutation word per line.
    #[arg(long, conflicts_with = "guard")]
    set: Option<PathBuf>,
    /// `I` for the guard star on symbol I, `I,J` for the copy zeta^{I,J}.
    #[arg(long)]
    guard: Option<Guard>,
}

#[derive(Debug, Args)]
struct RuleArgs {
    /// Count only sources and sinks as stable members.
    #[arg(long)]
    no_isolated: bool,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Wall-clock allowance in seconds.
    #[arg(long, value_parser = parse_seconds)]
    budget: Option<f64>,
}

#[derive(Debug, Args)]
struct Common {
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Embed complete witness sets at every size.
    #[arg(long)]
    full: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Guard {
    i: usize,
    j: Option<usize>,
}

impl FromStr for Guard {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a symbol index"));
        match s.split_once(',') {
            None => Ok(Guard { i: num(s)?, j: None }),
            Some((a, b)) => Ok(Guard {
                i: num(a)?,
                j: Some(num(b)?),
            }),
        }
    }
}

fn parse_seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 => Ok(x),
        _ => Err(format!("{s:?} is not a non-negative number of seconds")),
    }
}

impl RuleArgs {
    fn rule(&self) -> StabilityRule {
        if self.no_isolated {
            StabilityRule::SourcesAndSinksOnly
        } else {
            StabilityRule::AdmitIsolated
        }
    }
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        self.budget.map_or_else(Budget::unlimited, Budget::seconds)
    }
}

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    /// The envelope, newline-terminated.
    pub report: String,
    /// Set when the report went to a file rather than to the caller.
    pub written_to: Option<PathBuf>,
    /// Set for usage and internal errors.
    pub diagnostic: Option<String>,
}

/// Help and version requests, which print text instead of a report.
#[derive(Debug, Clone)]
pub struct Informational {
    pub text: String,
}

/// Parses and runs `argv` (program name first). The timestamp comes from
/// `SOURCE_DATE_EPOCH` when set, otherwise from the clock.
pub fn run(argv: &[String]) -> Result<Outcome, Informational> {
    run_at(argv, timestamp())
}

pub fn timestamp() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()))
}

/// [`run`] with an explicit timestamp.
pub fn run_at(argv: &[String], timestamp: u64) -> Result<Outcome, Informational> {
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Err(Informational { text: e.to_string() });
            }
            let msg = first_line(&e.to_string());
            return Ok(error_outcome(echo, timestamp, "usage", msg, None));
        }
    };
    let out = cli.verb.common().out.clone();
    let (status, result, errata) = match execute(&cli.verb) {
        Ok(done) => done,
        Err(msg) => return Ok(error_outcome(echo, timestamp, "input", msg, out.as_deref())),
    };
    let report = ReportEnvelope::new(echo, timestamp, status, result)
        .with_errata(&errata)
        .to_json();
    Ok(finish(status.exit_code(), report, out.as_deref(), None))
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or("").trim_start_matches("error: ").to_string()
}

fn error_outcome(echo: Vec<String>, timestamp: u64, kind: &str, msg: String, out: Option<&Path>) -> Outcome {
    let result = json!({ "error": { "kind": kind, "message": msg } });
    let report = ReportEnvelope::new(echo, timestamp, Status::Error, result).to_json();
    finish(Status::Error.exit_code(), report, out, Some(msg))
}

fn finish(code: i32, report: String, out: Option<&Path>, diagnostic: Option<String>) -> Outcome {
    if let Some(path) = out {
        if let Err(e) = write_atomically(path, report.as_bytes()) {
            let msg = format!("--out {}: {e}", path.display());
            return Outcome {
                code: Status::Error.exit_code(),
                report,
                written_to: None,
                diagnostic: Some(msg),
            };
        }
    }
    Outcome {
        code,
        report,
        written_to: out.map(Path::to_path_buf),
        diagnostic,
    }
}

/// Writes to a sibling temporary file and renames it over `path`.
pub fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let name = path
        .file_name()
        .ok_or_else(|| std::io::Error::new(std::io::ErrorKind::InvalidInput, "not a file path"))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })
}

impl Verb {
    fn common(&self) -> &Common {
        match self {
            Verb::Build { common, .. }
            | Verb::Verify { common, .. }
            | Verb::Search { common, .. }
            | Verb::Chain { common, .. }
            | Verb::Maps { common, .. }
            | Verb::Hamilton { common, .. } => common,
        }
    }
}

type Executed = (Status, Value, Vec<&'static str>);

fn execute(verb: &Verb) -> Result<Executed, String> {
    match verb {
        Verb::Build { graph, format, .. } => build(graph, format),
        Verb::Verify {
            check,
            graph,
            set,
            rule,
            common,
        } => verify(*check, graph, set, rule.rule(), common.full),
        Verb::Search {
            target,
            graph,
            cap,
            start,
            budget,
            rule,
            common,
        } => search(*target, graph, *cap, start.as_deref(), budget.budget(), rule.rule(), common.full),
        Verb::Chain { n, common } => chain(*n, common.full),
        Verb::Maps { n, .. } => maps(*n),
        Verb::Hamilton { graph, start, budget, .. } => hamilton(graph, start.as_deref(), budget.budget()),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report payload serializes")
}

impl GraphArgs {
    fn spec(&self) -> FamilySpec {
        FamilySpec {
            family: self.family,
            n: self.n,
            orientation: self.orientation,
        }
    }

    fn flags(&self) -> String {
        format!("--family {} --n {}", self.family.short_name(), self.n)
    }

    fn build(&self) -> Result<OrientedGraph, String> {
        if self.orientation.is_some() && self.family != Family::TernaryCube {
            return Err("--orientation applies only to --family tc".into());
        }
        self.spec().build().map_err(|e| format!("{}: {e}", self.flags()))
    }
}

fn witness(g: &OrientedGraph, s: &VertexSet, full: bool) -> Witness {
    Witness::of(g, s, full || g.vertex_count() <= FULL_WITNESS_VERTICES)
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Verified
    } else {
        Status::Refuted
    }
}

fn build(args: &GraphArgs, format: &str) -> Result<Executed, String> {
    let g = args.build()?;
    let fmt: ExportFormat = format.parse().map_err(|e| format!("--format: {e}"))?;
    let content = match fmt {
        ExportFormat::Json => to_value(&GraphDocument::from_graph(&g)),
        _ => Value::String(String::from_utf8(export_graph(&g, fmt)).expect("exports are UTF-8")),
    };
    let mut result = json!({
        "graph": g.tag().to_string(),
        "family": to_value(&args.spec()),
        "vertex_count": g.vertex_count(),
        "arc_count": g.arc_count(),
        "undirected": g.is_undirected(),
        "regular_degree": g.regular_degree(),
        "strongly_connected": strongly_connected(&g),
        "weak_components": weakly_connected_components(&g).len(),
        "directed_triangles": if g.is_undirected() { None } else { Some(directed_triangles(&g).len()) },
        "format": format,
        "content": content,
    });
    if matches!(args.family, Family::PancakeDigraph | Family::PancakeCrossed) {
        let cal = calibrate_pancake().map_err(|e| e.to_string())?;
        result["pancake_calibration"] = to_value(cal);
    }
    Ok((Status::Verified, result, vec![chains::ERRATA[2]]))
}

fn resolve_set(g: &OrientedGraph, args: &GraphArgs, set: &SetArgs) -> Result<(VertexSet, String), String> {
    match (&set.set, set.guard) {
        (Some(path), _) => {
            let s = parse_set_file(path, g).map_err(|e| format!("--set {}: {e}", path.display()))?;
            Ok((s, format!("file {}", path.display())))
        }
        (None, Some(Guard { i, j: None })) => {
            let gs = guard_star(g, i).map_err(|e| format!("--guard {i}: {e}"))?;
            Ok((gs.vertices, format!("guard star on symbol {i}")))
        }
        (None, Some(Guard { i, j: Some(j) })) => {
            let small_spec = FamilySpec {
                n: args.n.saturating_sub(1),
                ..args.spec()
            };
            let small = small_spec.build().map_err(|e| format!("--guard {i},{j}: {e}"))?;
            let copy = embedded_copy_in(&small, g, i, j).map_err(|e| format!("--guard {i},{j}: {e}"))?;
            Ok((copy.image, format!("zeta_{}^{{{i},{j}}} image", small_spec.n)))
        }
        (None, None) => Err("verify needs --set FILE or --guard I[,J]".into()),
    }
}

fn verify(
    check: VerifyCheck,
    args: &GraphArgs,
    set_args: &SetArgs,
    rule: StabilityRule,
    full: bool,
) -> Result<Executed, String> {
    let g = args.build()?;
    let (s, source) = resolve_set(&g, args, set_args)?;
    let err = |e: stardom_core::Error| e.to_string();
    let mut result = json!({
        "graph": g.tag().to_string(),
        "set_source": source,
        "set": to_value(&witness(&g, &s, full)),
        "set_size": s.len(),
    });
    let (status, errata) = match check {
        VerifyCheck::Wced => {
            let c = is_wced_with(&g, &s, rule).map_err(err)?;
            let ok = c.holds();
            if let Some(cert) = c.domination.certificate() {
                result["certificate_valid"] = json!(cert.validate(&g).is_ok());
            }
            result["check"] = to_value(&c);
            (verdict(ok), vec![chains::ERRATA[5]])
        }
        VerifyCheck::Dominating => {
            let d = check_pm_dominating(&g, &s).map_err(err)?;
            if let Some(cert) = d.certificate() {
                result["certificate_valid"] = json!(cert.validate(&g).is_ok());
            }
            let ok = d.is_perfect();
            result["check"] = to_value(&d);
            (verdict(ok), vec![])
        }
        VerifyCheck::Cuneiform => {
            let c = is_cuneiform(&g, &s).map_err(err)?;
            if let Some(cert) = &c.certificate {
                result["certificate_valid"] = json!(cert.validate(&g).is_ok());
            }
            let status = match c.rho_search {
                stardom_core::domination::RhoSearch::StepLimit => Status::Unknown,
                _ => verdict(c.holds()),
            };
            result["check"] = to_value(&c);
            (status, vec![chains::ERRATA[3]])
        }
        VerifyCheck::Sphere => {
            let sp = sphere_packing_check(&g, &s).map_err(err)?;
            let ok = sp.verdict == SphereVerdict::Holds;
            result["check"] = to_value(&sp);
            (verdict(ok), vec![])
        }
        VerifyCheck::Eset => {
            let u = if g.is_undirected() { g.clone() } else { g.underlying_undirected() };
            let ok = is_e_set_undirected(&u, &s).map_err(err)?;
            result["underlying"] = json!(u.tag().to_string());
            result["check"] = json!({ "e_set": ok });
            (verdict(ok), vec![])
        }
    };
    Ok((status, result, errata))
}

fn resolve_start(g: &OrientedGraph, start: Option<&str>) -> Result<Option<usize>, String> {
    let Some(t) = start else { return Ok(None) };
    if let Ok(id) = t.parse::<usize>() {
        if g.word_degree().is_none() || t.len() != g.word_degree().unwrap_or(0) {
            return if id < g.vertex_count() {
                Ok(Some(id))
            } else {
                Err(format!("--start {t}: no such vertex"))
            };
        }
    }
    g.labels()
        .iter()
        .position(|l| l.to_string() == t)
        .map(Some)
        .ok_or_else(|| format!("--start {t}: not a vertex of {}", g.tag()))
}

fn status_of_search(complete: bool, found: bool) -> Status {
    match (complete, found) {
        (true, true) => Status::Verified,
        (true, false) => Status::Refuted,
        (false, _) => Status::Unknown,
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    target: SearchTarget,
    args: &GraphArgs,
    cap: Option<usize>,
    start: Option<&str>,
    budget: Budget,
    rule: StabilityRule,
    full: bool,
) -> Result<Executed, String> {
    let g = args.build()?;
    let start = resolve_start(&g, start)?;
    let err = |e: stardom_core::Error| e.to_string();
    let graph = g.tag().to_string();
    match target {
        SearchTarget::Gamma => {
            let r = gamma_pm_search(&g, cap, budget, rule).map_err(|e| format!("{}: {e}; pass --cap", args.flags()))?;
            let status = status_of_search(r.status == SearchStatus::Complete, r.minimum.is_some());
            let mut result = json!({ "graph": graph, "search": to_value(&r) });
            if let Some(w) = &r.witness {
                result["witness"] = to_value(&witness(&g, w, full));
                if let Ok(c) = is_wced_with(&g, w, rule) {
                    result["certificate_valid"] =
                        json!(c.domination.certificate().is_some_and(|cert| cert.validate(&g).is_ok()));
                }
            }
            Ok((status, result, vec![chains::ERRATA[5]]))
        }
        SearchTarget::Epm => {
            let e = epm_enumerate(&g, budget, rule);
            let complete = e.status == SearchStatus::Complete;
            let sizes: BTreeSet<usize> = e.solutions.iter().map(VertexSet::len).collect();
            let sets: Vec<Witness> = e.solutions.iter().map(|s| witness(&g, s, full)).collect();
            let guards: Vec<bool> = e
                .solutions
                .iter()
                .map(|s| (0..g.word_degree().unwrap_or(0)).any(|i| guard_star(&g, i).is_ok_and(|gs| gs.vertices == *s)))
                .collect();
            let result = json!({
                "graph": graph,
                "rule": to_value(&rule),
                "status": to_value(&e.status),
                "count": e.solutions.len(),
                "sizes": sizes,
                "solutions": sets,
                "is_guard_star": guards,
                "nodes": e.nodes,
            });
            Ok((status_of_search(complete, !e.solutions.is_empty()), result, vec![chains::ERRATA[5]]))
        }
        SearchTarget::HamiltonCycle | SearchTarget::HamiltonPath => {
            let mode = if matches!(target, SearchTarget::HamiltonCycle) {
                HamiltonMode::Cycle
            } else {
                HamiltonMode::Path
            };
            let r = hamilton_search(&g, mode, start, budget).map_err(err)?;
            let status = match r.outcome {
                HamiltonOutcome::Found { .. } => Status::Verified,
                HamiltonOutcome::ExhaustedNone => Status::Refuted,
                HamiltonOutcome::BudgetExhausted => Status::Unknown,
            };
            let mut result = json!({ "report": to_value(&r) });
            if let Some(w) = r.witness() {
                result["words"] = json!(w.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>());
                if mode == HamiltonMode::Path {
                    result["step_type"] = json!(encode_step_type(&g, w).ok());
                }
            }
            Ok((status, result, vec![]))
        }
        SearchTarget::Copies => {
            if args.n < 3 {
                return Err(format!("{}: copies need n >= 3", args.flags()));
            }
            let small_spec = FamilySpec {
                n: args.n - 1,
                ..args.spec()
            };
            let small = small_spec.build().map_err(err)?;
            let c = enumerate_induced_copies(&small, &g, budget);
            let mut result = json!({
                "pattern": small.tag().to_string(),
                "host": graph,
                "complete": c.complete,
                "count": c.images.len(),
                "images": c.images.iter().map(|s| witness(&g, s, full)).collect::<Vec<_>>(),
            });
            let mut ok = true;
            if args.family == Family::StarDigraph {
                let ns = args.n - 1;
                let mut expected = BTreeSet::new();
                for i in 0..=ns {
                    for j in 2..=ns {
                        expected.insert(embedded_copy_in(&small, &g, i, j).map_err(err)?.image);
                    }
                }
                let found: BTreeSet<VertexSet> = c.images.iter().cloned().collect();
                let matches = found == expected;
                ok = matches || !c.complete;
                result["embedded_copies"] = json!(expected.len());
                result["matches_embedded_copies"] = json!(matches);
                if let Ok(level) = Level::new(ns) {
                    let lem = lemma_counts(&level).map_err(err)?;
                    result["plus_maps"] = json!(lem.plus_maps);
                    result["minus_maps"] = json!(lem.minus_maps);
                }
            }
            let status = if !ok {
                Status::Refuted
            } else {
                status_of_search(c.complete, !c.images.is_empty())
            };
            Ok((status, result, vec![]))
        }
    }
}

fn chain(n: usize, full: bool) -> Result<Executed, String> {
    let r = chain_report(n, full).map_err(|e| format!("--n {n}: {e}"))?;
    Ok((verdict(r.passed), to_value(&r), chains::ERRATA.to_vec()))
}

fn maps(n: usize) -> Result<Executed, String> {
    let level = Level::new(n).map_err(|e| format!("--n {n}: {e}"))?;
    let rows = maps_table(&level).map_err(|e| e.to_string())?;
    let lem = lemma_counts(&level).map_err(|e| e.to_string())?;
    let ok = lem.holds && rows.iter().all(|r| r.consistent);
    let result = json!({
        "small": level.small.tag().to_string(),
        "host": level.host.tag().to_string(),
        "maps": to_value(&rows),
        "counts": to_value(&lem),
    });
    Ok((verdict(ok), result, vec![chains::ERRATA[0], chains::ERRATA[1], chains::ERRATA[4]]))
}

fn hamilton(args: &GraphArgs, start: Option<&str>, budget: Budget) -> Result<Executed, String> {
    let g = args.build()?;
    let start = resolve_start(&g, start)?;
    let err = |e: stardom_core::Error| e.to_string();
    let starts: Vec<usize> = match start {
        Some(s) => vec![s],
        None => (0..g.vertex_count()).collect(),
    };
    let mut per_start = Vec::new();
    let mut all_types = BTreeSet::new();
    let mut complete = true;
    let mut total = 0usize;
    for &s in &starts {
        let p = enumerate_hamilton_paths(&g, s, budget).map_err(err)?;
        let preferred = preferred_hamilton_path(&g, s, budget).map_err(err)?;
        complete &= p.complete;
        total += p.paths.len();
        all_types.extend(p.types.keys().cloned());
        per_start.push(json!({
            "start": g.label(s).to_string(),
            "paths": p.paths.len(),
            "types": p.types,
            "preferred": preferred.map(|(path, t)| json!({
                "words": path.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>(),
                "type": t,
            })),
            "complete": p.complete,
        }));
    }
    let trace = traceability_report(&[args.spec()], budget).map_err(err)?;
    let mut result = json!({
        "graph": g.tag().to_string(),
        "starts": per_start,
        "path_count": total,
        "type_set": all_types,
        "complete": complete,
        "traceability": to_value(&trace[0]),
    });
    let mut findings = Vec::new();
    if args.family == Family::StarDigraph && args.n == 4 && start.is_none() && complete {
        let reference: BTreeSet<String> = ST4_PATH_TYPES.iter().map(|s| s.to_string()).collect();
        let agrees = all_types == reference;
        result["reference_types"] = json!(ST4_PATH_TYPES);
        result["agrees_with_reference"] = json!(agrees);
        if !agrees {
            findings.push(format!("type set {all_types:?} differs from the two reference types"));
        }
    }
    result["findings"] = json!(findings);
    Ok((status_of_search(complete, total > 0), result, vec![]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("stardom").chain(s.split_whitespace()).map(String::from).collect()
    }

    fn go(s: &str) -> (i32, Value) {
        let o = run_at(&argv(s), 0).expect("not a help request");
        (o.code, serde_json::from_str(&o.report).unwrap())
    }

    #[test]
    fn guard_flag_forms() {
        assert_eq!("3".parse::<Guard>(), Ok(Guard { i: 3, j: None }));
        assert_eq!("1,4".parse::<Guard>(), Ok(Guard { i: 1, j: Some(4) }));
        assert!("x".parse::<Guard>().unwrap_err().contains("\"x\""));
    }

    #[test]
    fn seconds_must_be_non_negative() {
        assert!(parse_seconds("0.5").is_ok());
        assert!(parse_seconds("-1").is_err() && parse_seconds("inf").is_err());
    }

    #[test]
    fn usage_errors_produce_an_envelope() {
        let (code, v) = go("verify wced --n 4 --bogus");
        assert_eq!(code, 2);
        assert_eq!(v["status"], "error");
        assert!(v["result"]["error"]["message"].as_str().unwrap().contains("--bogus"));
    }

    #[test]
    fn help_is_informational() {
        assert!(run_at(&argv("--help"), 0).is_err());
    }

    #[test]
    fn search_status_mapping() {
        assert_eq!(status_of_search(true, true), Status::Verified);
        assert_eq!(status_of_search(true, false), Status::Refuted);
        assert_eq!(status_of_search(false, false), Status::Unknown);
        assert_eq!(status_of_search(false, true), Status::Unknown);
    }

    #[test]
    fn start_by_word_or_id() {
        let g = stardom_core::families::star_digraph(4).unwrap();
        assert_eq!(resolve_start(&g, Some("0123")).unwrap(), Some(0));
        assert_eq!(resolve_start(&g, Some("3")).unwrap(), Some(3));
        assert!(resolve_start(&g, Some("0132")).is_err());
        assert!(resolve_start(&g, Some("99")).is_err());
    }
}
