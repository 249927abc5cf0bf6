//! Command-line front end. [`execute`] does all the work and returns the
//! rendered output, so the binary only prints and sets the exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::closed_form::{
    conv_corona, conv_cycle, conv_double_corona, reduce_corona, reduce_double_corona,
    ConversionNumber,
};
use crate::constructions::{
    canonical_corona_seed, canonical_double_corona_seed, pattern_to_seed, seed_to_pattern,
    BlockPattern,
};
use crate::dynamics::{run, SeedSet};
use crate::error::Error;
use crate::graph::{Family, FamilySpec, Graph, VertexRole};
use crate::probability::{
    enumeration_probability, monte_carlo_probability, resilience_factor,
    success_probability_corona, DEFAULT_DIGITS,
};
use crate::search::{brute_force_min, SearchConfig, BUDGET_ENV, DEFAULT_BUDGET};

#[derive(Debug, Parser)]
#[command(
    name = "thresholdlab",
    version,
    about = "Irreversible k-threshold conversion on corona and double-corona graphs"
)]
pub struct Cli {
    /// Output format (json by default, csv for sweep).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Maximum number of seeds a brute-force enumeration may simulate.
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u64>,

    /// Seed for Monte Carlo sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub rng_seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// cycle, complete, corona or double-corona.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Cycle length.
    #[arg(short, long, default_value_t = 0)]
    pub n: usize,
    /// Block size (the order of K_p).
    #[arg(short, long, default_value_t = 0)]
    pub p: usize,
}

impl FamilyArgs {
    fn spec(&self) -> FamilySpec {
        FamilySpec {
            family: self.family,
            n: self.n,
            p: self.p,
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvMethod {
    Formula,
    Reduce,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbMethod {
    Formula,
    Enumerate,
    Montecarlo,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex and edge counts, degree histogram and role counts.
    Info(FamilyArgs),
    /// Run the threshold process and print the trace.
    Simulate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        k: usize,
        /// `canonical`, `all`, `none`, a block pattern such as `MOMB`, or
        /// comma-separated vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Conversion number by closed form, recurrence or exhaustive search.
    Conv {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ConvMethod::Formula)]
        method: ConvMethod,
        /// Run every applicable method and fail unless they agree.
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive minimum conversion set with a witness and per-size tallies.
    MinSet {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        size_limit: Option<usize>,
        /// Enumerate all seeds instead of supersets of the low-degree vertices.
        #[arg(long)]
        no_prune: bool,
    },
    /// Probability that a random seed of a given size converts.
    Probability {
        #[arg(long, value_parser = parse_family, default_value = "corona")]
        family: Family,
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, default_value_t = 0)]
        p: usize,
        #[arg(short, long)]
        k: usize,
        /// Defaults to formula for coronas and enumerate otherwise.
        #[arg(long, value_enum)]
        method: Option<ProbMethod>,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// Seed size; defaults to the conversion number.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
    /// Tabulate formula, recurrence and brute force over a grid.
    Sweep {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Inclusive range such as `3..6`.
        #[arg(short, long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(short, long, value_parser = parse_range, default_value = "0..0")]
        p: RangeInclusive<usize>,
        #[arg(short, long, value_parser = parse_range)]
        k: RangeInclusive<usize>,
        /// Skip the brute-force column.
        #[arg(long)]
        no_brute: bool,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Why a command did not complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    Invalid,
    Budget,
    Mismatch,
}

impl FailureKind {
    pub fn exit_code(self) -> u8 {
        match self {
            FailureKind::Invalid => 2,
            FailureKind::Budget => 3,
            FailureKind::Mismatch => 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
    /// Output produced before the failure was detected.
    pub output: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::BudgetExceeded { .. } => FailureKind::Budget,
            _ => FailureKind::Invalid,
        };
        Failure {
            kind,
            message: e.to_string(),
            output: None,
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        kind: FailureKind::Invalid,
        message: message.into(),
        output: None,
    }
}

type CmdResult = Result<String, Failure>;

struct Context {
    format: Option<Format>,
    budget: u64,
    rng_seed: u64,
}

impl Context {
    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn search(&self) -> SearchConfig {
        SearchConfig::default().with_budget(self.budget)
    }
}

pub fn execute(cli: &Cli) -> CmdResult {
    let ctx = Context {
        format: cli.format,
        budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
        rng_seed: cli.rng_seed,
    };
    match &cli.command {
        Command::Info(family) => cmd_info(&ctx, family.spec()),
        Command::Simulate {
            family,
            k,
            seed,
            max_steps,
        } => cmd_simulate(&ctx, family.spec(), *k, seed, *max_steps),
        Command::Conv {
            family,
            k,
            method,
            verify,
        } => cmd_conv(&ctx, family.spec(), *k, *method, *verify),
        Command::MinSet {
            family,
            k,
            size_limit,
            no_prune,
        } => cmd_min_set(&ctx, family.spec(), *k, *size_limit, !*no_prune),
        Command::Probability {
            family,
            n,
            p,
            k,
            method,
            trials,
            size,
            digits,
        } => {
            let spec = FamilySpec {
                family: *family,
                n: *n,
                p: *p,
            };
            let method = method.unwrap_or(if *family == Family::Corona {
                ProbMethod::Formula
            } else {
                ProbMethod::Enumerate
            });
            cmd_probability(&ctx, spec, *k, method, *trials, *size, *digits)
        }
        Command::Sweep {
            family,
            n,
            p,
            k,
            no_brute,
        } => cmd_sweep(&ctx, *family, n.clone(), p.clone(), k.clone(), !*no_brute),
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable output");
    s.push('\n');
    s
}

fn check_threshold(k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(Error::InvalidThreshold { k, min: 1 }.into());
    }
    Ok(())
}

fn role_counts(graph: &Graph) -> BTreeMap<&'static str, usize> {
    let mut counts = BTreeMap::new();
    for role in graph.roles().unwrap_or_default() {
        let key = match role {
            VertexRole::Inner(_) => "inner",
            VertexRole::Outer(_) => "outer",
            VertexRole::Block(..) => "block",
        };
        *counts.entry(key).or_insert(0) += 1;
    }
    counts
}

fn cmd_info(ctx: &Context, spec: FamilySpec) -> CmdResult {
    let graph = spec.build()?;
    let histogram = graph.degree_histogram();
    let roles = role_counts(&graph);
    Ok(match ctx.format(Format::Json) {
        Format::Text => {
            let mut out = format!(
                "{spec}\nvertices: {}\nedges: {}\n",
                graph.num_vertices(),
                graph.num_edges()
            );
            for (deg, count) in &histogram {
                let _ = writeln!(out, "degree {deg}: {count}");
            }
            for (role, count) in &roles {
                let _ = writeln!(out, "{role}: {count}");
            }
            out
        }
        _ => to_json(&json!({
            "family": spec.family,
            "n": spec.n,
            "p": spec.p,
            "num_vertices": graph.num_vertices(),
            "num_edges": graph.num_edges(),
            "degree_histogram": histogram,
            "role_counts": roles,
        })),
    })
}

/// Resolves a seed description against a built graph.
pub fn parse_seed_spec(
    spec: FamilySpec,
    graph: &Graph,
    k: usize,
    text: &str,
) -> Result<SeedSet, Error> {
    let text = text.trim();
    match text {
        "canonical" => {
            return match spec.family {
                Family::Cycle => canonical_corona_seed(spec.n, 0, k),
                Family::Corona => canonical_corona_seed(spec.n, spec.p, k),
                Family::DoubleCorona => canonical_double_corona_seed(spec.n, spec.p, k),
                Family::Complete => Err(Error::Unsupported(
                    "no canonical seed for complete graphs".into(),
                )),
            }
        }
        "all" => return Ok(SeedSet::all(graph)),
        "" | "none" => return Ok(SeedSet::default()),
        _ => {}
    }
    if text.chars().all(|c| "BCOIMT".contains(c)) {
        if spec.family != Family::DoubleCorona {
            return Err(Error::Unsupported(
                "block patterns apply to double-corona graphs only".into(),
            ));
        }
        return pattern_to_seed(&BlockPattern::from_str(text)?, spec.n, spec.p);
    }
    let ids = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("malformed seed entry {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    SeedSet::for_graph(graph, ids)
}

fn describe(graph: &Graph, v: usize) -> String {
    match graph.role(v) {
        Some(role) => format!("{v}:{role}"),
        None => v.to_string(),
    }
}

fn cmd_simulate(
    ctx: &Context,
    spec: FamilySpec,
    k: usize,
    seed_text: &str,
    max_steps: Option<usize>,
) -> CmdResult {
    check_threshold(k)?;
    let graph = spec.build()?;
    let seed = parse_seed_spec(spec, &graph, k, seed_text)?;
    let trace = run(&graph, &seed, k, max_steps);
    Ok(match ctx.format(Format::Json) {
        Format::Text => {
            let mut out = format!(
                "{spec}, k = {k}, |S_0| = {}, converted: {}, steps: {}\n",
                seed.len(),
                trace.converted,
                trace.steps()
            );
            let mut previous = fixedbitset::FixedBitSet::with_capacity(graph.num_vertices());
            for (t, state) in trace.snapshots.iter().enumerate() {
                let added: Vec<_> = state
                    .ones()
                    .filter(|&v| !previous.contains(v))
                    .map(|v| describe(&graph, v))
                    .collect();
                let _ = writeln!(out, "t={t} (+{}): {}", added.len(), added.join(" "));
                previous = state.clone();
            }
            out
        }
        _ => to_json(&trace.to_json()),
    })
}

fn formula(spec: FamilySpec, k: usize) -> Result<ConversionNumber, Error> {
    match spec.family {
        Family::Cycle => conv_cycle(spec.n, k),
        Family::Corona => conv_corona(spec.n, spec.p, k),
        Family::DoubleCorona => conv_double_corona(spec.n, spec.p, k),
        Family::Complete => Err(Error::Unsupported(
            "no closed form for complete graphs; use --method brute".into(),
        )),
    }
}

/// `Ok(None)` when the recurrence does not apply (double corona with `k = 1`).
fn reduction(spec: FamilySpec, k: usize) -> Result<Option<ConversionNumber>, Error> {
    match spec.family {
        Family::Cycle => reduce_corona(spec.n, 0, k).map(Some),
        Family::Corona => reduce_corona(spec.n, spec.p, k).map(Some),
        Family::DoubleCorona if k < 2 => {
            spec.validate()?;
            Ok(None)
        }
        Family::DoubleCorona => reduce_double_corona(spec.n, spec.p, k).map(Some),
        Family::Complete => Err(Error::Unsupported(
            "no recurrence for complete graphs; use --method brute".into(),
        )),
    }
}

fn cmd_conv(
    ctx: &Context,
    spec: FamilySpec,
    k: usize,
    method: ConvMethod,
    verify: bool,
) -> CmdResult {
    check_threshold(k)?;
    let graph = spec.build()?;
    let mut results: BTreeMap<&str, ConversionNumber> = BTreeMap::new();
    let mut witness = None;
    let methods: &[ConvMethod] = if verify {
        &[ConvMethod::Formula, ConvMethod::Reduce, ConvMethod::Brute]
    } else {
        std::slice::from_ref(&method)
    };
    for &m in methods {
        match m {
            ConvMethod::Formula => match formula(spec, k) {
                Ok(v) => {
                    results.insert("formula", v);
                }
                Err(Error::Unsupported(_)) if verify => {}
                Err(e) => return Err(e.into()),
            },
            ConvMethod::Reduce => match reduction(spec, k) {
                Ok(Some(v)) => {
                    results.insert("reduce", v);
                }
                Ok(None) if verify => {}
                Ok(None) => {
                    return Err(invalid("the double-corona recurrence needs k >= 2"));
                }
                Err(Error::Unsupported(_)) if verify => {}
                Err(e) => return Err(e.into()),
            },
            ConvMethod::Brute => {
                let report = brute_force_min(&graph, k, &ctx.search())?;
                results.insert("brute", report.minimum);
                witness = report.witness;
            }
        }
    }
    let value = results
        .get(match method {
            ConvMethod::Formula => "formula",
            ConvMethod::Reduce => "reduce",
            ConvMethod::Brute => "brute",
        })
        .or_else(|| results.values().next())
        .copied()
        .ok_or_else(|| invalid("no method applies"))?;
    let agree = results.values().all(|&v| v == value);
    let out = match ctx.format(Format::Json) {
        Format::Text => {
            let mut out = format!("{value}\n");
            if let Some(w) = &witness {
                let _ = writeln!(out, "witness: {:?}", w.as_slice());
            }
            if verify {
                for (name, v) in &results {
                    let _ = writeln!(out, "{name}: {v}");
                }
            }
            out
        }
        _ => {
            let mut doc = json!({
                "family": spec.family,
                "n": spec.n,
                "p": spec.p,
                "k": k,
                "num_vertices": graph.num_vertices(),
                "conversion_number": value,
            });
            if let Some(w) = &witness {
                doc["witness"] = json!(w);
            }
            if verify {
                doc["methods"] = json!(results);
                doc["agree"] = json!(agree);
            }
            to_json(&doc)
        }
    };
    if agree {
        Ok(out)
    } else {
        Err(Failure {
            kind: FailureKind::Mismatch,
            message: format!("methods disagree: {results:?}"),
            output: Some(out),
        })
    }
}

fn cmd_min_set(
    ctx: &Context,
    spec: FamilySpec,
    k: usize,
    size_limit: Option<usize>,
    prune: bool,
) -> CmdResult {
    check_threshold(k)?;
    let graph = spec.build()?;
    let config = SearchConfig {
        size_limit,
        prune,
        ..ctx.search()
    };
    let report = brute_force_min(&graph, k, &config)?;
    let pattern = match (spec.family, &report.witness) {
        (Family::DoubleCorona, Some(w)) => seed_to_pattern(w, spec.n, spec.p).ok(),
        _ => None,
    };
    Ok(match ctx.format(Format::Json) {
        Format::Text => {
            let mut out = format!(
                "minimum: {}\nsets examined: {}\n",
                report.minimum, report.sets_examined
            );
            if let Some(w) = &report.witness {
                let labels: Vec<_> = w.iter().map(|v| describe(&graph, v)).collect();
                let _ = writeln!(out, "witness: {}", labels.join(" "));
            }
            if let Some(pattern) = &pattern {
                let _ = writeln!(out, "pattern: {pattern}");
            }
            for (size, tally) in &report.tallies {
                let _ = writeln!(
                    out,
                    "size {size}: {}/{} converting",
                    tally.converting, tally.examined
                );
            }
            out
        }
        _ => {
            let mut doc = serde_json::to_value(&report).expect("serialisable report");
            if let Some(pattern) = pattern {
                doc["pattern"] = json!(pattern);
            }
            to_json(&doc)
        }
    })
}

fn cmd_probability(
    ctx: &Context,
    spec: FamilySpec,
    k: usize,
    method: ProbMethod,
    trials: u64,
    size: Option<usize>,
    digits: usize,
) -> CmdResult {
    check_threshold(k)?;
    let graph = spec.build()?;
    let size = match size {
        Some(s) => s,
        None => formula(spec, k)?.value(),
    };
    let mut doc = json!({
        "family": spec.family,
        "n": spec.n,
        "p": spec.p,
        "k": k,
        "size": size,
    });
    let text = match method {
        ProbMethod::Formula => {
            if spec.family != Family::Corona {
                return Err(invalid(format!(
                    "no closed-form probability for {}; use --method enumerate or montecarlo",
                    spec.family
                )));
            }
            let minimum = conv_corona(spec.n, spec.p, k)?.value();
            if size != minimum {
                return Err(invalid(format!(
                    "the formula covers seeds of size C_k = {minimum} only"
                )));
            }
            let prob = success_probability_corona(spec.n, spec.p, k)?;
            let rf = resilience_factor(spec.n, spec.p, k)?;
            doc["method"] = json!("formula");
            doc["probability"] = json!(prob.to_json(digits));
            doc["resilience_factor"] = json!(rf.to_json(digits));
            format!("P(S) = {prob} ({})\nRF = {rf}\n", prob.to_decimal(digits))
        }
        ProbMethod::Enumerate => {
            let prob = enumeration_probability(&graph, k, size, ctx.budget)?;
            let rf = prob.complement();
            doc["method"] = json!("enumerate");
            doc["probability"] = json!(prob.to_json(digits));
            doc["resilience_factor"] = json!(rf.to_json(digits));
            format!("P(S) = {prob} ({})\nRF = {rf}\n", prob.to_decimal(digits))
        }
        ProbMethod::Montecarlo => {
            let report = monte_carlo_probability(&graph, k, size, trials, ctx.rng_seed)?;
            doc["method"] = json!("montecarlo");
            doc["resilience_factor_estimate"] = json!(1.0 - report.estimate);
            let line = format!(
                "P(S) ≈ {:.6} ± {:.6} ({}/{} trials, rng seed {})\n",
                report.estimate,
                report.half_width,
                report.successes,
                report.trials,
                report.rng_seed
            );
            doc["estimate"] = json!(report);
            line
        }
    };
    Ok(match ctx.format(Format::Json) {
        Format::Text => text,
        _ => to_json(&doc),
    })
}

#[derive(Debug, Serialize)]
struct SweepRow {
    family: Family,
    n: usize,
    p: usize,
    k: usize,
    num_vertices: usize,
    formula: Option<ConversionNumber>,
    reduce: Option<ConversionNumber>,
    /// Brute-force minimum, or `None` when refused or skipped.
    brute: Option<ConversionNumber>,
    brute_status: &'static str,
    agree: bool,
}

fn cell(v: Option<ConversionNumber>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn cmd_sweep(
    ctx: &Context,
    family: Family,
    ns: RangeInclusive<usize>,
    ps: RangeInclusive<usize>,
    ks: RangeInclusive<usize>,
    brute: bool,
) -> CmdResult {
    if family == Family::Complete {
        return Err(invalid(
            "sweep covers the cycle, corona and double-corona families",
        ));
    }
    let ps = if family == Family::Cycle { 0..=0 } else { ps };
    let mut rows = Vec::new();
    for n in ns {
        for p in ps.clone() {
            for k in ks.clone() {
                let spec = FamilySpec { family, n, p };
                check_threshold(k)?;
                let graph = spec.build()?;
                let formula = formula(spec, k)?;
                let reduce = reduction(spec, k)?;
                let (brute, brute_status) = if brute {
                    match brute_force_min(&graph, k, &ctx.search()) {
                        Ok(report) => (Some(report.minimum), "ok"),
                        Err(Error::BudgetExceeded { .. }) => (None, "budget"),
                        Err(e) => return Err(e.into()),
                    }
                } else {
                    (None, "skipped")
                };
                let agree =
                    reduce.is_none_or(|r| r == formula) && brute.is_none_or(|b| b == formula);
                rows.push(SweepRow {
                    family,
                    n,
                    p,
                    k,
                    num_vertices: graph.num_vertices(),
                    formula: Some(formula),
                    reduce,
                    brute,
                    brute_status,
                    agree,
                });
            }
        }
    }
    let out = match ctx.format(Format::Csv) {
        Format::Json => to_json(&rows),
        _ => {
            let mut out = String::from("family,n,p,k,num_vertices,formula,reduce,brute,agree\n");
            for r in &rows {
                let brute = match r.brute_status {
                    "ok" => cell(r.brute),
                    status => status.to_string(),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.family,
                    r.n,
                    r.p,
                    r.k,
                    r.num_vertices,
                    cell(r.formula),
                    cell(r.reduce),
                    brute,
                    r.agree
                );
            }
            out
        }
    };
    if rows.iter().all(|r| r.agree) {
        Ok(out)
    } else {
        Err(Failure {
            kind: FailureKind::Mismatch,
            message: "closed form disagrees with another method in at least one row".into(),
            output: Some(out),
        })
    }
}
