//! Command-line surface: scriptable subcommands over the library.
//!
//! Every run echoes its resolved configuration next to the result, output
//! is deterministic for a fixed invocation and seed, and exit codes follow
//! a shell-friendly contract: 0 when a witness or value was produced, 1
//! for a proven or budget-limited "none", 2 for input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::{n0_probe, sr_exact, tk_probe, SearchBudget};
use crate::finder::{
    certified_edge_budget, empirical_probe, find_independent_ap, find_independent_ap_in_family,
    n0_upper_bound, selected_family, sr_upper_bound, tk_upper_bound, FinderConfig, Witness,
    DEFAULT_EPSILON, DEFAULT_ETA,
};
use crate::graph::{parse_edge_list, Coloring, FixedPointMode, IntGraph, PermutationMap};
use crate::progression::{DifferenceFamily, Progression};
use crate::sieve::{build_sieve, SieveTable};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "indap",
    version,
    about = "Independent arithmetic progressions: witnesses, certified budgets, and exhaustive probes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Find an independent k-term progression in a graph on [n].
    Find(FindArgs),
    /// Find a rainbow k-term progression under a coloring of [n].
    Rainbow(RainbowArgs),
    /// Find a k-term progression a permutation maps entirely off itself.
    Permute(PermuteArgs),
    /// Certified upper bounds for the three pipelines.
    Bounds(BoundsArgs),
    /// Exact extremal values by exhaustive search.
    Exact(ExactArgs),
    /// Probes: empirical tightness and horizon-limited extremal scans.
    Probe(ProbeArgs),
    /// Re-validate a witness produced by find, rainbow, or permute.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    Weak,
}

impl ModeArg {
    fn to_mode(self) -> FixedPointMode {
        match self {
            ModeArg::Strict => FixedPointMode::Strict,
            ModeArg::Weak => FixedPointMode::Weak,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeArg::Strict => "strict",
            ModeArg::Weak => "weak",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[default]
    Auto,
    Coprime,
    Prime,
    All,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::Auto => "auto",
            FamilyArg::Coprime => "coprime",
            FamilyArg::Prime => "prime",
            FamilyArg::All => "all",
        }
    }

    /// The explicit family, or None for auto (regime order).
    fn to_family(self, k: usize) -> Option<DifferenceFamily> {
        match self {
            FamilyArg::Auto => None,
            FamilyArg::Coprime => Some(DifferenceFamily::CoprimeUpTo(k)),
            FamilyArg::Prime => Some(DifferenceFamily::Prime),
            FamilyArg::All => Some(DifferenceFamily::All),
        }
    }
}

/// Constants shared by the finder-backed subcommands.
#[derive(Args, Debug)]
struct ConstantOpts {
    /// Regime constant in (0, 1]; defaults to the pinned value.
    #[arg(long)]
    eta: Option<f64>,
    /// Certificate constant in (0, 1); defaults to the pinned value.
    #[arg(long)]
    epsilon: Option<f64>,
}

impl ConstantOpts {
    fn config(&self) -> Result<FinderConfig> {
        FinderConfig::new(
            self.eta.unwrap_or(DEFAULT_ETA),
            self.epsilon.unwrap_or(DEFAULT_EPSILON),
        )
    }
}

/// Limits for the exhaustive searches.
#[derive(Args, Debug)]
struct BudgetOpts {
    /// Node limit per search invocation.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit per search invocation, in seconds.
    #[arg(long)]
    budget_secs: Option<u64>,
}

impl BudgetOpts {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget_nodes {
            b.node_limit = n;
        }
        if let Some(s) = self.budget_secs {
            b.time_limit = Duration::from_secs(s);
        }
        b
    }

    fn echo(&self, b: &SearchBudget) -> Value {
        json!({
            "budget_nodes": b.node_limit,
            "budget_secs": b.time_limit.as_secs_f64(),
        })
    }
}

#[derive(Args, Debug)]
struct FindArgs {
    /// Edge-list file: "u v" per line, '#' comments, "u u" forbids vertex u.
    graph: PathBuf,
    /// Progression length.
    #[arg(long)]
    k: usize,
    /// Ambient interval [n]; defaults to the largest vertex in the file.
    #[arg(long)]
    n: Option<usize>,
    /// Difference family to scan; auto follows the regime rule with
    /// fallbacks.
    #[arg(long, value_enum, default_value_t)]
    family: FamilyArg,
    #[command(flatten)]
    constants: ConstantOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct RainbowArgs {
    /// Coloring file: "i c" per line, every i in [n] exactly once.
    coloring: PathBuf,
    #[arg(long)]
    k: usize,
    /// Must equal the coloring's n when given.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    family: FamilyArg,
    #[command(flatten)]
    constants: ConstantOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct PermuteArgs {
    /// Permutation file: one image line, or "i pi(i)" pairs.
    permutation: PathBuf,
    #[arg(long)]
    k: usize,
    /// Must equal the permutation's n when given.
    #[arg(long)]
    n: Option<usize>,
    /// Fixed-point convention: strict forbids them, weak ignores them.
    #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t)]
    family: FamilyArg,
    #[command(flatten)]
    constants: ConstantOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Color-class multiplicity bound.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Progression length.
    #[arg(long)]
    k: usize,
    /// Scan horizon for the permutation threshold bound.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    constants: ConstantOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[command(subcommand)]
    what: ExactWhat,
}

#[derive(Subcommand, Debug)]
enum ExactWhat {
    /// Exact sub-Ramsey value: least n (proven through the horizon) at
    /// which every multiplicity-m coloring has a rainbow k-term
    /// progression.
    Sr(ExactSrArgs),
}

#[derive(Args, Debug)]
struct ExactSrArgs {
    /// Multiplicity bound.
    m: usize,
    /// Progression length.
    k: usize,
    /// Scan horizon; defaults to 2k.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    budget: BudgetOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct ProbeArgs {
    #[command(subcommand)]
    what: ProbeWhat,
}

#[derive(Subcommand, Debug)]
enum ProbeWhat {
    /// Fraction of seeded random graphs at a given edge count that still
    /// admit an independent progression.
    Tightness(TightnessArgs),
    /// Per-n exhaustive search for permutations leaving no progression
    /// free.
    N0(N0Args),
    /// Per-m exhaustive search for equinumerous colorings with no rainbow
    /// progression.
    Tk(TkArgs),
}

#[derive(Args, Debug)]
struct TightnessArgs {
    /// Ambient interval [n].
    #[arg(long)]
    n: usize,
    /// Progression length.
    #[arg(long)]
    k: usize,
    /// Edge count per sampled graph; defaults to the certified budget.
    #[arg(long)]
    edges: Option<usize>,
    /// Number of sampled graphs.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Seed for the single random stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    constants: ConstantOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct N0Args {
    /// Progression length (at least 3).
    #[arg(long)]
    k: usize,
    /// Fixed-point convention.
    #[arg(long, value_enum, default_value_t = ModeArg::Weak)]
    mode: ModeArg,
    /// Probe horizon: every n up to this gets a verdict.
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[command(flatten)]
    budget: BudgetOpts,
    #[command(flatten)]
    constants: ConstantOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct TkArgs {
    /// Number of colors.
    #[arg(long)]
    t: usize,
    /// Progression length.
    #[arg(long)]
    k: usize,
    /// Largest class size probed.
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[command(flatten)]
    budget: BudgetOpts,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Graph,
    Coloring,
    Permutation,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Witness file: a bare witness object or a full find/rainbow/permute
    /// output.
    witness: PathBuf,
    /// Original input to re-check the witness against.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Input kind; inferred from the output's "command" field when absent.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Expected progression length.
    #[arg(long)]
    k: Option<usize>,
    /// Fixed-point convention for permutation inputs; inferred from the
    /// output's config echo when absent.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Ambient interval override for graph inputs.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

/// Parses `args` and runs the selected subcommand, writing results to
/// `stdout` and diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_FOUND
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_ERROR
                }
            };
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.cmd {
        Cmd::Find(a) => cmd_find(a, out),
        Cmd::Rainbow(a) => cmd_rainbow(a, out),
        Cmd::Permute(a) => cmd_permute(a, out),
        Cmd::Bounds(a) => cmd_bounds(a, out),
        Cmd::Exact(a) => match a.what {
            ExactWhat::Sr(s) => cmd_exact_sr(s, out),
        },
        Cmd::Probe(a) => match a.what {
            ProbeWhat::Tightness(t) => cmd_probe_tightness(t, out),
            ProbeWhat::N0(t) => cmd_probe_n0(t, out),
            ProbeWhat::Tk(t) => cmd_probe_tk(t, out),
        },
        Cmd::Verify(a) => cmd_verify(a, out),
    }
}

fn emit(out: &mut dyn Write, format: FormatArg, v: &Value) -> Result<()> {
    match format {
        FormatArg::Json => writeln!(out, "{}", serde_json::to_string_pretty(v)?)?,
        FormatArg::Text => {
            let mut lines = Vec::new();
            flatten("", v, &mut lines);
            for line in lines {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

/// One "path: value" line per leaf, objects expanded, arrays kept inline.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten(&path, val, out);
            }
        }
        other => out.push(format!("{prefix}: {other}")),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidConfig { msg: msg.to_string() })
    }
}

fn table_for(n: usize) -> Result<SieveTable> {
    build_sieve(n.max(2))
}

/// Default scan horizon for the permutation-threshold bound; safely above
/// the observed growth of the certified values.
fn n0_horizon(k: usize) -> usize {
    ((8.0 * (k * k) as f64 * (k as f64).ln()).ceil() as usize).max(64)
}

fn witness_result(
    w: Option<&Witness>,
    none_reason: &str,
) -> (Value, i32) {
    match w {
        Some(w) => (
            json!({
                "aps_scanned": w.aps_scanned,
                "found": true,
                "witness": w.to_json(),
            }),
            EXIT_FOUND,
        ),
        None => (
            json!({
                "found": false,
                "reason": none_reason,
            }),
            EXIT_NONE,
        ),
    }
}

fn search(
    g: &IntGraph,
    k: usize,
    family: FamilyArg,
    cfg: &FinderConfig,
    table: &SieveTable,
) -> Option<Witness> {
    match family.to_family(k) {
        None => find_independent_ap(g, k, cfg, table),
        Some(f) => find_independent_ap_in_family(g, k, f, table),
    }
}

fn cmd_find(a: FindArgs, out: &mut dyn Write) -> Result<i32> {
    require(a.k >= 1, "k must be at least 1")?;
    let text = std::fs::read_to_string(&a.graph)?;
    let lines = parse_edge_list(&text)?;
    let file_max = lines.iter().map(|l| l.u.max(l.v)).max();
    let n = match a.n {
        Some(n) => n,
        None => file_max.ok_or(Error::InvalidConfig {
            msg: "edge list names no vertices; pass --n".to_string(),
        })?,
    };
    let g = IntGraph::from_edge_lines(n, &lines)?;
    let cfg = a.constants.config()?;
    let table = table_for(n)?;
    let w = search(&g, a.k, a.family, &cfg, &table);
    let config = json!({
        "edges": g.edge_count(),
        "epsilon": cfg.epsilon,
        "eta": cfg.eta,
        "family": a.family.name(),
        "forbidden": g.forbidden().iter_ones().collect::<Vec<_>>(),
        "input": a.graph.display().to_string(),
        "k": a.k,
        "n": n,
    });
    let (result, code) = witness_result(
        w.as_ref(),
        "no independent progression of this length in [n]",
    );
    emit(out, a.format, &json!({"command": "find", "config": config, "result": result}))?;
    Ok(code)
}

fn cmd_rainbow(a: RainbowArgs, out: &mut dyn Write) -> Result<i32> {
    require(a.k >= 1, "k must be at least 1")?;
    let text = std::fs::read_to_string(&a.coloring)?;
    let c = Coloring::parse(&text)?;
    if let Some(n) = a.n {
        require(
            n == c.n(),
            &format!("--n {n} disagrees with the coloring's n = {}", c.n()),
        )?;
    }
    let g = IntGraph::from_coloring(&c);
    let cfg = a.constants.config()?;
    let table = table_for(c.n())?;
    let w = search(&g, a.k, a.family, &cfg, &table);
    let config = json!({
        "colors": c.color_count(),
        "derived_edges": g.edge_count(),
        "epsilon": cfg.epsilon,
        "eta": cfg.eta,
        "family": a.family.name(),
        "input": a.coloring.display().to_string(),
        "k": a.k,
        "max_multiplicity": c.max_multiplicity(),
        "n": c.n(),
    });
    let (result, code) =
        witness_result(w.as_ref(), "no rainbow progression of this length under the coloring");
    emit(out, a.format, &json!({"command": "rainbow", "config": config, "result": result}))?;
    Ok(code)
}

fn cmd_permute(a: PermuteArgs, out: &mut dyn Write) -> Result<i32> {
    require(a.k >= 1, "k must be at least 1")?;
    let text = std::fs::read_to_string(&a.permutation)?;
    let p = PermutationMap::parse(&text)?;
    if let Some(n) = a.n {
        require(
            n == p.n(),
            &format!("--n {n} disagrees with the permutation's n = {}", p.n()),
        )?;
    }
    let mode = a.mode.to_mode();
    let g = IntGraph::from_permutation(&p, mode);
    let cfg = a.constants.config()?;
    let table = table_for(p.n())?;
    let w = search(&g, a.k, a.family, &cfg, &table);
    let config = json!({
        "derived_edges": g.edge_count(),
        "epsilon": cfg.epsilon,
        "eta": cfg.eta,
        "family": a.family.name(),
        "fixed_points": p.fixed_points(),
        "forbidden": g.forbidden().iter_ones().collect::<Vec<_>>(),
        "input": a.permutation.display().to_string(),
        "k": a.k,
        "mode": a.mode.name(),
        "n": p.n(),
    });
    let reason = match mode {
        FixedPointMode::Strict => {
            "no progression is mapped off itself (strict mode forbids fixed points)"
        }
        FixedPointMode::Weak => "no progression is mapped off itself",
    };
    let (result, code) = witness_result(w.as_ref(), reason);
    emit(out, a.format, &json!({"command": "permute", "config": config, "result": result}))?;
    Ok(code)
}

fn cmd_bounds(a: BoundsArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = a.constants.config()?;
    let sr = sr_upper_bound(a.m, a.k, &cfg)?;
    let tk = tk_upper_bound(a.k, &cfg)?;
    let horizon = a.n.unwrap_or_else(|| n0_horizon(a.k));
    let table = table_for(horizon)?;
    let n0 = match n0_upper_bound(a.k, &cfg, &table, horizon) {
        Ok(v) => json!(v),
        Err(Error::HorizonExhausted { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let config = json!({
        "epsilon": cfg.epsilon,
        "eta": cfg.eta,
        "horizon": horizon,
        "k": a.k,
        "m": a.m,
    });
    let result = json!({
        "n0_upper_bound": n0,
        "sr_upper_bound": sr,
        "tk_upper_bound": tk,
    });
    emit(out, a.format, &json!({"command": "bounds", "config": config, "result": result}))?;
    Ok(EXIT_FOUND)
}

fn cmd_exact_sr(a: ExactSrArgs, out: &mut dyn Write) -> Result<i32> {
    require(a.m >= 1, "m must be at least 1")?;
    require(a.k >= 1, "k must be at least 1")?;
    let n_max = a.n.unwrap_or(2 * a.k);
    require(n_max >= 1, "horizon must be at least 1")?;
    let budget = a.budget.budget();
    let report = sr_exact(a.m, a.k, n_max, &budget);
    let code = if report.value.is_some() { EXIT_FOUND } else { EXIT_NONE };
    let mut config = a.budget.echo(&budget);
    let obj = config.as_object_mut().expect("echo is an object");
    obj.insert("k".into(), json!(a.k));
    obj.insert("m".into(), json!(a.m));
    obj.insert("n_max".into(), json!(n_max));
    let result = serde_json::to_value(&report)?;
    emit(out, a.format, &json!({"command": "exact sr", "config": config, "result": result}))?;
    Ok(code)
}

fn cmd_probe_tightness(a: TightnessArgs, out: &mut dyn Write) -> Result<i32> {
    require(a.k >= 1, "k must be at least 1")?;
    require(a.n >= 2, "n must be at least 2")?;
    require(a.trials >= 1, "trials must be at least 1")?;
    let cfg = a.constants.config()?;
    let table = table_for(a.n)?;
    let family = selected_family(a.n, a.k, &cfg);
    let budget = certified_edge_budget(a.n, a.k, family, &table);
    let edges = a.edges.unwrap_or(budget);
    let fraction = empirical_probe(a.n, a.k, edges, a.trials, a.seed, &table)?;
    let config = json!({
        "certified_budget": budget,
        "edges": edges,
        "epsilon": cfg.epsilon,
        "eta": cfg.eta,
        "family": family.to_string(),
        "k": a.k,
        "n": a.n,
        "seed": a.seed,
        "trials": a.trials,
    });
    let result = json!({ "fraction": fraction });
    emit(
        out,
        a.format,
        &json!({"command": "probe tightness", "config": config, "result": result}),
    )?;
    Ok(EXIT_FOUND)
}

fn cmd_probe_n0(a: N0Args, out: &mut dyn Write) -> Result<i32> {
    if a.k < 3 {
        return Err(Error::KTooSmall { k: a.k, min: 3 });
    }
    require(a.n >= 1, "horizon must be at least 1")?;
    let budget = a.budget.budget();
    let cfg = a.constants.config()?;
    let horizon = n0_horizon(a.k);
    let table = table_for(horizon)?;
    let certified_upper = n0_upper_bound(a.k, &cfg, &table, horizon).ok();
    let report = n0_probe(a.k, a.mode.to_mode(), a.n, &budget, certified_upper);
    let mut config = a.budget.echo(&budget);
    let obj = config.as_object_mut().expect("echo is an object");
    obj.insert("epsilon".into(), json!(cfg.epsilon));
    obj.insert("eta".into(), json!(cfg.eta));
    obj.insert("k".into(), json!(a.k));
    obj.insert("mode".into(), json!(a.mode.name()));
    obj.insert("n_max".into(), json!(a.n));
    let result = serde_json::to_value(&report)?;
    emit(out, a.format, &json!({"command": "probe n0", "config": config, "result": result}))?;
    Ok(EXIT_FOUND)
}

fn cmd_probe_tk(a: TkArgs, out: &mut dyn Write) -> Result<i32> {
    require(a.t >= 1, "t must be at least 1")?;
    require(a.k >= 1, "k must be at least 1")?;
    require(a.m >= 1, "m must be at least 1")?;
    let budget = a.budget.budget();
    let report = tk_probe(a.t, a.k, a.m, &budget);
    let mut config = a.budget.echo(&budget);
    let obj = config.as_object_mut().expect("echo is an object");
    obj.insert("k".into(), json!(a.k));
    obj.insert("m_max".into(), json!(a.m));
    obj.insert("t".into(), json!(a.t));
    let result = serde_json::to_value(&report)?;
    emit(out, a.format, &json!({"command": "probe tk", "config": config, "result": result}))?;
    Ok(EXIT_FOUND)
}

fn json_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or(Error::InvalidConfig {
            msg: format!("witness field '{key}' missing or not a non-negative integer"),
        })
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(&a.witness)?;
    let root: Value = serde_json::from_str(&text)?;
    let (wv, command, config_echo) = if root.get("start").is_some() {
        (&root, None, None)
    } else if let Some(w) = root.pointer("/result/witness") {
        (
            w,
            root.get("command").and_then(Value::as_str),
            root.get("config"),
        )
    } else {
        return Err(Error::InvalidConfig {
            msg: "no witness object found (expected a bare witness or a full run output)"
                .to_string(),
        });
    };

    let kind = a.kind.or(match command {
        Some("find") => Some(KindArg::Graph),
        Some("rainbow") => Some(KindArg::Coloring),
        Some("permute") => Some(KindArg::Permutation),
        _ => None,
    });
    let mode = a
        .mode
        .map(ModeArg::to_mode)
        .or_else(|| {
            config_echo
                .and_then(|c| c.get("mode"))
                .and_then(Value::as_str)
                .map(|s| match s {
                    "weak" => FixedPointMode::Weak,
                    _ => FixedPointMode::Strict,
                })
        })
        .unwrap_or(FixedPointMode::Strict);

    let start = json_usize(wv, "start")?;
    let diff = json_usize(wv, "diff")?;
    let length = json_usize(wv, "length")?;
    let elements: Vec<usize> = wv
        .get("elements")
        .and_then(Value::as_array)
        .map(|xs| xs.iter().filter_map(Value::as_u64).map(|x| x as usize).collect())
        .unwrap_or_default();

    let mut checks: Vec<Value> = Vec::new();
    let mut valid = true;
    let check = |name: &str, ok: bool, checks: &mut Vec<Value>, valid: &mut bool| {
        checks.push(json!({"check": name, "ok": ok}));
        *valid &= ok;
    };

    let prog = Progression::new(start, diff, length).ok();
    check("progression fields", prog.is_some(), &mut checks, &mut valid);
    if let Some(p) = prog {
        check(
            "elements match start/diff/length",
            elements == p.elements(),
            &mut checks,
            &mut valid,
        );
        if let Some(k) = a.k {
            check("length equals k", p.length == k, &mut checks, &mut valid);
        }
        if let Some(path) = &a.input {
            let kind = kind.ok_or(Error::InvalidConfig {
                msg: "cannot infer the input kind; pass --kind".to_string(),
            })?;
            let ok = recheck_against_input(path, kind, &p, mode, a.n)?;
            let name = match kind {
                KindArg::Graph => "independent in graph",
                KindArg::Coloring => "rainbow under coloring",
                KindArg::Permutation => "mapped off itself by permutation",
            };
            check(name, ok, &mut checks, &mut valid);
        }
    }

    let config = json!({
        "input": a.input.as_ref().map(|p| p.display().to_string()),
        "k": a.k,
        "kind": kind.map(|k| match k {
            KindArg::Graph => "graph",
            KindArg::Coloring => "coloring",
            KindArg::Permutation => "permutation",
        }),
        "mode": match mode {
            FixedPointMode::Strict => "strict",
            FixedPointMode::Weak => "weak",
        },
        "witness": a.witness.display().to_string(),
    });
    let result = json!({ "checks": checks, "valid": valid });
    emit(out, a.format, &json!({"command": "verify", "config": config, "result": result}))?;
    Ok(if valid { EXIT_FOUND } else { EXIT_NONE })
}

fn recheck_against_input(
    path: &Path,
    kind: KindArg,
    p: &Progression,
    mode: FixedPointMode,
    n_override: Option<usize>,
) -> Result<bool> {
    let text = std::fs::read_to_string(path)?;
    Ok(match kind {
        KindArg::Graph => {
            let lines = parse_edge_list(&text)?;
            let file_max = lines.iter().map(|l| l.u.max(l.v)).max().unwrap_or(0);
            let n = n_override.unwrap_or(0).max(file_max).max(p.last());
            let g = IntGraph::from_edge_lines(n, &lines)?;
            g.is_independent(p).unwrap_or(false)
        }
        KindArg::Coloring => {
            let c = Coloring::parse(&text)?;
            c.is_rainbow(p).unwrap_or(false)
        }
        KindArg::Permutation => {
            let perm = PermutationMap::parse(&text)?;
            perm.leaves_free(p, mode).unwrap_or(false)
        }
    })
}
