//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification failure,
//! 4 property violation. Output depends only on the flags (and the seed),
//! except for the timing columns of `solve`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construction::{construct_pds, target_size, triangle_set};
use crate::experiments::{self, rng_for, sample_subset, ExperimentConfig};
use crate::grid::TriGrid;
use crate::propagation::{propagate, propagate_from_monitored, radius_of, MonitorState, Radius};
use crate::render::{self, Decoration};
use crate::set::VertexSet;
use crate::shift::shift_to_fixpoint;
use crate::solver::{solve, SolveOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_PROPERTY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "powerdom", version, about = "Power domination on hexagonal triangular grids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the grid T_k.
    Gen(GenArgs),
    /// Emit the ceil(k/3)-vertex power-dominating set.
    Construct(ConstructArgs),
    /// Run the propagation process and emit its trace or a round diagram.
    Propagate(PropagateArgs),
    /// Number of forcing rounds needed to monitor the grid.
    Radius(RadiusArgs),
    /// Exact power domination numbers by exhaustive search.
    Solve(SolveArgs),
    /// Run the shifting process on a set and emit each step.
    ShiftDemo(ShiftDemoArgs),
    /// Run the lower-bound property suites.
    Experiments(ExperimentsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Tikz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    /// Run the propagation engine on the set and report the outcome.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SetSource {
    /// JSON file holding a list of [x,y,z] triples (default: the construction).
    #[arg(long, conflicts_with = "triangle")]
    pub set: Option<PathBuf>,
    /// Start from the corner triangle as already monitored, skipping domination.
    #[arg(long)]
    pub triangle: bool,
}

#[derive(Debug, Args)]
pub struct PropagateArgs {
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    #[command(flatten)]
    pub source: SetSource,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    #[command(flatten)]
    pub source: SetSource,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KSelection {
    /// A side length `N` or an inclusive range `A..B`.
    #[arg(long, value_parser = parse_k_range, required_unless_present = "k_range", conflicts_with = "k_range")]
    pub k: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_k_range)]
    pub k_range: Option<RangeInclusive<usize>>,
}

impl KSelection {
    fn range(&self) -> RangeInclusive<usize> {
        self.k
            .clone()
            .or_else(|| self.k_range.clone())
            .expect("clap enforces one of them")
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub ks: KSelection,
    #[arg(long)]
    pub size_cap: Option<usize>,
    /// Search orbit representatives only, seeded with the construction as upper bound.
    #[arg(long)]
    pub symmetry: bool,
    /// Skip vertices whose closed neighbourhood lies inside another's.
    #[arg(long)]
    pub prune: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: SolveFormat,
    /// Write one JSON result per line to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ShiftDemoArgs {
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Inclusion probability for the random starting set.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Starting set as a JSON list of [x,y,z] triples instead of a random one.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Maximum number of snapshots to emit; the final set is always included.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExperimentsArgs {
    #[command(flatten)]
    pub ks: KSelection,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random sets per axis for the shift suites.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Random power-dominating sets for the claim suites.
    #[arg(long, default_value_t = 20)]
    pub random_sets: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_k(s: &str) -> Result<usize, String> {
    let k: usize = s.trim().parse().map_err(|_| format!("`{s}` is not a side length"))?;
    if k == 0 {
        return Err("side length must be at least 1".into());
    }
    Ok(k)
}

fn parse_k_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse_k(a)?, parse_k(b.trim_start_matches('='))?),
        None => {
            let k = parse_k(s)?;
            (k, k)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Result of one invocation, captured so it can be tested without a process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

pub fn main() -> i32 {
    let outcome = run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(e.exit_code(), text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&cli.command)
}

pub fn execute(command: &Command) -> Outcome {
    let result = match command {
        Command::Gen(a) => cmd_gen(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Propagate(a) => cmd_propagate(a),
        Command::Radius(a) => cmd_radius(a),
        Command::Solve(a) => cmd_solve(a),
        Command::ShiftDemo(a) => cmd_shift_demo(a),
        Command::Experiments(a) => cmd_experiments(a),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_USAGE, format!("error: {msg}\n"))
}

fn grid_for(k: usize) -> Result<TriGrid, Outcome> {
    TriGrid::new(k).map_err(usage)
}

/// Writes `body` to `out` if given, otherwise returns it as stdout.
fn emit(body: String, out: &Option<PathBuf>, code: i32, stderr: String) -> CmdResult {
    match out {
        Some(path) => {
            std::fs::write(path, body)
                .map_err(|e| Outcome::fail(1, format!("error: writing {}: {e}\n", path.display())))?;
            Ok(Outcome {
                code,
                stdout: String::new(),
                stderr,
            })
        }
        None => Ok(Outcome {
            code,
            stdout: body,
            stderr,
        }),
    }
}

fn read_set(grid: &TriGrid, path: &PathBuf) -> Result<VertexSet, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))?;
    render::parse_set_json(grid, &text).map_err(usage)
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn cmd_gen(a: &GenArgs) -> CmdResult {
    let grid = grid_for(a.k)?;
    let body = match a.format {
        Format::Json => with_newline(render::grid_json(&grid)),
        Format::Dot => render::dot(&grid, &Decoration::default(), &format!("T{}", a.k)),
        Format::Tikz => render::tikz(&grid, &Decoration::default()),
    };
    emit(body, &a.out, EXIT_OK, String::new())
}

pub fn cmd_construct(a: &ConstructArgs) -> CmdResult {
    let grid = grid_for(a.k)?;
    let s = construct_pds(&grid);
    let state = propagate(&grid, &s).expect("same grid");
    let verified = state.is_complete() && s.len() == target_size(a.k);
    let body = match a.format {
        Format::Json if a.verify => {
            let radius = match radius_of(&state) {
                Radius::Rounds(r) => serde_json::json!(r),
                Radius::NotDominating => serde_json::Value::Null,
            };
            let doc = serde_json::json!({
                "k": a.k,
                "set": grid.coords_of(&s),
                "size": s.len(),
                "target_size": target_size(a.k),
                "power_dominating": state.is_complete(),
                "radius": radius,
            });
            with_newline(doc.to_string())
        }
        Format::Json => with_newline(render::set_json(&grid, &s)),
        Format::Dot => render::dot(
            &grid,
            &Decoration::from_propagation(Some(&s), &state),
            &format!("T{}", a.k),
        ),
        Format::Tikz => render::tikz(&grid, &Decoration::from_propagation(Some(&s), &state)),
    };
    if a.verify && !verified {
        let msg = format!(
            "error: construction for k={} failed verification (size {}, monitored {}/{})\n",
            a.k,
            s.len(),
            state.monitored.len(),
            grid.len()
        );
        return emit(body, &a.out, EXIT_VERIFY, msg);
    }
    emit(body, &a.out, EXIT_OK, String::new())
}

fn run_source(grid: &TriGrid, src: &SetSource) -> Result<(Option<VertexSet>, MonitorState, &'static str), Outcome> {
    if src.triangle {
        let t = triangle_set(grid);
        let st = propagate_from_monitored(grid, &t).expect("same grid");
        return Ok((None, st, "triangle"));
    }
    let (s, label) = match &src.set {
        Some(path) => (read_set(grid, path)?, "file"),
        None => (construct_pds(grid), "construction"),
    };
    let st = propagate(grid, &s).expect("same grid");
    Ok((Some(s), st, label))
}

pub fn cmd_propagate(a: &PropagateArgs) -> CmdResult {
    let grid = grid_for(a.k)?;
    let (s, state, _) = run_source(&grid, &a.source)?;
    let mut deco = Decoration::from_propagation(s.as_ref(), &state);
    if s.is_none() {
        deco.filled = Some(state.initial.clone());
    }
    let body = match a.format {
        Format::Json => render::trace_jsonl(&grid, &state),
        Format::Dot => render::dot(&grid, &deco, &format!("T{}", a.k)),
        Format::Tikz => render::tikz(&grid, &deco),
    };
    emit(body, &a.out, EXIT_OK, String::new())
}

pub fn cmd_radius(a: &RadiusArgs) -> CmdResult {
    let grid = grid_for(a.k)?;
    let (_, state, label) = run_source(&grid, &a.source)?;
    let radius = match radius_of(&state) {
        Radius::Rounds(r) => serde_json::json!(r),
        Radius::NotDominating => serde_json::Value::Null,
    };
    let doc = serde_json::json!({
        "k": a.k,
        "source": label,
        "power_dominating": state.is_complete(),
        "radius": radius,
        "monitored": state.monitored.len(),
        "vertices": grid.len(),
    });
    emit(with_newline(doc.to_string()), &a.out, EXIT_OK, String::new())
}

pub fn cmd_solve(a: &SolveArgs) -> CmdResult {
    let mut table = String::new();
    let mut json = String::new();
    let mut mismatches = Vec::new();
    writeln!(
        table,
        "{:>3} {:>6} {:>8} {:>10} {:>12} {:>14} {:>11}",
        "k", "|V|", "gamma_p", "ceil(k/3)", "status", "sets_tested", "elapsed_ms"
    )
    .unwrap();
    for k in a.ks.range() {
        let grid = grid_for(k)?;
        let opts = SolveOptions {
            size_cap: a.size_cap,
            symmetry: a.symmetry,
            prune: a.prune,
            parallel: true,
            upper_bound: a.symmetry.then(|| construct_pds(&grid)),
        };
        let r = solve(&grid, &opts).map_err(|e| Outcome::fail(1, format!("error: {e}\n")))?;
        let expected = target_size(k);
        let status = match r.gamma_p {
            Some(g) if g == expected => "match",
            Some(_) => {
                mismatches.push(k);
                "MISMATCH"
            }
            None if r.certified_lower_bound > expected => {
                mismatches.push(k);
                "MISMATCH"
            }
            None => "unresolved",
        };
        let gamma = r
            .gamma_p
            .map(|g| g.to_string())
            .unwrap_or_else(|| format!(">{}", r.certified_lower_bound - 1));
        writeln!(
            table,
            "{:>3} {:>6} {:>8} {:>10} {:>12} {:>14} {:>11}",
            k,
            grid.len(),
            gamma,
            expected,
            status,
            r.sets_tested,
            r.elapsed.as_millis()
        )
        .unwrap();
        json.push_str(&render::solve_json(&grid, &r));
        json.push('\n');
    }
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_VERIFY };
    let stderr = if mismatches.is_empty() {
        String::new()
    } else {
        format!("error: gamma_p differs from ceil(k/3) for k in {mismatches:?}\n")
    };
    match a.format {
        SolveFormat::Json => emit(json, &a.out, code, stderr),
        SolveFormat::Table => {
            if let Some(path) = &a.out {
                emit(json, &Some(path.clone()), code, String::new())?;
            }
            Ok(Outcome {
                code,
                stdout: table,
                stderr,
            })
        }
    }
}

pub fn cmd_shift_demo(a: &ShiftDemoArgs) -> CmdResult {
    let grid = grid_for(a.k)?;
    if !(0.0..=1.0).contains(&a.density) {
        return Err(usage("density must lie in [0, 1]"));
    }
    let start = match &a.set {
        Some(path) => read_set(&grid, path)?,
        None => sample_subset(&grid, a.density, &mut rng_for(a.seed, a.k, 0)),
    };
    let (_, trace) = shift_to_fixpoint(&grid, &start);
    let total = trace.steps.len();
    let shown: Vec<usize> = match a.steps {
        Some(n) if n < total => {
            let mut v: Vec<usize> = (0..n.saturating_sub(1)).collect();
            v.push(total - 1);
            v
        }
        _ => (0..total).collect(),
    };

    let mut table = String::new();
    writeln!(table, "step axis weight border").unwrap();
    for (i, s) in trace.steps.iter().enumerate() {
        let axis = s.axis.map(|a| a.to_string()).unwrap_or_else(|| "-".into());
        writeln!(table, "{i} {axis} {} {}", s.weight, s.border_size).unwrap();
    }

    let body = match a.format {
        Format::Json => with_newline(render::shift_trace_json(&grid, &trace, &shown)),
        Format::Dot | Format::Tikz => {
            let comment = if a.format == Format::Dot { "//" } else { "%" };
            let mut out = String::new();
            for line in table.lines() {
                writeln!(out, "{comment} {line}").unwrap();
            }
            if a.format == Format::Tikz {
                out.push_str(render::TIKZ_PREAMBLE);
            }
            for &i in &shown {
                let deco = Decoration {
                    filled: Some(trace.steps[i].set.clone()),
                    ..Default::default()
                };
                if a.format == Format::Dot {
                    out.push_str(&render::dot(&grid, &deco, &format!("step{i}")));
                } else {
                    writeln!(out, "% step {i}").unwrap();
                    out.push_str(&render::tikz_picture(&grid, &deco));
                }
            }
            if a.format == Format::Tikz {
                out.push_str(render::TIKZ_POSTAMBLE);
            }
            out
        }
    };
    emit(body, &a.out, EXIT_OK, String::new())
}

pub fn cmd_experiments(a: &ExperimentsArgs) -> CmdResult {
    let cfg = ExperimentConfig {
        seed: a.seed,
        samples: a.samples,
        random_sets: a.random_sets,
    };
    let mut out = String::new();
    writeln!(
        out,
        "{:>3} {:<16} {:>6} {:>8} {:>10} {:<6} detail",
        "k", "suite", "cases", "skipped", "violations", "status"
    )
    .unwrap();
    let mut failed = 0;
    for k in a.ks.range() {
        let grid = grid_for(k)?;
        for rep in experiments::run_all(&grid, &cfg) {
            let status = if rep.passed() { "pass" } else { "FAIL" };
            failed += usize::from(!rep.passed());
            writeln!(
                out,
                "{:>3} {:<16} {:>6} {:>8} {:>10} {:<6} {}",
                rep.k, rep.suite, rep.cases, rep.skipped, rep.violations, status, rep.detail
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        "{}",
        if failed == 0 {
            "all suites passed".to_string()
        } else {
            format!("{failed} suite(s) failed")
        }
    )
    .unwrap();
    let code = if failed == 0 { EXIT_OK } else { EXIT_PROPERTY };
    emit(out, &a.out, code, String::new())
}
