//! `skoro`: Skorokhod and Fréchet distances between trace or curve files.
//!
//! Exit status: 0 on success, 1 when `decide` answers "no", 2 on usage or
//! input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skorokhod::io::{read_curve_path, read_trace_path, scale_curve, scale_trace};
use skorokhod::oracle::{oracle_frechet, GridSpec};
use skorokhod::{
    free_edge_interval, lift_trace, Cell, EdgeId, Interval, Mode, NormKind, PolygonalCurve, Problem, Window,
};

const AFTER_HELP: &str = "\
Trace files are CSV with header `t,x1,...,xn` or JSON `{\"samples\":[{\"t\":0,\"x\":[0]},...]}`.
Curve files (`frechet`, `--raw`) are CSV whose columns are all coordinates, or JSON `{\"vertices\":[[0,0],...]}`.
A `.json` extension selects JSON; anything else is read as CSV.

Exit status: 0 success, 1 `decide` answered no, 2 usage or input error.";

#[derive(Parser)]
#[command(name = "skoro", version, about = "Exact Skorokhod and Fréchet distances of polygonal traces")]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Skorokhod distance of two traces (Fréchet distance of the curves
    /// lifted with time as an extra coordinate).
    Distance(Common),
    /// Fréchet distance of two curves, with no time coordinate.
    Frechet(Common),
    /// Decide whether the distance is at most δ (exit 1 when it is not).
    Decide {
        #[command(flatten)]
        common: Common,
        /// The level δ ≥ 0.
        #[arg(long)]
        delta: f64,
        /// Require strictly increasing reparameterizations.
        #[arg(long)]
        bijective: bool,
        /// Read curve files and use the norm as given instead of lifting traces.
        #[arg(long)]
        raw: bool,
    },
    /// Dump the free intervals on every cell edge at level δ, as JSON.
    Freespace {
        #[command(flatten)]
        common: Common,
        /// The level δ ≥ 0.
        #[arg(long)]
        delta: f64,
        /// Read curve files and use the norm as given instead of lifting traces.
        #[arg(long)]
        raw: bool,
    },
    /// Bracket the distance with a sampled discrete-Fréchet oracle.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Samples per segment.
        #[arg(long, default_value_t = 100)]
        grid: usize,
        /// Read curve files and use the norm as given instead of lifting traces.
        #[arg(long)]
        raw: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Norm on values: l1, l2 or linf (the skoro variants l1skoro, l2skoro,
    /// linfskoro are accepted too). Traces are always compared under the
    /// skoro variant, i.e. max(‖value‖, |time|).
    #[arg(long, default_value = "l2")]
    norm: NormKind,
    /// Restrict matchings to vertex indices at most N apart.
    #[arg(long, value_name = "N")]
    window: Option<usize>,
    /// Decision tolerance τ: each decision runs at δ + τ.
    #[arg(long, env = "SKORO_TOL", default_value = "1e-9")]
    tol: f64,
    /// Per-coordinate positive scale factors applied at ingestion: one per
    /// value coordinate, then one for time (traces only).
    #[arg(long, value_delimiter = ',', value_name = "C1,...,CN,CT")]
    scale: Option<Vec<f64>>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// First input file.
    a: PathBuf,
    /// Second input file.
    b: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

/// How the two input files are turned into curves.
#[derive(Clone, Copy)]
enum Input {
    /// Traces compared under the skoro variant of the norm.
    Traces,
    /// Raw curves compared under the norm as given.
    Curves,
}

impl Input {
    fn raw(raw: bool) -> Self {
        if raw {
            Input::Curves
        } else {
            Input::Traces
        }
    }
}

struct Loaded {
    f: PolygonalCurve<f64>,
    g: PolygonalCurve<f64>,
    norm: NormKind,
    window: Window,
}

fn in_file(path: &Path) -> impl Fn(skorokhod::Error) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn load(common: &Common, input: Input) -> Result<Loaded, String> {
    let (f, g, norm) = match input {
        Input::Traces => {
            let mut x = read_trace_path(&common.a).map_err(in_file(&common.a))?;
            let mut y = read_trace_path(&common.b).map_err(in_file(&common.b))?;
            if let Some(factors) = &common.scale {
                x = scale_trace(&x, factors).map_err(|e| format!("--scale: {e}"))?;
                y = scale_trace(&y, factors).map_err(|e| format!("--scale: {e}"))?;
            }
            (lift_trace(&x), lift_trace(&y), common.norm.skoro())
        }
        Input::Curves => {
            let mut f = read_curve_path(&common.a).map_err(in_file(&common.a))?;
            let mut g = read_curve_path(&common.b).map_err(in_file(&common.b))?;
            if let Some(factors) = &common.scale {
                f = scale_curve(&f, factors).map_err(|e| format!("--scale: {e}"))?;
                g = scale_curve(&g, factors).map_err(|e| format!("--scale: {e}"))?;
            }
            (f, g, common.norm)
        }
    };
    let window = match common.window {
        None => Window::Unbounded,
        Some(0) => return Err("--window must be at least 1".into()),
        Some(w) => Window::Bounded(w),
    };
    if !(common.tol.is_finite() && common.tol >= 0.0) {
        return Err(format!("--tol must be a finite non-negative number, got {}", common.tol));
    }
    Ok(Loaded { f, g, norm, window })
}

impl Loaded {
    fn problem(&self, tol: f64) -> Result<Problem<'_, f64>, String> {
        Problem::new(&self.f, &self.g, self.norm)
            .and_then(|p| p.with_window(self.window))
            .map(|p| p.with_tolerance(tol))
            .map_err(|e| e.to_string())
    }
}

fn window_tag(w: Window) -> Option<usize> {
    match w {
        Window::Unbounded => None,
        Window::Bounded(w) => Some(w),
    }
}

#[derive(Serialize)]
struct DistanceReport {
    /// `null` when a bounded window admits no matching.
    distance: Option<f64>,
    norm: String,
    window: Option<usize>,
    achieved_bijective: bool,
    critical_value_count: usize,
}

#[derive(Serialize)]
struct DecideReport {
    decision: bool,
    delta: f64,
    norm: String,
    window: Option<usize>,
    bijective: bool,
}

#[derive(Serialize)]
struct CellReport {
    i: usize,
    j: usize,
    bottom: Option<[f64; 2]>,
    right: Option<[f64; 2]>,
    top: Option<[f64; 2]>,
    left: Option<[f64; 2]>,
}

#[derive(Serialize)]
struct OracleReport {
    /// `null` when a bounded window admits no sampled matching.
    lower: Option<f64>,
    upper: Option<f64>,
    grid: usize,
    norm: String,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn emit<R: Serialize>(output: Output, report: &R, text: impl FnOnce() -> String) -> Result<(), String> {
    match output {
        Output::Json => println!("{}", serde_json::to_string(report).map_err(|e| e.to_string())?),
        Output::Text => println!("{}", text()),
    }
    Ok(())
}

fn distance(common: &Common, input: Input) -> Result<ExitCode, String> {
    let loaded = load(common, input)?;
    let result = loaded.problem(common.tol)?.distance();
    let report = DistanceReport {
        distance: finite(result.distance),
        norm: common.norm.name().to_string(),
        window: window_tag(loaded.window),
        achieved_bijective: result.achieved_bijective,
        critical_value_count: result.critical_value_count,
    };
    emit(common.output, &report, || {
        format!(
            "distance {} (norm {}, {} candidates, bijective {})",
            result.distance, report.norm, result.critical_value_count, result.achieved_bijective
        )
    })?;
    Ok(ExitCode::SUCCESS)
}

fn check_delta(delta: f64) -> Result<(), String> {
    if delta.is_finite() && delta >= 0.0 {
        Ok(())
    } else {
        Err(format!("--delta must be a finite non-negative number, got {delta}"))
    }
}

fn decide(common: &Common, delta: f64, bijective: bool, raw: bool) -> Result<ExitCode, String> {
    check_delta(delta)?;
    let loaded = load(common, Input::raw(raw))?;
    let mode = if bijective { Mode::Bijective } else { Mode::Nonbijective };
    let decision = loaded.problem(common.tol)?.decide(delta, mode).map_err(|e| e.to_string())?;
    let report = DecideReport {
        decision,
        delta,
        norm: common.norm.name().to_string(),
        window: window_tag(loaded.window),
        bijective,
    };
    emit(common.output, &report, || format!("{decision}"))?;
    Ok(if decision { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn freespace(common: &Common, delta: f64, raw: bool) -> Result<ExitCode, String> {
    check_delta(delta)?;
    let loaded = load(common, Input::raw(raw))?;
    loaded.problem(common.tol)?;
    let span = |cell, edge| -> Result<Option<[f64; 2]>, String> {
        let e = free_edge_interval(&loaded.f, &loaded.g, cell, edge, delta, loaded.norm).map_err(|e| e.to_string())?;
        Ok(e.span.map(|Interval { lo, hi }| [lo, hi]))
    };
    let mut cells = Vec::new();
    for i in 0..loaded.f.segments() {
        for j in 0..loaded.g.segments() {
            if !loaded.window.allows(i, j) {
                continue;
            }
            let cell = Cell::new(i, j);
            cells.push(CellReport {
                i,
                j,
                bottom: span(cell, EdgeId::Bottom)?,
                right: span(cell, EdgeId::Right)?,
                top: span(cell, EdgeId::Top)?,
                left: span(cell, EdgeId::Left)?,
            });
        }
    }
    emit(common.output, &cells, || {
        let show = |s: Option<[f64; 2]>| s.map_or("-".to_string(), |[lo, hi]| format!("[{lo}, {hi}]"));
        cells
            .iter()
            .map(|c| {
                format!(
                    "({}, {}) bottom {} right {} top {} left {}",
                    c.i,
                    c.j,
                    show(c.bottom),
                    show(c.right),
                    show(c.top),
                    show(c.left)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    })?;
    Ok(ExitCode::SUCCESS)
}

fn oracle(common: &Common, grid: usize, raw: bool) -> Result<ExitCode, String> {
    let spec = GridSpec::new(grid).ok_or_else(|| format!("--grid must be at least 2, got {grid}"))?;
    let loaded = load(common, Input::raw(raw))?;
    let (lower, upper) =
        oracle_frechet(&loaded.f, &loaded.g, loaded.norm, spec, loaded.window).map_err(|e| e.to_string())?;
    let report = OracleReport { lower: finite(lower), upper: finite(upper), grid, norm: common.norm.name().to_string() };
    emit(common.output, &report, || format!("[{lower}, {upper}]"))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Distance(common) => distance(&common, Input::Traces),
        Command::Frechet(common) => distance(&common, Input::Curves),
        Command::Decide { common, delta, bijective, raw } => decide(&common, delta, bijective, raw),
        Command::Freespace { common, delta, raw } => freespace(&common, delta, raw),
        Command::Oracle { common, grid, raw } => oracle(&common, grid, raw),
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    run(cli).unwrap_or_else(|message| {
        eprintln!("skoro: error: {message}");
        ExitCode::from(2)
    })
}
