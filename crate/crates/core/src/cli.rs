//! Command-line front end: constant verification, lemma sweeps, surface
//! construction, systole estimates and Poincare series comparisons.
//!
//! Every command writes one document, JSON (`{command, params, results,
//! paper_refs}`, see `schemas/output.schema.json`) or CSV with a fixed
//! header, to standard output or `--out`. Exit codes: 0 ok, 2 property
//! violation, 3 computation error, 64 usage.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::constants::{self, ConstantReport};
use crate::hyptrig::{self, TOL_ALGEBRAIC};
use crate::poincare::{self, Bound, SeriesError};
use crate::rng::Sampler;
use crate::surfaces::{self, PantsParams, SurfaceError, SurfaceGroup, SurfaceKind, TorusParams};
use crate::words::{self, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Upper limit on `--samples`.
pub const MAX_SAMPLES: u64 = 10_000_000;
/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "SYSTOLIC_THREADS";

/// Side-length range for the random lemma sweeps.
pub const LEMMA1_RANGE: (f64, f64) = (0.05, 8.0);
pub const LEMMA2_RANGE: (f64, f64) = (0.2, 5.0);
/// Gaps `|a - b - c|` below this are not sign-tested.
pub const LEMMA2_GAP_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Violation(String),
    #[error("{0}")]
    Compute(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Violation(_) => EXIT_VIOLATION,
            CliError::Compute(_) | CliError::Io(_) => EXIT_COMPUTE,
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Range { .. } | SurfaceError::Twist { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Surface(s) => s.into(),
            SeriesError::Sigma(_) | SeriesError::Radii | SeriesError::Coverage { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Compute(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "systolic",
    version,
    about = "Systoles, critical exponents and right-angled hexagons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the published constants.
    Constants,
    /// Sweep one of the three lemmas.
    Lemma {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Random samples (lemmas 1 and 2; lemma 3 runs a fixed grid).
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Systole word depth for lemma 3.
        #[arg(long, default_value_t = surfaces::DEFAULT_SYSTOLE_DEPTH)]
        depth: usize,
    },
    /// Build a surface group and report its boundary lengths.
    Surface(SurfaceArgs),
    /// Estimate the systole by word enumeration.
    Systole {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = surfaces::DEFAULT_SYSTOLE_DEPTH)]
        depth: usize,
    },
    /// Truncated Poincare series against its analytic majorant.
    Poincare {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value_t = surfaces::DEFAULT_SYSTOLE_DEPTH)]
        depth: usize,
        /// Leave the identity out of the sum.
        #[arg(long)]
        no_identity: bool,
    },
    /// Orbit-growth estimates of the critical exponent.
    Delta {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Comma-separated, strictly increasing radii.
        #[arg(long, value_delimiter = ',', required = true)]
        radii: Vec<f64>,
        #[arg(long, default_value_t = surfaces::DEFAULT_SYSTOLE_DEPTH)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub l1: Option<f64>,
    #[arg(long)]
    pub l2: Option<f64>,
    #[arg(long)]
    pub l3: Option<f64>,
    /// Length of the nonseparating curve (torus).
    #[arg(long)]
    pub l: Option<f64>,
    /// Twist along that curve (torus).
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<f64>,
    /// Distance between the two lifts of the curve (torus); see the README.
    #[arg(long)]
    pub seam: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Pants,
    Torus,
}

impl SurfaceArgs {
    pub fn build(&self) -> Result<SurfaceGroup, CliError> {
        match self.kind {
            KindArg::Pants => {
                if self.l.is_some() || self.tau.is_some() || self.seam.is_some() {
                    return Err(CliError::Usage(
                        "--l/--tau/--seam apply to --kind torus".into(),
                    ));
                }
                match (self.l1, self.l2, self.l3) {
                    (Some(l1), Some(l2), Some(l3)) => {
                        Ok(surfaces::build_pants(PantsParams::new(l1, l2, l3))?)
                    }
                    _ => Err(CliError::Usage(
                        "--kind pants needs --l1, --l2 and --l3".into(),
                    )),
                }
            }
            KindArg::Torus => {
                if self.l1.is_some() || self.l2.is_some() || self.l3.is_some() {
                    return Err(CliError::Usage(
                        "--l1/--l2/--l3 apply to --kind pants".into(),
                    ));
                }
                let l = self
                    .l
                    .ok_or_else(|| CliError::Usage("--kind torus needs --l".into()))?;
                let mut p = TorusParams::new(l, self.tau.unwrap_or(0.0));
                if let Some(seam) = self.seam {
                    p = p.with_seam(seam);
                }
                Ok(surfaces::build_torus(p)?)
            }
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
/// Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = thread_pool().and_then(|pool| match pool {
        Some(pool) => pool.install(|| execute(&cli)),
        None => execute(&cli),
    });
    match outcome {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            match out.violation {
                Some(msg) => {
                    eprintln!("violation: {msg}");
                    EXIT_VIOLATION
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>, CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let n: usize = raw.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
        CliError::Usage(format!("{THREADS_ENV}={raw:?} is not a positive integer"))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map(Some)
        .map_err(|e| CliError::Compute(e.to_string()))
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Rendered document plus the first violation, if any.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub violation: Option<String>,
}

/// Run a parsed command without touching the process (no exit, no I/O).
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let doc = match &cli.command {
        Command::Constants => cmd_constants()?,
        Command::Lemma {
            which,
            samples,
            seed,
            depth,
        } => cmd_lemma(*which, *samples, *seed, *depth)?,
        Command::Surface(s) => cmd_surface(s)?,
        Command::Systole { surface, depth } => cmd_systole(surface, *depth)?,
        Command::Poincare {
            surface,
            sigma,
            depth,
            no_identity,
        } => cmd_poincare(surface, *sigma, *depth, !*no_identity)?,
        Command::Delta {
            surface,
            radii,
            depth,
        } => cmd_delta(surface, radii, *depth)?,
    };
    let text = match cli.format {
        Format::Json => {
            let v = json!({
                "command": doc.command,
                "params": doc.params,
                "results": doc.results,
                "paper_refs": doc.refs,
            });
            let mut s =
                serde_json::to_string_pretty(&v).map_err(|e| CliError::Compute(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            s.push_str(doc.header);
            s.push('\n');
            for row in &doc.rows {
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
    };
    Ok(Output {
        text,
        violation: doc.violation,
    })
}

/// One command's results in both renderings.
struct Doc {
    command: &'static str,
    params: Value,
    results: Value,
    refs: &'static [&'static str],
    header: &'static str,
    rows: Vec<Vec<String>>,
    violation: Option<String>,
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Compute(e.to_string()))
}

fn check_depth(depth: usize) -> Result<usize, CliError> {
    words::check_depth(depth).map_err(|e| CliError::Usage(e.to_string()))
}

fn surface_params(s: &SurfaceArgs) -> Value {
    let mut m = serde_json::Map::new();
    m.insert(
        "kind".into(),
        json!(match s.kind {
            KindArg::Pants => "pants",
            KindArg::Torus => "torus",
        }),
    );
    for (k, v) in [
        ("l1", s.l1),
        ("l2", s.l2),
        ("l3", s.l3),
        ("l", s.l),
        ("tau", s.tau),
        ("seam", s.seam),
    ] {
        if let Some(v) = v {
            m.insert(k.into(), json!(v));
        }
    }
    Value::Object(m)
}

fn kind_refs(kind: SurfaceKind) -> &'static [&'static str] {
    match kind {
        SurfaceKind::Pants => &["hexagon_cosine_rule", "pants_group"],
        SurfaceKind::Torus => &["hexagon_cosine_rule", "torus_group"],
    }
}

fn kind_name(kind: SurfaceKind) -> &'static str {
    match kind {
        SurfaceKind::Pants => "pants",
        SurfaceKind::Torus => "torus",
    }
}

fn relation_name(r: constants::Relation) -> &'static str {
    match r {
        constants::Relation::Equals => "equals",
        constants::Relation::PaperIsSufficientUpper => "paper_is_sufficient_upper",
        constants::Relation::PaperIsRounded => "paper_is_rounded",
    }
}

fn opt_str<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub const CONSTANTS_HEADER: &str = "name,computed,paper_value,relation,ok";

fn cmd_constants() -> Result<Doc, CliError> {
    let reports = constants::verify_all().map_err(|e| CliError::Compute(e.to_string()))?;
    let violation = reports.iter().find(|r| !r.holds()).map(|r| {
        format!(
            "{} = {} does not match {}",
            r.name, r.computed, r.paper_value
        )
    });
    #[derive(Serialize)]
    struct Row<'a> {
        #[serde(flatten)]
        report: &'a ConstantReport,
        ok: bool,
    }
    let results: Vec<Row> = reports
        .iter()
        .map(|report| Row {
            report,
            ok: report.holds(),
        })
        .collect();
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.name.to_string(),
                r.computed.to_string(),
                r.paper_value.to_string(),
                relation_name(r.relation).to_string(),
                r.holds().to_string(),
            ]
        })
        .collect();
    Ok(Doc {
        command: "constants",
        params: json!({}),
        results: to_value(&results)?,
        refs: &[
            "torus_series_quartic",
            "pants_series_quadratic",
            "torus_boundary_lemma",
            "bolza_systole",
        ],
        header: CONSTANTS_HEADER,
        rows,
        violation,
    })
}

/// One random hexagon of the first lemma's sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma1Row {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub gamma: f64,
    pub margin: f64,
    pub ok: bool,
}

pub const LEMMA1_HEADER: &str = "a,b,c,gamma,margin,ok";

/// `samples` seeded hexagons with alternating sides drawn uniformly from
/// [`LEMMA1_RANGE`], the largest relabelled `a`.
pub fn lemma1_sweep(samples: u64, seed: u64) -> Result<Vec<Lemma1Row>, CliError> {
    let mut rng = Sampler::new(seed);
    let (lo, hi) = LEMMA1_RANGE;
    let triples: Vec<[f64; 3]> = (0..samples)
        .map(|_| {
            let mut t = [
                rng.uniform(lo, hi),
                rng.uniform(lo, hi),
                rng.uniform(lo, hi),
            ];
            let imax = if t[0] >= t[1] && t[0] >= t[2] {
                0
            } else if t[1] >= t[2] {
                1
            } else {
                2
            };
            t.swap(0, imax);
            t
        })
        .collect();
    triples
        .par_iter()
        .map(|&[a, b, c]| {
            let hex =
                hyptrig::solve_hexagon(a, b, c).map_err(|e| CliError::Compute(e.to_string()))?;
            let margin =
                hyptrig::lemma1_margin(&hex).map_err(|e| CliError::Compute(e.to_string()))?;
            Ok(Lemma1Row {
                a,
                b,
                c,
                gamma: hex.gamma,
                margin,
                ok: margin >= -TOL_ALGEBRAIC,
            })
        })
        .collect()
}

/// One `(b, c, alpha)` sample of the second lemma's sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma2Row {
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    /// Opposite side; `None` when the three sides do not close up, which
    /// can only happen when `a < b + c` would hold anyway.
    pub a: Option<f64>,
    pub indicator: f64,
    /// `a - b - c`, `None` as for `a`.
    pub gap: Option<f64>,
    pub agree: bool,
}

pub const LEMMA2_HEADER: &str = "b,c,alpha,a,indicator,gap,agree";

pub fn lemma2_row(b: f64, c: f64, alpha: f64) -> Result<Lemma2Row, CliError> {
    let indicator =
        hyptrig::lemma2_indicator(b, c, alpha).map_err(|e| CliError::Compute(e.to_string()))?;
    let ch = hyptrig::opposite_cosh(b, c, alpha);
    let (a, gap, agree) = if ch >= 1.0 {
        let a = hyptrig::acosh1p(ch - 1.0);
        let gap = a - b - c;
        let agree = gap.abs() <= LEMMA2_GAP_TOL || (gap > 0.0) == (indicator > 0.0);
        (Some(a), Some(gap), agree)
    } else {
        (None, None, indicator < 0.0)
    };
    Ok(Lemma2Row {
        b,
        c,
        alpha,
        a,
        indicator,
        gap,
        agree,
    })
}

/// `samples` seeded triples drawn uniformly from [`LEMMA2_RANGE`].
pub fn lemma2_sweep(samples: u64, seed: u64) -> Result<Vec<Lemma2Row>, CliError> {
    let mut rng = Sampler::new(seed);
    let (lo, hi) = LEMMA2_RANGE;
    let triples: Vec<[f64; 3]> = (0..samples)
        .map(|_| {
            [
                rng.uniform(lo, hi),
                rng.uniform(lo, hi),
                rng.uniform(lo, hi),
            ]
        })
        .collect();
    triples
        .par_iter()
        .map(|&[b, c, al]| lemma2_row(b, c, al))
        .collect()
}

/// Regular grid with `n` points per axis over [`LEMMA2_RANGE`]^3.
pub fn lemma2_grid(n: usize) -> Result<Vec<Lemma2Row>, CliError> {
    let (lo, hi) = LEMMA2_RANGE;
    let step = (hi - lo) / (n - 1) as f64;
    let at = |i: usize| lo + step * i as f64;
    (0..n * n * n)
        .into_par_iter()
        .map(|k| lemma2_row(at(k / (n * n)), at(k / n % n), at(k % n)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma3Row {
    pub l: f64,
    pub tau: f64,
    pub systole: f64,
    pub boundary: f64,
    pub threshold_ok: bool,
    pub conclusion_ok: bool,
}

pub const LEMMA3_HEADER: &str = "l,tau,systole,boundary,threshold_ok,conclusion_ok";

/// Curve lengths `2.8, 3.2, ..., 6.0` with twists `0` and `l/4`.
pub fn lemma3_grid() -> Vec<TorusParams> {
    (0..=8)
        .flat_map(|i| {
            let l = (28 + 4 * i) as f64 / 10.0;
            [TorusParams::new(l, 0.0), TorusParams::new(l, l / 4.0)]
        })
        .collect()
}

pub fn lemma3_sweep(depth: usize) -> Result<Vec<Lemma3Row>, CliError> {
    let depth = check_depth(depth)?;
    lemma3_grid()
        .into_iter()
        .map(|p| {
            let c = surfaces::lemma3_check(p, depth)?;
            Ok(Lemma3Row {
                l: p.l,
                tau: p.tau,
                systole: c.systole,
                boundary: c.boundary,
                threshold_ok: c.threshold_ok,
                conclusion_ok: c.conclusion_ok,
            })
        })
        .collect()
}

fn cmd_lemma(which: u8, samples: u64, seed: u64, depth: usize) -> Result<Doc, CliError> {
    if samples > MAX_SAMPLES {
        return Err(CliError::Usage(format!(
            "--samples {samples} exceeds {MAX_SAMPLES}"
        )));
    }
    let params = json!({ "which": which, "samples": samples, "seed": seed, "depth": depth });
    let (results, header, rows, violation, refs): (Value, _, Vec<Vec<String>>, _, &[&str]) =
        match which {
            1 => {
                let out = lemma1_sweep(samples, seed)?;
                let bad = out.iter().find(|r| !r.ok).map(|r| format!("{r:?}"));
                let rows = out
                    .iter()
                    .map(|r| {
                        vec![r.a, r.b, r.c, r.gamma, r.margin]
                            .into_iter()
                            .map(|v| v.to_string())
                            .chain([r.ok.to_string()])
                            .collect()
                    })
                    .collect();
                (
                    to_value(&out)?,
                    LEMMA1_HEADER,
                    rows,
                    bad,
                    &["hexagon_cosine_rule", "longest_side_lemma"],
                )
            }
            2 => {
                let out = lemma2_sweep(samples, seed)?;
                let bad = out.iter().find(|r| !r.agree).map(|r| format!("{r:?}"));
                let rows = out
                    .iter()
                    .map(|r| {
                        vec![
                            r.b.to_string(),
                            r.c.to_string(),
                            r.alpha.to_string(),
                            opt_str(r.a),
                            r.indicator.to_string(),
                            opt_str(r.gap),
                            r.agree.to_string(),
                        ]
                    })
                    .collect();
                (
                    to_value(&out)?,
                    LEMMA2_HEADER,
                    rows,
                    bad,
                    &["hexagon_cosine_rule", "side_sum_lemma"],
                )
            }
            _ => {
                let out = lemma3_sweep(depth)?;
                let bad = out
                    .iter()
                    .find(|r| r.threshold_ok && !r.conclusion_ok)
                    .map(|r| format!("{r:?}"));
                let rows = out
                    .iter()
                    .map(|r| {
                        vec![
                            r.l.to_string(),
                            r.tau.to_string(),
                            r.systole.to_string(),
                            r.boundary.to_string(),
                            r.threshold_ok.to_string(),
                            r.conclusion_ok.to_string(),
                        ]
                    })
                    .collect();
                (
                    to_value(&out)?,
                    LEMMA3_HEADER,
                    rows,
                    bad,
                    &["torus_group", "torus_boundary_lemma"],
                )
            }
        };
    let violations = match &results {
        Value::Array(rows) => rows
            .iter()
            .filter(|r| {
                r.get("ok") == Some(&json!(false))
                    || r.get("agree") == Some(&json!(false))
                    || (r.get("threshold_ok") == Some(&json!(true))
                        && r.get("conclusion_ok") == Some(&json!(false)))
            })
            .count(),
        _ => 0,
    };
    Ok(Doc {
        command: "lemma",
        params,
        results: json!({ "violations": violations, "rows": results }),
        refs,
        header,
        rows,
        violation,
    })
}

pub const SURFACE_HEADER: &str = "kind,boundary_word,translation_length";

fn cmd_surface(s: &SurfaceArgs) -> Result<Doc, CliError> {
    let g = s.build()?;
    let words = g.boundary_words();
    let lengths = g.boundary_lengths()?;
    let rows = words
        .iter()
        .zip(&lengths)
        .map(|(w, l)| vec![kind_name(g.kind).to_string(), w.to_string(), l.to_string()])
        .collect();
    let boundary: Vec<Value> = words
        .iter()
        .zip(&lengths)
        .map(|(w, l)| json!({ "word": w, "translation_length": l }))
        .collect();
    let mut results = to_value(&g)?;
    results["boundary"] = Value::Array(boundary);
    Ok(Doc {
        command: "surface",
        params: surface_params(s),
        results,
        refs: kind_refs(g.kind),
        header: SURFACE_HEADER,
        rows,
        violation: None,
    })
}

pub const SYSTOLE_HEADER: &str = "kind,depth,length,word,minimizers";

fn cmd_systole(s: &SurfaceArgs, depth: usize) -> Result<Doc, CliError> {
    let depth = check_depth(depth)?;
    let g = s.build()?;
    let est = surfaces::systole_estimate(&g, depth)?;
    let minimizers: Vec<String> = est.minimizers.iter().map(Word::to_string).collect();
    let rows = vec![vec![
        kind_name(g.kind).to_string(),
        depth.to_string(),
        est.length.to_string(),
        est.word.to_string(),
        minimizers.join(" "),
    ]];
    let mut params = surface_params(s);
    params["depth"] = json!(depth);
    Ok(Doc {
        command: "systole",
        params,
        results: to_value(&est)?,
        refs: kind_refs(g.kind),
        header: SYSTOLE_HEADER,
        rows,
        violation: None,
    })
}

pub const POINCARE_HEADER: &str = "kind,sigma,depth,include_identity,partial_sum,nontrivial_sum,systole_floor,analytic_bound,bound_applies,within_bound";

fn bound_str(b: Bound) -> String {
    match b {
        Bound::Finite(v) => v.to_string(),
        Bound::Divergent => "divergent".into(),
    }
}

fn cmd_poincare(
    s: &SurfaceArgs,
    sigma: f64,
    depth: usize,
    include_identity: bool,
) -> Result<Doc, CliError> {
    let depth = check_depth(depth)?;
    let g = s.build()?;
    let r = poincare::truncated_series(&g, sigma, depth, include_identity)?;
    let violation = (r.within_bound == Some(false)).then(|| {
        format!(
            "truncated sum exceeds the majorant {} at depth {depth}",
            bound_str(r.analytic_bound)
        )
    });
    let rows = vec![vec![
        kind_name(r.kind).to_string(),
        r.sigma.to_string(),
        r.depth.to_string(),
        r.include_identity.to_string(),
        r.partial_sum.to_string(),
        r.nontrivial_sum.to_string(),
        r.systole_floor.to_string(),
        bound_str(r.analytic_bound),
        r.bound_applies.to_string(),
        opt_str(r.within_bound),
    ]];
    let mut params = surface_params(s);
    params["sigma"] = json!(sigma);
    params["depth"] = json!(depth);
    params["include_identity"] = json!(include_identity);
    let refs: &[&str] = match g.kind {
        SurfaceKind::Pants => &["pants_group", "poincare_series", "pants_series_quadratic"],
        SurfaceKind::Torus => &["torus_group", "poincare_series", "torus_series_quartic"],
    };
    Ok(Doc {
        command: "poincare",
        params,
        results: to_value(&r)?,
        refs,
        header: POINCARE_HEADER,
        rows,
        violation,
    })
}

pub const DELTA_HEADER: &str = "radius,count,ratio";

fn cmd_delta(s: &SurfaceArgs, radii: &[f64], depth: usize) -> Result<Doc, CliError> {
    let depth = check_depth(depth)?;
    let g = s.build()?;
    let counts = poincare::empirical_delta(&g, radii, depth)?;
    let floor = poincare::systole_floor(&g)?;
    let bound = poincare::delta_bound(g.kind, floor)?;
    let max_safe = poincare::max_safe_radius(&g, depth)?;
    let rows = counts
        .iter()
        .map(|c| {
            vec![
                c.radius.to_string(),
                c.count.to_string(),
                c.ratio.to_string(),
            ]
        })
        .collect();
    let mut params = surface_params(s);
    params["radii"] = json!(radii);
    params["depth"] = json!(depth);
    let refs: &[&str] = match g.kind {
        SurfaceKind::Pants => &["pants_group", "critical_exponent_bound"],
        SurfaceKind::Torus => &["torus_group", "critical_exponent_bound"],
    };
    Ok(Doc {
        command: "delta",
        params,
        results: json!({
            "counts": to_value(&counts)?,
            "delta_bound": to_value(&bound)?,
            "max_safe_radius": max_safe,
        }),
        refs,
        header: DELTA_HEADER,
        rows,
        violation: None,
    })
}
