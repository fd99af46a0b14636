//! Command-line surface for the planar-norm geometry crate: gauges,
//! isosceles-orthogonal partners, the sphere functional `beta`, the James
//! and Schäffer constants, convexity/smoothness moduli, attainment
//! witnesses, a named self-check battery, aggregated reports, and static
//! SVG sphere plots.
//!
//! The whole command surface is exposed as [`run`], which parses an
//! argument vector and writes to caller-supplied streams, so integration
//! tests can drive it in-process; the `normplane` binary is a thin wrapper.
//!
//! Exit codes: `0` success, `1` computation error (solver failure, a failed
//! float/exact cross-check, failed self-checks), `2` invalid input (bad
//! flags, unreadable or malformed norm files, invalid combinations).

mod format;
mod normspec;
mod reportdoc;
mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use normplane_core::constants;
use normplane_core::exact::{self, RationalVec2};
use normplane_core::iso;
use normplane_core::modulus;
use normplane_core::report;
use normplane_core::vec2::Vec2;
use normplane_core::Params;

pub use normspec::{load_norm, realize, LoadedNorm, NormSpecDocument, PRESET_NAMES};
pub use reportdoc::{
    AttainmentRow, AttainmentSection, CheckRow, ConfigEcho, ConstantsSection, CurveRow,
    CurvesSection, LambdaRow, ReportDocument, ReportValue,
};

/// Agreement required between the float and exact routes under `--exact`;
/// a larger discrepancy is reported as a computation error.
const EXACT_CROSS_TOL: f64 = 1e-9;
/// Seed for the deterministic self-check battery run by `check` and `report`.
const CHECK_SEED: u64 = 0x5eed;
/// Interior ε samples on (0, 2) for the `modulus` curve (no `--epsilon`).
const CURVE_POINTS: usize = 40;
/// Interior ε samples on (0, 2) for the curve embedded in a report.
const REPORT_CURVE_POINTS: usize = 20;
/// Convex weights tabulated for the generalized James constant in a report.
const LAMBDA_TABLE: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
/// Default band width when collecting attainment witnesses.
const DEFAULT_ATTAINMENT_TOL: f64 = 1e-9;
/// Tolerance claimed for sweep-based constants at the default grids; scaled
/// up proportionally when `--grid` coarsens a sweep.
const SWEEP_CLAIM_TOL: f64 = 1e-6;
/// Tolerance claimed for a constant recovered through its modulus equation.
const ROUTE_CLAIM_TOL: f64 = 2e-3;

/// How a failure maps onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliErrorKind {
    /// Bad flags, unreadable or malformed inputs, invalid combinations → 2.
    InvalidInput,
    /// A solver failure or a failed cross-check on valid input → 1.
    Computation,
}

/// Error carried out of command execution, with its exit-code class.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: CliErrorKind,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: CliErrorKind::InvalidInput,
            message: message.into(),
        }
    }

    pub fn compute(message: impl Into<String>) -> Self {
        CliError {
            kind: CliErrorKind::Computation,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            CliErrorKind::InvalidInput => 2,
            CliErrorKind::Computation => 1,
        }
    }
}

impl From<normplane_core::Error> for CliError {
    fn from(e: normplane_core::Error) -> Self {
        CliError::compute(e.to_string())
    }
}

pub type Outcome<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "normplane",
    version,
    about = "Isosceles orthogonality and extremal constants of planar normed spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the norm of a point.
    Gauge(CommandArgs),
    /// Unit isosceles-orthogonal partner of a point (counterclockwise side).
    Partner(CommandArgs),
    /// Sphere functional beta(x), or its convex-weight variant with --lambda.
    Beta(CommandArgs),
    /// James constant: the maximum of beta over the unit sphere.
    James(CommandArgs),
    /// Schaffer constant: the minimum of beta over the unit sphere.
    Schaffer(CommandArgs),
    /// Moduli of convexity and smoothness at one ε, or the whole curve.
    Modulus(CommandArgs),
    /// Arc of approximately orthogonal unit directions for a point.
    Aset(CommandArgs),
    /// Attainment witnesses: James pairs, or modulus pairs with --epsilon.
    Attain(CommandArgs),
    /// Run the named invariant battery against the norm.
    Check(CommandArgs),
    /// Full report: constants, curves, attainment, checks.
    Report(CommandArgs),
    /// Static SVG plot of the unit sphere with overlays.
    Plot(CommandArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gauge(_) => "gauge",
            Command::Partner(_) => "partner",
            Command::Beta(_) => "beta",
            Command::James(_) => "james",
            Command::Schaffer(_) => "schaffer",
            Command::Modulus(_) => "modulus",
            Command::Aset(_) => "aset",
            Command::Attain(_) => "attain",
            Command::Check(_) => "check",
            Command::Report(_) => "report",
            Command::Plot(_) => "plot",
        }
    }

    fn args(&self) -> &CommandArgs {
        match self {
            Command::Gauge(a)
            | Command::Partner(a)
            | Command::Beta(a)
            | Command::James(a)
            | Command::Schaffer(a)
            | Command::Modulus(a)
            | Command::Aset(a)
            | Command::Attain(a)
            | Command::Check(a)
            | Command::Report(a)
            | Command::Plot(a) => a,
        }
    }
}

#[derive(Args, Debug)]
struct CommandArgs {
    /// Preset name (hexagon-paper, octagon-max, square, euclidean) or path
    /// to a norm-specification JSON document.
    #[arg(long)]
    norm: String,

    /// Point "x,y"; coordinates are decimals or p/q rational strings.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,

    /// Convex weight in (0, 1) for the generalized functional.
    #[arg(long)]
    lambda: Option<f64>,

    /// Tolerance parameter ε.
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<f64>,

    /// Sample directions per sweep (replaces the per-solver defaults).
    #[arg(long)]
    grid: Option<usize>,

    /// Reporting band for attainment witnesses (default 1e-9).
    #[arg(long)]
    tol: Option<f64>,

    /// Run the exact rational kernel too and cross-check the float route.
    #[arg(long)]
    exact: bool,

    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format (csv only for modulus and report; plot always writes SVG).
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Which optional flags a subcommand consumes; the rest are rejected so a
/// misplaced flag fails loudly instead of being ignored.
#[derive(Clone, Copy, Default)]
struct Accepts {
    point: bool,
    lambda: bool,
    epsilon: bool,
    grid: bool,
    tol: bool,
    exact: bool,
    csv: bool,
}

/// Rendered command output, its destination, and the process status to use
/// when writing succeeds.
struct Output {
    body: String,
    dest: Option<PathBuf>,
    status: i32,
}

impl Output {
    fn ok(body: String, dest: Option<PathBuf>) -> Self {
        Output {
            body,
            dest,
            status: 0,
        }
    }
}

/// Parse an argument vector, execute the command, and write the result.
/// Returns the process exit code; never panics on bad input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(output) => match output.dest {
            Some(path) => {
                if let Err(e) = std::fs::write(&path, output.body.as_bytes()) {
                    let _ = writeln!(err, "error: cannot write '{}': {e}", path.display());
                    1
                } else {
                    output.status
                }
            }
            None => {
                let _ = write!(out, "{}", output.body);
                output.status
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.exit_code()
        }
    }
}

fn execute(cmd: &Command) -> Outcome<Output> {
    let args = cmd.args();
    deny_unused(args, accepts_for(cmd), cmd.name())?;
    match cmd {
        Command::Gauge(a) => gauge_cmd(a),
        Command::Partner(a) => partner_cmd(a),
        Command::Beta(a) => beta_cmd(a),
        Command::James(a) => james_cmd(a),
        Command::Schaffer(a) => schaffer_cmd(a),
        Command::Modulus(a) => modulus_cmd(a),
        Command::Aset(a) => aset_cmd(a),
        Command::Attain(a) => attain_cmd(a),
        Command::Check(a) => check_cmd(a),
        Command::Report(a) => report_cmd(a),
        Command::Plot(a) => plot_cmd(a),
    }
}

fn accepts_for(cmd: &Command) -> Accepts {
    let none = Accepts::default();
    match cmd {
        Command::Gauge(_) => Accepts {
            point: true,
            exact: true,
            ..none
        },
        Command::Partner(_) => Accepts {
            point: true,
            exact: true,
            grid: true,
            ..none
        },
        Command::Beta(_) => Accepts {
            point: true,
            lambda: true,
            exact: true,
            grid: true,
            ..none
        },
        Command::James(_) => Accepts {
            exact: true,
            grid: true,
            ..none
        },
        Command::Schaffer(_) => Accepts { grid: true, ..none },
        Command::Modulus(_) => Accepts {
            epsilon: true,
            grid: true,
            csv: true,
            ..none
        },
        Command::Aset(_) => Accepts {
            point: true,
            epsilon: true,
            grid: true,
            ..none
        },
        Command::Attain(_) => Accepts {
            epsilon: true,
            grid: true,
            tol: true,
            ..none
        },
        Command::Check(_) => Accepts { grid: true, ..none },
        Command::Report(_) => Accepts {
            exact: true,
            grid: true,
            tol: true,
            csv: true,
            ..none
        },
        Command::Plot(_) => Accepts {
            point: true,
            epsilon: true,
            grid: true,
            ..none
        },
    }
}

fn deny_unused(args: &CommandArgs, ok: Accepts, cmd: &str) -> Outcome<()> {
    if args.point.is_some() && !ok.point {
        return Err(CliError::input(format!("--point is not used by '{cmd}'")));
    }
    if args.lambda.is_some() && !ok.lambda {
        return Err(CliError::input(format!("--lambda is not used by '{cmd}'")));
    }
    if args.epsilon.is_some() && !ok.epsilon {
        return Err(CliError::input(format!("--epsilon is not used by '{cmd}'")));
    }
    if args.grid.is_some() && !ok.grid {
        return Err(CliError::input(format!("--grid is not used by '{cmd}'")));
    }
    if args.tol.is_some() && !ok.tol {
        return Err(CliError::input(format!("--tol is not used by '{cmd}'")));
    }
    if args.exact && !ok.exact {
        return Err(CliError::input(format!(
            "--exact is not available for '{cmd}'"
        )));
    }
    if args.format == OutputFormat::Csv && !ok.csv {
        return Err(CliError::input(
            "--format csv is only available for 'modulus' and 'report'",
        ));
    }
    Ok(())
}

fn resolve_params(args: &CommandArgs) -> Outcome<Params> {
    let mut p = Params::default();
    if let Some(n) = args.grid {
        if !(4..=1 << 22).contains(&n) {
            return Err(CliError::input(format!(
                "--grid must be between 4 and {}, got {n}",
                1usize << 22
            )));
        }
        p.sweep_grid = n;
        p.modulus_grid = n;
        p.pair_grid = n;
    }
    Ok(p)
}

fn resolve_tol(args: &CommandArgs) -> Outcome<f64> {
    match args.tol {
        None => Ok(DEFAULT_ATTAINMENT_TOL),
        Some(t) if t.is_finite() && t > 0.0 => Ok(t),
        Some(t) => Err(CliError::input(format!(
            "--tol must be a positive finite number, got {t}"
        ))),
    }
}

/// Parse `--point x,y` into a float vector and, when both coordinates are
/// integers or p/q strings, its exact counterpart.
fn parse_point(args: &CommandArgs, cmd: &str) -> Outcome<(Vec2, Option<RationalVec2>)> {
    let s = args
        .point
        .as_deref()
        .ok_or_else(|| CliError::input(format!("'{cmd}' requires --point x,y")))?;
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::input(format!(
            "--point must be two comma-separated coordinates, got '{s}'"
        )));
    }
    let (fx, rx) = parse_point_component(parts[0])?;
    let (fy, ry) = parse_point_component(parts[1])?;
    let v = Vec2::new(fx, fy);
    let exact_point = match (rx, ry) {
        (Some(x), Some(y)) => Some(RationalVec2::new(x, y)),
        _ => None,
    };
    Ok((v, exact_point))
}

fn parse_point_component(s: &str) -> Outcome<(f64, Option<exact::Rational>)> {
    let t = s.trim();
    if let Ok(r) = exact::parse_rational(t) {
        return Ok((exact::rational_to_f64(&r), Some(r)));
    }
    match t.parse::<f64>() {
        Ok(f) if f.is_finite() => Ok((f, None)),
        _ => Err(CliError::input(format!(
            "coordinate '{t}' is not a decimal number or p/q rational"
        ))),
    }
}

fn require_nonzero(v: Vec2, cmd: &str) -> Outcome<Vec2> {
    if v.is_zero() {
        Err(CliError::input(format!("'{cmd}' needs a nonzero --point")))
    } else {
        Ok(v)
    }
}

fn require_exact_point(exact_point: Option<RationalVec2>) -> Outcome<RationalVec2> {
    exact_point.ok_or_else(|| {
        CliError::input("--exact requires integer or p/q rational point coordinates")
    })
}

/// Fail (computation error) when the float route strays from the exact one.
fn cross_check(label: &str, float_value: f64, exact_value: f64) -> Outcome<()> {
    if (float_value - exact_value).abs() > EXACT_CROSS_TOL {
        return Err(CliError::compute(format!(
            "float/exact disagreement on {label}: float {} vs exact {} (allowed {})",
            format::float15(float_value),
            format::float15(exact_value),
            format::float15(EXACT_CROSS_TOL),
        )));
    }
    Ok(())
}

/// Render a scalar result: the exact string alone in text mode when the
/// exact kernel produced it, the float value otherwise.
fn scalar_output(args: &CommandArgs, value: f64, exact_str: Option<String>) -> Outcome<Output> {
    let body = match args.format {
        OutputFormat::Text => match &exact_str {
            Some(s) => format!("{s}\n"),
            None => format!("{}\n", format::float15(value)),
        },
        OutputFormat::Json => {
            let doc = match &exact_str {
                Some(s) => json!({ "value": value, "exact": s }),
                None => json!({ "value": value }),
            };
            format!("{}\n", pretty(&doc)?)
        }
        OutputFormat::Csv => unreachable!("csv rejected for scalar commands"),
    };
    Ok(Output::ok(body, args.out.clone()))
}

fn pretty<T: serde::Serialize>(doc: &T) -> Outcome<String> {
    serde_json::to_string_pretty(doc)
        .map_err(|e| CliError::compute(format!("cannot serialize output: {e}")))
}

fn gauge_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let (p, exact_point) = parse_point(args, "gauge")?;
    let g = norm.float.gauge(p);
    if args.exact {
        let poly = norm.require_exact()?;
        let rp = require_exact_point(exact_point)?;
        let exact_g = poly.gauge(&rp);
        cross_check("gauge", g, exact::rational_to_f64(&exact_g))?;
        scalar_output(args, g, Some(format::rational(&exact_g)))
    } else {
        scalar_output(args, g, None)
    }
}

fn partner_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let (p, exact_point) = parse_point(args, "partner")?;
    let p = require_nonzero(p, "partner")?;
    let solved = iso::partner(&norm.float, p, 1.0, &params)?;
    if args.exact {
        let poly = norm.require_exact()?;
        let rp = require_exact_point(exact_point)?;
        let y = poly.iso_partner(&rp)?;
        let yf = y.to_vec2();
        cross_check("partner x-coordinate", solved.primary.x, yf.x)?;
        cross_check("partner y-coordinate", solved.primary.y, yf.y)?;
        let body = match args.format {
            OutputFormat::Text => format!("{}\n", format::rational_point(&y)),
            OutputFormat::Json => {
                let doc = json!({
                    "partner": [solved.primary.x, solved.primary.y],
                    "exact": [format::rational(&y.x), format::rational(&y.y)],
                });
                format!("{}\n", pretty(&doc)?)
            }
            OutputFormat::Csv => unreachable!("csv rejected for partner"),
        };
        Ok(Output::ok(body, args.out.clone()))
    } else {
        let body = match args.format {
            OutputFormat::Text => {
                let mut s = format!("{}\n", format::point(solved.primary));
                if let Some((lo, hi)) = solved.plateau {
                    s.push_str(&format!(
                        "plateau = [{}, {}]\n",
                        format::float15(lo),
                        format::float15(hi)
                    ));
                }
                s
            }
            OutputFormat::Json => {
                let doc = json!({
                    "partner": [solved.primary.x, solved.primary.y],
                    "plateau": solved.plateau.map(|(lo, hi)| vec![lo, hi]),
                    "radius": solved.radius,
                });
                format!("{}\n", pretty(&doc)?)
            }
            OutputFormat::Csv => unreachable!("csv rejected for partner"),
        };
        Ok(Output::ok(body, args.out.clone()))
    }
}

fn beta_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let (p, exact_point) = parse_point(args, "beta")?;
    let p = require_nonzero(p, "beta")?;
    let value = match args.lambda {
        Some(l) => {
            if !(l > 0.0 && l < 1.0) {
                return Err(CliError::input(format!(
                    "--lambda must lie strictly between 0 and 1, got {l}"
                )));
            }
            constants::beta_lambda(&norm.float, p, l, &params)?
        }
        None => constants::beta(&norm.float, p, &params)?,
    };
    if args.exact {
        if args.lambda.is_some() {
            return Err(CliError::input(
                "--exact is not available together with --lambda",
            ));
        }
        let poly = norm.require_exact()?;
        let rp = require_exact_point(exact_point)?;
        let unit = poly.normalize(&rp)?;
        let b = poly.beta(&unit)?;
        cross_check("beta", value, exact::rational_to_f64(&b))?;
        scalar_output(args, value, Some(format::rational(&b)))
    } else {
        scalar_output(args, value, None)
    }
}

fn james_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let j = constants::james(&norm.float, &params)?;
    if args.exact {
        let poly = norm.require_exact()?;
        let je = poly.james()?;
        cross_check("james", j, exact::rational_to_f64(&je))?;
        scalar_output(args, j, Some(format::rational(&je)))
    } else {
        scalar_output(args, j, None)
    }
}

fn schaffer_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let s = constants::schaffer(&norm.float, &params)?;
    scalar_output(args, s, None)
}

/// Evenly spaced interior samples of (0, 2).
fn curve_epsilons(n: usize) -> Vec<f64> {
    (1..=n).map(|i| 2.0 * i as f64 / (n + 1) as f64).collect()
}

fn modulus_rows(
    norm: &LoadedNorm,
    params: &Params,
    epsilons: &[f64],
) -> Outcome<Vec<(f64, f64, f64, f64)>> {
    let mut rows = Vec::with_capacity(epsilons.len());
    for &e in epsilons {
        rows.push((
            e,
            modulus::delta(&norm.float, e, params)?,
            modulus::rho(&norm.float, e, params)?,
            modulus::rho_prime(&norm.float, e, params)?,
        ));
    }
    Ok(rows)
}

fn modulus_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    if let Some(e) = args.epsilon {
        if !(0.0..=2.0).contains(&e) {
            return Err(CliError::input(format!(
                "--epsilon must lie in [0, 2] for modulus, got {e}"
            )));
        }
        let d = modulus::delta(&norm.float, e, &params)?;
        let r = modulus::rho(&norm.float, e, &params)?;
        let rp = modulus::rho_prime(&norm.float, e, &params)?;
        let body = match args.format {
            OutputFormat::Text => format!(
                "delta = {}\nrho = {}\nrho_prime = {}\n",
                format::float15(d),
                format::float15(r),
                format::float15(rp)
            ),
            OutputFormat::Json => {
                let doc = json!({ "epsilon": e, "delta": d, "rho": r, "rho_prime": rp });
                format!("{}\n", pretty(&doc)?)
            }
            OutputFormat::Csv => format!(
                "epsilon,delta,rho,rho_prime\n{},{},{},{}\n",
                format::float15(e),
                format::float15(d),
                format::float15(r),
                format::float15(rp)
            ),
        };
        Ok(Output::ok(body, args.out.clone()))
    } else {
        let rows = modulus_rows(&norm, &params, &curve_epsilons(CURVE_POINTS))?;
        let body = match args.format {
            OutputFormat::Text => {
                let mut s = String::from("epsilon delta rho rho_prime\n");
                for (e, d, r, rp) in &rows {
                    s.push_str(&format!(
                        "{} {} {} {}\n",
                        format::float15(*e),
                        format::float15(*d),
                        format::float15(*r),
                        format::float15(*rp)
                    ));
                }
                s
            }
            OutputFormat::Json => {
                let doc: Vec<_> = rows
                    .iter()
                    .map(|(e, d, r, rp)| {
                        json!({ "epsilon": e, "delta": d, "rho": r, "rho_prime": rp })
                    })
                    .collect();
                format!("{}\n", pretty(&doc)?)
            }
            OutputFormat::Csv => {
                let mut s = String::from("epsilon,delta,rho,rho_prime\n");
                for (e, d, r, rp) in &rows {
                    s.push_str(&format!(
                        "{},{},{},{}\n",
                        format::float15(*e),
                        format::float15(*d),
                        format::float15(*r),
                        format::float15(*rp)
                    ));
                }
                s
            }
        };
        Ok(Output::ok(body, args.out.clone()))
    }
}

fn aset_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let (p, _) = parse_point(args, "aset")?;
    let p = require_nonzero(p, "aset")?;
    let e = args
        .epsilon
        .ok_or_else(|| CliError::input("'aset' requires --epsilon"))?;
    if !(0.0..1.0).contains(&e) {
        return Err(CliError::input(format!(
            "--epsilon must lie in [0, 1) for aset, got {e}"
        )));
    }
    let arc = iso::arc(&norm.float, p, e, &params)?;
    let body = match args.format {
        OutputFormat::Text => format!(
            "epsilon = {}\nanchor = {}\nendpoint_toward_x = {}\nendpoint_toward_neg_x = {}\nspan = {}\n",
            format::float15(arc.epsilon),
            format::point(arc.anchor),
            format::point(arc.endpoint_toward_x),
            format::point(arc.endpoint_toward_neg_x),
            format::float15(arc.span())
        ),
        OutputFormat::Json => {
            let doc = json!({
                "epsilon": arc.epsilon,
                "anchor": [arc.anchor.x, arc.anchor.y],
                "endpoint_toward_x": [arc.endpoint_toward_x.x, arc.endpoint_toward_x.y],
                "endpoint_toward_neg_x": [arc.endpoint_toward_neg_x.x, arc.endpoint_toward_neg_x.y],
                "span": arc.span(),
            });
            format!("{}\n", pretty(&doc)?)
        }
        OutputFormat::Csv => unreachable!("csv rejected for aset"),
    };
    Ok(Output::ok(body, args.out.clone()))
}

fn attain_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let tol = resolve_tol(args)?;
    let pairs = match args.epsilon {
        None => constants::james_attainment(&norm.float, tol, &params)?,
        Some(e) => {
            if !(e > 0.0 && e <= 2.0) {
                return Err(CliError::input(format!(
                    "--epsilon must lie in (0, 2] for attain, got {e}"
                )));
            }
            modulus::delta_attainment(&norm.float, e, tol, &params)?
        }
    };
    let body = match args.format {
        OutputFormat::Text => {
            let mut s = String::new();
            for p in &pairs {
                s.push_str(&format!(
                    "x = {}, y = {}, value = {}, defect = {}",
                    format::point(p.x),
                    format::point(p.y),
                    format::float15(p.value),
                    format::float15(p.defect)
                ));
                if let Some(e0) = p.approx_epsilon {
                    s.push_str(&format!(", epsilon0 = {}", format::float15(e0)));
                }
                s.push('\n');
            }
            s
        }
        OutputFormat::Json => {
            let doc: Vec<_> = pairs
                .iter()
                .map(|p| {
                    json!({
                        "x": [p.x.x, p.x.y],
                        "y": [p.y.x, p.y.y],
                        "value": p.value,
                        "defect": p.defect,
                        "epsilon0": p.approx_epsilon,
                    })
                })
                .collect();
            format!("{}\n", pretty(&doc)?)
        }
        OutputFormat::Csv => unreachable!("csv rejected for attain"),
    };
    Ok(Output::ok(body, args.out.clone()))
}

fn check_rows(norm: &LoadedNorm, params: &Params) -> Vec<CheckRow> {
    report::run_checks(&norm.float, CHECK_SEED, params)
        .into_iter()
        .map(|r| CheckRow {
            name: r.name.to_string(),
            passed: r.passed,
            residual: if r.residual.is_finite() {
                Some(r.residual)
            } else {
                None
            },
            tolerance: r.tolerance,
        })
        .collect()
}

fn render_check_lines(rows: &[CheckRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let residual = match r.residual {
            Some(v) => format::float15(v),
            None => "nan".to_string(),
        };
        s.push_str(&format!(
            "{} {} (residual {}, tolerance {})\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            residual,
            format::float15(r.tolerance)
        ));
    }
    let passed = rows.iter().filter(|r| r.passed).count();
    s.push_str(&format!("{passed}/{} checks passed\n", rows.len()));
    s
}

fn check_cmd(args: &CommandArgs) -> Outcome<Output> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let rows = check_rows(&norm, &params);
    let all_passed = rows.iter().all(|r| r.passed);
    let body = match args.format {
        OutputFormat::Text => render_check_lines(&rows),
        OutputFormat::Json => format!("{}\n", pretty(&rows)?),
        OutputFormat::Csv => unreachable!("csv rejected for check"),
    };
    Ok(Output {
        body,
        dest: args.out.clone(),
        status: if all_passed { 0 } else { 1 },
    })
}

fn build_report_document(args: &CommandArgs) -> Outcome<ReportDocument> {
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;
    let tol = resolve_tol(args)?;

    let defaults = Params::default();
    let sweep_scale = (defaults.sweep_grid as f64 / params.sweep_grid as f64).max(1.0);
    let modulus_scale = (defaults.modulus_grid as f64 / params.modulus_grid as f64).max(1.0);
    let constant_tol = SWEEP_CLAIM_TOL * sweep_scale;
    let curve_tol = SWEEP_CLAIM_TOL * modulus_scale;
    let route_tol = ROUTE_CLAIM_TOL * modulus_scale;

    let core = report::build_report(
        &norm.float,
        &LAMBDA_TABLE,
        &curve_epsilons(REPORT_CURVE_POINTS),
        &params,
    )?;

    let (mode, james_value) = if args.exact {
        let poly = norm.require_exact()?;
        let je = poly.james()?;
        cross_check("james", core.james, exact::rational_to_f64(&je))?;
        (
            "both".to_string(),
            ReportValue::Exact {
                exact: format::rational(&je),
            },
        )
    } else {
        (
            "float".to_string(),
            ReportValue::Float {
                value: core.james,
                tol: constant_tol,
            },
        )
    };

    Ok(ReportDocument {
        norm: norm.document.clone(),
        mode,
        configuration: ConfigEcho {
            sweep_grid: params.sweep_grid,
            modulus_grid: params.modulus_grid,
            pair_grid: params.pair_grid,
            attainment_tol: tol,
        },
        constants: ConstantsSection {
            james: james_value,
            schaffer: ReportValue::Float {
                value: core.schaffer,
                tol: constant_tol,
            },
            james_from_delta: ReportValue::Float {
                value: core.james_from_delta,
                tol: route_tol,
            },
            schaffer_from_rho: ReportValue::Float {
                value: core.schaffer_from_rho,
                tol: route_tol,
            },
            generalized_james: core
                .generalized_james
                .iter()
                .map(|&(lambda, value)| LambdaRow {
                    lambda,
                    value: ReportValue::Float {
                        value,
                        tol: constant_tol,
                    },
                })
                .collect(),
        },
        curves: CurvesSection {
            tol: curve_tol,
            rows: core
                .curve
                .iter()
                .map(|r| CurveRow {
                    epsilon: r.epsilon,
                    delta: r.delta,
                    rho: r.rho,
                    rho_prime: r.rho_prime,
                })
                .collect(),
        },
        attainment: AttainmentSection {
            tol,
            pairs: core
                .attainment
                .iter()
                .map(|p| AttainmentRow {
                    x: [p.x.x, p.x.y],
                    y: [p.y.x, p.y.y],
                    value: p.value,
                    defect: p.defect,
                    epsilon0: p.approx_epsilon,
                })
                .collect(),
        },
        checks: check_rows(&norm, &params),
    })
}

fn render_report_value(v: &ReportValue) -> String {
    match v {
        ReportValue::Exact { exact } => exact.clone(),
        ReportValue::Float { value, tol } => {
            format!("{} ± {}", format::float15(*value), format::float15(*tol))
        }
    }
}

fn render_report_text(doc: &ReportDocument) -> Outcome<String> {
    let mut s = String::new();
    let echo = serde_json::to_string(&doc.norm)
        .map_err(|e| CliError::compute(format!("cannot serialize norm echo: {e}")))?;
    s.push_str(&format!("norm = {echo}\n"));
    s.push_str(&format!("mode = {}\n", doc.mode));
    s.push_str(&format!(
        "grids: sweep = {}, modulus = {}, pair = {}; attainment tol = {}\n",
        doc.configuration.sweep_grid,
        doc.configuration.modulus_grid,
        doc.configuration.pair_grid,
        format::float15(doc.configuration.attainment_tol)
    ));
    s.push_str(&format!(
        "james = {}\n",
        render_report_value(&doc.constants.james)
    ));
    s.push_str(&format!(
        "schaffer = {}\n",
        render_report_value(&doc.constants.schaffer)
    ));
    s.push_str(&format!(
        "james_from_delta = {}\n",
        render_report_value(&doc.constants.james_from_delta)
    ));
    s.push_str(&format!(
        "schaffer_from_rho = {}\n",
        render_report_value(&doc.constants.schaffer_from_rho)
    ));
    s.push_str("generalized james:\n");
    for row in &doc.constants.generalized_james {
        s.push_str(&format!(
            "  lambda = {}, value = {}\n",
            format::float15(row.lambda),
            render_report_value(&row.value)
        ));
    }
    s.push_str(&format!(
        "curve (tol {}):\n  epsilon delta rho rho_prime\n",
        format::float15(doc.curves.tol)
    ));
    for r in &doc.curves.rows {
        s.push_str(&format!(
            "  {} {} {} {}\n",
            format::float15(r.epsilon),
            format::float15(r.delta),
            format::float15(r.rho),
            format::float15(r.rho_prime)
        ));
    }
    s.push_str(&format!(
        "attainment (tol {}):\n",
        format::float15(doc.attainment.tol)
    ));
    for p in &doc.attainment.pairs {
        s.push_str(&format!(
            "  x = {}, y = {}, value = {}, defect = {}\n",
            format::point(Vec2::new(p.x[0], p.x[1])),
            format::point(Vec2::new(p.y[0], p.y[1])),
            format::float15(p.value),
            format::float15(p.defect)
        ));
    }
    s.push_str("checks:\n");
    for line in render_check_lines(&doc.checks).lines() {
        s.push_str(&format!("  {line}\n"));
    }
    Ok(s)
}

fn report_cmd(args: &CommandArgs) -> Outcome<Output> {
    let doc = build_report_document(args)?;
    let body = match args.format {
        OutputFormat::Text => render_report_text(&doc)?,
        OutputFormat::Json => format!("{}\n", pretty(&doc)?),
        OutputFormat::Csv => {
            let mut s = String::from("epsilon,delta,rho,rho_prime\n");
            for r in &doc.curves.rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    format::float15(r.epsilon),
                    format::float15(r.delta),
                    format::float15(r.rho),
                    format::float15(r.rho_prime)
                ));
            }
            s
        }
    };
    Ok(Output::ok(body, args.out.clone()))
}

/// Number of boundary samples for drawing a smooth unit sphere.
const PLOT_SPHERE_SAMPLES: usize = 512;
/// Samples along one approximate-orthogonality arc overlay.
const PLOT_ARC_SAMPLES: usize = 128;
/// At most this many attainment chords are drawn.
const PLOT_MAX_CHORDS: usize = 12;

fn plot_cmd(args: &CommandArgs) -> Outcome<Output> {
    if args.format != OutputFormat::Text {
        return Err(CliError::input(
            "plot always writes SVG; --format is not available",
        ));
    }
    let norm = load_norm(&args.norm)?;
    let params = resolve_params(args)?;

    let sphere = match norm.float.extreme_points() {
        Ok(vertices) => vertices,
        Err(_) => (0..PLOT_SPHERE_SAMPLES)
            .map(|k| {
                norm.float
                    .sphere_point(normplane_core::vec2::TAU * k as f64 / PLOT_SPHERE_SAMPLES as f64)
            })
            .collect(),
    };

    let mut chords = Vec::new();
    for p in constants::james_attainment(&norm.float, DEFAULT_ATTAINMENT_TOL, &params)?
        .iter()
        .take(PLOT_MAX_CHORDS)
    {
        chords.push([p.x, p.y]);
    }

    let mut pair = None;
    let mut arcs = Vec::new();
    if args.point.is_some() {
        let (p, _) = parse_point(args, "plot")?;
        let p = require_nonzero(p, "plot")?;
        let unit = norm.float.normalize(p)?;
        let partner = iso::partner(&norm.float, unit, 1.0, &params)?.primary;
        pair = Some([unit, partner]);
        if let Some(e) = args.epsilon {
            if !(0.0..1.0).contains(&e) {
                return Err(CliError::input(format!(
                    "--epsilon must lie in [0, 1) for plot, got {e}"
                )));
            }
            let arc = iso::arc(&norm.float, unit, e, &params)?;
            let start = arc.endpoint_toward_x.angle();
            let span = arc.span();
            let one_side: Vec<Vec2> = (0..=PLOT_ARC_SAMPLES)
                .map(|k| {
                    let theta = start + span * k as f64 / PLOT_ARC_SAMPLES as f64;
                    norm.float.sphere_point(theta)
                })
                .collect();
            let mirrored: Vec<Vec2> = one_side.iter().map(|v| -*v).collect();
            arcs.push(one_side);
            arcs.push(mirrored);
        }
    } else if args.epsilon.is_some() {
        return Err(CliError::input("--epsilon on plot requires --point"));
    }

    let scene = svg::Scene {
        sphere,
        chords,
        pair,
        arcs,
    };
    Ok(Output::ok(svg::render(&scene), args.out.clone()))
}
