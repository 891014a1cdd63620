//! Command-line front end: evaluation, table reproduction, sweeps and
//! deterministic data exports.
//!
//! Exit codes: 0 success, 1 domain error, 2 budget exceeded, 3 table
//! mismatch.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use output::{diagnose_csv, fmt_f, spiral_csv, spiral_svg, write_sink};
use radial_zeta::diagnostics::{cr_residual, fit_decay_exponent, log_spaced, spiral_export};
use radial_zeta::domination::{n_threshold, scan_band};
use radial_zeta::oracle::zeta_eta;
use radial_zeta::radial::center_limit;
use radial_zeta::winding::{u_limit, UzEstimate};
use radial_zeta::zeros::{builtin_zeros, load_zeros, ZeroRecord, ZerosFormat};
use radial_zeta::{Complex, CriticalStripPoint, Error, Real, StripPoint};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;

const EXIT_OK: i32 = 0;
const EXIT_DOMAIN: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

/// Radial-convergence summation of the Riemann series and the winding
/// quantity U at (and near) the nontrivial zeta zeros.
///
/// Ordinates follow the table convention z = 1/2 - i t with t > 0; passing
/// the conjugate point negates U.
#[derive(Parser)]
#[command(name = "radial-zeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the limit center c(z), its tail bound, and the
    /// independent eta-oracle value, as JSON on stdout.
    Eval {
        /// Real part, must be > 0.
        #[arg(long, allow_hyphen_values = true)]
        x: Real,
        /// Imaginary part, must be nonzero.
        #[arg(long, allow_hyphen_values = true)]
        y: Real,
        /// Tail-bound target for the center.
        #[arg(long, default_value_t = 1e-6)]
        tol: Real,
        /// Iteration budget.
        #[arg(long = "n-max", default_value_t = 10_000_000)]
        n_max: u64,
    },
    /// Winding quantity U at z = x - i t, as JSON (or one CSV row) on
    /// stdout.
    Uz {
        /// Real part, must lie strictly inside (0, 1).
        #[arg(long, default_value_t = 0.5)]
        x: Real,
        /// Positive ordinate t.
        #[arg(long, allow_hyphen_values = true)]
        t: Real,
        /// Winding steps (values below 1000 are raised to 1000).
        #[arg(long = "n-max", default_value_t = 1_000_000)]
        n_max: u64,
        /// Residual threshold of the convergence verdict.
        #[arg(long, default_value_t = 0.1)]
        threshold: Real,
        #[arg(long, value_enum, default_value_t = UzFormat::Json)]
        format: UzFormat,
    },
    /// Reproduce the winding-integer table at the tabulated zeros (CSV).
    Table {
        /// Number of leading zeros to run.
        #[arg(long, default_value_t = 10)]
        first: usize,
        /// Winding steps per zero (values below 1000 are raised to 1000).
        #[arg(long = "n-max", default_value_t = 1_000_000)]
        n_max: u64,
        /// Residual threshold of the convergence verdict.
        #[arg(long, default_value_t = 0.1)]
        threshold: Real,
        /// Optional zeros file replacing the embedded table
        /// (.csv => "index,ordinate,expected_u" layout, otherwise one
        /// ordinate per line).
        #[arg(long)]
        zeros: Option<PathBuf>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep U along the line x - i y over a y grid (CSV).
    Sweep {
        #[arg(long, default_value_t = 0.5)]
        x: Real,
        #[arg(long = "y-from", allow_hyphen_values = true)]
        y_from: Real,
        #[arg(long = "y-to", allow_hyphen_values = true)]
        y_to: Real,
        /// Grid step, must be > 0.
        #[arg(long)]
        step: Real,
        /// Winding steps per point (values below 1000 are raised to 1000).
        #[arg(long = "n-max", default_value_t = 100_000)]
        n_max: u64,
        #[arg(long, default_value_t = 0.1)]
        threshold: Real,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export the partial-sum spiral and its running centers.
    Spiral {
        #[arg(long, allow_hyphen_values = true)]
        x: Real,
        #[arg(long, allow_hyphen_values = true)]
        y: Real,
        #[arg(long = "n-max", default_value_t = 10_000)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = SpiralFormat::Csv)]
        format: SpiralFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Scan the normalized step modulus against its settling band (JSON).
    Dominate {
        #[arg(long, allow_hyphen_values = true)]
        x: Real,
        #[arg(long, allow_hyphen_values = true)]
        y: Real,
        #[arg(long = "n-max", default_value_t = 100_000)]
        n_max: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cauchy-Riemann residual decay of the closed-form tail: JSON summary
    /// on stdout, per-sample CSV to --output when given.
    Diagnose {
        #[arg(long, allow_hyphen_values = true)]
        x: Real,
        #[arg(long, allow_hyphen_values = true)]
        y: Real,
        #[arg(long = "n-from", default_value_t = 1_000)]
        n_from: u64,
        #[arg(long = "n-to", default_value_t = 100_000)]
        n_to: u64,
        #[arg(long, default_value_t = 60)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpiralFormat {
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum UzFormat {
    Json,
    Csv,
}

fn main() {
    init_thread_pool();
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_DOMAIN
        }
    };
    std::process::exit(code);
}

fn init_thread_pool() {
    if let Ok(raw) = std::env::var("RADIAL_ZETA_THREADS") {
        match raw.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("warning: RADIAL_ZETA_THREADS must be an integer >= 1, ignoring {raw:?}")
            }
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Eval { x, y, tol, n_max } => cmd_eval(x, y, tol, n_max),
        Command::Uz {
            x,
            t,
            n_max,
            threshold,
            format,
        } => cmd_uz(x, t, n_max, threshold, format),
        Command::Table {
            first,
            n_max,
            threshold,
            zeros,
            output,
        } => cmd_table(first, n_max, threshold, zeros.as_ref(), output.as_ref()),
        Command::Sweep {
            x,
            y_from,
            y_to,
            step,
            n_max,
            threshold,
            output,
        } => cmd_sweep(x, y_from, y_to, step, n_max, threshold, output.as_ref()),
        Command::Spiral {
            x,
            y,
            n_max,
            format,
            output,
        } => cmd_spiral(x, y, n_max, format, output.as_ref()),
        Command::Dominate {
            x,
            y,
            n_max,
            output,
        } => cmd_dominate(x, y, n_max, output.as_ref()),
        Command::Diagnose {
            x,
            y,
            n_from,
            n_to,
            samples,
            output,
        } => cmd_diagnose(x, y, n_from, n_to, samples, output.as_ref()),
    }
}

/// JSON shape of one complex value.
#[derive(Serialize)]
struct ComplexOut {
    re: Real,
    im: Real,
}

impl From<Complex> for ComplexOut {
    fn from(v: Complex) -> Self {
        Self { re: v.re, im: v.im }
    }
}

#[derive(Serialize)]
struct EvalReport {
    z: ComplexOut,
    center: ComplexOut,
    tail_bound: Real,
    oracle: ComplexOut,
    abs_diff: Real,
    n_used: u64,
}

/// Eta oracle with the documented pole fallback: nudge y and retry.
fn oracle_value(x: Real, y: Real) -> Result<Complex, String> {
    let mut y = y;
    for _ in 0..4 {
        match zeta_eta(Complex::new(x, y), 1e-12) {
            Ok(r) => return Ok(r.value),
            Err(Error::EtaPole { .. }) => y += 1e-9,
            Err(e) => return Err(e.to_string()),
        }
    }
    Err("eta oracle pole did not clear after perturbation".into())
}

fn cmd_eval(x: Real, y: Real, tol: Real, n_max: u64) -> Result<i32, String> {
    let z = StripPoint::new(x, y).map_err(|e| e.to_string())?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(format!("tol must be > 0, got {tol}"));
    }
    let (result, code) = match center_limit(z, tol, n_max) {
        Ok(r) => (r, EXIT_OK),
        Err(Error::BudgetExceeded { best, .. }) => (best, EXIT_BUDGET),
        Err(e) => return Err(e.to_string()),
    };
    let oracle = oracle_value(x, y)?;
    let report = EvalReport {
        z: z.value().into(),
        center: result.center.into(),
        tail_bound: result.tail_bound,
        oracle: oracle.into(),
        abs_diff: (result.center - oracle).norm(),
        n_used: result.n_used,
    };
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(code)
}

#[derive(Serialize)]
struct UzReport {
    x: Real,
    t: Real,
    #[serde(flatten)]
    estimate: UzEstimate,
}

fn cmd_uz(x: Real, t: Real, n_max: u64, threshold: Real, format: UzFormat) -> Result<i32, String> {
    let z = CriticalStripPoint::new(x, -t).map_err(|e| e.to_string())?;
    let estimate = u_limit(z, n_max.max(1_000), threshold);
    match format {
        UzFormat::Json => {
            let report = UzReport { x, t, estimate };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        UzFormat::Csv => {
            println!("{}", UzEstimate::csv_header());
            println!("{}", estimate.csv_row(1, t));
        }
    }
    Ok(if estimate.converged {
        EXIT_OK
    } else {
        EXIT_BUDGET
    })
}

fn table_zeros(path: Option<&PathBuf>) -> Result<Vec<ZeroRecord>, String> {
    match path {
        None => Ok(builtin_zeros()),
        Some(p) => {
            let format = if p.extension().is_some_and(|e| e == "csv") {
                ZerosFormat::Csv
            } else {
                ZerosFormat::Plain
            };
            load_zeros(p, format).map_err(|e| e.to_string())
        }
    }
}

fn cmd_table(
    first: usize,
    n_max: u64,
    threshold: Real,
    zeros_path: Option<&PathBuf>,
    output: Option<&PathBuf>,
) -> Result<i32, String> {
    let zeros = table_zeros(zeros_path)?;
    if first == 0 || first > zeros.len() {
        return Err(format!(
            "--first must be in 1..={}, got {first}",
            zeros.len()
        ));
    }
    let n_max = n_max.max(1_000);
    let rows: Vec<(ZeroRecord, UzEstimate)> = zeros[..first]
        .par_iter()
        .map(|record| {
            let z = CriticalStripPoint::new(0.5, -record.ordinate)
                .expect("tabulated ordinate is a valid critical-strip point");
            (record.clone(), u_limit(z, n_max, threshold))
        })
        .collect();

    let mut csv =
        String::from("index,t,u_value,nearest_integer,expected_u,match,residual,converged\n");
    let mut with_expected = 0usize;
    let mut matched = 0usize;
    for (record, est) in &rows {
        let matches = record.expected_u.map(|u| u == est.nearest_integer);
        match matches {
            Some(true) => {
                with_expected += 1;
                matched += 1;
            }
            Some(false) => with_expected += 1,
            None => {}
        }
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            record.index,
            fmt_f(record.ordinate),
            fmt_f(est.value),
            est.nearest_integer,
            record.expected_u.map_or(String::new(), |u| u.to_string()),
            matches.map_or(String::new(), |m| m.to_string()),
            fmt_f(est.residual),
            est.converged
        ));
    }
    csv.push_str(&format!("# matched {matched}/{with_expected}\n"));
    write_sink(output, &csv).map_err(|e| e.to_string())?;
    if output.is_some() {
        eprintln!("matched {matched}/{with_expected} over {first} rows");
    }
    Ok(if matched == with_expected {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_sweep(
    x: Real,
    y_from: Real,
    y_to: Real,
    step: Real,
    n_max: u64,
    threshold: Real,
    output: Option<&PathBuf>,
) -> Result<i32, String> {
    if y_from.is_nan() || y_to.is_nan() || y_from >= y_to {
        return Err(format!(
            "--y-from must be below --y-to, got [{y_from}, {y_to}]"
        ));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(format!("--step must be > 0, got {step}"));
    }
    if x.is_nan() || x <= 0.0 || x >= 1.0 {
        return Err(format!("--x must lie strictly inside (0, 1), got {x}"));
    }
    let n_max = n_max.max(1_000);
    let count = ((y_to - y_from) / step + 1e-9).floor() as u64 + 1;
    if count > 10_000_000 {
        return Err(format!(
            "grid would have {count} points; pick a coarser --step"
        ));
    }
    let rows: Vec<(Real, Option<UzEstimate>)> = (0..count)
        .into_par_iter()
        .map(|k| {
            let y = y_from + k as Real * step;
            let est = CriticalStripPoint::new(x, -y)
                .ok()
                .map(|z| u_limit(z, n_max, threshold));
            (y, est)
        })
        .collect();

    let mut csv = String::from("y,u_value,nearest_integer,residual,converged\n");
    for (y, est) in &rows {
        match est {
            Some(e) => csv.push_str(&format!(
                "{},{},{},{},{}\n",
                fmt_f(*y),
                fmt_f(e.value),
                e.nearest_integer,
                fmt_f(e.residual),
                e.converged
            )),
            // Grid point outside the domain (y = 0): recorded, not fatal.
            None => csv.push_str(&format!("{},NaN,0,NaN,false\n", fmt_f(*y))),
        }
    }
    write_sink(output, &csv).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn cmd_spiral(
    x: Real,
    y: Real,
    n_max: u64,
    format: SpiralFormat,
    output: Option<&PathBuf>,
) -> Result<i32, String> {
    let z = StripPoint::new(x, y).map_err(|e| e.to_string())?;
    if n_max < 1 {
        return Err("--n-max must be >= 1".into());
    }
    let rows = spiral_export(z, n_max);
    let rendered = match format {
        SpiralFormat::Csv => spiral_csv(&rows),
        SpiralFormat::Svg => spiral_svg(&rows),
    };
    write_sink(output, &rendered).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn cmd_dominate(x: Real, y: Real, n_max: u64, output: Option<&PathBuf>) -> Result<i32, String> {
    let z = StripPoint::new(x, y).map_err(|e| e.to_string())?;
    let threshold = n_threshold(y.abs());
    if n_max <= threshold {
        return Err(format!(
            "--n-max must exceed the sign-stability threshold {threshold} for |y| = {}",
            y.abs()
        ));
    }
    let report = scan_band(z, n_max);
    let mut json = serde_json::to_string_pretty(&report).unwrap();
    json.push('\n');
    write_sink(output, &json).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DiagnoseReport {
    z: ComplexOut,
    n_from: u64,
    n_to: u64,
    samples_used: usize,
    decay_exponent: Real,
}

fn cmd_diagnose(
    x: Real,
    y: Real,
    n_from: u64,
    n_to: u64,
    samples: usize,
    output: Option<&PathBuf>,
) -> Result<i32, String> {
    let z = StripPoint::new(x, y).map_err(|e| e.to_string())?;
    // The residual map needs sign-stable trigonometric factors.
    let n_from = n_from.max(n_threshold(y.abs()) + 1);
    if n_to <= n_from || samples < 2 {
        return Err("need n_to > n_from and samples >= 2".into());
    }
    let reports: Vec<_> = log_spaced(n_from, n_to, samples)
        .into_iter()
        // A singular tangent index is measure-zero; drop the sample.
        .filter_map(|n| cr_residual(z, n).ok())
        .collect();
    if reports.len() < 2 {
        return Err("too few usable samples for a decay fit".into());
    }
    let fit_samples: Vec<(u64, Real)> = reports.iter().map(|r| (r.n, r.res1)).collect();
    let exponent = fit_decay_exponent(&fit_samples);
    if let Some(path) = output {
        write_sink(Some(path), &diagnose_csv(&reports)).map_err(|e| e.to_string())?;
    }
    let summary = DiagnoseReport {
        z: z.value().into(),
        n_from,
        n_to,
        samples_used: reports.len(),
        decay_exponent: exponent,
    };
    println!("{}", serde_json::to_string_pretty(&summary).unwrap());
    Ok(EXIT_OK)
}
