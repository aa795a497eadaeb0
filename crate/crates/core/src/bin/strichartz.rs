use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use strichartz_lab::geometry::{
    classify, feasible_q_interval, fmt_rational, necessary_check, parse_rational, scaling_gap, ExponentPoint,
};
use strichartz_lab::harness::{
    emit_report, parse_formats, run_sweep, ExperimentKind, ExponentSpec, Outcome, RegionOptions, SweepConfig, SweepReport,
    ARTIFACT_VERSION,
};
use strichartz_lab::{Error, Result};

#[derive(Parser)]
#[command(name = "strichartz", about = "Exponent geometry and FFT sweeps for inhomogeneous Strichartz estimates")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Spatial dimension.
    #[arg(long)]
    n: Option<u32>,
    /// JSON config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for reports (stdout JSON when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report formats, comma separated.
    #[arg(long, default_value = "json")]
    format: String,
    /// Seed for randomised inputs (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Necessary conditions and classification of one exponent config.
    Check {
        #[command(flatten)]
        common: Common,
        /// `1/q,1/q~',1/r~',1/r` as rationals, e.g. `1/4,1/2,1,1/6`.
        #[arg(long)]
        exponents: Option<String>,
    },
    /// Classification raster of the unit square.
    Region {
        #[command(flatten)]
        common: Common,
        /// Raster step, e.g. `1/40`.
        #[arg(long, default_value = "1/40")]
        step: String,
    },
    /// Feasible time-exponent interval at a point.
    Qrange {
        #[command(flatten)]
        common: Common,
        /// `1/r~',1/r`, e.g. `13/20,1/10`.
        #[arg(long)]
        point: String,
    },
    /// Runs a sweep config file.
    Sweep {
        #[command(flatten)]
        common: Common,
    },
    /// Dyadic synthesis against time stepping (DUHAMEL_VERIFY).
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Prints the artifact version.
    Version,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

fn split_rationals(s: &str, count: usize) -> Result<Vec<strichartz_lab::geometry::Rational>> {
    let v: Vec<_> = s.split(',').map(|p| parse_rational(p.trim())).collect::<Result<_>>()?;
    if v.len() != count {
        return Err(usage(format!("expected {count} comma-separated rationals, got {:?}", s)));
    }
    Ok(v)
}

fn set_jobs(jobs: Option<usize>) -> Result<()> {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().map_err(|e| usage(e.to_string()))?;
    }
    Ok(())
}

fn publish(report: &SweepReport, common: &Common) -> Result<Outcome> {
    let formats = parse_formats(&common.format)?;
    let out = common.out.clone().or_else(|| report.config.output.clone().map(PathBuf::from));
    match out {
        Some(dir) => {
            for p in emit_report(report, &formats, &dir)? {
                eprintln!("wrote {}", p.display());
            }
        }
        None => emit(&report.to_json()?),
    }
    for c in &report.checks {
        let m = c.measured.map_or("n/a".to_string(), |v| format!("{v:.6e}"));
        eprintln!("{} {} measured {m} target {:e} ± {:e}", c.outcome, c.name, c.target, c.tolerance);
    }
    for f in &report.failures {
        eprintln!("FAIL param {} (config {}): {}", f.param, f.config, f.error);
    }
    eprintln!("{} {}", report.outcome, report.config.kind.as_str());
    Ok(report.outcome)
}

fn load_sweep(common: &Common, kind: Option<ExperimentKind>) -> Result<SweepConfig> {
    let mut cfg = match (&common.config, kind) {
        (Some(p), _) => SweepConfig::load(p)?,
        (None, Some(k)) => SweepConfig::new(k, common.n.unwrap_or(1)),
        (None, None) => return Err(usage("--config <path> is required")),
    };
    if let Some(k) = kind {
        if cfg.kind != k {
            return Err(usage(format!("config is a {} sweep, expected {}", cfg.kind.as_str(), k.as_str())));
        }
    }
    if let Some(n) = common.n {
        if common.config.is_some() && n != cfg.n {
            return Err(usage(format!("--n {n} disagrees with the config's n = {}", cfg.n)));
        }
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn read_spec(path: &Path) -> Result<ExponentSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Version => {
            emit(&format!("{ARTIFACT_VERSION}\n"));
            Ok(Outcome::Pass)
        }
        Cmd::Check { common, exponents } => {
            set_jobs(common.jobs)?;
            let n = common.n.ok_or_else(|| usage("--n is required"))?;
            let spec = match (&exponents, &common.config) {
                (Some(e), None) => {
                    let v = split_rationals(e, 4)?;
                    ExponentSpec {
                        inv_q: fmt_rational(v[0]),
                        inv_qt_prime: fmt_rational(v[1]),
                        inv_rt_prime: fmt_rational(v[2]),
                        inv_r: fmt_rational(v[3]),
                    }
                }
                (None, Some(p)) => read_spec(p)?,
                _ => return Err(usage("give exactly one of --exponents or --config")),
            };
            let c = spec.resolve(n)?;
            let violated = necessary_check(&c);
            let verdict = classify(n, c.point)?;
            let out = json!({
                "n": n,
                "config": spec,
                "scaling_gap": fmt_rational(scaling_gap(&c)),
                "necessary_violations": violated,
                "verdict": verdict.kind,
                "point_violations": verdict.violated,
            });
            emit(&format!("{}\n", serde_json::to_string_pretty(&out)?));
            Ok(if violated.is_empty() { Outcome::Pass } else { Outcome::Fail })
        }
        Cmd::Qrange { common, point } => {
            let n = common.n.ok_or_else(|| usage("--n is required"))?;
            let v = split_rationals(&point, 2)?;
            let p = ExponentPoint::new(v[0], v[1])?;
            let interval = feasible_q_interval(n, p)?;
            let out = json!({
                "n": n,
                "x": fmt_rational(p.x),
                "y": fmt_rational(p.y),
                "interval": interval.as_ref().map(|i| i.notation()),
                "empty": interval.is_none(),
            });
            emit(&format!("{}\n", serde_json::to_string_pretty(&out)?));
            Ok(if interval.is_some() { Outcome::Pass } else { Outcome::Fail })
        }
        Cmd::Region { common, step } => {
            set_jobs(common.jobs)?;
            let mut cfg = load_sweep(&common, Some(ExperimentKind::RegionScan))?;
            if common.config.is_none() {
                cfg.region = Some(RegionOptions { step });
                cfg.validate()?;
            }
            publish(&run_sweep(&cfg)?, &common)
        }
        Cmd::Sweep { common } => {
            set_jobs(common.jobs)?;
            let cfg = load_sweep(&common, None)?;
            publish(&run_sweep(&cfg)?, &common)
        }
        Cmd::Verify { common } => {
            set_jobs(common.jobs)?;
            let cfg = load_sweep(&common, Some(ExperimentKind::DuhamelVerify))?;
            publish(&run_sweep(&cfg)?, &common)
        }
    }
}

/// Stdout write that treats a closed pipe (`| head`) as a normal end of output.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
