//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use dimfermat_core::arrangements::*;
use dimfermat_core::linsys::{generation_check, unexpectedness_check_for};
use dimfermat_core::unexpected::*;
use dimfermat_core::{Certificate, ConfigKind, Configuration};
use serde_json::json;

use crate::emit::{emit, Format};
use crate::report::{exit_code, run_report, run_sweep, Check, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "dimfermat", version, about = "Certificates for diminished Fermat-type point configurations")]
pub struct Cli {
    /// Configuration parameter.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: Option<u32>,
    /// Random specializations per probabilistic check.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub output: Format,
    /// Top degree of the generation checks.
    #[arg(long, global = true)]
    pub d_max: Option<u32>,
    /// Search bound of the base-point-freeness check.
    #[arg(long, global = true)]
    pub n_max: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PointSet {
    W,
    S,
    Y,
    Z,
    X,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealSet {
    Y,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Xyz,
    Abc,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a point configuration, one point per line.
    Points {
        #[arg(long, value_enum, ignore_case = true, default_value = "z")]
        set: PointSet,
    },
    /// Print the bihomogeneous form γ_m.
    Gamma,
    /// Compare the generated ideal with the ideal of the points, degree by degree.
    IdealCheck {
        #[arg(long, value_enum, ignore_case = true, default_value = "z")]
        set: IdealSet,
        #[arg(long)]
        d_min: Option<u32>,
    },
    /// Dimension of [I(Z_m)]_d with a general fat point.
    UnexpectedCheck {
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        mult: u32,
    },
    /// Multiplicity of γ_m at the swapped point.
    MultCert {
        #[arg(long, value_enum, default_value = "xyz")]
        side: SideArg,
    },
    /// Coefficients of γ_m in a,b,c against the closed form.
    DualCheck,
    /// Base-point-freeness of Λ_m.
    BpfCheck,
    /// Full pipeline for one m or a range.
    Report {
        /// Inclusive range such as `3..6`.
        #[arg(long, value_parser = parse_range)]
        sweep: Option<(u32, u32)>,
        /// Restrict to these checks.
        #[arg(long, value_enum, value_delimiter = ',')]
        only: Vec<Check>,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a range like 3..6, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: u32 = a.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: u32 = b.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo == 0 || lo > hi {
        return Err(format!("range must satisfy 1 <= lo <= hi, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn usage(err: clap::Error) -> Self {
        let text = err.render().to_string();
        if err.use_stderr() {
            Outcome { stdout: String::new(), stderr: text, code: err.exit_code() }
        } else {
            Outcome { stdout: text, stderr: String::new(), code: err.exit_code() }
        }
    }

    fn failure(e: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 1 }
    }
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> Outcome {
    Outcome::usage(Cli::command().error(kind, msg))
}

fn certificates(certs: Vec<Certificate>, format: Format) -> Outcome {
    let code = exit_code(&certs);
    Outcome::ok(emit(&certs, format), code)
}

fn point_set(set: PointSet, m: u32) -> dimfermat_core::Result<Configuration> {
    let field = ambient_field(m)?;
    match set {
        PointSet::W => fermat_grid(m, &field),
        PointSet::S => fermat_singular_points(m, &field),
        PointSet::Y => y_set(m, &field),
        PointSet::Z => diminished_set_in(m, &field),
        PointSet::X => {
            let x = coordinate_points(&field);
            Ok(Configuration::new(ConfigKind::X, m, &field, x.points().iter().cloned()))
        }
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let format = cli.output;
    if let Command::Report { sweep: Some((lo, hi)), only } = &cli.command {
        if cli.m.is_some() {
            return usage_error(ErrorKind::ArgumentConflict, "--m and --sweep are mutually exclusive");
        }
        let mut cfg = RunConfig::new(*lo);
        cfg.trials = cli.trials;
        cfg.seed = cli.seed;
        cfg.d_max_generation = cli.d_max;
        cfg.n_max_bpf = cli.n_max;
        cfg.output = format;
        if !only.is_empty() {
            cfg.commands = only.clone();
        }
        let ms: Vec<u32> = (*lo..=*hi).collect();
        for &m in &ms {
            if let Err(e) = (RunConfig { m, ..cfg.clone() }).validate() {
                return usage_error(ErrorKind::ValueValidation, e);
            }
        }
        return match run_sweep(&cfg, &ms) {
            Ok(certs) => certificates(certs, format),
            Err(e) => Outcome::failure(e),
        };
    }

    let Some(m) = cli.m else {
        return usage_error(ErrorKind::MissingRequiredArgument, "--m <M> is required for this command");
    };
    let result = match cli.command {
        Command::Points { set } => point_set(set, m).map(|c| match format {
            Format::Text => Outcome::ok(c.to_text(), 0),
            Format::Json => {
                let points: Vec<String> = c.to_text().lines().map(str::to_string).collect();
                let doc = json!({ "configuration": c.kind.label(), "m": m, "count": c.len(), "points": points });
                Outcome::ok(serde_json::to_string_pretty(&doc).expect("serializable") + "\n", 0)
            }
        }),
        Command::Gamma => gamma(m).map(|g| match format {
            Format::Text => Outcome::ok(g.poly.to_text() + "\n", 0),
            Format::Json => {
                let doc = json!({
                    "m": m,
                    "bidegree": [g.bidegree.deg_xyz, g.bidegree.deg_abc],
                    "terms": g.poly.num_terms(),
                    "gamma": g.poly.to_text(),
                });
                Outcome::ok(serde_json::to_string_pretty(&doc).expect("serializable") + "\n", 0)
            }
        }),
        Command::IdealCheck { set, d_min } => {
            let (lo, hi) = match set {
                IdealSet::Y => (d_min.unwrap_or(2 * m), cli.d_max.unwrap_or(4 * m)),
                IdealSet::Z => (d_min.unwrap_or(2 * m + 1), cli.d_max.unwrap_or(2 * (2 * m + 1))),
            };
            if lo > hi {
                return usage_error(ErrorKind::ValueValidation, format!("empty degree range [{lo}, {hi}]"));
            }
            ambient_field(m).and_then(|field| {
                let cert = match set {
                    IdealSet::Y => generation_check(&generators_y(m, &field), &y_set(m, &field)?, lo, hi)?,
                    IdealSet::Z => generation_check(&generators_z(m, &field), &diminished_set_in(m, &field)?, lo, hi)?,
                };
                Ok(certificates(vec![cert], format))
            })
        }
        Command::UnexpectedCheck { degree, mult } => diminished_set(m).and_then(|z| {
            let d = degree.unwrap_or(2 * m + 1);
            let rep = unexpectedness_check_for(&z, d, mult, cli.trials, cli.seed)?;
            Ok(certificates(vec![rep.to_certificate("unexpectedness")], format))
        }),
        Command::MultCert { side } => gamma(m).and_then(|g| {
            let (side, claim) = match side {
                SideArg::Xyz => (Side::Xyz, "mult-xyz"),
                SideArg::Abc => (Side::Abc, "mult-abc"),
            };
            Ok(certificates(vec![mult_certificate(&g, side)?.to_certificate(claim, m)], format))
        }),
        Command::DualCheck => dual_expansion_check(m).map(|c| certificates(vec![c], format)),
        Command::BpfCheck => lambda_system(m).and_then(|l| {
            let n = cli.n_max.unwrap_or_else(|| default_n_max(m));
            Ok(certificates(vec![bpf_check(&l, n)?], format))
        }),
        Command::Report { only, .. } => {
            let mut cfg = RunConfig::new(m);
            cfg.trials = cli.trials;
            cfg.seed = cli.seed;
            cfg.d_max_generation = cli.d_max;
            cfg.n_max_bpf = cli.n_max;
            cfg.output = format;
            if !only.is_empty() {
                cfg.commands = only;
            }
            if let Err(e) = cfg.validate() {
                return usage_error(ErrorKind::ValueValidation, e);
            }
            run_report(&cfg).map(|certs| certificates(certs, format))
        }
    };
    result.unwrap_or_else(Outcome::failure)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli),
        Err(e) => Outcome::usage(e),
    }
}
