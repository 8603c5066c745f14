//! Command-line interface: construct chart and commuting-pair ideals, run
//! the Gröbner engine on ideal files, and execute the verification suite.
//!
//! Exit status: `0` success (and no FAIL in a suite run), `1` a suite check
//! failed, `2` usage or input error, `3` a resource guard fired.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lgv_core::groebner::Guards;
use lgv_core::ideal_ops::krull_dimension;
use lgv_core::parse::{emit_ideal_file, parse_ideal_file};
use lgv_core::schemes::{
    canonical_chain, commuting_pair_ideal, standard_chart_ideal, ChartSpec,
};
use lgv_core::verify::{run_full_suite, SuiteConfig};
use lgv_core::{Error, FieldSpec, Ideal, MonomialOrder, Result};

#[derive(Parser)]
#[command(
    name = "lgv",
    version,
    about = "Exact-arithmetic construction and verification of linked subspace charts",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite and report PASS/FAIL per check
    Suite(SuiteArgs),
    /// Emit the defining ideal of a chart as an ideal file
    Chart(ChartArgs),
    /// Emit the commuting-pair ideal as an ideal file
    Matrix(MatrixArgs),
    /// Compute the reduced basis of an ideal file
    Gb(GbArgs),
    /// Compute the dimension of the vanishing locus of an ideal file
    Dim(DimArgs),
}

#[derive(Args, Clone)]
struct GuardArgs {
    /// Cap on the weighted degree of any basis element
    #[arg(long)]
    max_degree: Option<u64>,
    /// Cap on the number of basis elements during completion
    #[arg(long)]
    max_basis: Option<usize>,
    /// Wall-clock limit per basis computation, in seconds
    /// (flag beats the LGV_TIMEOUT_SECONDS environment variable)
    #[arg(long)]
    timeout_seconds: Option<u64>,
}

impl GuardArgs {
    fn guards(&self) -> Guards {
        let mut g = Guards::from_env();
        if let Some(d) = self.max_degree {
            g.max_degree = d;
        }
        if let Some(b) = self.max_basis {
            g.max_basis = b;
        }
        if let Some(t) = self.timeout_seconds {
            g = g.with_timeout_secs(t);
        }
        g
    }
}

fn parse_field(text: &str) -> std::result::Result<FieldSpec, String> {
    FieldSpec::parse(text).map_err(|e| e.to_string())
}

fn parse_order(text: &str) -> std::result::Result<MonomialOrder, String> {
    MonomialOrder::parse(text)
        .ok_or_else(|| format!("unknown order `{text}` (use lex, grevlex, or wgrevlex)"))
}

fn parse_instance(text: &str) -> std::result::Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("instance `{text}` is not of the form d,r,n"));
    }
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.trim().parse().map_err(|_| format!("bad number in `{text}`")))
        .collect::<std::result::Result<_, String>>()?;
    Ok((nums[0], nums[1], nums[2]))
}

#[derive(Args)]
struct SuiteArgs {
    /// Ambient dimension of a single instance (with --r and --n)
    #[arg(long)]
    d: Option<usize>,
    /// Subspace rank of a single instance
    #[arg(long)]
    r: Option<usize>,
    /// Number of nodes of a single instance
    #[arg(long)]
    n: Option<usize>,
    /// Additional instances as repeatable `d,r,n` triples
    #[arg(long = "instance", value_parser = parse_instance)]
    instances: Vec<(usize, usize, usize)>,
    /// Coefficient field: `rat` or `fp:<odd prime below 2^31>`
    #[arg(long, default_value = "fp:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Master seed for the randomized searches
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Largest ambient dimension for the exhaustive per-spec checks
    #[arg(long, default_value_t = 4)]
    spec_dmax: usize,
    /// Base path for the report; writes `<out>.txt` and `<out>.json`
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Args)]
struct ChartArgs {
    /// Ambient dimension
    #[arg(long)]
    d: usize,
    /// Subspace rank
    #[arg(long)]
    r: usize,
    /// Number of nodes (2 uses the standard chart of a spec)
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// First degeneration parameter (with --d2 and --c; default: canonical)
    #[arg(long)]
    d1: Option<usize>,
    /// Second degeneration parameter
    #[arg(long)]
    d2: Option<usize>,
    /// Overlap parameter
    #[arg(long)]
    c: Option<usize>,
    #[arg(long, default_value = "fp:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    /// Size of the two matrices of the commuting pair
    #[arg(long)]
    ell: usize,
    #[arg(long, default_value = "fp:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GbArgs {
    /// Ideal file to read
    #[arg(long = "in")]
    input: PathBuf,
    /// Monomial order: lex, grevlex, or wgrevlex
    #[arg(long, default_value = "grevlex", value_parser = parse_order)]
    order: MonomialOrder,
    #[arg(long, default_value = "fp:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Args)]
struct DimArgs {
    /// Ideal file to read
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "fp:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    guards: GuardArgs,
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run_suite(args: &SuiteArgs) -> Result<ExitCode> {
    let mut instances = args.instances.clone();
    match (args.d, args.r, args.n) {
        (Some(d), Some(r), Some(n)) => instances.push((d, r, n)),
        (None, None, None) => {}
        _ => {
            return Err(Error::InvalidChart(
                "--d, --r, and --n must be given together".into(),
            ))
        }
    }
    let mut config = SuiteConfig {
        field: args.field,
        seed: args.seed,
        spec_dmax: args.spec_dmax,
        guards: args.guards.guards(),
        ..SuiteConfig::default()
    };
    if !instances.is_empty() {
        config.instances = instances;
    }
    let report = run_full_suite(&config)?;
    let text = report.to_text();
    match &args.out {
        Some(base) => {
            fs::write(base.with_extension("txt"), &text)?;
            fs::write(base.with_extension("json"), report.to_json())?;
            // keep the console summary to one line when writing files
            if let Some(last) = text.lines().last() {
                println!("{last}");
            }
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::from(report.exit_code()))
}

fn run_chart(args: &ChartArgs) -> Result<ExitCode> {
    let chart = match (args.n, args.d1, args.d2, args.c) {
        (2, None, None, None) => {
            standard_chart_ideal(&ChartSpec::canonical(args.d, args.r)?, args.field)?
        }
        (2, Some(d1), Some(d2), Some(c)) => standard_chart_ideal(
            &ChartSpec::new(args.d, args.r, d1, d2, c)?,
            args.field,
        )?,
        (_, None, None, None) => canonical_chain(args.d, args.r, args.n, args.field)?,
        _ => {
            return Err(Error::InvalidChart(
                "--d1, --d2, and --c must be given together, and only with --n 2".into(),
            ))
        }
    };
    let text = emit_ideal_file(chart.ring(), chart.ideal.gens());
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_matrix(args: &MatrixArgs) -> Result<ExitCode> {
    let ideal = commuting_pair_ideal(args.ell, args.field)?;
    let text = emit_ideal_file(ideal.ring(), ideal.gens());
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_gb(args: &GbArgs) -> Result<ExitCode> {
    let content = fs::read_to_string(&args.input)?;
    let (ring, gens) = parse_ideal_file(&content, args.field)?;
    let ideal = Ideal::new(&ring, gens);
    let basis = ideal.groebner_basis(&args.order, &args.guards.guards())?;
    let text = emit_ideal_file(&ring, &basis);
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_dim(args: &DimArgs) -> Result<ExitCode> {
    let content = fs::read_to_string(&args.input)?;
    let (ring, gens) = parse_ideal_file(&content, args.field)?;
    let ideal = Ideal::new(&ring, gens);
    let result = krull_dimension(&ideal, &args.guards.guards())?;
    let text = format!(
        "dim: {}\nindependent: {}\n",
        result.dim,
        result.independent_set.join(" ")
    );
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Suite(args) => run_suite(args),
        Command::Chart(args) => run_chart(args),
        Command::Matrix(args) => run_matrix(args),
        Command::Gb(args) => run_gb(args),
        Command::Dim(args) => run_dim(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("lgv: {e}");
            match e {
                Error::Resource { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
