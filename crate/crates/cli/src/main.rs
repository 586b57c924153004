//! `fkverma`: batch reports on the Verma modules of the double of `FK3 # kS3`.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fkverma::{GroupData, Status, Weight};

use output::Report;

#[derive(Parser, Debug)]
#[command(
    name = "fkverma",
    version,
    about = "Exact Verma module computations for FK3 over S3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for reports when `--out` is not given.
    #[arg(long, global = true, env = "FKVERMA_OUT_DIR")]
    out_dir: Option<PathBuf>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 3)]
    seed: u64,

    /// List every check, not only the ones that do not pass.
    #[arg(short, long, global = true)]
    verbose: bool,

    /// Treat documented errata as failures.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fusion table of the simple D(S3)-modules, checked against the listed rules.
    Fusion {
        /// Rules to check, one per line, e.g. `sigma- x erho = sigma+ + sigma-`.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// PBW basis, rewriting rules and graded pieces of FK3.
    NicholsInfo,
    /// Verma module summaries.
    Verma(WeightArg),
    /// Submodule structure: head, socle, factors and named lattice checks.
    Lattice(WeightArg),
    /// Dimensions and weights of the eight simple modules.
    Simples,
    /// The tables of y12-actions, line by line.
    VerifyAppendix,
    /// Everything above, plus sampled associativity of the double.
    VerifyAll,
}

#[derive(clap::Args, Debug)]
struct WeightArg {
    /// A weight id (`e+`, `e-`, `erho`, `sigma+`, `sigma-`, `tau0`, `tau1`, `tau2`) or `all`.
    #[arg(long, default_value = "all", value_parser = parse_weights)]
    weight: Weights,
}

#[derive(Clone, Debug)]
struct Weights(Vec<Weight>);

fn parse_weights(s: &str) -> Result<Weights, String> {
    let g = GroupData::s3();
    if s == "all" {
        return Ok(Weights(g.weights()));
    }
    g.parse_weight(s)
        .map(|w| Weights(vec![w]))
        .map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Fusion { .. } => "fusion",
            Command::NicholsInfo => "nichols-info",
            Command::Verma(_) => "verma",
            Command::Lattice(_) => "lattice",
            Command::Simples => "simples",
            Command::VerifyAppendix => "verify-appendix",
            Command::VerifyAll => "verify-all",
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    Ok(match &cli.command {
        Command::Fusion { golden } => commands::fusion(golden.as_deref())?,
        Command::NicholsInfo => commands::nichols_info(),
        Command::Verma(w) => commands::verma(&w.weight.0),
        Command::Lattice(w) => commands::lattice(&w.weight.0),
        Command::Simples => commands::simples(),
        Command::VerifyAppendix => commands::verify_appendix(),
        Command::VerifyAll => commands::verify_all(cli.seed),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if cli.verbose {
        eprintln!(
            "{} finished in {:.2?}",
            cli.command.name(),
            started.elapsed()
        );
    }
    let rendered = match cli.format {
        Format::Text => report.render_text(cli.verbose),
        Format::Json => report.render_json(),
    };
    let target = cli.out.clone().or_else(|| {
        let ext = match cli.format {
            Format::Text => "txt",
            Format::Json => "json",
        };
        cli.out_dir
            .as_ref()
            .map(|d| d.join(format!("{}.{ext}", cli.command.name())))
    });
    match target {
        Some(path) => {
            if let Err(e) = output::write_file(&path, &rendered) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            eprintln!("{}", report.summary_line());
        }
        None => print!("{rendered}"),
    }
    match report.worst() {
        Status::Pass => ExitCode::SUCCESS,
        Status::Erratum if !cli.strict => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    }
}
