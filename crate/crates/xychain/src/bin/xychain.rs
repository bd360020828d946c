//! Command-line driver: negativity field sweeps and the invariant
//! self-check suite.
//!
//! Exit codes: 0 on success, 1 for invalid arguments or configuration,
//! 2 when `verify` finds an invariant violation.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use xychain::sweep::{run_sweep, OutputFormat, PatternSelection, SweepConfig};
use xychain::verify;

#[derive(Parser)]
#[command(
    name = "xychain",
    about = "Thermal entanglement negativity in the anisotropic XY chain",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the magnetic field and write (B, negativity) series
    Sweep(SweepArgs),
    /// Run the invariant self-check suite
    Verify,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Field pattern(s) to sweep
    #[arg(long, value_enum, default_value_t = PatternArg::Both)]
    pattern: PatternArg,

    /// Anisotropy values, comma separated (e.g. 0,0.5,1)
    #[arg(long, value_delimiter = ',', required = true)]
    gamma: Vec<f64>,

    /// Lower end of the field grid
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    b_min: f64,

    /// Upper end of the field grid
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    b_max: f64,

    /// Field grid spacing
    #[arg(long, default_value_t = 0.01)]
    b_step: f64,

    /// Temperature (k_B = 1)
    #[arg(long)]
    temp: f64,

    /// Number of chain sites (even, 2..=12)
    #[arg(long)]
    sites: usize,

    /// First site of the reported nearest-neighbor pair
    #[arg(long, default_value_t = 1)]
    pair: usize,

    /// Output file path
    #[arg(long)]
    out: PathBuf,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    Uniform,
    Staggered,
    Both,
}

impl From<PatternArg> for PatternSelection {
    fn from(p: PatternArg) -> Self {
        match p {
            PatternArg::Uniform => PatternSelection::Uniform,
            PatternArg::Staggered => PatternSelection::Staggered,
            PatternArg::Both => PatternSelection::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

fn main() -> ExitCode {
    // clap's default error exit code is 2, which this tool reserves for
    // invariant violations; bad arguments must exit 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            // --help / --version
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };

    match cli.command {
        Command::Sweep(args) => run_sweep_command(args),
        Command::Verify => run_verify_command(),
    }
}

fn run_sweep_command(args: SweepArgs) -> ExitCode {
    let config = SweepConfig {
        patterns: args.pattern.into(),
        gammas: args.gamma.clone(),
        field_min: args.b_min,
        field_max: args.b_max,
        field_step: args.b_step,
        temperature: args.temp,
        n_sites: args.sites,
        pair_site: args.pair,
    };
    let result = match run_sweep(&config) {
        Ok(result) => result,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    let file = match File::create(&args.out) {
        Ok(file) => file,
        Err(err) => {
            eprintln!("error: cannot create {}: {err}", args.out.display());
            return ExitCode::from(1);
        }
    };
    let mut writer = BufWriter::new(file);
    let written = match OutputFormat::from(args.format) {
        OutputFormat::Csv => result.write_csv(&mut writer),
        OutputFormat::Json => result.write_json(&mut writer),
    };
    if let Err(err) = written {
        eprintln!("error: writing {}: {err}", args.out.display());
        return ExitCode::from(1);
    }
    let n_samples: usize = result.series.iter().map(|s| s.samples.len()).sum();
    eprintln!(
        "wrote {} series ({n_samples} samples) to {}",
        result.series.len(),
        args.out.display()
    );
    ExitCode::SUCCESS
}

fn run_verify_command() -> ExitCode {
    let reports = match verify::run_all() {
        Ok(reports) => reports,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let mut all_passed = true;
    for report in &reports {
        println!("{report}");
        all_passed &= report.passed;
    }
    if all_passed {
        println!("all {} checks passed", reports.len());
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
