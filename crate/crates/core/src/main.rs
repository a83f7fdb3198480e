use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jacobi_type::exactalg::{as_natural, parse_rational, Rational};
use jacobi_type::report::{render_reports, Format};
use jacobi_type::suites::{run_suite, Grid, SUITES};
use jacobi_type::table::coefficient_table;
use jacobi_type::Error;

#[derive(Parser)]
#[command(name = "jacobi-type", version, about = "Exact checks for Jacobi-type differential operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report one line per grid point.
    Verify(VerifyArgs),
    /// Print the coefficients d_1 .. d_{2a+4} of the high-order operator.
    Table(TableArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated alpha values.
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    alpha: Option<Vec<Rational>>,
    /// Comma-separated beta values.
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    beta: Option<Vec<Rational>>,
    /// Point masses at +1.
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    mass_n: Option<Vec<Rational>>,
    /// Point masses at -1.
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    mass_m: Option<Vec<Rational>>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, default_value = "table")]
    format: Format,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    beta: Rational,
    #[arg(long, default_value = "table")]
    format: Format,
    /// Also print decimal approximations with this many digits.
    #[arg(long)]
    float_digits: Option<usize>,
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).ok_or_else(|| format!("`{s}` is not a rational number"))
}

fn grid_for(suite: &str, args: &VerifyArgs) -> jacobi_type::Result<Grid> {
    let mut g = Grid::default_for(suite)?;
    if let Some(v) = &args.alpha {
        g.alphas = v.clone();
    }
    if let Some(v) = &args.beta {
        g.betas = v.clone();
    }
    if let Some(v) = &args.mass_n {
        g.masses_n = v.clone();
    }
    if let Some(v) = &args.mass_m {
        g.masses_m = v.clone();
    }
    if let Some(n) = args.n_max {
        g.n_max = n;
    }
    if let Some(s) = args.seed {
        g.seed = s;
    }
    Ok(g)
}

fn verify(args: &VerifyArgs) -> Result<bool, Error> {
    let names: Vec<&str> = if args.suite == "all" {
        SUITES.to_vec()
    } else {
        vec![args.suite.as_str()]
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, &grid_for(name, args)?)?);
    }
    print!("{}", render_reports(&reports, args.format));
    Ok(reports.iter().all(|r| r.is_success()))
}

fn table(args: &TableArgs) -> Result<(), Error> {
    let alpha = as_natural(&args.alpha)
        .ok_or_else(|| Error::InvalidGrid(format!("alpha = {} must be a natural number", args.alpha)))?;
    print!("{}", coefficient_table(alpha, &args.beta, args.format, args.float_digits)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(args) => {
            if let Some(jobs) = args.jobs {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            verify(args)
        }
        Command::Table(args) => table(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ (Error::InvalidGrid(_) | Error::UnknownSuite(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
