//! `liesuper`: Betti numbers of Lie superalgebras from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation error,
//! 3 resource refusal, 4 verification mismatch or inconsistent table.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liesuper::algebra::{make_heisenberg_even, make_heisenberg_odd};
use liesuper::cohomology::{formula_table_even, formula_table_odd};
use liesuper::io::{emit_algebra, emit_report, parse_algebra, Format};
use liesuper::verify::{verify_even, verify_odd, VerifyResult};
use liesuper::{betti_table, differential_matrix, CohomologyReport, Error, LieSuperalgebra, Limits, Method};

#[derive(Parser)]
#[command(
    name = "liesuper",
    version,
    about = "Exact cohomology of Lie superalgebras with trivial coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti table of the even-center Heisenberg superalgebra h_{n,m}
    Even {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Betti table of the odd-center Heisenberg superalgebra h_n
    Odd {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Betti table of an algebra read from a TOML file
    Compute {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Compare the closed forms with the rank oracle on a grid
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        m_max: usize,
        #[arg(long)]
        q_max: i64,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
        #[arg(long, default_value_t = liesuper::cohomology::DEFAULT_COLUMN_CAP)]
        column_cap: usize,
    },
    /// Print a built-in family in the algebra file format
    Describe {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    q_max: i64,
    #[arg(long, value_enum, default_value_t = MethodArg::Rank)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = liesuper::cohomology::DEFAULT_COLUMN_CAP)]
    column_cap: usize,
    /// Write every d_q as a sparse triplet file into this directory
    #[arg(long)]
    dump_matrices: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Rank,
    /// Closed form; for h_n the formula assembled from the cocycle splitting
    Formula,
    /// The alternative odd-center closed form (`dim_h_odd_displayed`)
    Displayed,
    /// Rank and closed form, interleaved; exits 4 if they disagree
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Even,
    Odd,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

enum Failure {
    Core(Error),
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Mismatch(_) => 4,
            Failure::Core(e) => match e {
                Error::Validation(_) => 2,
                Error::ResourceLimit { .. } => 3,
                Error::Inconsistent(_) => 4,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(s) | Failure::Mismatch(s) => s.clone(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

enum Source {
    Even(usize, usize),
    Odd(usize),
    File,
}

fn formula_rows(source: &Source, q_max: i64, method: MethodArg) -> Result<Vec<CohomologyReport>, Failure> {
    match (source, method) {
        (Source::File, _) => Err(Failure::Usage(
            "closed forms exist only for the built-in families; use --method rank".into(),
        )),
        (Source::Even(_, _), MethodArg::Displayed) => Err(Failure::Usage(
            "--method displayed applies to the odd family only".into(),
        )),
        (&Source::Even(n, m), _) => Ok(formula_table_even(n, m, q_max)?),
        (&Source::Odd(n), MethodArg::Displayed) => Ok(formula_table_odd(n, q_max, Method::FormulaOddDisplayed)?),
        (&Source::Odd(n), _) => Ok(formula_table_odd(n, q_max, Method::FormulaOddProof)?),
    }
}

fn dump_matrices(algebra: &LieSuperalgebra, q_max: i64, dir: &Path) -> Outcome {
    std::fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    for q in 0..=q_max {
        let d = differential_matrix(algebra, q)?;
        let path = dir.join(format!("d{q}.txt"));
        std::fs::write(&path, d.matrix.dump()).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run_table(algebra: &LieSuperalgebra, source: Source, args: &TableArgs) -> Outcome {
    if args.q_max < 0 {
        return Err(Failure::Usage("--q-max must be non-negative".into()));
    }
    let limits = Limits {
        column_cap: args.column_cap,
    };
    let rows = match args.method {
        MethodArg::Rank => betti_table(algebra, args.q_max, limits)?,
        MethodArg::Formula | MethodArg::Displayed => formula_rows(&source, args.q_max, args.method)?,
        MethodArg::Both => {
            let formula = formula_rows(&source, args.q_max, args.method)?;
            let rank = betti_table(algebra, args.q_max, limits)?;
            let disagree: Vec<i64> = rank
                .iter()
                .zip(&formula)
                .filter(|(a, b)| a.dim_cohomology != b.dim_cohomology || a.dim_cocycles != b.dim_cocycles)
                .map(|(a, _)| a.q)
                .collect();
            let rows: Vec<CohomologyReport> = rank.into_iter().zip(formula).flat_map(|(a, b)| [a, b]).collect();
            print!("{}", emit_report(&rows, args.format.into()));
            if !disagree.is_empty() {
                return Err(Failure::Mismatch(format!(
                    "rank and formula disagree at q = {disagree:?}"
                )));
            }
            return dump_if_requested(algebra, args);
        }
    };
    print!("{}", emit_report(&rows, args.format.into()));
    dump_if_requested(algebra, args)
}

fn dump_if_requested(algebra: &LieSuperalgebra, args: &TableArgs) -> Outcome {
    match &args.dump_matrices {
        Some(dir) => dump_matrices(algebra, args.q_max, dir),
        None => Ok(()),
    }
}

fn print_verify(result: &VerifyResult, format: VerifyFormat) -> Outcome {
    match format {
        VerifyFormat::Text => print!("{}", result.to_text()),
        VerifyFormat::Json => println!("{}", serde_json::to_string_pretty(result).expect("result serializes")),
    }
    eprintln!("elapsed: {:.3} s", result.elapsed.as_secs_f64());
    if result.failed() {
        let n = result
            .mismatches
            .iter()
            .filter(|m| m.formula_name != liesuper::verify::FORMULA_ODD_DISPLAYED)
            .count();
        return Err(Failure::Mismatch(format!("{n} formula mismatches")));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Even { n, m, table } => {
            let g = make_heisenberg_even(n, m)?;
            run_table(&g, Source::Even(n, m), &table)
        }
        Command::Odd { n, table } => {
            let h = make_heisenberg_odd(n)?;
            run_table(&h, Source::Odd(n), &table)
        }
        Command::Compute { algebra, table } => {
            let text =
                std::fs::read_to_string(&algebra).map_err(|e| Failure::Usage(format!("{}: {e}", algebra.display())))?;
            let g = parse_algebra(&text).map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("{}: {msg}", algebra.display())),
                Error::Validation(msg) => Error::Validation(format!("{}: {msg}", algebra.display())),
                other => other,
            })?;
            run_table(&g, Source::File, &table)
        }
        Command::Verify {
            family,
            n_max,
            m_max,
            q_max,
            format,
            column_cap,
        } => {
            let limits = Limits { column_cap };
            let result = match family {
                FamilyArg::Even => verify_even(n_max, m_max, q_max, limits)?,
                FamilyArg::Odd => verify_odd(n_max, q_max, limits)?,
            };
            print_verify(&result, format)
        }
        Command::Describe { family, n, m } => {
            let g = match (family, m) {
                (FamilyArg::Even, Some(m)) => make_heisenberg_even(n, m)?,
                (FamilyArg::Even, None) => return Err(Failure::Usage("--m is required for the even family".into())),
                (FamilyArg::Odd, None) => make_heisenberg_odd(n)?,
                (FamilyArg::Odd, Some(_)) => return Err(Failure::Usage("--m does not apply to the odd family".into())),
            };
            print!("{}", emit_algebra(&g));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
