//! `liecoh`: exact cohomology of left-invariant involutive structures.

mod commands;
mod error;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use commands::{DualFlag, Output};
use error::CliError;

#[derive(Parser)]
#[command(name = "liecoh", version, about = "Exact cohomology of left-invariant involutive structures on compact Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Algebra: builtin:su2, builtin:su3, builtin:torusN, or a JSON file.
    #[arg(long)]
    algebra: Option<String>,
    /// Emit stable-key JSON instead of the human table.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry and the Jacobi identity.
    Validate {
        /// builtin:NAME or a JSON file.
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify a subalgebra and run the Levi-form hypocomplexity test.
    Classify {
        #[command(flatten)]
        common: Common,
        /// span{...} or a JSON subalgebra file.
        #[arg(long)]
        subalgebra: String,
        /// Characteristic covector for an explicit Levi form, as a combination
        /// of basis names read in the dual basis (e.g. `T`).
        #[arg(long)]
        covector: Option<String>,
    },
    /// Root decomposition with respect to an abelian subalgebra.
    Roots {
        #[command(flatten)]
        common: Common,
        /// span{...} or a JSON subalgebra file.
        #[arg(long)]
        torus: String,
        /// Positive roots as `a,b;c,d` (in place of the lexicographic choice).
        #[arg(long)]
        positive: Option<String>,
        /// Build the standard structure with s real and t complex torus directions.
        #[arg(long, value_name = "S,T", value_parser = parse_pair)]
        standard: Option<(usize, usize)>,
    },
    /// Chevalley–Eilenberg, relative or bigraded cohomology.
    Cohomology {
        #[command(flatten)]
        common: Common,
        /// Bigraded H^{p,q}(g; h) of this subalgebra.
        #[arg(long)]
        subalgebra: Option<String>,
        /// trivial, adjoint, or a JSON module file.
        #[arg(long, default_value = "trivial")]
        module: String,
        /// Relative cohomology H(g, u; M).
        #[arg(long)]
        relative: Option<String>,
        #[arg(long)]
        representatives: bool,
    },
    /// Assemble H^{p,q}(G; h) from orbit and fibre cohomology.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        subalgebra: String,
        /// JSON matrix of an ad-invariant inner product.
        #[arg(long)]
        inner_product: Option<String>,
        #[arg(long, value_enum, default_value = "on")]
        module_dual: DualFlag,
    },
    /// Solve (d/dx - mu d/dy) u = f on the torus by Fourier series.
    TorusSolve {
        /// Rational mu, e.g. 2/3.
        #[arg(long, conflicts_with = "cf")]
        mu: Option<String>,
        /// Continued fraction, e.g. `1,1,1,...` (trailing ... marks an irrational prefix).
        #[arg(long)]
        cf: Option<String>,
        /// Right-hand side as Fourier JSON.
        #[arg(long)]
        rhs: Option<String>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Frequency bound for the singular lattice (defaults to the rhs cutoff, else 10).
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected S,T")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("LIECOH_THREADS") else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("LIECOH_THREADS={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))
}

fn dispatch(cmd: Command) -> (bool, Result<Output, CliError>) {
    match cmd {
        Command::Validate { algebra, json } => (json, commands::validate(&algebra)),
        Command::Classify { common, subalgebra, covector } => (
            common.json,
            commands::classify(common.algebra.as_deref(), &subalgebra, covector.as_deref()),
        ),
        Command::Roots { common, torus, positive, standard } => (
            common.json,
            commands::roots(common.algebra.as_deref(), &torus, positive.as_deref(), standard),
        ),
        Command::Cohomology { common, subalgebra, module, relative, representatives } => (
            common.json,
            commands::cohomology(
                common.algebra.as_deref(),
                subalgebra.as_deref(),
                &module,
                relative.as_deref(),
                representatives,
            ),
        ),
        Command::Decompose { common, subalgebra, inner_product, module_dual } => (
            common.json,
            commands::decompose(common.algebra.as_deref(), &subalgebra, inner_product.as_deref(), module_dual),
        ),
        Command::TorusSolve { mu, cf, rhs, depth, bound, json } => {
            (json, commands::torus_solve(mu.as_deref(), cf.as_deref(), rhs.as_deref(), depth, bound))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("liecoh: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    let (json, result) = dispatch(cli.command);
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = if json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("json"))
            } else {
                write!(stdout, "{}", out.text)
            };
            ExitCode::SUCCESS
        }
        Err(e) => {
            if json {
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&e.to_json()).expect("json"));
            }
            eprintln!("liecoh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
