mod commands;
mod error;
mod output;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::spec::PathChoice;

#[derive(Parser)]
#[command(
    name = "ksforms",
    version,
    about = "Kodaira-Spencer ranks, global KS-forms and their ODEs for plane curves"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on reduction steps when searching for unit certificates.
    #[arg(long, global = true, env = "KSFORMS_MAX_REDUCTIONS")]
    max_reductions: Option<usize>,
    /// Cap on the total degree of intermediate Gröbner basis elements.
    #[arg(long, global = true, env = "KSFORMS_MAX_DEGREE")]
    max_degree: Option<i32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a curve spec file.
    Analyze {
        /// TOML curve spec; `-` reads standard input.
        spec: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run the full pipeline on the Picard curve y^3 = g(x).
    Picard {
        #[arg(long)]
        g: String,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Print bases, certificates, the KS cocycle and projections.
    Cohomology {
        #[command(flatten)]
        curve: CurveArgs,
        /// Element of O(U∩V) to reduce and project; repeatable.
        #[arg(long = "element", value_name = "EXPR")]
        elements: Vec<String>,
    },
    /// Extract the order-one ODE cut out by a KS-form.
    Ode(OdeArgs),
    /// Shimura-type rank bound, moduli dimension and rank window.
    CmBound {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        e: u32,
        /// Signature pair `r,s` for one embedding; repeat once per embedding.
        #[arg(long = "type", value_name = "R,S")]
        types: Vec<String>,
    },
}

#[derive(Args, Clone, Default)]
struct FieldArgs {
    /// `param=value`, the derivative of a parameter; repeatable.
    #[arg(long = "deriv", value_name = "PARAM=VALUE")]
    deriv: Vec<String>,
    /// Parameter order, comma separated; inferred when absent.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<String>>,
}

#[derive(Args, Clone)]
struct CurveArgs {
    /// TOML curve spec; `-` reads standard input.
    #[arg(long, conflicts_with_all = ["g", "f"], required_unless_present_any = ["g", "f"])]
    spec: Option<PathBuf>,
    /// Picard curve y^3 = g(x).
    #[arg(long, conflicts_with = "f")]
    g: Option<String>,
    /// Plane curve F(x, y) = 0.
    #[arg(long)]
    f: Option<String>,
    #[command(flatten)]
    field: FieldArgs,
}

#[derive(Args, Clone)]
struct ReportArgs {
    /// Also print the matrix, bases and lifted KS-forms.
    #[arg(long)]
    full: bool,
    /// Certificate path; defaults to picard for Picard curves.
    #[arg(long, value_enum)]
    path: Option<PathChoice>,
    /// Assert that the Jacobian is simple.
    #[arg(long)]
    simple_jacobian: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartArg {
    U,
    V,
}

#[derive(Args, Clone)]
struct OdeArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Lift this 1-form, given by coordinates in the w basis.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["dx", "dy", "function"])]
    omega: Option<Vec<String>>,
    /// Coefficient of the first coordinate differential.
    #[arg(long, allow_hyphen_values = true)]
    dx: Option<String>,
    /// Coefficient of the second coordinate differential.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "constant_mode")]
    dy: Option<String>,
    /// Function part of the form.
    #[arg(long = "fn", allow_hyphen_values = true, conflicts_with = "constant_mode")]
    function: Option<String>,
    /// Chart the form is written on.
    #[arg(long, value_enum, default_value = "u")]
    chart: ChartArg,
    /// Solve ω(x') = 1 for ω = dx-coefficient · dx on a constant curve.
    #[arg(long, requires = "dx")]
    constant_mode: bool,
    #[arg(long, value_enum)]
    path: Option<PathChoice>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            match out.failure {
                Some(e) => report(&e),
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    e.exit_code()
}
