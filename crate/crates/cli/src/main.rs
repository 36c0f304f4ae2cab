use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Exact Hecke-algebra weight tables, Markov traces and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Markov-trace weight of every irreducible of rank n.
    Weights(WeightsArgs),
    /// Evaluate the Markov trace on a word or a linear combination of words.
    Trace(TraceArgs),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraType {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Flags shared by `weights` and `trace`.
#[derive(Args, Debug)]
pub struct PointArgs {
    #[arg(long = "type", value_enum, default_value = "B")]
    pub kind: AlgebraType,
    #[arg(long)]
    pub n: usize,
    /// First row bound; defaults to n + 1.
    #[arg(long)]
    pub r1: Option<usize>,
    /// Second row bound; defaults to n + 1.
    #[arg(long)]
    pub r2: Option<usize>,
    /// Rational `p/q` or integer.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub q: String,
    /// Rational `p/q` or integer; type B only (defaults to 3 there).
    #[arg(long = "Q", allow_hyphen_values = true)]
    pub big_q: Option<String>,
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct TraceArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Whitespace-separated letters `t g1 G1 t'0 u`, optionally a sum of
    /// terms with rational coefficients, e.g. `1/2 g1 + 3`.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// relations, markov, branching, schur, hom, typeD or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long)]
    pub r1: Option<usize>,
    #[arg(long)]
    pub r2: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of admissible parameter points.
    #[arg(long, default_value_t = 3)]
    pub points: usize,
    /// Random words per sampled property.
    #[arg(long, default_value_t = 8)]
    pub words: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Weights(args) => commands::weights(&args),
        Command::Trace(args) => commands::trace(&args),
        Command::Verify(args) => commands::verify(&args),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
