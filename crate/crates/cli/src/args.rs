use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyingrabbits_core::{validate, MethodId, Params};

use crate::error::CliError;
use crate::format::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "dyingrabbits",
    version,
    about = "Generalized Fibonacci numbers for rabbits that die"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_1..F_n (or only F_n).
    Compute(ComputeArgs),
    /// Print the age census of every generation 1..n.
    Table(TableArgs),
    /// Check all evaluation methods against each other over a parameter grid.
    Verify(VerifyArgs),
    /// Time the fast evaluator against the iterative recurrence.
    Bench(BenchArgs),
}

/// `--die` value: a positive integer or `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeathAge(pub Option<i64>);

impl FromStr for DeathAge {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(DeathAge(None));
        }
        s.parse::<i64>()
            .map(|d| DeathAge(Some(d)))
            .map_err(|_| format!("expected an integer or `inf`, got `{s}`"))
    }
}

impl fmt::Display for DeathAge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(d) => d.fmt(f),
            None => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PopulationArgs {
    /// Fertility age f (generations).
    #[arg(long, allow_negative_numbers = true)]
    pub fertile: i64,
    /// Death age d, or `inf`.
    #[arg(long, allow_negative_numbers = true)]
    pub die: DeathAge,
}

impl PopulationArgs {
    pub fn params(&self) -> Result<Params, CliError> {
        validate(self.fertile, self.die.0).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sim,
    Rec,
    Oller,
    Fast,
}

impl From<Method> for MethodId {
    fn from(m: Method) -> Self {
        match m {
            Method::Sim => MethodId::Simulation,
            Method::Rec => MethodId::Theorem1,
            Method::Oller => MethodId::Oller,
            Method::Fast => MethodId::FastEval,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    /// Number of terms.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Evaluation method; defaults to `rec` (the simulator for d < f).
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Reduce every term modulo this value.
    #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
    pub modulus: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
    /// Print only F_n.
    #[arg(long)]
    pub last: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_f: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_d: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// Also sweep d = inf for every f <= max-f.
    #[arg(long)]
    pub include_inf: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
    pub modulus: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeats: u32,
}
