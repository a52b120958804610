use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dickson",
    version,
    about = "Evaluate, tabulate and cross-check Dickson polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate D_{n,k}(x, a) at a point.
    Eval(EvalArgs),
    /// Print D_0, ..., D_N as polynomials in x.
    Table(TableArgs),
    /// Run seeded identity suites.
    Verify(VerifyArgs),
    /// Brewer character sums over a prime field.
    Brewer(BrewerArgs),
    /// Exhaustive permutation checks over a finite field.
    Permcheck(PermcheckArgs),
    /// Time the three evaluation methods.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    Int,
    Rat,
    Fp,
    Fq,
}

#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    #[arg(long, value_enum)]
    pub ring: RingKind,
    /// Characteristic for `fp` and `fq`.
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree for `fq`.
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    Closed,
    Matrix,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub kind: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Matrix)]
    pub method: MethodArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Human,
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n_max: u64,
    /// Parameter value; omitted, `a` stays symbolic.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, default_value_t = 0)]
    pub kind: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Human)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Human,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random samples per randomized check.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct BrewerArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "all_a",
        conflicts_with = "all_a"
    )]
    pub a: Option<i64>,
    /// Every a mod p, as CSV `a,lambda`.
    #[arg(long)]
    pub all_a: bool,
}

#[derive(Debug, Args)]
pub struct PermcheckArgs {
    /// Field order, a prime power.
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n_max: u64,
    /// A single parameter; `0` checks the monomial x^n.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "all_a")]
    pub a: Option<String>,
    /// Every nonzero a (the default).
    #[arg(long)]
    pub all_a: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated degrees.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<u64>,
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub reps: u32,
    #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
    pub format: BenchFormat,
    #[arg(long, allow_hyphen_values = true, default_value = "3")]
    pub x: String,
    #[arg(long, allow_hyphen_values = true, default_value = "2")]
    pub a: String,
}
