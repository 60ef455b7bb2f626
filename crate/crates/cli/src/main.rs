mod cache;
mod commands;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Exact characters of cyclotomic Hecke algebras by RSK superinsertion and Schur expansion.
#[derive(Parser, Debug)]
#[command(name = "superfrob", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List multipartitions, standard tableaux or semistandard hook tableaux.
    Enum(EnumArgs),
    /// Insert a word and print the pair (S, T).
    Rsk(RskArgs),
    /// Weight of a word against a multipartition.
    Weight(WeightArgs),
    /// The deformed power sum q_mu.
    Qmu(QmuArgs),
    /// Full character table.
    Chartable(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true).args(["multipartitions", "std", "sstd"])))]
struct EnumArgs {
    /// Every multipartition of this size.
    #[arg(long, value_name = "N")]
    multipartitions: Option<usize>,
    /// Number of components for --multipartitions.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Standard tableaux of a shape.
    #[arg(long, value_name = "SHAPE")]
    std: Option<String>,
    /// Semistandard hook tableaux of a shape (needs --params).
    #[arg(long, value_name = "SHAPE", requires = "params")]
    sstd: Option<String>,
    #[arg(long, value_name = "K|L,...")]
    params: Option<String>,
    #[arg(long)]
    json: bool,
    /// Skip the size guard.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct RskArgs {
    #[arg(long, value_name = "K|L,...")]
    params: String,
    /// Optional check that the parameters have this many colours.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Corrected)]
    strategy: StrategyArg,
    /// Comma-separated symbol indices or names such as x1.1,y2.1.
    #[arg(long)]
    sequence: String,
    /// Print the per-step insertion trace as JSON.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, value_name = "K|L,...")]
    params: String,
    #[arg(long)]
    sequence: String,
    /// Also print per-row factors, the ungated local-factor product and SW/NE labels.
    #[arg(long)]
    diagnostic: bool,
    /// Insertion rules used for the SW/NE labels.
    #[arg(long, value_enum, default_value_t = StrategyArg::Corrected)]
    strategy: StrategyArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct QmuArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, value_name = "K|L,...")]
    params: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SizeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Defaults to k_i = l_i = n for every colour.
    #[arg(long, value_name = "K|L,...")]
    params: Option<String>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Corrected)]
    strategy: StrategyArg,
    /// Skip the size guards.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    size: SizeArgs,
    #[arg(long, value_enum, default_value_t = Route::Rsk)]
    route: Route,
    /// Set q = 1 and Q_a = ς^a.
    #[arg(long)]
    specialize: bool,
    /// Directory for persisted tables.
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    size: SizeArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Seed for the randomized round-trip suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random words in the round-trip suite.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Literal,
    Corrected,
}

impl From<StrategyArg> for superfrob::rsk::Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Literal => superfrob::rsk::Strategy::Literal,
            StrategyArg::Corrected => superfrob::rsk::Strategy::Corrected,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Rsk,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Frobenius,
    Bijection,
    Transport,
    Roundtrip,
    All,
}

/// Everything that ends a run early, with its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Refused(String),
    Internal(String),
}

impl From<superfrob::Error> for Failure {
    fn from(e: superfrob::Error) -> Self {
        match e {
            superfrob::Error::Parameter(_) | superfrob::Error::Parse(_) => Failure::Usage(e.to_string()),
            superfrob::Error::Refused(_) => Failure::Refused(e.to_string()),
            superfrob::Error::RankDeficient(_) => Failure::Internal(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enum(a) => commands::enumerate(a).map(|()| true),
        Command::Rsk(a) => commands::rsk(a).map(|()| true),
        Command::Weight(a) => commands::weight(a).map(|()| true),
        Command::Qmu(a) => commands::qmu(a).map(|()| true),
        Command::Chartable(a) => commands::chartable(a).map(|()| true),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
