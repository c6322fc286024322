use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "groupkit",
    version,
    about = "Right transversals, double-coset representatives and middle sub-factors of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Right transversal of H by the candidate-chain algorithm.
    Rta(RtaArgs),
    /// Double-coset representatives (a middle transversal) of (H, K).
    Mta(MtaArgs),
    /// Middle sub-factor of (H, K), optionally extended to a middle transversal.
    Msfa(MsfaArgs),
    /// The middle director Mid(H, K) and its classification.
    Mid(MidArgs),
    /// Every transversal or sub-factor, by the algorithm and/or brute force.
    Enumerate(EnumerateArgs),
    /// Replays the three built-in worked examples against recomputation.
    VerifyPaper(VerifyArgs),
    /// Parses a subset expression and prints it in canonical names.
    Parse(ParseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceMode {
    Sizes,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MidMethod {
    Definition,
    Conjugacy,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    RightTransversals,
    MiddleTransversals,
    MiddleSubfactors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Algorithm,
    Oracle,
    Both,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// `cyclic:12`, `dihedral:6`, `symmetric:4`, inline JSON, or `@file.json`.
    #[arg(long, value_name = "SPEC")]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct RunCommon {
    #[command(flatten)]
    pub group: GroupArg,
    /// Subgroup H as a comma-separated list, e.g. `1,a^3,ba^3,b`.
    #[arg(short = 'H', value_name = "SUBSET")]
    pub h: String,
    /// Starting element g0.
    #[arg(long, value_name = "EXPR")]
    pub g0: Option<String>,
    /// `smallest`, `random:<seed>` or `script:<e1,e2,...>`.
    #[arg(long, default_value = "smallest")]
    pub policy: String,
    #[arg(long, value_enum, default_value_t = TraceMode::Sizes)]
    pub trace: TraceMode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RtaArgs {
    #[command(flatten)]
    pub common: RunCommon,
}

#[derive(Debug, Args)]
pub struct MtaArgs {
    #[command(flatten)]
    pub common: RunCommon,
    /// Subgroup K.
    #[arg(short = 'K', value_name = "SUBSET")]
    pub k: String,
}

#[derive(Debug, Args)]
pub struct MsfaArgs {
    #[command(flatten)]
    pub common: RunCommon,
    #[arg(short = 'K', value_name = "SUBSET")]
    pub k: String,
    /// Grow the sub-factor into a middle transversal when HXK is not G.
    #[arg(long)]
    pub extend: bool,
}

#[derive(Debug, Args)]
pub struct MidArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(short = 'H', value_name = "SUBSET")]
    pub h: String,
    #[arg(short = 'K', value_name = "SUBSET")]
    pub k: String,
    #[arg(long, value_enum, default_value_t = MidMethod::Both)]
    pub method: MidMethod,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long, value_enum)]
    pub what: What,
    #[arg(short = 'H', value_name = "SUBSET")]
    pub h: String,
    /// Required for the middle-* enumerations.
    #[arg(short = 'K', value_name = "SUBSET")]
    pub k: Option<String>,
    #[arg(long, value_enum, default_value_t = Via::Both)]
    pub via: Via,
    /// Cap on results and search states; overrides GROUPKIT_ENUM_LIMIT.
    #[arg(long)]
    pub limit: Option<usize>,
    /// Print every set, not just the count.
    #[arg(long)]
    pub list: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Start the algorithm only from the block of the least element.
    #[arg(long)]
    pub upto_symmetry: bool,
    /// Drop one algorithm-side result before comparing (tests exit code 4).
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run one section only: `z12-transversal` (`1.3`), `d12-double-cosets`
    /// (`2.5`) or `d12-subfactor` (`2.14`).
    #[arg(long)]
    pub example: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long, value_name = "SUBSET")]
    pub subset: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
