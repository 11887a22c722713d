use clap::{Args, Parser, Subcommand, ValueEnum};

/// Closed-form and Monte Carlo measurement statistics of spin-entangled
/// qubit pairs under Bloch-sphere basis changes.
///
/// All angles are radians unless --degrees is given. Reports go to stdout as
/// JSON (default) or CSV; diagnostics go to stderr. Exit codes: 0 success,
/// 1 verification or statistical failure, 2 usage or parameter error.
#[derive(Debug, Parser)]
#[command(name = "spinpair", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Single-particle outcome probabilities, their difference, and the
    /// interference visibility for a state (theta, phi) measured along
    /// (chi, delta).
    Single(SingleArgs),
    /// Joint outcome probabilities of an entangled pair, their (+)/(−)
    /// aggregates, the ratio rho, visibility, and each party's marginals.
    Pair(PairArgs),
    /// Verdicts and residuals for the analytic state/basis criteria, plus the
    /// equal-weight basis solution for (−) correlated states.
    Criteria(CriteriaArgs),
    /// Sweep one parameter over a uniform inclusive grid, one output row per
    /// grid point.
    Scan(ScanArgs),
    /// Compare every closed-form probability family against the brute-force
    /// projection oracle on random parameter tuples.
    Verify(VerifyArgs),
    /// Draw seeded Monte Carlo samples from the joint distribution and test
    /// the tallies with a chi-square statistic.
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// p|↑↓⟩ + q e^{iα}|↓↑⟩
    Minus,
    /// p|↑↑⟩ + q e^{iα}|↓↓⟩
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    Alpha,
    Delta,
    Chi,
    Delta2,
    Chi2,
}

impl Vary {
    pub fn as_str(&self) -> &'static str {
        match self {
            Vary::Alpha => "alpha",
            Vary::Delta => "delta",
            Vary::Chi => "chi",
            Vary::Delta2 => "delta2",
            Vary::Chi2 => "chi2",
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Report format on stdout.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Interpret all angle inputs as degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Correlation family of the pair state in the reference basis.
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Weight of the first composite eigenstate.
    #[arg(long)]
    pub p: f64,
    /// Weight of the second composite eigenstate; defaults to sqrt(1 - p^2).
    #[arg(long)]
    pub q: Option<f64>,
    /// Relative phase between the two composite eigenstates.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Rescale (p, q) to a normalized state instead of rejecting near misses.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    /// Polar angle of party A's measurement direction.
    #[arg(long)]
    pub chi: f64,
    /// Azimuth of party A's measurement direction.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Polar angle of party B's direction; giving chi2 or delta2 switches to
    /// mixed-basis mode (only for --kind minus).
    #[arg(long)]
    pub chi2: Option<f64>,
    /// Azimuth of party B's direction.
    #[arg(long)]
    pub delta2: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SingleArgs {
    /// Polar angle of the particle state.
    #[arg(long)]
    pub theta: f64,
    /// Azimuth of the particle state.
    #[arg(long)]
    pub phi: Option<f64>,
    /// Polar angle of the measurement direction.
    #[arg(long)]
    pub chi: f64,
    /// Azimuth of the measurement direction.
    #[arg(long)]
    pub delta: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub basis: BasisArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CriteriaArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Polar angle of the basis the basis-dependent criteria are evaluated
    /// at; defaults to the equatorial plane (pi/2).
    #[arg(long)]
    pub chi: Option<f64>,
    /// Azimuth of that basis.
    #[arg(long)]
    pub delta: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanBasisArgs {
    /// Polar angle of party A's measurement direction; required unless it is
    /// the swept parameter.
    #[arg(long)]
    pub chi: Option<f64>,
    /// Azimuth of party A's measurement direction.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Polar angle of party B's direction; giving chi2/delta2 (or sweeping
    /// them) switches to mixed-basis mode (only for --kind minus).
    #[arg(long)]
    pub chi2: Option<f64>,
    /// Azimuth of party B's direction.
    #[arg(long)]
    pub delta2: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub basis: ScanBasisArgs,
    /// Which parameter the grid sweeps.
    #[arg(long, value_enum)]
    pub vary: Vary,
    /// Lower grid endpoint (inclusive).
    #[arg(long)]
    pub from: f64,
    /// Upper grid endpoint (inclusive).
    #[arg(long)]
    pub to: f64,
    /// Number of uniform grid intervals; the grid has steps + 1 points.
    #[arg(long)]
    pub steps: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of random parameter tuples.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Generator seed; generated and printed when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest acceptable closed-form vs. oracle deviation.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub basis: BasisArgs,
    /// Number of measurement draws.
    #[arg(long)]
    pub n: u64,
    /// Generator seed; generated and printed when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}
