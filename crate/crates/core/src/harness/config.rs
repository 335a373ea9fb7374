use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;

use crate::boolfn::{io, parse_bits, TruthTable};
use crate::{Error, Result, DEFAULT_N_MAX, HARD_N_MAX};

pub const DEFAULT_TRIALS: u64 = 1000;
pub const DEFAULT_CAMPAIGN_GRID: [f64; 4] = [1e-2, 1e-3, 1e-4, 1e-5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Lin,
    Sym,
    Blr,
    Csym,
    Bv,
    Campaign,
}

/// Tester swept by a campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum CampaignTest {
    Lin,
    Sym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Instance generator, written `kind:argument`.
///
/// - `linear:<a>` with `a` a coefficient bit string (`x1` first)
/// - `symmetric:<v0 v1 ... vn>` one output bit per Hamming weight
/// - `random:<n>` uniformly random table
/// - `perturbed:<spec>,flips=<k>` `k` distinct random flips of another spec
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Linear {
        n: usize,
        a: usize,
    },
    Symmetric {
        values: Vec<bool>,
    },
    Random {
        n: usize,
    },
    Perturbed {
        base: Box<GeneratorSpec>,
        flips: usize,
    },
}

impl GeneratorSpec {
    pub fn build<R: Rng + ?Sized>(&self, rng: &mut R, n_max: usize) -> Result<TruthTable> {
        let tt = match self {
            GeneratorSpec::Linear { n, a } => TruthTable::linear(*n, *a)?,
            GeneratorSpec::Symmetric { values } => TruthTable::symmetric(values)?,
            GeneratorSpec::Random { n } => {
                crate::boolfn::check_arity(*n, n_max)?;
                TruthTable::random(*n, rng)?
            }
            GeneratorSpec::Perturbed { base, flips } => {
                base.build(rng, n_max)?.perturb(*flips, rng)?
            }
        };
        crate::boolfn::check_arity(tt.arity(), n_max)?;
        Ok(tt)
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Config(format!("generator {s:?}: {msg}"));
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| bad("expected kind:argument"))?;
        match kind {
            "linear" => {
                let (a, n) = parse_bits(arg)?;
                Ok(GeneratorSpec::Linear { n, a })
            }
            "symmetric" => {
                if arg.len() < 2 {
                    return Err(bad("need at least two weight values"));
                }
                let values = arg
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(bad("weight values must be 0/1")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if values.len() - 1 > HARD_N_MAX {
                    return Err(bad("arity too large"));
                }
                Ok(GeneratorSpec::Symmetric { values })
            }
            "random" => {
                let n: usize = arg.parse().map_err(|_| bad("arity must be an integer"))?;
                if n == 0 || n > HARD_N_MAX {
                    return Err(bad("arity out of range"));
                }
                Ok(GeneratorSpec::Random { n })
            }
            "perturbed" => {
                let (inner, flips) = arg
                    .rsplit_once(",flips=")
                    .ok_or_else(|| bad("expected perturbed:<spec>,flips=<k>"))?;
                let flips = flips
                    .parse()
                    .map_err(|_| bad("flip count must be an integer"))?;
                Ok(GeneratorSpec::Perturbed {
                    base: Box::new(inner.parse()?),
                    flips,
                })
            }
            _ => Err(bad("unknown generator kind")),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Linear { n, a } => {
                write!(f, "linear:{}", crate::boolfn::format_bits(*a, *n))
            }
            GeneratorSpec::Symmetric { values } => {
                write!(f, "symmetric:")?;
                values.iter().try_for_each(|&v| write!(f, "{}", v as u8))
            }
            GeneratorSpec::Random { n } => write!(f, "random:{n}"),
            GeneratorSpec::Perturbed { base, flips } => write!(f, "perturbed:{base},flips={flips}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSource {
    File(PathBuf),
    Generator(GeneratorSpec),
}

impl FunctionSource {
    /// Loads or generates the instance. Generators draw from `rng`.
    pub fn load<R: Rng + ?Sized>(&self, rng: &mut R, n_max: usize) -> Result<TruthTable> {
        match self {
            FunctionSource::File(path) => io::read_table_file(path, n_max),
            FunctionSource::Generator(spec) => spec.build(rng, n_max),
        }
    }
}

impl fmt::Display for FunctionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSource::File(p) => write!(f, "file:{}", p.display()),
            FunctionSource::Generator(g) => write!(f, "{g}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub source: FunctionSource,
    /// Required by every mode except `bv` and `campaign`.
    pub eps: Option<f64>,
    pub trials: u64,
    pub seed: u64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub n_max: usize,
    pub campaign_test: CampaignTest,
    pub campaign_grid: Vec<f64>,
}

impl ExperimentConfig {
    /// A config with documented defaults for everything but the essentials.
    pub fn new(mode: Mode, source: FunctionSource, eps: Option<f64>) -> Self {
        Self {
            mode,
            source,
            eps,
            trials: DEFAULT_TRIALS,
            seed: 0,
            format: OutputFormat::Json,
            out: None,
            n_max: DEFAULT_N_MAX,
            campaign_test: CampaignTest::Lin,
            campaign_grid: DEFAULT_CAMPAIGN_GRID.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be >= 1".into()));
        }
        if self.n_max == 0 || self.n_max > HARD_N_MAX {
            return Err(Error::Config(format!(
                "--n-max must lie in 1..={HARD_N_MAX}"
            )));
        }
        let check = |e: f64| {
            if e.is_finite() && e > 0.0 && e < 1.0 {
                Ok(())
            } else {
                Err(Error::Config(format!(
                    "eps {e} must lie strictly between 0 and 1"
                )))
            }
        };
        if let Some(e) = self.eps {
            check(e)?;
        }
        match self.mode {
            Mode::Lin | Mode::Sym | Mode::Blr | Mode::Csym if self.eps.is_none() => {
                return Err(Error::Config("--eps is required for this mode".into()))
            }
            Mode::Campaign => {
                if self.campaign_grid.len() < 2 {
                    return Err(Error::Config(
                        "campaign grid needs at least two eps values".into(),
                    ));
                }
                self.campaign_grid.iter().try_for_each(|&e| check(e))?;
            }
            _ => {}
        }
        Ok(())
    }
}

/// Command-line surface of the `qprop` binary.
#[derive(Debug, Parser)]
#[command(
    name = "qprop",
    version,
    about = "Quantum and classical property testers for Boolean functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantum linearity tester.
    Lin(CommonArgs),
    /// Quantum symmetry tester.
    Sym(CommonArgs),
    /// Classical BLR linearity test.
    Blr(CommonArgs),
    /// Classical same-weight symmetry test.
    Csym(CommonArgs),
    /// Single Bernstein–Vazirani runs.
    Bv(CommonArgs),
    /// Sweep eps and fit the oracle-call slope.
    Campaign(CampaignArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Truth-table file.
    #[arg(
        long = "fn",
        value_name = "PATH",
        conflicts_with = "gen",
        required_unless_present = "gen"
    )]
    pub function: Option<PathBuf>,
    /// Instance generator, e.g. `perturbed:linear:101,flips=2`.
    #[arg(long, value_name = "SPEC")]
    pub gen: Option<String>,
    /// Distance parameter, strictly between 0 and 1.
    #[arg(long, allow_negative_numbers = true)]
    pub eps: Option<f64>,
    /// Independent trials.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    /// Master seed; fixes the instance and every trial.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Report destination instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Largest accepted arity.
    #[arg(long = "n-max", default_value_t = DEFAULT_N_MAX)]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct CampaignArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Tester to sweep.
    #[arg(long, value_enum, default_value_t = CampaignTest::Lin)]
    pub test: CampaignTest,
    /// Comma-separated eps grid.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub grid: Option<Vec<f64>>,
}

impl Cli {
    pub fn into_config(self) -> Result<ExperimentConfig> {
        let (mode, common, test, grid) = match self.command {
            Command::Lin(c) => (Mode::Lin, c, None, None),
            Command::Sym(c) => (Mode::Sym, c, None, None),
            Command::Blr(c) => (Mode::Blr, c, None, None),
            Command::Csym(c) => (Mode::Csym, c, None, None),
            Command::Bv(c) => (Mode::Bv, c, None, None),
            Command::Campaign(c) => (Mode::Campaign, c.common, Some(c.test), c.grid),
        };
        let source = match (common.function, common.gen) {
            (Some(path), None) => FunctionSource::File(path),
            (None, Some(spec)) => FunctionSource::Generator(spec.parse()?),
            _ => {
                return Err(Error::Config(
                    "exactly one of --fn or --gen is required".into(),
                ))
            }
        };
        let config = ExperimentConfig {
            mode,
            source,
            eps: common.eps,
            trials: common.trials,
            seed: common.seed,
            format: common.format,
            out: common.out,
            n_max: common.n_max,
            campaign_test: test.unwrap_or(CampaignTest::Lin),
            campaign_grid: grid.unwrap_or_else(|| DEFAULT_CAMPAIGN_GRID.to_vec()),
        };
        config.validate()?;
        Ok(config)
    }
}

/// Parses a full argument vector (program name first) into a validated
/// config. Help and version requests surface as errors too; the binary
/// handles those before calling this.
pub fn parse_config<I, T>(args: I) -> Result<ExperimentConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args)
        .map_err(|e| Error::Config(e.to_string()))?
        .into_config()
}
