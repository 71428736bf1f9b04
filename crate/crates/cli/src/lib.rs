//! Argument and config-file handling for the `nsga-lotz` runner.
//!
//! Settings come from three layers: built-in defaults, an optional
//! `key=value` file given with `--config`, and command-line flags. Later
//! layers override earlier ones.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::Parser;
use nsga_lotz::experiment::ExperimentBatch;
use nsga_lotz::{MutationMode, PopulationSize, ProblemSpec, RunConfig, SelectionMode, VariationConfig};

pub const DEFAULT_REPLICATES: u64 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Args(#[from] clap::Error),
    #[error("cannot read config file {}: {source}", path.display())]
    ConfigFile { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Run(nsga_lotz::Error),
}

impl CliError {
    /// Process exit status: 2 for configuration problems, 1 for failures
    /// while running, 0 for `--help` and `--version`.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Args(e) if !e.use_stderr() => 0,
            Self::Run(e) if !e.is_config_error() => 1,
            _ => 2,
        }
    }
}

impl From<nsga_lotz::Error> for CliError {
    fn from(e: nsga_lotz::Error) -> Self {
        if e.is_config_error() {
            Self::Config(e.to_string())
        } else {
            Self::Run(e)
        }
    }
}

/// Runs NSGA-II on mLOTZ for a batch of seeded replicates and writes one
/// CSV per replicate plus per-iteration medians.
#[derive(Debug, Default, Parser)]
#[command(name = "nsga-lotz", version)]
pub struct Args {
    /// Benchmark name (only `mlotz`).
    #[arg(long)]
    pub problem: Option<String>,
    /// Number of objectives, even.
    #[arg(long)]
    pub m: Option<usize>,
    /// Bit-string length, divisible by m/2.
    #[arg(long)]
    pub n: Option<usize>,
    /// Population size, absolute (`1764`) or a multiple of the front size (`4M`).
    #[arg(long)]
    pub pop: Option<String>,
    #[arg(long)]
    pub iterations: Option<usize>,
    /// fair | random | tournament
    #[arg(long)]
    pub selection: Option<SelectionMode>,
    /// std | onebit
    #[arg(long)]
    pub mutation: Option<MutationMode>,
    /// Apply uniform crossover to a share of the offspring.
    #[arg(long)]
    pub crossover: bool,
    #[arg(long = "crossover-prob")]
    pub crossover_prob: Option<f64>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub replicates: Option<u64>,
    /// Output directory for the CSV files.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Stop a replicate once its population covers the whole front.
    #[arg(long = "early-stop")]
    pub early_stop: bool,
    /// Worker threads for replicates (defaults to available cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Plain `key=value` file; flags on the command line take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Settings after merging all layers, before validation.
#[derive(Debug, Clone, PartialEq)]
struct Settings {
    problem: String,
    m: usize,
    n: usize,
    pop: String,
    iterations: usize,
    selection: SelectionMode,
    mutation: MutationMode,
    crossover: bool,
    crossover_prob: f64,
    seed: u64,
    replicates: u64,
    out: PathBuf,
    early_stop: bool,
    threads: Option<usize>,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            problem: "mlotz".into(),
            m: 4,
            n: 40,
            pop: "4M".into(),
            iterations: 1000,
            selection: SelectionMode::Fair,
            mutation: MutationMode::StandardBit,
            crossover: false,
            crossover_prob: VariationConfig::default().crossover_probability,
            seed: 0,
            replicates: DEFAULT_REPLICATES,
            out: PathBuf::from("results"),
            early_stop: false,
            threads: None,
        }
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Config(format!("invalid value {value:?} for {key}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool, CliError> {
    match value {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        _ => Err(CliError::Config(format!("invalid value {value:?} for {key}"))),
    }
}

impl Settings {
    /// Applies `key=value` lines. Blank lines and `#` comments are skipped;
    /// keys accept `-` or `_` as separator.
    fn apply_file(&mut self, text: &str) -> Result<(), CliError> {
        for (number, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("config line {}: expected key=value", number + 1)))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            match key.as_str() {
                "problem" => self.problem = value.to_string(),
                "m" => self.m = parse_value(&key, value)?,
                "n" => self.n = parse_value(&key, value)?,
                "pop" => self.pop = value.to_string(),
                "iterations" => self.iterations = parse_value(&key, value)?,
                "selection" => self.selection = parse_value(&key, value)?,
                "mutation" => self.mutation = parse_value(&key, value)?,
                "crossover" => self.crossover = parse_bool(&key, value)?,
                "crossover-prob" => self.crossover_prob = parse_value(&key, value)?,
                "seed" => self.seed = parse_value(&key, value)?,
                "replicates" => self.replicates = parse_value(&key, value)?,
                "out" => self.out = PathBuf::from(value),
                "early-stop" => self.early_stop = parse_bool(&key, value)?,
                "threads" => self.threads = Some(parse_value(&key, value)?),
                _ => {
                    return Err(CliError::Config(format!(
                        "config line {}: unknown key {key:?}",
                        number + 1
                    )))
                }
            }
        }
        Ok(())
    }

    fn apply_args(&mut self, args: Args) {
        macro_rules! take {
            ($($field:ident),*) => {$(
                if let Some(v) = args.$field {
                    self.$field = v;
                }
            )*};
        }
        take!(
            problem,
            m,
            n,
            pop,
            iterations,
            selection,
            mutation,
            crossover_prob,
            seed,
            replicates,
            out
        );
        if args.threads.is_some() {
            self.threads = args.threads;
        }
        self.crossover |= args.crossover;
        self.early_stop |= args.early_stop;
    }

    fn into_batch(self) -> Result<ExperimentBatch, CliError> {
        if self.problem != "mlotz" {
            return Err(CliError::Config(format!(
                "unknown problem {:?}; expected mlotz",
                self.problem
            )));
        }
        let problem = ProblemSpec::new(self.n, self.m)?;
        let population_size = self.pop.parse::<PopulationSize>()?.resolve(&problem)?;
        if self.replicates == 0 {
            return Err(CliError::Config("replicates must be at least 1".into()));
        }
        let threads = match self.threads {
            Some(0) => return Err(CliError::Config("threads must be at least 1".into())),
            Some(t) => t,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };

        let mut base = RunConfig::new(problem, population_size);
        base.iterations = self.iterations;
        base.seed = self.seed;
        base.early_stop = self.early_stop;
        base.variation = VariationConfig {
            selection: self.selection,
            mutation: self.mutation,
            crossover: self.crossover,
            crossover_probability: self.crossover_prob,
        };
        base.validate()?;

        Ok(ExperimentBatch {
            base,
            replicates: self.replicates,
            out_dir: self.out,
            threads,
        })
    }
}

fn read_config_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::ConfigFile {
        path: path.to_path_buf(),
        source,
    })
}

/// Builds a validated batch from command-line tokens. The first token is
/// the program name.
pub fn parse_config<I, T>(tokens: I) -> Result<ExperimentBatch, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(tokens)?;
    let mut settings = Settings::default();
    if let Some(path) = &args.config {
        settings.apply_file(&read_config_file(path)?)?;
    }
    settings.apply_args(args);
    settings.into_batch()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(tokens: &[&str]) -> Result<ExperimentBatch, CliError> {
        parse_config(std::iter::once("nsga-lotz").chain(tokens.iter().copied()))
    }

    #[test]
    fn defaults() {
        let b = parse(&[]).unwrap();
        assert_eq!(b.base.problem, ProblemSpec::new(40, 4).unwrap());
        assert_eq!(b.base.population_size, 1764);
        assert_eq!(b.base.iterations, 1000);
        assert_eq!(b.replicates, DEFAULT_REPLICATES);
        assert_eq!(b.base.variation, VariationConfig::default());
    }

    #[test]
    fn file_then_flags() {
        let mut s = Settings::default();
        s.apply_file("# grid\nm = 6\nn=12\nselection=random\ncrossover=true\ncrossover_prob=0.25\n\nthreads=3\n")
            .unwrap();
        s.apply_args(Args {
            n: Some(18),
            crossover_prob: Some(0.75),
            ..Args::default()
        });
        assert_eq!((s.m, s.n), (6, 18));
        assert_eq!(s.selection, SelectionMode::Random);
        assert!(s.crossover);
        assert_eq!(s.crossover_prob, 0.75);
        assert_eq!(s.threads, Some(3));
    }

    #[test]
    fn file_errors() {
        let mut s = Settings::default();
        assert!(matches!(s.apply_file("colour=blue"), Err(CliError::Config(m)) if m.contains("unknown key")));
        assert!(s.apply_file("just words").is_err());
        assert!(s.apply_file("mutation=gaussian").is_err());
        assert!(s.apply_file("early-stop=maybe").is_err());
    }

    #[test]
    fn configuration_errors_exit_with_two() {
        for tokens in [
            &["--m", "3"][..],
            &["--m", "6", "--n", "10"],
            &["--pop", "0"],
            &["--pop", "0M"],
            &["--selection", "roulette"],
            &["--problem", "onemax"],
            &["--crossover"],
            &["--selection", "random", "--crossover", "--crossover-prob", "1.5"],
            &["--threads", "0"],
            &["--replicates", "0"],
            &["--config", "/nonexistent/run.conf"],
        ] {
            let err = parse(tokens).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{tokens:?} gave {err}");
        }
    }

    #[test]
    fn runtime_errors_exit_with_one() {
        let err = CliError::from(nsga_lotz::Error::Io(std::io::Error::other("disk full")));
        assert_eq!(err.exit_code(), 1);
    }
}
