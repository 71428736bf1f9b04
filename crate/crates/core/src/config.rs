use std::fmt;
use std::str::FromStr;

use crate::benchmark::ProblemSpec;
use crate::error::{Error, Result};
use crate::rng::{replicate_rng, RunRng};
use crate::variation::VariationConfig;

/// Population size, absolute or as a multiple of the front size `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PopulationSize {
    Absolute(usize),
    FrontMultiple(u64),
}

impl PopulationSize {
    pub fn resolve(self, problem: &ProblemSpec) -> Result<usize> {
        let size = match self {
            Self::Absolute(n) => n,
            Self::FrontMultiple(k) => k
                .checked_mul(problem.front_size())
                .and_then(|n| usize::try_from(n).ok())
                .ok_or_else(|| Error::InvalidConfig(format!("population size {k}M overflows")))?,
        };
        if size == 0 {
            return Err(Error::InvalidConfig("population size must be at least 1".into()));
        }
        Ok(size)
    }
}

impl FromStr for PopulationSize {
    type Err = Error;

    /// `"1764"` or `"4M"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidConfig(format!("population size must be an integer or kM, got {s:?}"));
        match s.strip_suffix(['M', 'm']) {
            Some(k) => k.parse().map(Self::FrontMultiple).map_err(|_| bad()),
            None => s.parse().map(Self::Absolute).map_err(|_| bad()),
        }
    }
}

impl fmt::Display for PopulationSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Absolute(n) => write!(f, "{n}"),
            Self::FrontMultiple(k) => write!(f, "{k}M"),
        }
    }
}

/// Everything that determines one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: ProblemSpec,
    pub population_size: usize,
    pub variation: VariationConfig,
    /// Number of loop iterations after initialization.
    pub iterations: usize,
    /// Master seed; the run's stream also depends on `replicate_id`.
    pub seed: u64,
    /// Stop as soon as the population covers the whole front.
    pub early_stop: bool,
    pub replicate_id: u64,
}

impl RunConfig {
    pub fn new(problem: ProblemSpec, population_size: usize) -> Self {
        Self {
            problem,
            population_size,
            variation: VariationConfig::default(),
            iterations: 1000,
            seed: 0,
            early_stop: false,
            replicate_id: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::InvalidConfig("population size must be at least 1".into()));
        }
        self.variation.validate()
    }

    pub fn rng(&self) -> RunRng {
        replicate_rng(self.seed, self.replicate_id)
    }

    pub fn with_replicate(&self, replicate_id: u64) -> Self {
        Self {
            replicate_id,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn population_size_syntax() {
        let p = ProblemSpec::new(40, 4).unwrap();
        assert_eq!("4M".parse::<PopulationSize>().unwrap().resolve(&p).unwrap(), 1764);
        assert_eq!("2M".parse::<PopulationSize>().unwrap().resolve(&p).unwrap(), 882);
        assert_eq!("84".parse::<PopulationSize>().unwrap().resolve(&p).unwrap(), 84);
        assert!("0".parse::<PopulationSize>().unwrap().resolve(&p).is_err());
        assert!("0M".parse::<PopulationSize>().unwrap().resolve(&p).is_err());
        assert!("1.5M".parse::<PopulationSize>().is_err());
        assert!("lots".parse::<PopulationSize>().is_err());
        assert_eq!(PopulationSize::FrontMultiple(8).to_string(), "8M");
    }

    #[test]
    fn zero_population_is_invalid() {
        let mut c = RunConfig::new(ProblemSpec::new(8, 4).unwrap(), 10);
        assert!(c.validate().is_ok());
        c.population_size = 0;
        assert!(c.validate().unwrap_err().is_config_error());
    }
}
