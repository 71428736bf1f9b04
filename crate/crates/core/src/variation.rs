//! Parent selection and variation operators.
//!
//! Random draws happen in this order for each generation:
//! without crossover, all `N` parent selections first, then one mutation
//! per offspring in offspring order; with crossover, per offspring the
//! crossover coin, the parent pick(s), the crossover mask, the mutation.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::benchmark::ProblemSpec;
use crate::engine::{crowding_distance, nondominated_sort};
use crate::error::{Error, Result};
use crate::individual::Individual;
use crate::objective::ObjectiveVector;
use crate::population::{Member, Population};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SelectionMode {
    /// Every parent creates exactly one offspring.
    #[default]
    Fair,
    /// Each offspring's parent is drawn uniformly with replacement.
    Random,
    /// Binary tournament: two uniform draws with replacement, the better
    /// ranked one wins (lower front, then larger crowding, then a coin).
    Tournament,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MutationMode {
    /// Each bit flips independently with probability `1/n`.
    #[default]
    StandardBit,
    /// Exactly one uniformly chosen bit flips.
    OneBit,
}

impl FromStr for SelectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fair" => Ok(Self::Fair),
            "random" => Ok(Self::Random),
            "tournament" => Ok(Self::Tournament),
            other => Err(Error::InvalidConfig(format!(
                "unknown selection {other:?} (expected fair, random or tournament)"
            ))),
        }
    }
}

impl fmt::Display for SelectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fair => "fair",
            Self::Random => "random",
            Self::Tournament => "tournament",
        })
    }
}

impl FromStr for MutationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "std" => Ok(Self::StandardBit),
            "onebit" => Ok(Self::OneBit),
            other => Err(Error::InvalidConfig(format!(
                "unknown mutation {other:?} (expected std or onebit)"
            ))),
        }
    }
}

impl fmt::Display for MutationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::StandardBit => "std",
            Self::OneBit => "onebit",
        })
    }
}

/// How offspring are produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationConfig {
    pub selection: SelectionMode,
    pub mutation: MutationMode,
    /// With crossover, each offspring independently uses uniform crossover
    /// of two picked parents with probability `crossover_probability`, and
    /// mutation of one picked parent otherwise. Mutation always follows.
    pub crossover: bool,
    pub crossover_probability: f64,
}

impl Default for VariationConfig {
    fn default() -> Self {
        Self {
            selection: SelectionMode::Fair,
            mutation: MutationMode::StandardBit,
            crossover: false,
            crossover_probability: 0.5,
        }
    }
}

impl VariationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.crossover_probability) {
            return Err(Error::InvalidConfig(format!(
                "crossover probability must lie in [0, 1], got {}",
                self.crossover_probability
            )));
        }
        if self.crossover && self.selection == SelectionMode::Fair {
            return Err(Error::InvalidConfig(
                "crossover needs random or tournament selection; fair selection gives each parent exactly one offspring"
                    .into(),
            ));
        }
        Ok(())
    }

    pub fn needs_ranking(&self) -> bool {
        self.selection == SelectionMode::Tournament
    }
}

/// Front index and crowding distance (within its own front) of every
/// member of a parent population, for tournament comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedPopulation {
    front_of: Vec<usize>,
    crowding: Vec<f64>,
}

impl RankedPopulation {
    pub fn of_values(values: &[ObjectiveVector]) -> Self {
        let fronts = nondominated_sort(values);
        let front_of = fronts.front_of_each(values.len());
        let mut crowding = vec![0.0; values.len()];
        for front in fronts.fronts() {
            let set: Vec<&ObjectiveVector> = front.iter().map(|&i| &values[i]).collect();
            for (&i, d) in front.iter().zip(crowding_distance(&set)) {
                crowding[i] = d;
            }
        }
        Self { front_of, crowding }
    }

    pub fn of(population: &Population) -> Self {
        Self::of_values(&population.values())
    }

    /// Builds a ranking from explicit per-member front indices and distances.
    pub fn from_parts(front_of: Vec<usize>, crowding: Vec<f64>) -> Self {
        assert_eq!(front_of.len(), crowding.len());
        Self { front_of, crowding }
    }

    pub fn len(&self) -> usize {
        self.front_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.front_of.is_empty()
    }

    pub fn front_of(&self, i: usize) -> usize {
        self.front_of[i]
    }

    pub fn crowding(&self, i: usize) -> f64 {
        self.crowding[i]
    }
}

/// Flips each bit of `x` independently with probability `1/n`; one
/// Bernoulli draw per position, in position order.
pub fn standard_bit_mutation<R: Rng + ?Sized>(x: &Individual, rng: &mut R) -> Individual {
    let n = x.len();
    let mut y = x.clone();
    if n == 0 {
        return y;
    }
    let p = 1.0 / n as f64;
    for i in 0..n {
        if rng.gen_bool(p) {
            y.flip(i);
        }
    }
    y
}

/// Flips exactly one uniformly chosen position of `x`.
pub fn one_bit_mutation<R: Rng + ?Sized>(x: &Individual, rng: &mut R) -> Individual {
    assert!(!x.is_empty(), "one-bit mutation needs at least one bit");
    let i = rng.gen_range(0..x.len());
    x.with_flipped(&[i])
}

pub fn mutate<R: Rng + ?Sized>(mode: MutationMode, x: &Individual, rng: &mut R) -> Individual {
    match mode {
        MutationMode::StandardBit => standard_bit_mutation(x, rng),
        MutationMode::OneBit => one_bit_mutation(x, rng),
    }
}

/// Each position comes from `x` or `y` with probability 1/2; one
/// `next_u64` mask word per 64 positions.
pub fn uniform_crossover<R: Rng + ?Sized>(x: &Individual, y: &Individual, rng: &mut R) -> Result<Individual> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let mask: Vec<u64> = (0..x.word_count()).map(|_| rng.next_u64()).collect();
    // padding bits are zero in both parents, so any mask keeps them zero
    Ok(x.blend(y, &mask))
}

fn tournament<R: Rng + ?Sized>(ranking: &RankedPopulation, rng: &mut R) -> usize {
    let len = ranking.len();
    let a = rng.gen_range(0..len);
    let b = rng.gen_range(0..len);
    match ranking.front_of(a).cmp(&ranking.front_of(b)) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            let (ca, cb) = (ranking.crowding(a), ranking.crowding(b));
            if ca > cb {
                a
            } else if cb > ca {
                b
            } else if rng.gen_bool(0.5) {
                a
            } else {
                b
            }
        }
    }
}

/// One parent index drawn with `mode`. Fair selection has no single-draw form.
fn pick_parent<R: Rng + ?Sized>(
    len: usize,
    mode: SelectionMode,
    ranking: Option<&RankedPopulation>,
    rng: &mut R,
) -> Result<usize> {
    match mode {
        SelectionMode::Random => Ok(rng.gen_range(0..len)),
        SelectionMode::Tournament => Ok(tournament(ranking.ok_or(Error::MissingRanking)?, rng)),
        SelectionMode::Fair => Err(Error::InvalidConfig(
            "fair selection cannot pick a single parent".into(),
        )),
    }
}

/// `len` parent indices for a population of size `len`.
pub fn select_parents<R: Rng + ?Sized>(
    len: usize,
    mode: SelectionMode,
    ranking: Option<&RankedPopulation>,
    rng: &mut R,
) -> Result<Vec<usize>> {
    if let Some(r) = ranking {
        if r.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: r.len(),
            });
        }
    }
    match mode {
        SelectionMode::Fair => Ok((0..len).collect()),
        _ => (0..len).map(|_| pick_parent(len, mode, ranking, rng)).collect(),
    }
}

/// Produces `|parents|` evaluated offspring.
pub fn generate_offspring<R: Rng + ?Sized>(
    parents: &Population,
    config: &VariationConfig,
    ranking: Option<&RankedPopulation>,
    problem: &ProblemSpec,
    rng: &mut R,
) -> Result<Population> {
    config.validate()?;
    let len = parents.len();
    let individual = |i: usize| parents[i].individual();

    let offspring: Vec<Individual> = if config.crossover {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let child = if rng.gen_bool(config.crossover_probability) {
                let a = pick_parent(len, config.selection, ranking, rng)?;
                let b = pick_parent(len, config.selection, ranking, rng)?;
                uniform_crossover(individual(a), individual(b), rng)?
            } else {
                individual(pick_parent(len, config.selection, ranking, rng)?).clone()
            };
            out.push(mutate(config.mutation, &child, rng));
        }
        out
    } else {
        select_parents(len, config.selection, ranking, rng)?
            .into_iter()
            .map(|p| mutate(config.mutation, individual(p), rng))
            .collect()
    };

    offspring.into_iter().map(|x| Member::evaluate(problem, x)).collect()
}
