//! Experiment configuration: `key = value` text, optionally overridden by
//! command-line flags.
//!
//! Entries are separated by newlines or commas; `#` starts a comment line.
//! Recognised keys are exactly those in [`KEYS`].

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use hetga::nqueens::NQueens;
use hetga::tsp::{self, BoundingBox, Tsp};
use hetga::{GaConfig, GatingPolicy};

use crate::error::{BenchError, Result};

pub const KEYS: [&str; 11] = [
    "problem",
    "n",
    "points_file",
    "population",
    "generations",
    "crossover_prob",
    "mutation_prob",
    "elitism",
    "runs",
    "heterogeneous",
    "seed",
];

/// Largest `n` accepted without `allow_large`.
pub const DESK_MAX_N: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    NQueens,
    Tsp,
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NQueens => "nqueens",
            Self::Tsp => "tsp",
        })
    }
}

impl FromStr for ProblemKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "nqueens" => Ok(Self::NQueens),
            "tsp" => Ok(Self::Tsp),
            other => Err(format!("expected `nqueens` or `tsp`, got `{other}`")),
        }
    }
}

/// A validated experiment battery. Run `r` uses seed `seed + r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub problem: ProblemKind,
    /// Board size, or point count for a random TSP instance. For a TSP
    /// loaded from `points_file` this is the file's point count.
    pub n: usize,
    pub points_file: Option<PathBuf>,
    pub population: usize,
    pub generations: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub elitism: usize,
    pub runs: usize,
    pub heterogeneous: bool,
    pub seed: u64,
}

impl ExperimentSpec {
    pub fn ga_config(&self, run: usize) -> GaConfig {
        GaConfig {
            population_size: self.population,
            generations: self.generations,
            crossover_prob: self.crossover_prob,
            mutation_prob: self.mutation_prob,
            seed: self.seed.wrapping_add(run as u64),
            elitism: self.elitism,
            parallel: true,
        }
    }

    pub fn policy(&self) -> Result<GatingPolicy> {
        Ok(GatingPolicy::for_config(
            self.heterogeneous,
            &self.ga_config(0),
        )?)
    }

    pub fn with_policy(&self, heterogeneous: bool) -> Self {
        Self {
            heterogeneous,
            ..self.clone()
        }
    }

    /// Builds the problem instance. A TSP without a points file gets `n`
    /// uniform points in the unit square drawn from the master seed.
    pub fn instance(&self) -> Result<Instance> {
        Ok(match self.problem {
            ProblemKind::NQueens => Instance::NQueens(NQueens::new(self.n)?),
            ProblemKind::Tsp => {
                let points = match &self.points_file {
                    Some(path) => tsp::load_points(path)?,
                    None => tsp::random_instance(self.n, self.seed, BoundingBox::UNIT)?,
                };
                Instance::Tsp(Tsp::new(points))
            }
        })
    }

    /// Objective threshold counted as solved: zero conflicts for N-queens,
    /// none for TSP.
    pub fn target(&self) -> Option<f64> {
        match self.problem {
            ProblemKind::NQueens => Some(0.0),
            ProblemKind::Tsp => None,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Instance {
    NQueens(NQueens),
    Tsp(Tsp),
}

impl Instance {
    pub fn as_problem(&self) -> &dyn hetga::Problem {
        match self {
            Self::NQueens(q) => q,
            Self::Tsp(t) => t,
        }
    }
}

/// Unvalidated key/value settings. Later sources override earlier ones via
/// [`PartialSpec::merge`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PartialSpec {
    pub problem: Option<ProblemKind>,
    pub n: Option<usize>,
    pub points_file: Option<PathBuf>,
    pub population: Option<usize>,
    pub generations: Option<usize>,
    pub crossover_prob: Option<f64>,
    pub mutation_prob: Option<f64>,
    pub elitism: Option<usize>,
    pub runs: Option<usize>,
    pub heterogeneous: Option<bool>,
    pub seed: Option<u64>,
}

fn value<T: FromStr>(key: &str, raw: &str) -> Result<T>
where
    T::Err: fmt::Display,
{
    raw.parse()
        .map_err(|e: T::Err| BenchError::config(key, format!("cannot parse `{raw}`: {e}")))
}

fn parse_bool(key: &str, raw: &str) -> Result<bool> {
    match raw.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(BenchError::config(
            key,
            format!("expected a boolean, got `{raw}`"),
        )),
    }
}

impl PartialSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = Self::default();
        for line in text.lines() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            for entry in line.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                let (key, raw) = entry
                    .split_once('=')
                    .ok_or_else(|| BenchError::config(entry, "expected `key = value`"))?;
                spec.set(key.trim(), raw.trim())?;
            }
        }
        Ok(spec)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn set(&mut self, key: &str, raw: &str) -> Result<()> {
        match key {
            "problem" => self.problem = Some(value(key, raw)?),
            "n" => self.n = Some(value(key, raw)?),
            "points_file" => self.points_file = Some(PathBuf::from(raw)),
            "population" => self.population = Some(value(key, raw)?),
            "generations" => self.generations = Some(value(key, raw)?),
            "crossover_prob" => self.crossover_prob = Some(value(key, raw)?),
            "mutation_prob" => self.mutation_prob = Some(value(key, raw)?),
            "elitism" => self.elitism = Some(value(key, raw)?),
            "runs" => self.runs = Some(value(key, raw)?),
            "heterogeneous" => self.heterogeneous = Some(parse_bool(key, raw)?),
            "seed" => self.seed = Some(value(key, raw)?),
            _ => return Err(BenchError::config(key, "unknown key")),
        }
        Ok(())
    }

    /// Fields set in `over` replace those in `self`.
    pub fn merge(self, over: Self) -> Self {
        Self {
            problem: over.problem.or(self.problem),
            n: over.n.or(self.n),
            points_file: over.points_file.or(self.points_file),
            population: over.population.or(self.population),
            generations: over.generations.or(self.generations),
            crossover_prob: over.crossover_prob.or(self.crossover_prob),
            mutation_prob: over.mutation_prob.or(self.mutation_prob),
            elitism: over.elitism.or(self.elitism),
            runs: over.runs.or(self.runs),
            heterogeneous: over.heterogeneous.or(self.heterogeneous),
            seed: over.seed.or(self.seed),
        }
    }

    /// Fills defaults (population 300, 500 generations, crossover 0.9,
    /// mutation 0.1, elitism 1, 10 runs, heterogeneous, seed 0) and validates.
    /// `n` above [`DESK_MAX_N`] needs `allow_large`.
    pub fn build(self, allow_large: bool) -> Result<ExperimentSpec> {
        let problem = self
            .problem
            .ok_or_else(|| BenchError::config("problem", "missing required key"))?;
        let n = match (problem, self.n, &self.points_file) {
            (ProblemKind::NQueens, None, _) => {
                return Err(BenchError::config("n", "missing required key for nqueens"))
            }
            (ProblemKind::NQueens, Some(_), Some(_)) => {
                return Err(BenchError::config("points_file", "only valid for tsp"))
            }
            (ProblemKind::Tsp, None, None) => {
                return Err(BenchError::config(
                    "points_file",
                    "tsp needs points_file or n for a random instance",
                ))
            }
            (ProblemKind::Tsp, n, Some(path)) => {
                let count = tsp::load_points(path)
                    .map_err(|e| BenchError::config("points_file", e.to_string()))?
                    .len();
                if n.is_some_and(|n| n != count) {
                    return Err(BenchError::config(
                        "n",
                        format!(
                            "{} does not match the {count} points in the file",
                            n.unwrap_or(0)
                        ),
                    ));
                }
                count
            }
            (_, Some(n), _) => n,
        };
        let min_n = if problem == ProblemKind::Tsp { 2 } else { 1 };
        if n < min_n {
            return Err(BenchError::config(
                "n",
                format!("must be at least {min_n}, got {n}"),
            ));
        }
        if n > DESK_MAX_N && !allow_large {
            return Err(BenchError::config(
                "n",
                format!("{n} exceeds the desk-scale cap of {DESK_MAX_N}; pass --large to allow it"),
            ));
        }

        let spec = ExperimentSpec {
            problem,
            n,
            points_file: self.points_file,
            population: self.population.unwrap_or(300),
            generations: self.generations.unwrap_or(500),
            crossover_prob: self.crossover_prob.unwrap_or(0.9),
            mutation_prob: self.mutation_prob.unwrap_or(0.1),
            elitism: self.elitism.unwrap_or(1),
            runs: self.runs.unwrap_or(10),
            heterogeneous: self.heterogeneous.unwrap_or(true),
            seed: self.seed.unwrap_or(0),
        };
        for (key, p) in [
            ("crossover_prob", spec.crossover_prob),
            ("mutation_prob", spec.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(BenchError::config(key, format!("{p} is outside [0, 1]")));
            }
        }
        if spec.population < 2 {
            return Err(BenchError::config("population", "must be at least 2"));
        }
        if spec.elitism >= spec.population {
            return Err(BenchError::config(
                "elitism",
                "must be smaller than population",
            ));
        }
        if spec.runs == 0 {
            return Err(BenchError::config("runs", "must be at least 1"));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key_of(err: BenchError) -> String {
        match err {
            BenchError::Config { key, .. } => key,
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn table_two_row_one() {
        let spec = PartialSpec::parse(
            "problem = nqueens, n = 20, population = 300, crossover_prob = 0.9, mutation_prob = 0.1, generations = 500, runs = 10",
        )
        .unwrap()
        .build(false)
        .unwrap();
        assert_eq!(spec.problem, ProblemKind::NQueens);
        assert_eq!(
            (spec.n, spec.population, spec.generations, spec.runs),
            (20, 300, 500, 10)
        );
        assert_eq!((spec.crossover_prob, spec.mutation_prob), (0.9, 0.1));
        assert!(spec.heterogeneous);
    }

    #[test]
    fn line_format_and_comments() {
        let spec = PartialSpec::parse(
            "# battery\nproblem = tsp\nn = 12\n\nheterogeneous = false\nseed = 7\n",
        )
        .unwrap()
        .build(false)
        .unwrap();
        assert_eq!(spec.problem, ProblemKind::Tsp);
        assert!(!spec.heterogeneous);
        assert_eq!(spec.seed, 7);
        assert_eq!(spec.ga_config(3).seed, 10);
    }

    #[test]
    fn range_errors_name_the_key() {
        let err = PartialSpec::parse("problem = nqueens, n = 8, crossover_prob = 1.5")
            .unwrap()
            .build(false)
            .unwrap_err();
        assert!(err.to_string().contains("crossover_prob"), "{err}");
        assert_eq!(key_of(err), "crossover_prob");

        let bad = |text: &str| {
            key_of(
                PartialSpec::parse(text)
                    .and_then(|p| p.build(false))
                    .unwrap_err(),
            )
        };
        assert_eq!(bad("problem = nqueens, n = 8, colour = red"), "colour");
        assert_eq!(bad("n = 8"), "problem");
        assert_eq!(bad("problem = nqueens"), "n");
        assert_eq!(bad("problem = tsp"), "points_file");
        assert_eq!(bad("problem = nqueens, n = 8, elitism = 300"), "elitism");
        assert_eq!(bad("problem = nqueens, n = 8, runs = 0"), "runs");
        assert_eq!(
            bad("problem = nqueens, n = 8, mutation_prob = -0.1"),
            "mutation_prob"
        );
        assert_eq!(bad("problem = nqueens, n = eight"), "n");
        assert_eq!(bad("problem = chess, n = 8"), "problem");
        assert_eq!(
            bad("problem = nqueens, n = 8, heterogeneous = maybe"),
            "heterogeneous"
        );
        assert_eq!(bad("problem = tsp, n = 1"), "n");
        assert_eq!(bad("problem = nqueens, n = 500"), "n");
    }

    #[test]
    fn large_n_behind_flag() {
        let spec = PartialSpec::parse(
            "problem = nqueens, n = 500, population = 500, generations = 3000, runs = 50",
        )
        .unwrap()
        .build(true)
        .unwrap();
        assert_eq!((spec.n, spec.population, spec.runs), (500, 500, 50));
    }

    #[test]
    fn flags_override_file() {
        let file = PartialSpec::parse("problem = nqueens, n = 8, runs = 3").unwrap();
        let flags = PartialSpec {
            n: Some(10),
            ..PartialSpec::default()
        };
        let spec = file.merge(flags).build(false).unwrap();
        assert_eq!((spec.n, spec.runs), (10, 3));
    }

    #[test]
    fn empty_file_plus_flags() {
        let flags = PartialSpec {
            problem: Some(ProblemKind::NQueens),
            n: Some(6),
            ..PartialSpec::default()
        };
        let spec = PartialSpec::parse("")
            .unwrap()
            .merge(flags)
            .build(false)
            .unwrap();
        assert_eq!(spec.n, 6);
    }

    #[test]
    fn points_file_sets_n() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pts.txt");
        std::fs::write(&path, "0 0\n0 1\n1 1\n").unwrap();
        let text = format!("problem = tsp\npoints_file = {}", path.display());
        let spec = PartialSpec::parse(&text).unwrap().build(false).unwrap();
        assert_eq!(spec.n, 3);
        let mismatch = format!("{text}\nn = 4");
        let err = PartialSpec::parse(&mismatch)
            .unwrap()
            .build(false)
            .unwrap_err();
        assert_eq!(key_of(err), "n");
    }
}
