//! Side-by-side summary of two batteries that differ only in gating policy.

use std::fmt;

use crate::battery::{Battery, BenchRow};
use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PolicyStats {
    pub policy: String,
    pub runs: usize,
    pub solved: usize,
    pub solved_rate: f64,
    pub mean_best_fitness: f64,
    pub mean_crossover_ops: f64,
    pub mean_objective_evals: f64,
    pub mean_wall_ms: f64,
}

impl PolicyStats {
    pub fn from_rows(rows: &[BenchRow]) -> Self {
        let runs = rows.len();
        let mean = |f: &dyn Fn(&BenchRow) -> f64| rows.iter().map(f).sum::<f64>() / runs as f64;
        let solved = rows.iter().filter(|r| r.solved).count();
        Self {
            policy: rows.first().map(|r| r.policy.clone()).unwrap_or_default(),
            runs,
            solved,
            solved_rate: solved as f64 / runs as f64,
            mean_best_fitness: mean(&|r| r.best_fitness),
            mean_crossover_ops: mean(&|r| r.crossover_ops as f64),
            mean_objective_evals: mean(&|r| r.objective_evals as f64),
            mean_wall_ms: mean(&|r| r.wall_ms),
        }
    }
}

/// `first / second` for each mean. `0 / 0` is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Ratios {
    pub solved_rate: f64,
    pub best_fitness: f64,
    pub crossover_ops: f64,
    pub objective_evals: f64,
    pub wall_ms: f64,
}

fn ratio(a: f64, b: f64) -> f64 {
    if a == b {
        1.0
    } else {
        a / b
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub first: PolicyStats,
    pub second: PolicyStats,
    pub ratios: Ratios,
    /// Runs (paired by run id) where `first` ended with a best fitness no
    /// worse than `second`.
    pub first_no_worse: usize,
}

/// Compare two batteries over the same spec. Only `heterogeneous` (and the
/// crossover rate, which the heterogeneous policy ignores) may differ.
pub fn compare(first: &Battery, second: &Battery) -> Result<Comparison> {
    let normalize = |b: &Battery| {
        let mut s = b.spec.with_policy(false);
        s.crossover_prob = 0.0;
        s
    };
    if normalize(first) != normalize(second) {
        return Err(BenchError::Mismatch(format!(
            "specs differ beyond the gating policy: {:?} vs {:?}",
            first.spec, second.spec
        )));
    }
    if first.rows.len() != second.rows.len() || first.rows.is_empty() {
        return Err(BenchError::Mismatch(format!(
            "row counts {} and {} must be equal and non-zero",
            first.rows.len(),
            second.rows.len()
        )));
    }
    let (a, b) = (
        PolicyStats::from_rows(&first.rows),
        PolicyStats::from_rows(&second.rows),
    );
    let ratios = Ratios {
        solved_rate: ratio(a.solved_rate, b.solved_rate),
        best_fitness: ratio(a.mean_best_fitness, b.mean_best_fitness),
        crossover_ops: ratio(a.mean_crossover_ops, b.mean_crossover_ops),
        objective_evals: ratio(a.mean_objective_evals, b.mean_objective_evals),
        wall_ms: ratio(a.mean_wall_ms, b.mean_wall_ms),
    };
    let first_no_worse = first
        .rows
        .iter()
        .zip(&second.rows)
        .filter(|(x, y)| x.best_fitness <= y.best_fitness)
        .count();
    Ok(Comparison {
        first: a,
        second: b,
        ratios,
        first_no_worse,
    })
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, r) = (&self.first, &self.second, &self.ratios);
        writeln!(
            f,
            "{:<16} {:>14} {:>14} {:>10}",
            "metric", a.policy, b.policy, "ratio"
        )?;
        let line = |f: &mut fmt::Formatter<'_>, name: &str, x: f64, y: f64, q: f64| {
            writeln!(f, "{name:<16} {x:>14.3} {y:>14.3} {q:>10.4}")
        };
        writeln!(
            f,
            "{:<16} {:>14} {:>14}",
            "solved",
            format!("{}/{}", a.solved, a.runs),
            format!("{}/{}", b.solved, b.runs)
        )?;
        line(
            f,
            "solved_rate",
            a.solved_rate,
            b.solved_rate,
            r.solved_rate,
        )?;
        line(
            f,
            "best_fitness",
            a.mean_best_fitness,
            b.mean_best_fitness,
            r.best_fitness,
        )?;
        line(
            f,
            "crossover_ops",
            a.mean_crossover_ops,
            b.mean_crossover_ops,
            r.crossover_ops,
        )?;
        line(
            f,
            "objective_evals",
            a.mean_objective_evals,
            b.mean_objective_evals,
            r.objective_evals,
        )?;
        line(f, "wall_ms", a.mean_wall_ms, b.mean_wall_ms, r.wall_ms)?;
        write!(
            f,
            "{} no worse than {} in {}/{} paired runs",
            a.policy, b.policy, self.first_no_worse, a.runs
        )
    }
}
