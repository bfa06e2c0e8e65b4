//! Seeded experiment batteries: `runs` independent GA runs of one spec.

use hetga::{evolve, Genome, RunReport};
use rayon::prelude::*;

use crate::config::{ExperimentSpec, Instance};
use crate::error::Result;

/// One line of the bench CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub run_id: usize,
    pub policy: String,
    pub solved: bool,
    pub best_fitness: f64,
    pub crossover_ops: u64,
    pub objective_evals: u64,
    pub generations_used: usize,
    pub wall_ms: f64,
    pub seed: u64,
}

impl BenchRow {
    pub fn from_report(run_id: usize, report: &RunReport) -> Self {
        Self {
            run_id,
            policy: report.policy.name().to_string(),
            solved: report.solved,
            best_fitness: report.best_fitness(),
            crossover_ops: report.counters.crossover_ops,
            objective_evals: report.counters.objective_evals,
            generations_used: report.generations_used,
            wall_ms: report.counters.wall_ms,
            seed: report.seed,
        }
    }
}

/// A spec together with the rows it produced and each run's best genome.
#[derive(Debug, Clone)]
pub struct Battery {
    pub spec: ExperimentSpec,
    pub rows: Vec<BenchRow>,
    pub best_genomes: Vec<Genome>,
}

impl Battery {
    /// Best genome over all runs (lowest fitness, earliest run on ties).
    pub fn overall_best(&self) -> Option<(&BenchRow, &Genome)> {
        self.rows
            .iter()
            .zip(&self.best_genomes)
            .min_by(|a, b| a.0.best_fitness.total_cmp(&b.0.best_fitness))
    }
}

/// Run every seed of the battery. Runs execute in parallel; results are
/// ordered by run id.
pub fn run_reports(spec: &ExperimentSpec, instance: &Instance) -> Result<Vec<RunReport>> {
    let policy = spec.policy()?;
    let problem = instance.as_problem();
    let target = spec.target();
    (0..spec.runs)
        .into_par_iter()
        .map(|run| Ok(evolve(&spec.ga_config(run), policy, problem, target)?))
        .collect()
}

pub fn run_battery_with(spec: &ExperimentSpec, instance: &Instance) -> Result<Battery> {
    let reports = run_reports(spec, instance)?;
    let rows = reports
        .iter()
        .enumerate()
        .map(|(run, r)| BenchRow::from_report(run, r))
        .collect();
    let best_genomes = reports
        .into_iter()
        .map(|r| r.final_best.into_genome())
        .collect();
    Ok(Battery {
        spec: spec.clone(),
        rows,
        best_genomes,
    })
}

pub fn run_battery(spec: &ExperimentSpec) -> Result<Battery> {
    run_battery_with(spec, &spec.instance()?)
}
