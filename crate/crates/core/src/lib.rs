//! Genetic algorithm over permutation genomes where each individual's
//! crossover probability scales with its fitness relative to the worst in the
//! population ("heterogeneous" gating), alongside the classical fixed-rate
//! ("homogeneous") baseline.
//!
//! Two problems are provided: [`nqueens::NQueens`] and [`tsp::Tsp`], each
//! with an exhaustive oracle for small instances.

pub mod engine;
pub mod error;
pub mod genome;
pub mod metrics;
pub mod nqueens;
pub mod rng;
mod svg;
pub mod tsp;

pub use engine::{
    evolve, evolve_observed, gate_crossover, initial_population, step_generation, worst_fitness,
    GaConfig, GatingPolicy, Individual, Population, Problem, RunReport,
};
pub use error::{Error, Result};
pub use genome::Genome;
pub use metrics::Counters;
