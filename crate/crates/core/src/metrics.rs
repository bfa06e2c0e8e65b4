//! Run instrumentation: operator counts and wall time.

use std::ops::{Add, AddAssign};
use std::time::Duration;

/// Plain accumulators. `crossover_ops` counts applications of the crossover
/// operator (one per passed gate), `objective_evals` counts objective calls.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Counters {
    pub crossover_ops: u64,
    pub objective_evals: u64,
    pub generations: u64,
    pub wall_ms: f64,
}

impl Counters {
    pub fn new() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn record_crossover(mut self) -> Self {
        self.crossover_ops += 1;
        self
    }

    #[must_use]
    pub fn record_eval(mut self) -> Self {
        self.objective_evals += 1;
        self
    }

    #[must_use]
    pub fn record_generation(mut self) -> Self {
        self.generations += 1;
        self
    }

    /// Sets wall time, leaving the counting fields alone.
    #[must_use]
    pub fn snapshot(mut self, elapsed: Duration) -> Self {
        self.wall_ms = elapsed.as_secs_f64() * 1e3;
        self
    }

    /// Fieldwise sum of the counting fields. Wall time takes the maximum since
    /// merged workers overlap in time.
    #[must_use]
    pub fn merge(self, other: Self) -> Self {
        Self {
            crossover_ops: self.crossover_ops + other.crossover_ops,
            objective_evals: self.objective_evals + other.objective_evals,
            generations: self.generations + other.generations,
            wall_ms: self.wall_ms.max(other.wall_ms),
        }
    }

    /// Same counts, wall time zeroed. For comparisons that must ignore timing.
    #[must_use]
    pub fn without_wall_time(mut self) -> Self {
        self.wall_ms = 0.0;
        self
    }
}

impl Add for Counters {
    type Output = Counters;

    fn add(self, rhs: Self) -> Self {
        self.merge(rhs)
    }
}

impl AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.merge(rhs);
    }
}

impl std::iter::Sum for Counters {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), Self::merge)
    }
}
