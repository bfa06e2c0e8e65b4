//! Generational GA over permutation genomes with fitness-gated crossover.
//!
//! Each generation:
//!
//! 1. every individual already carries its fitness (lower is better);
//! 2. the worst fitness `tau` of the population is taken as the normalizer;
//! 3. the population is shuffled into pairs `(a, b)` and each parent
//!    independently passes a crossover gate. A parent that passes is replaced
//!    by `OX(a, b)` (resp. `OX(b, a)`), otherwise by a copy of itself.
//!
//! Under [`GatingPolicy::Heterogeneous`] the gate passes with probability
//! `fitness / tau`, so the fittest individuals rarely recombine and the worst
//! always does. [`GatingPolicy::Homogeneous`] is the classical fixed rate.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genome::{order_crossover, swap_mutation, Genome};
use crate::metrics::Counters;
use crate::rng::{Purpose, Streams};

/// A minimization problem over permutations of `0..genome_len()`.
pub trait Problem: Sync {
    fn genome_len(&self) -> usize;

    /// Non-negative objective; lower is better.
    fn objective(&self, genome: &Genome) -> f64;

    fn random_genome(&self, rng: &mut ChaCha8Rng) -> Result<Genome> {
        Genome::random(self.genome_len(), rng)
    }
}

impl<P: Problem + ?Sized> Problem for &P {
    fn genome_len(&self) -> usize {
        (**self).genome_len()
    }

    fn objective(&self, genome: &Genome) -> f64 {
        (**self).objective(genome)
    }

    fn random_genome(&self, rng: &mut ChaCha8Rng) -> Result<Genome> {
        (**self).random_genome(rng)
    }
}

/// Genome with its cached objective value. Only constructible by evaluating,
/// so the cache always matches the genome.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    genome: Genome,
    fitness: f64,
}

impl Individual {
    pub fn evaluate<P: Problem + ?Sized>(genome: Genome, problem: &P) -> Result<Self> {
        if genome.len() != problem.genome_len() {
            return Err(Error::LengthMismatch {
                expected: problem.genome_len(),
                actual: genome.len(),
            });
        }
        let fitness = problem.objective(&genome);
        if !(fitness.is_finite() && fitness >= 0.0) {
            return Err(Error::InvalidFitness(fitness));
        }
        Ok(Self { genome, fitness })
    }

    pub fn genome(&self) -> &Genome {
        &self.genome
    }

    pub fn fitness(&self) -> f64 {
        self.fitness
    }

    pub fn into_genome(self) -> Genome {
        self.genome
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    individuals: Vec<Individual>,
}

impl Population {
    /// At least two individuals, all of the same genome length.
    pub fn new(individuals: Vec<Individual>) -> Result<Self> {
        if individuals.len() < 2 {
            return Err(Error::Config(format!(
                "population needs at least 2 individuals, got {}",
                individuals.len()
            )));
        }
        let n = individuals[0].genome.len();
        if let Some(bad) = individuals.iter().find(|i| i.genome.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: bad.genome.len(),
            });
        }
        Ok(Self { individuals })
    }

    pub fn evaluate<P: Problem + ?Sized>(genomes: Vec<Genome>, problem: &P) -> Result<Self> {
        let individuals = genomes
            .into_iter()
            .map(|g| Individual::evaluate(g, problem))
            .collect::<Result<Vec<_>>>()?;
        Self::new(individuals)
    }

    pub fn len(&self) -> usize {
        self.individuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.individuals.is_empty()
    }

    pub fn individuals(&self) -> &[Individual] {
        &self.individuals
    }

    pub fn genome_len(&self) -> usize {
        self.individuals[0].genome.len()
    }

    /// `tau`: the largest (worst) fitness in the population.
    pub fn worst_fitness(&self) -> f64 {
        worst_fitness(&self.individuals)
    }

    /// Best individual; ties go to the lowest index.
    pub fn best(&self) -> &Individual {
        &self.individuals[self.ranked()[0]]
    }

    /// Indices sorted by ascending fitness, ties by index.
    fn ranked(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.individuals.len()).collect();
        idx.sort_by(|&a, &b| {
            self.individuals[a]
                .fitness
                .total_cmp(&self.individuals[b].fitness)
                .then(a.cmp(&b))
        });
        idx
    }
}

/// Maximum fitness over a non-empty slice.
pub fn worst_fitness(individuals: &[Individual]) -> f64 {
    individuals
        .iter()
        .map(Individual::fitness)
        .fold(f64::NEG_INFINITY, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GatingPolicy {
    /// Every gate passes with the same fixed probability.
    Homogeneous { crossover_prob: f64 },
    /// A gate passes unless `1 - fitness / tau <= u` fails, i.e. with
    /// probability `fitness / tau`.
    Heterogeneous,
}

impl GatingPolicy {
    pub fn homogeneous(crossover_prob: f64) -> Result<Self> {
        check_probability("crossover_prob", crossover_prob)?;
        Ok(Self::Homogeneous { crossover_prob })
    }

    pub fn for_config(heterogeneous: bool, cfg: &GaConfig) -> Result<Self> {
        if heterogeneous {
            Ok(Self::Heterogeneous)
        } else {
            Self::homogeneous(cfg.crossover_prob)
        }
    }

    pub fn is_heterogeneous(&self) -> bool {
        matches!(self, Self::Heterogeneous)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Homogeneous { .. } => "homogeneous",
            Self::Heterogeneous => "heterogeneous",
        }
    }

    pub fn gate(&self, fitness: f64, tau: f64, u: f64) -> Result<bool> {
        gate_crossover(fitness, tau, *self, u)
    }
}

/// Decide whether an individual with `fitness` recombines, given the
/// population's worst fitness `tau` and a uniform draw `u` in `[0, 1)`.
///
/// Heterogeneous gating passes iff `1 - fitness / tau <= u`. With `tau == 0`
/// every individual is optimal and the gate stays closed.
pub fn gate_crossover(fitness: f64, tau: f64, policy: GatingPolicy, u: f64) -> Result<bool> {
    if fitness > tau {
        return Err(Error::StaleFitness { fitness, tau });
    }
    Ok(match policy {
        GatingPolicy::Homogeneous { crossover_prob } => u < crossover_prob,
        GatingPolicy::Heterogeneous => tau > 0.0 && 1.0 - fitness / tau <= u,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub population_size: usize,
    pub generations: usize,
    /// Only read by the homogeneous policy.
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub seed: u64,
    /// Number of best individuals copied unchanged into the next generation.
    pub elitism: usize,
    /// Evaluate pairs on the rayon pool. Results are identical either way.
    pub parallel: bool,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            population_size: 300,
            generations: 500,
            crossover_prob: 0.9,
            mutation_prob: 0.1,
            seed: 0,
            elitism: 1,
            parallel: true,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::Config(format!(
                "population_size must be at least 2, got {}",
                self.population_size
            )));
        }
        if self.elitism >= self.population_size {
            return Err(Error::Config(format!(
                "elitism ({}) must be smaller than population_size ({})",
                self.elitism, self.population_size
            )));
        }
        check_probability("crossover_prob", self.crossover_prob)?;
        check_probability("mutation_prob", self.mutation_prob)?;
        Ok(())
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must be in [0, 1], got {p}")))
    }
}

/// Outcome of one [`evolve`] call.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub solved: bool,
    /// Best fitness of the initial population followed by one entry per
    /// generation stepped.
    pub best_fitness_per_generation: Vec<f64>,
    pub final_best: Individual,
    pub counters: Counters,
    pub seed: u64,
    pub generations_used: usize,
    pub policy: GatingPolicy,
}

impl RunReport {
    pub fn best_fitness(&self) -> f64 {
        self.final_best.fitness
    }

    /// Copy with wall time zeroed, for determinism comparisons.
    pub fn without_wall_time(&self) -> Self {
        let mut r = self.clone();
        r.counters = r.counters.without_wall_time();
        r
    }
}

/// Draws the initial population from the `Init` streams of `seed`. Depends
/// only on the seed and the problem, so both policies start identically.
pub fn initial_population<P: Problem + ?Sized>(
    problem: &P,
    cfg: &GaConfig,
    counters: &mut Counters,
) -> Result<Population> {
    if problem.genome_len() == 0 {
        return Err(Error::EmptyGenome);
    }
    let streams = Streams::new(cfg.seed);
    let make = |slot: usize| {
        let mut rng = streams.stream(Purpose::Init, 0, slot as u64);
        Individual::evaluate(problem.random_genome(&mut rng)?, problem)
    };
    let individuals = if cfg.parallel {
        (0..cfg.population_size)
            .into_par_iter()
            .map(make)
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..cfg.population_size)
            .map(make)
            .collect::<Result<Vec<_>>>()?
    };
    counters.objective_evals += individuals.len() as u64;
    Population::new(individuals)
}

struct PairOutcome {
    child_a: Individual,
    child_b: Option<Individual>,
    counters: Counters,
}

/// Produce the next population.
///
/// The `cfg.elitism` best individuals are carried over unchanged; the other
/// slots are filled pairwise from a shuffled ordering of the whole population.
/// All randomness for generation `generation` is drawn from streams keyed by
/// `(cfg.seed, generation, slot)`.
pub fn step_generation<P: Problem + ?Sized>(
    pop: &Population,
    policy: GatingPolicy,
    cfg: &GaConfig,
    problem: &P,
    generation: u64,
    counters: &mut Counters,
) -> Result<Population> {
    cfg.validate()?;
    let size = pop.len();
    if cfg.elitism >= size {
        return Err(Error::Config(format!(
            "elitism ({}) must be smaller than the population ({size})",
            cfg.elitism
        )));
    }
    let streams = Streams::new(cfg.seed);
    let tau = pop.worst_fitness();
    let slots = size - cfg.elitism;

    let mut order: Vec<usize> = (0..size).collect();
    order.shuffle(&mut streams.stream(Purpose::Pairing, generation, 0));

    let individuals = pop.individuals();
    let produce = |pair: usize| -> Result<PairOutcome> {
        let mut rng = streams.stream(Purpose::Variation, generation, pair as u64);
        let a = &individuals[order[(2 * pair) % size]];
        let b = &individuals[order[(2 * pair + 1) % size]];
        let u_a: f64 = rng.gen();
        let u_b: f64 = rng.gen();
        let mut local = Counters::new();

        let child_a = offspring(a, b, u_a, tau, policy, cfg, problem, &mut rng, &mut local)?;
        let child_b = if 2 * pair + 1 < slots {
            Some(offspring(
                b, a, u_b, tau, policy, cfg, problem, &mut rng, &mut local,
            )?)
        } else {
            None
        };
        Ok(PairOutcome {
            child_a,
            child_b,
            counters: local,
        })
    };

    let pairs = slots.div_ceil(2);
    let outcomes = if cfg.parallel {
        (0..pairs)
            .into_par_iter()
            .map(produce)
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..pairs).map(produce).collect::<Result<Vec<_>>>()?
    };

    let mut next = Vec::with_capacity(size);
    next.extend(
        pop.ranked()
            .into_iter()
            .take(cfg.elitism)
            .map(|i| individuals[i].clone()),
    );
    for o in outcomes {
        *counters += o.counters;
        next.push(o.child_a);
        next.extend(o.child_b);
    }
    debug_assert_eq!(next.len(), size);
    *counters = counters.record_generation();
    Population::new(next)
}

/// One child: gate, optional crossover, mutation, evaluation.
#[allow(clippy::too_many_arguments)]
fn offspring<P: Problem + ?Sized>(
    parent: &Individual,
    mate: &Individual,
    u: f64,
    tau: f64,
    policy: GatingPolicy,
    cfg: &GaConfig,
    problem: &P,
    rng: &mut ChaCha8Rng,
    counters: &mut Counters,
) -> Result<Individual> {
    let genome = if policy.gate(parent.fitness, tau, u)? {
        *counters = counters.record_crossover();
        order_crossover(&parent.genome, &mate.genome, rng)?
    } else {
        parent.genome.clone()
    };
    let genome = swap_mutation(genome, cfg.mutation_prob, rng);
    *counters = counters.record_eval();
    Individual::evaluate(genome, problem)
}

/// Run the GA for `cfg.generations` generations, stopping early once the best
/// fitness reaches `target`.
pub fn evolve<P: Problem + ?Sized>(
    cfg: &GaConfig,
    policy: GatingPolicy,
    problem: &P,
    target: Option<f64>,
) -> Result<RunReport> {
    evolve_observed(cfg, policy, problem, target, |_, _| {})
}

/// [`evolve`] with a callback invoked on the initial population (generation 0)
/// and after every step.
pub fn evolve_observed<P, F>(
    cfg: &GaConfig,
    policy: GatingPolicy,
    problem: &P,
    target: Option<f64>,
    mut observe: F,
) -> Result<RunReport>
where
    P: Problem + ?Sized,
    F: FnMut(usize, &Population),
{
    cfg.validate()?;
    if let GatingPolicy::Homogeneous { crossover_prob } = policy {
        check_probability("crossover_prob", crossover_prob)?;
    }
    let start = Instant::now();
    let reached = |f: f64| target.is_some_and(|t| f <= t);

    let mut counters = Counters::new();
    let mut pop = initial_population(problem, cfg, &mut counters)?;
    observe(0, &pop);
    let mut trajectory = vec![pop.best().fitness];
    let mut generations_used = 0;

    while generations_used < cfg.generations && !reached(pop.best().fitness) {
        pop = step_generation(
            &pop,
            policy,
            cfg,
            problem,
            generations_used as u64,
            &mut counters,
        )?;
        generations_used += 1;
        observe(generations_used, &pop);
        trajectory.push(pop.best().fitness);
    }

    let final_best = pop.best().clone();
    Ok(RunReport {
        solved: reached(final_best.fitness),
        best_fitness_per_generation: trajectory,
        final_best,
        counters: counters.snapshot(start.elapsed()),
        seed: cfg.seed,
        generations_used,
        policy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::is_permutation;
    use rand::SeedableRng;

    /// Fitness is the genome's first gene; lets tests dial in fitness values.
    struct FirstGene(usize);

    impl Problem for FirstGene {
        fn genome_len(&self) -> usize {
            self.0
        }
        fn objective(&self, g: &Genome) -> f64 {
            g.as_slice()[0] as f64
        }
    }

    /// Constant objective.
    struct Flat(usize, f64);

    impl Problem for Flat {
        fn genome_len(&self) -> usize {
            self.0
        }
        fn objective(&self, _: &Genome) -> f64 {
            self.1
        }
    }

    fn cfg(pop: usize, gens: usize) -> GaConfig {
        GaConfig {
            population_size: pop,
            generations: gens,
            ..GaConfig::default()
        }
    }

    fn random_pop<P: Problem>(problem: &P, size: usize, seed: u64) -> Population {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let genomes = (0..size)
            .map(|_| Genome::random(problem.genome_len(), &mut rng).unwrap())
            .collect();
        Population::evaluate(genomes, problem).unwrap()
    }

    #[test]
    fn worst_fitness_examples() {
        let p = FirstGene(8);
        let pop = |firsts: &[usize]| {
            let genomes = firsts
                .iter()
                .map(|&f| {
                    let mut v: Vec<usize> = (0..8).collect();
                    v.swap(0, f);
                    Genome::new(v).unwrap()
                })
                .collect::<Vec<_>>();
            genomes
                .into_iter()
                .map(|g| Individual::evaluate(g, &p).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(worst_fitness(&pop(&[0, 3, 7])), 7.0);
        assert_eq!(worst_fitness(&pop(&[5])), 5.0);
        assert_eq!(worst_fitness(&pop(&[0, 0, 0])), 0.0);
    }

    #[test]
    fn gate_extremes() {
        let het = GatingPolicy::Heterogeneous;
        assert!(gate_crossover(10.0, 10.0, het, 0.0).unwrap());
        for u in [0.0, 0.3, 0.999_999] {
            assert!(!gate_crossover(0.0, 10.0, het, u).unwrap());
            assert!(!gate_crossover(0.0, 0.0, het, u).unwrap());
        }
    }

    #[test]
    fn gate_boundary_is_inclusive() {
        // 1 - 2.5/10 = 0.75 <= u
        let het = GatingPolicy::Heterogeneous;
        assert!(gate_crossover(2.5, 10.0, het, 0.75).unwrap());
        assert!(!gate_crossover(2.5, 10.0, het, 0.749_999).unwrap());
    }

    #[test]
    fn homogeneous_gate() {
        let hom = GatingPolicy::homogeneous(0.9).unwrap();
        assert!(hom.gate(3.0, 5.0, 0.899).unwrap());
        assert!(!hom.gate(3.0, 5.0, 0.9).unwrap());
        assert!(!GatingPolicy::homogeneous(0.0)
            .unwrap()
            .gate(0.0, 1.0, 0.0)
            .unwrap());
        assert!(GatingPolicy::homogeneous(1.5).is_err());
        assert!(GatingPolicy::homogeneous(-0.1).is_err());
    }

    #[test]
    fn gate_rejects_stale_fitness() {
        let err = gate_crossover(11.0, 10.0, GatingPolicy::Heterogeneous, 0.5).unwrap_err();
        assert!(matches!(err, Error::StaleFitness { .. }));
    }

    #[test]
    fn config_validation() {
        assert!(GaConfig::default().validate().is_ok());
        assert!(GaConfig {
            elitism: 300,
            ..GaConfig::default()
        }
        .validate()
        .is_err());
        assert!(GaConfig {
            population_size: 1,
            elitism: 0,
            ..GaConfig::default()
        }
        .validate()
        .is_err());
        assert!(GaConfig {
            mutation_prob: 1.1,
            ..GaConfig::default()
        }
        .validate()
        .is_err());
        assert!(GaConfig {
            crossover_prob: f64::NAN,
            ..GaConfig::default()
        }
        .validate()
        .is_err());
    }

    #[test]
    fn population_rejects_mixed_lengths() {
        let a = Individual::evaluate(Genome::identity(3).unwrap(), &Flat(3, 1.0)).unwrap();
        let b = Individual::evaluate(Genome::identity(4).unwrap(), &Flat(4, 1.0)).unwrap();
        assert!(Population::new(vec![a.clone(), b]).is_err());
        assert!(Population::new(vec![a]).is_err());
    }

    #[test]
    fn objective_must_be_non_negative() {
        let err = Individual::evaluate(Genome::identity(3).unwrap(), &Flat(3, -1.0)).unwrap_err();
        assert!(matches!(err, Error::InvalidFitness(_)));
    }

    #[test]
    fn optimal_population_never_crosses() {
        let problem = Flat(10, 0.0);
        let pop = random_pop(&problem, 40, 1);
        let mut c = Counters::new();
        let cfg = cfg(40, 1);
        let next =
            step_generation(&pop, GatingPolicy::Heterogeneous, &cfg, &problem, 0, &mut c).unwrap();
        assert_eq!(c.crossover_ops, 0);
        assert_eq!(c.objective_evals, 39);
        assert_eq!(next.len(), 40);
    }

    #[test]
    fn all_operators_disabled_reorders_population() {
        let problem = FirstGene(12);
        for size in [10, 11] {
            let pop = random_pop(&problem, size, 2);
            let cfg = GaConfig {
                crossover_prob: 0.0,
                mutation_prob: 0.0,
                elitism: 0,
                ..cfg(size, 1)
            };
            let mut c = Counters::new();
            let policy = GatingPolicy::for_config(false, &cfg).unwrap();
            let next = step_generation(&pop, policy, &cfg, &problem, 0, &mut c).unwrap();
            let mut before: Vec<_> = pop
                .individuals()
                .iter()
                .map(|i| i.genome().clone().into_inner())
                .collect();
            let mut after: Vec<_> = next
                .individuals()
                .iter()
                .map(|i| i.genome().clone().into_inner())
                .collect();
            before.sort();
            after.sort();
            assert_eq!(before, after);
            assert_eq!(c.crossover_ops, 0);
        }
    }

    #[test]
    fn homogeneous_crossover_count_matches_binomial_mean() {
        let problem = FirstGene(20);
        let cfg = GaConfig {
            elitism: 0,
            ..cfg(300, 100)
        };
        let policy = GatingPolicy::for_config(false, &cfg).unwrap();
        let mut pop = random_pop(&problem, 300, 3);
        let mut c = Counters::new();
        for g in 0..100 {
            pop = step_generation(&pop, policy, &cfg, &problem, g, &mut c).unwrap();
        }
        let per_gen = c.crossover_ops as f64 / 100.0;
        assert!((per_gen - 270.0).abs() <= 15.0, "{per_gen}");
        assert_eq!(c.objective_evals, 300 * 100);
        assert_eq!(c.generations, 100);
    }

    #[test]
    fn two_level_population_crosses_half() {
        // half the population at fitness tau, half at 0
        struct TwoLevel;
        impl Problem for TwoLevel {
            fn genome_len(&self) -> usize {
                4
            }
            fn objective(&self, g: &Genome) -> f64 {
                if g.as_slice()[0].is_multiple_of(2) {
                    0.0
                } else {
                    10.0
                }
            }
        }
        let genomes: Vec<Genome> = (0..200)
            .map(|i| {
                let mut v = vec![0, 1, 2, 3];
                v.swap(0, i % 2);
                Genome::new(v).unwrap()
            })
            .collect();
        let pop = Population::evaluate(genomes, &TwoLevel).unwrap();
        let cfg = GaConfig {
            elitism: 0,
            ..cfg(200, 1)
        };
        let mut c = Counters::new();
        for g in 0..50 {
            step_generation(
                &pop,
                GatingPolicy::Heterogeneous,
                &cfg,
                &TwoLevel,
                g,
                &mut c,
            )
            .unwrap();
        }
        assert_eq!(c.crossover_ops, 50 * 100);
    }

    #[test]
    fn generations_zero() {
        let problem = FirstGene(6);
        let r = evolve(
            &cfg(30, 0),
            GatingPolicy::Heterogeneous,
            &problem,
            Some(0.0),
        )
        .unwrap();
        assert_eq!(r.best_fitness_per_generation.len(), 1);
        assert_eq!(r.counters.objective_evals, 30);
        assert_eq!(r.counters.crossover_ops, 0);
        assert_eq!(r.generations_used, 0);
    }

    #[test]
    fn stops_at_target() {
        let problem = FirstGene(6);
        let r = evolve(
            &cfg(30, 50),
            GatingPolicy::Heterogeneous,
            &problem,
            Some(0.0),
        )
        .unwrap();
        assert!(r.solved);
        assert_eq!(r.best_fitness(), 0.0);
        assert_eq!(r.generations_used + 1, r.best_fitness_per_generation.len());
    }

    #[test]
    fn closure_and_monotone_best() {
        let problem = FirstGene(15);
        let mut last = f64::INFINITY;
        evolve_observed(
            &cfg(50, 40),
            GatingPolicy::homogeneous(0.9).unwrap(),
            &problem,
            None,
            |_, pop| {
                assert!(pop
                    .individuals()
                    .iter()
                    .all(|i| is_permutation(i.genome().as_slice())));
                assert!(pop.best().fitness() <= last);
                last = pop.best().fitness();
            },
        )
        .unwrap();
    }

    #[test]
    fn parallel_matches_sequential() {
        let problem = FirstGene(25);
        for policy in [
            GatingPolicy::Heterogeneous,
            GatingPolicy::homogeneous(0.7).unwrap(),
        ] {
            let par = evolve(
                &GaConfig {
                    parallel: true,
                    seed: 9,
                    ..cfg(64, 30)
                },
                policy,
                &problem,
                None,
            )
            .unwrap();
            let seq = evolve(
                &GaConfig {
                    parallel: false,
                    seed: 9,
                    ..cfg(64, 30)
                },
                policy,
                &problem,
                None,
            )
            .unwrap();
            assert_eq!(par.without_wall_time(), seq.without_wall_time());
        }
    }

    #[test]
    fn same_initial_population_for_both_policies() {
        let problem = FirstGene(10);
        let c = cfg(20, 0);
        let a = initial_population(&problem, &c, &mut Counters::new()).unwrap();
        let b = initial_population(&problem, &c, &mut Counters::new()).unwrap();
        assert_eq!(a, b);
    }
}
