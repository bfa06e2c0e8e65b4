use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use hetga::nqueens::{self, NQueens};
use hetga::tsp::{self, BoundingBox, Tsp};
use hetga_cli::output::{self, parse_genome};
use hetga_cli::{compare, emit_csv, run_battery_with, Battery, Instance, PartialSpec, ProblemKind};

#[derive(Parser)]
#[command(
    name = "hetga",
    version,
    about = "Heterogeneous vs homogeneous crossover gating benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one battery under the configured policy.
    Run {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the same battery under both policies with paired seeds.
    Compare {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exhaustive reference results for small instances.
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
    /// Render a saved genome.
    Render {
        #[arg(value_parser = ["nqueens", "tsp"])]
        problem: String,
        /// Genes separated by spaces or commas.
        #[arg(long, conflicts_with = "genome_file")]
        genome: Option<String>,
        #[arg(long)]
        genome_file: Option<PathBuf>,
        /// Point file, required for tsp.
        #[arg(long)]
        points: Option<PathBuf>,
        /// SVG output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleTarget {
    /// Solution counts for boards 1..=max-n.
    Nqueens {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Optimal tour by enumeration.
    Tsp {
        #[arg(long, conflicts_with = "n")]
        points: Option<PathBuf>,
        /// Random unit-square instance size.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

/// Flag forms of the config keys; any flag given overrides the file.
#[derive(Args)]
struct SpecArgs {
    /// `key = value` config file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    problem: Option<ProblemKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    points_file: Option<PathBuf>,
    #[arg(long)]
    population: Option<usize>,
    #[arg(long)]
    generations: Option<usize>,
    #[arg(long)]
    crossover_prob: Option<f64>,
    #[arg(long)]
    mutation_prob: Option<f64>,
    #[arg(long)]
    elitism: Option<usize>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    heterogeneous: Option<bool>,
    #[arg(long)]
    seed: Option<u64>,
    /// Allow n above the desk-scale cap of 100.
    #[arg(long)]
    large: bool,
}

#[derive(Args)]
struct OutputArgs {
    /// Write one CSV row per (policy, run).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write the best individual found as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the best genome as text (input for `render`).
    #[arg(long)]
    genome_out: Option<PathBuf>,
}

impl SpecArgs {
    fn resolve(&self) -> Result<hetga_cli::ExperimentSpec> {
        let file = match &self.config {
            Some(path) => {
                PartialSpec::load(path).with_context(|| format!("reading {}", path.display()))?
            }
            None => PartialSpec::default(),
        };
        let flags = PartialSpec {
            problem: self.problem,
            n: self.n,
            points_file: self.points_file.clone(),
            population: self.population,
            generations: self.generations,
            crossover_prob: self.crossover_prob,
            mutation_prob: self.mutation_prob,
            elitism: self.elitism,
            runs: self.runs,
            heterogeneous: self.heterogeneous,
            seed: self.seed,
        };
        Ok(file.merge(flags).build(self.large)?)
    }
}

fn write_outputs(out: &OutputArgs, instance: &Instance, batteries: &[&Battery]) -> Result<()> {
    if let Some(path) = &out.csv {
        let rows: Vec<_> = batteries
            .iter()
            .flat_map(|b| b.rows.iter().cloned())
            .collect();
        emit_csv(&rows, path).with_context(|| format!("writing {}", path.display()))?;
    }
    let Some((row, genome)) = batteries[0].overall_best() else {
        return Ok(());
    };
    if let Some(path) = &out.svg {
        output::emit_svg(instance, genome, path)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &out.genome_out {
        fs::write(path, format!("{genome}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    println!(
        "best ({}, run {}): fitness {:.6}",
        row.policy, row.run_id, row.best_fitness
    );
    Ok(())
}

fn run(spec: SpecArgs, out: OutputArgs) -> Result<()> {
    let spec = spec.resolve()?;
    let instance = spec.instance()?;
    let battery = run_battery_with(&spec, &instance)?;
    for r in &battery.rows {
        println!(
            "run {:>3} seed {:>6} solved {:<5} best {:>12.6} crossovers {:>10} evals {:>10} gens {:>6} {:>10.1} ms",
            r.run_id, r.seed, r.solved, r.best_fitness, r.crossover_ops, r.objective_evals, r.generations_used, r.wall_ms
        );
    }
    write_outputs(&out, &instance, &[&battery])
}

fn compare_cmd(spec: SpecArgs, out: OutputArgs) -> Result<()> {
    let spec = spec.resolve()?;
    let instance = spec.instance()?;
    let het = run_battery_with(&spec.with_policy(true), &instance)?;
    let hom = run_battery_with(&spec.with_policy(false), &instance)?;
    println!("{}", compare(&het, &hom)?);
    write_outputs(&out, &instance, &[&het, &hom])
}

fn oracle(target: OracleTarget) -> Result<()> {
    match target {
        OracleTarget::Nqueens { max_n } => {
            println!(
                "{:>3} {:>10} {:>12} {:>14}",
                "n", "solutions", "combinations", "ratio"
            );
            let mut factorial = 1u64;
            for n in 1..=max_n {
                factorial *= n as u64;
                let count = nqueens::enumerate_solutions(n)?;
                println!(
                    "{n:>3} {count:>10} {factorial:>12} {:>14.4e}",
                    count as f64 / factorial as f64
                );
            }
        }
        OracleTarget::Tsp {
            points,
            n,
            seed,
            svg,
        } => {
            let ps = match (points, n) {
                (Some(path), _) => tsp::load_points(&path)?,
                (None, Some(n)) => tsp::random_instance(n, seed, BoundingBox::UNIT)?,
                (None, None) => bail!("give --points or --n"),
            };
            let (tour, length) = tsp::brute_force_optimal(&ps)?;
            println!("optimal length {length:.6}\ntour {tour}");
            if let Some(path) = svg {
                fs::write(path, tsp::render_tour_svg(&tour, &ps)?)?;
            }
        }
    }
    Ok(())
}

fn render(
    problem: &str,
    genome: Option<String>,
    genome_file: Option<PathBuf>,
    points: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<()> {
    let text = match (genome, genome_file) {
        (Some(g), _) => g,
        (None, Some(path)) => {
            fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?
        }
        (None, None) => bail!("give --genome or --genome-file"),
    };
    let genome = parse_genome(&text)?;
    let instance = if problem == "nqueens" {
        print!("{}", nqueens::render_board(&genome));
        println!("conflicts: {}", nqueens::conflicts(genome.as_slice()));
        Instance::NQueens(NQueens::new(genome.len())?)
    } else {
        let path = points.context("tsp rendering needs --points")?;
        let tsp = Tsp::new(tsp::load_points(path)?);
        println!(
            "tour length: {:.6}",
            tsp::tour_length(&genome, tsp.points())?
        );
        Instance::Tsp(tsp)
    };
    if let Some(path) = out {
        output::emit_svg(&instance, &genome, &path)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run { spec, out } => run(spec, out),
        Command::Compare { spec, out } => compare_cmd(spec, out),
        Command::Oracle { target } => oracle(target),
        Command::Render {
            problem,
            genome,
            genome_file,
            points,
            out,
        } => render(&problem, genome, genome_file, points, out),
    }
}
