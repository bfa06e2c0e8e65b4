//! CSV and SVG writers.

use std::fs;
use std::path::Path;

use hetga::nqueens;
use hetga::tsp;
use hetga::Genome;

use crate::battery::BenchRow;
use crate::config::Instance;
use crate::error::{BenchError, Result};

pub const CSV_HEADER: [&str; 9] = [
    "run_id",
    "policy",
    "solved",
    "best_fitness",
    "crossover_ops",
    "objective_evals",
    "generations_used",
    "wall_ms",
    "seed",
];

/// Renders rows with fixed formatting: fitness to 6 decimals, wall time to 3.
pub fn format_csv(rows: &[BenchRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.run_id.to_string(),
            r.policy.clone(),
            r.solved.to_string(),
            format!("{:.6}", r.best_fitness),
            r.crossover_ops.to_string(),
            r.objective_evals.to_string(),
            r.generations_used.to_string(),
            format!("{:.3}", r.wall_ms),
            r.seed.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| BenchError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn emit_csv(rows: &[BenchRow], path: impl AsRef<Path>) -> Result<()> {
    if rows.is_empty() {
        return Err(BenchError::config("runs", "no rows to write"));
    }
    fs::write(path, format_csv(rows)?)?;
    Ok(())
}

pub fn parse_csv(text: &str) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != CSV_HEADER {
        return Err(BenchError::config(
            "csv",
            format!("unexpected header {header:?}"),
        ));
    }
    let field = |rec: &csv::StringRecord, i: usize| rec.get(i).unwrap_or_default().to_string();
    let num = |rec: &csv::StringRecord, i: usize| -> Result<f64> {
        field(rec, i).parse().map_err(|_| {
            BenchError::config(CSV_HEADER[i], format!("bad value `{}`", field(rec, i)))
        })
    };
    let int = |rec: &csv::StringRecord, i: usize| -> Result<u64> {
        field(rec, i).parse().map_err(|_| {
            BenchError::config(CSV_HEADER[i], format!("bad value `{}`", field(rec, i)))
        })
    };
    r.records()
        .map(|rec| {
            let rec = rec?;
            Ok(BenchRow {
                run_id: int(&rec, 0)? as usize,
                policy: field(&rec, 1),
                solved: field(&rec, 2) == "true",
                best_fitness: num(&rec, 3)?,
                crossover_ops: int(&rec, 4)?,
                objective_evals: int(&rec, 5)?,
                generations_used: int(&rec, 6)? as usize,
                wall_ms: num(&rec, 7)?,
                seed: int(&rec, 8)?,
            })
        })
        .collect()
}

/// Board SVG for N-queens, tour SVG for TSP.
pub fn render_svg(instance: &Instance, genome: &Genome) -> Result<String> {
    Ok(match instance {
        Instance::NQueens(q) => {
            if genome.len() != q.n() {
                return Err(hetga::Error::LengthMismatch {
                    expected: q.n(),
                    actual: genome.len(),
                }
                .into());
            }
            nqueens::render_board_svg(genome)
        }
        Instance::Tsp(t) => tsp::render_tour_svg(genome, t.points())?,
    })
}

pub fn emit_svg(instance: &Instance, genome: &Genome, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_svg(instance, genome)?)?;
    Ok(())
}

/// Whitespace-separated genes, e.g. `2 4 7 3 0 6 1 5`.
pub fn parse_genome(text: &str) -> Result<Genome> {
    let genes = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| BenchError::config("genome", format!("`{s}` is not a gene index")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Genome::new(genes)?)
}
