//! N-queens on a permutation encoding: position `i` is the column, the value
//! at `i` is the row of that column's queen.

use rand::Rng;

use crate::engine::Problem;
use crate::error::{Error, Result};
use crate::genome::Genome;
use crate::svg::Svg;

/// Largest board [`enumerate_solutions`] will count.
pub const ENUMERATION_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NQueens {
    n: usize,
}

impl NQueens {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGenome);
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl Problem for NQueens {
    fn genome_len(&self) -> usize {
        self.n
    }

    fn objective(&self, genome: &Genome) -> f64 {
        conflicts(genome.as_slice()) as f64
    }
}

/// Number of attacking queen pairs.
///
/// For every column `g` and every earlier column `i < g`, counts one if the
/// two queens share a row or a diagonal. Accepts arbitrary row vectors, not
/// only permutations.
pub fn conflicts(rows: &[usize]) -> u64 {
    let mut x = 0;
    for g in 0..rows.len() {
        for i in 0..g {
            if rows[i] == rows[g] || rows[g].abs_diff(rows[i]) == g - i {
                x += 1;
            }
        }
    }
    x
}

pub fn is_solution(rows: &[usize]) -> bool {
    conflicts(rows) == 0
}

pub fn random_genome<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Genome> {
    Genome::random(n, rng)
}

/// Exact number of solutions on an `n × n` board, by backtracking.
pub fn enumerate_solutions(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::EmptyGenome);
    }
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            what: "N-queens board",
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let full = (1u32 << n) - 1;
    Ok(place(full, 0, 0, 0))
}

// rows: occupied rows; down/up: diagonals attacked in the next column
fn place(full: u32, rows: u32, down: u32, up: u32) -> u64 {
    if rows == full {
        return 1;
    }
    let mut free = full & !(rows | down | up);
    let mut count = 0;
    while free != 0 {
        let bit = free & free.wrapping_neg();
        free ^= bit;
        count += place(
            full,
            rows | bit,
            ((down | bit) << 1) & full,
            (up | bit) >> 1,
        );
    }
    count
}

/// For each column, whether its queen is attacked by any other queen.
pub fn attacked(rows: &[usize]) -> Vec<bool> {
    let n = rows.len();
    let mut hit = vec![false; n];
    for g in 0..n {
        for i in 0..g {
            if rows[i] == rows[g] || rows[g].abs_diff(rows[i]) == g - i {
                hit[i] = true;
                hit[g] = true;
            }
        }
    }
    hit
}

/// Text board, row 0 on top. `*` marks a safe queen, `O` an attacked one,
/// `.` an empty square.
pub fn render_board(g: &Genome) -> String {
    let rows = g.as_slice();
    let n = rows.len();
    let hit = attacked(rows);
    let mut out = String::with_capacity(n * (2 * n + 1));
    for r in 0..n {
        for (c, &row) in rows.iter().enumerate() {
            if c > 0 {
                out.push(' ');
            }
            out.push(match (row == r, hit[c]) {
                (false, _) => '.',
                (true, false) => '*',
                (true, true) => 'O',
            });
        }
        out.push('\n');
    }
    out
}

/// SVG board. Safe queens are drawn as small black dots (class `safe`),
/// attacked queens as larger blue circles (class `attacked`) with green lines
/// to each queen attacking them.
pub fn render_board_svg(g: &Genome) -> String {
    let rows = g.as_slice();
    let n = rows.len();
    let cell = (800.0 / n as f64).clamp(1.0, 48.0);
    let side = cell * n as f64;
    let mut svg = Svg::new(side, side);
    svg.rect(0.0, 0.0, side, side, "#ffffff");
    for r in 0..n {
        for c in 0..n {
            if (r + c) % 2 == 1 {
                svg.rect(c as f64 * cell, r as f64 * cell, cell, cell, "#e8e8e8");
            }
        }
    }
    let centre = |c: usize, r: usize| ((c as f64 + 0.5) * cell, (r as f64 + 0.5) * cell);
    for g in 0..n {
        for i in 0..g {
            if rows[i] == rows[g] || rows[g].abs_diff(rows[i]) == g - i {
                svg.line(
                    centre(i, rows[i]),
                    centre(g, rows[g]),
                    "#2ca02c",
                    (cell / 16.0).max(0.5),
                );
            }
        }
    }
    let hit = attacked(rows);
    for (c, &r) in rows.iter().enumerate() {
        let (x, y) = centre(c, r);
        if hit[c] {
            svg.circle(x, y, cell * 0.35, "#1f5fbf", "attacked");
        } else {
            svg.circle(x, y, cell * 0.2, "#000000", "safe");
        }
    }
    svg.finish()
}
