//! Euclidean symmetric TSP over a fixed point set.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::Rng;

use crate::engine::Problem;
use crate::error::{Error, Result};
use crate::genome::Genome;
use crate::rng::{Purpose, Streams};
use crate::svg::Svg;

/// Largest instance [`brute_force_optimal`] will enumerate.
pub const BRUTE_FORCE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

pub fn distance(p: Point, q: Point) -> f64 {
    ((p.x - q.x).powi(2) + (p.y - q.y).powi(2)).sqrt()
}

/// At least two points with finite coordinates. Index order is significant.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if let Some(p) = points
            .iter()
            .find(|p| !(p.x.is_finite() && p.y.is_finite()))
        {
            return Err(Error::Config(format!(
                "point ({}, {}) has a non-finite coordinate",
                p.x, p.y
            )));
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// One `x y` line per point, using shortest round-trip float formatting.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }
}

/// Axis-aligned box for [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BoundingBox {
    pub const UNIT: Self = Self {
        min_x: 0.0,
        min_y: 0.0,
        max_x: 1.0,
        max_y: 1.0,
    };
}

/// Closed tour length: consecutive edges plus the edge back to the start.
pub fn tour_length(tour: &Genome, ps: &PointSet) -> Result<f64> {
    if tour.len() != ps.len() {
        return Err(Error::LengthMismatch {
            expected: ps.len(),
            actual: tour.len(),
        });
    }
    Ok(closed_length(tour.as_slice(), &ps.points))
}

fn closed_length(order: &[usize], points: &[Point]) -> f64 {
    let n = order.len();
    let open: f64 = order
        .windows(2)
        .map(|w| distance(points[w[0]], points[w[1]]))
        .sum();
    open + distance(points[order[n - 1]], points[order[0]])
}

/// Parse the two-column point format. `#` lines and blank lines are skipped.
pub fn parse_points(text: &str, origin: &Path) -> Result<PointSet> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            path: origin.to_path_buf(),
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!(
                "expected 2 fields `x y`, found {}",
                fields.len()
            )));
        }
        let coord = |s: &str| -> Result<f64> {
            let v: f64 = s
                .parse()
                .map_err(|_| err(format!("`{s}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(err(format!("`{s}` is not finite")))
            }
        };
        points.push(Point::new(coord(fields[0])?, coord(fields[1])?));
    }
    PointSet::new(points)
}

pub fn load_points(path: impl AsRef<Path>) -> Result<PointSet> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_points(&text, path)
}

/// `n` points uniform in `bbox`, deterministic in `seed`.
pub fn random_instance(n: usize, seed: u64, bbox: BoundingBox) -> Result<PointSet> {
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    if !(bbox.min_x <= bbox.max_x && bbox.min_y <= bbox.max_y) {
        return Err(Error::Config(format!("empty bounding box {bbox:?}")));
    }
    let mut rng = Streams::new(seed).stream(Purpose::Instance, 0, n as u64);
    let points = (0..n)
        .map(|_| {
            Point::new(
                rng.gen_range(bbox.min_x..=bbox.max_x),
                rng.gen_range(bbox.min_y..=bbox.max_y),
            )
        })
        .collect();
    PointSet::new(points)
}

/// Exact optimum by enumeration: index 0 fixed first, and of each
/// tour/reversed-tour pair only the one with `order[1] < order[n-1]` visited.
pub fn brute_force_optimal(ps: &PointSet) -> Result<(Genome, f64)> {
    let n = ps.len();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            what: "TSP instance",
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = (order.clone(), closed_length(&order, &ps.points));
    permute_tail(&mut order, 1, &mut |o| {
        if n > 2 && o[1] > o[n - 1] {
            return;
        }
        let len = closed_length(o, &ps.points);
        if len < best.1 {
            best = (o.to_vec(), len);
        }
    });
    Ok((Genome::new(best.0)?, best.1))
}

fn permute_tail(v: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k >= v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute_tail(v, k + 1, visit);
        v.swap(k, i);
    }
}

/// Closed polyline through the points in tour order, `n + 1` vertices.
pub fn render_tour_svg(tour: &Genome, ps: &PointSet) -> Result<String> {
    if tour.len() != ps.len() {
        return Err(Error::LengthMismatch {
            expected: ps.len(),
            actual: tour.len(),
        });
    }
    let (min_x, max_x, min_y, max_y) = ps.points.iter().fold(
        (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        ),
        |(a, b, c, d), p| (a.min(p.x), b.max(p.x), c.min(p.y), d.max(p.y)),
    );
    let span = (max_x - min_x).max(max_y - min_y).max(f64::EPSILON);
    let (size, margin) = (800.0, 20.0);
    let scale = (size - 2.0 * margin) / span;
    // flip y so larger y is up
    let project = |p: Point| {
        (
            margin + (p.x - min_x) * scale,
            size - margin - (p.y - min_y) * scale,
        )
    };

    let mut vertices: Vec<(f64, f64)> = tour
        .as_slice()
        .iter()
        .map(|&i| project(ps.points[i]))
        .collect();
    vertices.push(vertices[0]);

    let mut svg = Svg::new(size, size);
    svg.rect(0.0, 0.0, size, size, "#ffffff");
    svg.polyline(&vertices, "#1f5fbf", 1.5);
    for &(x, y) in &vertices[..vertices.len() - 1] {
        svg.circle(x, y, 2.5, "#000000", "city");
    }
    Ok(svg.finish())
}

/// TSP as a GA problem; fitness is the raw closed tour length.
#[derive(Debug, Clone)]
pub struct Tsp {
    points: PointSet,
}

impl Tsp {
    pub fn new(points: PointSet) -> Self {
        Self { points }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }
}

impl Problem for Tsp {
    fn genome_len(&self) -> usize {
        self.points.len()
    }

    fn objective(&self, genome: &Genome) -> f64 {
        closed_length(genome.as_slice(), &self.points.points)
    }
}
