//! Benchmark harness for the `hetga` engine: configuration parsing, seeded
//! batteries, policy comparison and CSV/SVG output.

pub mod battery;
pub mod compare;
pub mod config;
pub mod error;
pub mod output;

pub use battery::{run_battery, run_battery_with, Battery, BenchRow};
pub use compare::{compare, Comparison, PolicyStats};
pub use config::{ExperimentSpec, Instance, PartialSpec, ProblemKind};
pub use error::{BenchError, Result};
pub use output::{emit_csv, emit_svg, format_csv, parse_csv};
