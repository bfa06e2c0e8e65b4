use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hetga_cli::parse_csv;

fn hetga(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hetga"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn run_writes_csv_svg_and_genome() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("q.cfg"),
        "# 8 queens\nproblem = nqueens\nn = 8\nruns = 3\npopulation = 60\ngenerations = 200\n",
    )
    .unwrap();
    let o = hetga(
        &[
            "run",
            "--config",
            "q.cfg",
            "--csv",
            "out.csv",
            "--svg",
            "best.svg",
            "--genome-out",
            "best.txt",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = parse_csv(&fs::read_to_string(dir.path().join("out.csv")).unwrap()).unwrap();
    assert_eq!(rows.len(), 3);
    assert!(fs::read_to_string(dir.path().join("best.svg"))
        .unwrap()
        .starts_with("<?xml"));

    let o = hetga(
        &[
            "render",
            "nqueens",
            "--genome-file",
            "best.txt",
            "--out",
            "again.svg",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("conflicts:"));
    assert!(dir.path().join("again.svg").exists());
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("q.cfg"),
        "problem = nqueens, n = 6, runs = 5, generations = 10",
    )
    .unwrap();
    let o = hetga(
        &["run", "--config", "q.cfg", "--runs", "2", "--csv", "o.csv"],
        dir.path(),
    );
    assert!(o.status.success());
    let rows = parse_csv(&fs::read_to_string(dir.path().join("o.csv")).unwrap()).unwrap();
    assert_eq!(rows.len(), 2);
}

#[test]
fn compare_emits_both_policies() {
    let dir = tempfile::tempdir().unwrap();
    let o = hetga(
        &[
            "compare",
            "--problem",
            "tsp",
            "--n",
            "12",
            "--runs",
            "2",
            "--population",
            "30",
            "--generations",
            "30",
            "--csv",
            "cmp.csv",
            "--svg",
            "tour.svg",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("crossover_ops"));
    let rows = parse_csv(&fs::read_to_string(dir.path().join("cmp.csv")).unwrap()).unwrap();
    assert_eq!(
        rows.iter().filter(|r| r.policy == "heterogeneous").count(),
        2
    );
    assert_eq!(rows.iter().filter(|r| r.policy == "homogeneous").count(), 2);
    assert!(fs::read_to_string(dir.path().join("tour.svg"))
        .unwrap()
        .contains("<polyline"));
}

#[test]
fn oracles() {
    let dir = tempfile::tempdir().unwrap();
    let o = hetga(&["oracle", "nqueens", "--max-n", "8"], dir.path());
    assert!(o.status.success());
    let counts: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(counts, ["1", "0", "0", "2", "10", "4", "40", "92"]);

    fs::write(dir.path().join("sq.txt"), "0 0\n0 1\n1 1\n1 0\n").unwrap();
    let o = hetga(&["oracle", "tsp", "--points", "sq.txt"], dir.path());
    assert!(stdout(&o).contains("optimal length 4.000000"));

    let o = hetga(&["oracle", "nqueens", "--max-n", "11"], dir.path());
    assert!(!o.status.success());
}

#[test]
fn render_tsp_tour() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("sq.txt"), "0 0\n0 1\n1 1\n1 0\n").unwrap();
    let o = hetga(
        &[
            "render", "tsp", "--points", "sq.txt", "--genome", "0 1 2 3", "--out", "t.svg",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("tour length: 4.000000"));
}

#[test]
fn configuration_errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("bad.cfg"),
        "problem = nqueens\nn = 8\ncrossover_prob = 1.5\n",
    )
    .unwrap();
    let o = hetga(&["run", "--config", "bad.cfg"], dir.path());
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("crossover_prob"));

    let o = hetga(&["run", "--config", "missing.cfg"], dir.path());
    assert!(!o.status.success());

    let o = hetga(
        &[
            "run",
            "--problem",
            "nqueens",
            "--n",
            "8",
            "--runs",
            "1",
            "--csv",
            "no/such/dir.csv",
        ],
        dir.path(),
    );
    assert!(!o.status.success());
}
