use std::path::Path;
use std::process::{Command, Output};

use nsga_lotz::experiment::{read_records, RECORD_HEADER};
use nsga_lotz_cli::parse_config;

fn parse(tokens: &[&str]) -> Result<nsga_lotz::experiment::ExperimentBatch, nsga_lotz_cli::CliError> {
    parse_config(std::iter::once("nsga-lotz").chain(tokens.iter().copied()))
}

fn run_binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsga-lotz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn small_run(out: &Path, iterations: &str, extra: &[&str]) -> Output {
    let out = out.to_str().unwrap();
    let mut args = vec![
        "--m",
        "4",
        "--n",
        "8",
        "--pop",
        "2M",
        "--iterations",
        iterations,
        "--seed",
        "7",
        "--out",
        out,
    ];
    args.extend_from_slice(extra);
    run_binary(&args)
}

#[test]
fn front_multiple_population() {
    let batch = parse(&["--problem", "mlotz", "--m", "4", "--n", "40", "--pop", "4M"]).unwrap();
    assert_eq!(batch.base.population_size, 1764);
    let batch = parse(&["--m", "4", "--n", "40", "--pop", "100"]).unwrap();
    assert_eq!(batch.base.population_size, 100);
}

#[test]
fn problem_shape_errors() {
    let err = parse(&["--m", "3", "--n", "40"]).unwrap_err();
    assert!(err.to_string().contains("m must be even"), "{err}");
    assert!(parse(&["--m", "4", "--n", "10"]).is_ok());
    let err = parse(&["--m", "6", "--n", "10"]).unwrap_err();
    assert!(err.to_string().contains("m/2 must divide n"), "{err}");
}

#[test]
fn configuration_error_exit_status() {
    let out = run_binary(&["--m", "3", "--n", "40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m must be even"));

    let out = run_binary(&["--selection", "roulette"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_binary(&["--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run_binary(&["--help"]).status.code(), Some(0));
}

#[test]
fn unwritable_output_is_a_runtime_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let out = small_run(&blocker.join("sub"), "30", &[]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn zero_iterations_write_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = small_run(dir.path(), "0", &["--replicates", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("replicate_000.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], RECORD_HEADER.join(","));
    assert!(lines[1].starts_with("0,"));
    assert!(text.ends_with('\n'));
    assert!(dir.path().join("aggregate.csv").exists());
}

#[test]
fn summary_reports_each_replicate() {
    let dir = tempfile::tempdir().unwrap();
    let out = small_run(dir.path(), "30", &["--replicates", "3"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("M=25 N=50"), "{stdout}");
    assert_eq!(
        stdout
            .lines()
            .filter(|l| l.trim_start().starts_with(char::is_numeric))
            .count(),
        3
    );
}

#[test]
fn same_seed_same_bytes() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    assert!(small_run(a.path(), "30", &["--threads", "1"]).status.success());
    assert!(small_run(b.path(), "30", &["--threads", "2"]).status.success());
    for name in ["replicate_000.csv", "replicate_004.csv", "aggregate.csv"] {
        assert_eq!(
            std::fs::read(a.path().join(name)).unwrap(),
            std::fs::read(b.path().join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn replicate_files_do_not_depend_on_batch_size() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    assert!(small_run(a.path(), "30", &["--replicates", "2"]).status.success());
    assert!(small_run(b.path(), "30", &["--replicates", "4"]).status.success());
    let name = "replicate_001.csv";
    assert_eq!(
        std::fs::read(a.path().join(name)).unwrap(),
        std::fs::read(b.path().join(name)).unwrap()
    );
    assert!(!a.path().join("replicate_002.csv").exists());
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(&conf, "m=4\nn=8\npop=2M\niterations=5\nreplicates=1\nseed=3\n").unwrap();
    let out_dir = dir.path().join("out");
    let out = run_binary(&[
        "--config",
        conf.to_str().unwrap(),
        "--iterations",
        "2",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let records = read_records(std::fs::File::open(out_dir.join("replicate_000.csv")).unwrap()).unwrap();
    assert_eq!(records.len(), 3);

    std::fs::write(&conf, "m=4\nn=8\nwidth=3\n").unwrap();
    let out = run_binary(&["--config", conf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown key"));
}
