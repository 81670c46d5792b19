use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::{NamedTempFile, TempDir};

fn qudit_x(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qudit-x"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn matrix_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn analyze(text: &str, extra: &[&str]) -> Output {
    let f = matrix_file(text);
    let path = f.path().to_str().unwrap().to_owned();
    let mut args = vec!["analyze", path.as_str()];
    args.extend_from_slice(extra);
    qudit_x(&args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Value column of the `quantity,value` table.
fn csv_value(out: &Output, key: &str) -> f64 {
    stdout(out)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key},")))
        .unwrap_or_else(|| panic!("no {key} row"))
        .parse()
        .unwrap()
}

const BELL: &str = "\
# (|00> + |11>) / sqrt 2
0.5 0 0 0.5
0   0 0 0
0   0 0 0
0.5 0 0 0.5
";

const MIXED: &str = "\
0.25 0 0 0
0 0.25 0 0
0 0 0.25 0
0 0 0 0.25
";

#[test]
fn maximally_mixed_has_no_correlations() {
    let out = analyze(MIXED, &["--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(csv_value(&out, "I"), 0.0);
    assert_eq!(csv_value(&out, "concurrence"), 0.0);
    assert!((csv_value(&out, "neg_param") - 1.0).abs() < 1e-15);
    assert!((csv_value(&out, "S12") - 4f64.ln()).abs() < 1e-15);
    assert_eq!(csv_value(&out, "entangled"), 0.0);
}

#[test]
fn bell_state_text_report() {
    let out = analyze(BELL, &["--q", "2,0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("concurrence         1.000000000000000"),
        "{text}"
    );
    assert!(text.contains("negativity param    2.000000000000000"));
    assert!(text.contains("active condition    corner-dominant"));
    assert!(text.contains("q = 2  tsallis 0.500000000000000"));
}

#[test]
fn complex_entries_are_accepted() {
    let text = "\
0.3 0 0 0.1+0.2i
0 0.2 0-0.05i 0
0 0+0.05i 0.2 0
0.1-0.2i 0 0 0.3
";
    let out = analyze(text, &["--format", "csv"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // the corner term wins: 2|a| - 2 sqrt(d2 d3)
    let expected = 2.0 * 0.1f64.hypot(0.2) - 2.0 * 0.2;
    assert!((csv_value(&out, "concurrence") - expected).abs() < 1e-12);
    assert!((csv_value(&out, "lam1") - csv_value(&out, "lam_oracle1")).abs() < 1e-12);
}

#[test]
fn malformed_files_exit_3() {
    for text in [
        "0.25 0 0 0\n0 0.25 0 0\n0 0 0.25 0\n",
        "0.25 0 0 0 0\n0 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n",
        "0.25 0 0 0\n0 0.25 0 0\n0 0 0.25 x\n0 0 0 0.25\n",
        "0.25 0 0 0\n0 0.25 0 0\n0 0 0.25 0\n0 0 0 nan\n",
    ] {
        let out = analyze(text, &[]);
        assert_eq!(out.status.code(), Some(3), "{text}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    }
}

#[test]
fn invalid_states_exit_2() {
    let negative = "0.5 0 0 0\n0 0.5 0 0\n0 0 0.5 0\n0 0 0 -0.5\n";
    let out = analyze(negative, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("psd"));

    let not_x = "0.25 0.1 0 0\n0.1 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n";
    let out = analyze(not_x, &[]);
    assert_eq!(out.status.code(), Some(2));

    let not_hermitian = "0.25 0 0 0.1\n0 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n";
    assert_eq!(analyze(not_hermitian, &[]).status.code(), Some(2));
}

#[test]
fn missing_file_exits_1() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("absent.txt");
    let out = qudit_x(&["analyze", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_flags_exit_3() {
    for args in [
        &["werner", "--sweep", "0:1", "--b-rule", "const:0"][..],
        &["werner", "--sweep", "0:1:0.1", "--b-rule", "scaled:0"],
        &["werner", "--sweep", "1:0:0.1", "--b-rule", "const:0"],
        &["werner", "--p", "0.5"],
        &["werner"],
        &["region", "--p-steps", "1"],
        &["analyze", "x.txt", "--q", "1"],
        &["frobnicate"],
    ] {
        assert_eq!(qudit_x(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn help_and_version_succeed() {
    let out = qudit_x(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("werner"));
    assert_eq!(qudit_x(&["--version"]).status.code(), Some(0));
}

#[test]
fn werner_point_report() {
    let out = qudit_x(&["werner", "--p", "0.5", "--b", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("concurrence         0.250000000000000"),
        "{text}"
    );
    assert!(text.contains("negativity param    1.250000000000000"));

    let outside = stdout(&qudit_x(&["werner", "--p", "-0.5", "--b", "0"]));
    assert!(outside.contains("state valid         false"));
    assert!(outside.contains("entropies omitted"));
}

#[test]
fn sweep_csv_schema() {
    let out = qudit_x(&["werner", "--sweep", "0:1:0.25", "--b-rule", "const:0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "p,b,state_valid,ppt_valid,lam1,lam2,lam3,lam4,lamppt1,lamppt2,lamppt3,lamppt4,\
         neg_param,neg_std,concurrence,S1,S2,S12,I"
    );
    assert_eq!(lines.len(), 6);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 19));
}

#[test]
fn region_file_and_summary() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("region.csv");
    let out = qudit_x(&[
        "region",
        "--p-steps",
        "3",
        "--b-steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("9 points"));
    let csv = std::fs::read_to_string(Path::new(&path)).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "p,b,class");
    assert_eq!(rows.len(), 10);
    let classes: Vec<&str> = rows[1..]
        .iter()
        .map(|r| r.rsplit(',').next().unwrap())
        .collect();
    // p = -1/3, 1/3, 1 against b = -1/2, 0, 1/2
    assert_eq!(classes, ["0", "1", "0", "0", "1", "0", "0", "2", "0"]);
}
