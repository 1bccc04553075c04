//! End-to-end tests of the binary: flags, file outputs, exit codes.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chernloc"))
}

fn stdout_of(out: std::process::Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn integrate_projective_power_below_dimension() {
    let out = bin()
        .args(["integrate", "--grass", "1,4", "--power", "2"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "0");
}

#[test]
fn integrate_volume_of_grass_3_7() {
    let out = bin()
        .args(["integrate", "--grass", "3,7", "--volume"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "462");
}

#[test]
fn integrate_higher_power_prints_schur_row() {
    let out = bin()
        .args(["integrate", "--grass", "1,3", "--power", "4"])
        .output()
        .unwrap();
    let text = stdout_of(out);
    let got = chernloc::poly::parse_poly(text.trim(), 3).unwrap();
    let expect = chernloc::poly::parse_poly(
        "t1^2 + t2^2 + t3^2 + t1*t2 + t1*t3 + t2*t3",
        3,
    )
    .unwrap();
    assert_eq!(got, expect);
}

#[test]
fn residue_agrees_with_integrate() {
    let a = stdout_of(
        bin()
            .args(["integrate", "--grass", "2,4", "--volume"])
            .output()
            .unwrap(),
    );
    let b = stdout_of(
        bin()
            .args(["residue", "--grass", "2,4", "--volume"])
            .output()
            .unwrap(),
    );
    assert_eq!(a.trim(), "2");
    assert_eq!(a, b);
}

#[test]
fn schur_and_gysin_roundtrip() {
    let out = stdout_of(
        bin()
            .args(["schur", "--partition", "2,1", "--nvars", "2"])
            .output()
            .unwrap(),
    );
    let got = chernloc::poly::parse_poly(out.trim(), 2).unwrap();
    assert_eq!(
        got,
        chernloc::poly::parse_poly("t1^2*t2 + t1*t2^2", 2).unwrap()
    );

    let out = stdout_of(
        bin()
            .args(["gysin", "--grass", "2,4", "--q", "3,2", "--r", "", "--check"])
            .output()
            .unwrap(),
    );
    assert!(out.contains("S(1)"), "got {out}");
}

#[test]
fn omega1_writes_three_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout_of(
        bin()
            .args(["omega1", "--n", "2", "--out"])
            .arg(dir.path())
            .output()
            .unwrap(),
    );
    // Degree-1 line carries the fundamental class.
    let deg1 = out.lines().find(|l| l.starts_with("deg=1")).unwrap();
    let poly = chernloc::poly::parse_poly(deg1.trim_start_matches("deg=1").trim(), 4).unwrap();
    assert_eq!(poly, chernloc::poly::parse_poly("t3+t4-t1-t2", 4).unwrap());
    for name in ["f_2.txt", "table_2.json", "schur_2.json"] {
        assert!(dir.path().join(name).exists(), "missing {name}");
    }
    // The table round-trips through the library.
    let table = chernloc::grass::LocalClassTable::from_json_str(
        &std::fs::read_to_string(dir.path().join("table_2.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(table.len(), 6);
}

#[test]
fn omega1_base_level() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout_of(
        bin()
            .args(["omega1", "--n", "1", "--out"])
            .arg(dir.path())
            .output()
            .unwrap(),
    );
    let deg1 = out.lines().find(|l| l.starts_with("deg=1")).unwrap();
    let poly = chernloc::poly::parse_poly(deg1.trim_start_matches("deg=1").trim(), 2).unwrap();
    assert_eq!(poly, chernloc::poly::parse_poly("t2-t1", 2).unwrap());
}

#[test]
fn omega1_heavy_gate_refuses_without_flag() {
    let out = bin()
        .args(["omega1", "--n", "4", "--out", "/tmp/never-used"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn positivity_pass_and_fail_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    stdout_of(
        bin()
            .args(["omega1", "--n", "2", "--out"])
            .arg(dir.path())
            .arg("--cache-dir")
            .arg(&cache)
            .output()
            .unwrap(),
    );
    let f2 = dir.path().join("f_2.txt");
    let class_arg = std::fs::read_to_string(&f2).unwrap();

    let out = stdout_of(
        bin()
            .args([
                "positivity",
                "--class",
                class_arg.trim(),
                "--nvars",
                "4",
                "--tree",
                "1>2,2>4,4>3",
            ])
            .output()
            .unwrap(),
    );
    assert!(out.starts_with("PASS"), "got {out}");

    let out = stdout_of(
        bin()
            .args([
                "positivity",
                "--class",
                class_arg.trim(),
                "--nvars",
                "4",
                "--tree",
                "1>3,2>3,2>4",
            ])
            .output()
            .unwrap(),
    );
    assert!(out.starts_with("FAIL"), "got {out}");
    assert!(out.contains("u"), "offending monomials listed: {out}");
}

#[test]
fn positivity_single_edge() {
    let out = stdout_of(
        bin()
            .args([
                "positivity",
                "--class",
                "t2-t1",
                "--nvars",
                "2",
                "--tree",
                "1>2",
            ])
            .output()
            .unwrap(),
    );
    assert!(out.starts_with("PASS"));
}

#[test]
fn cone_counterexample_and_plane_curve() {
    let out = stdout_of(
        bin()
            .args(["cone", "--coeffs", "0,4,-2"])
            .output()
            .unwrap(),
    );
    let got = chernloc::poly::parse_poly(out.trim(), 1).unwrap();
    assert_eq!(
        got,
        chernloc::poly::parse_poly("t1^3 - 2*t1^2 + 4*t1", 1).unwrap()
    );
    let out2 = stdout_of(
        bin()
            .args(["cone", "--plane-curve", "4,2"])
            .output()
            .unwrap(),
    );
    assert_eq!(out.trim(), out2.trim());
}

#[test]
fn expand_two_alphabet_table() {
    let out = stdout_of(
        bin()
            .args([
                "expand",
                "--poly",
                "t3+t4-t1-t2",
                "--nvars",
                "4",
                "--alphabet",
                "1,2",
                "--alphabet2",
                "3,4",
                "--negate-first",
                "--json",
            ])
            .output()
            .unwrap(),
    );
    assert!(out.contains("\"alphabets\":[[1,2],[3,4]]"), "got {out}");
    assert!(out.contains("\"coef\":\"1\""));
}

#[test]
fn verify_lists_suites() {
    let out = stdout_of(bin().args(["verify", "--list"]).output().unwrap());
    for name in ["localization", "hook", "positivity", "omega1-heavy"] {
        assert!(out.contains(name), "missing {name}");
    }
}

#[test]
fn verify_runs_a_named_suite() {
    let out = stdout_of(bin().args(["verify", "cone"]).output().unwrap());
    assert!(out.contains("[PASS] cone"), "got {out}");
}

#[test]
fn math_inconsistency_exit_code() {
    // A table with a wrong class is not the restriction of a global class.
    let mut table = chernloc::grass::LocalClassTable::new(1, 2).unwrap();
    let p1 = chernloc::grass::GrassPoint::new(vec![1], 1, 2).unwrap();
    let p2 = chernloc::grass::GrassPoint::new(vec![2], 1, 2).unwrap();
    table
        .set(p1, chernloc::MultiPoly::one(2))
        .unwrap();
    table.set(p2, chernloc::MultiPoly::zero(2)).unwrap();
    let out = bin()
        .args(["integrate", "--grass", "1,2", "--table-json", &table.to_json_string()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a polynomial"), "stderr: {err}");
}

#[test]
fn input_error_exit_code() {
    let out = bin()
        .args(["integrate", "--grass", "4,2", "--volume"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_machine_readable(){
    let out = stdout_of(
        bin()
            .args(["--json", "integrate", "--grass", "1,3", "--power", "4"])
            .output()
            .unwrap(),
    );
    let poly = chernloc::MultiPoly::from_json_str(out.trim()).unwrap();
    assert_eq!(poly.num_terms(), 6);
}

#[test]
fn cache_dir_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache: &Path = &dir.path().join("cache");
    let out1 = stdout_of(
        bin()
            .args(["omega1", "--n", "2", "--out"])
            .arg(dir.path().join("a"))
            .arg("--cache-dir")
            .arg(cache)
            .output()
            .unwrap(),
    );
    assert!(cache.join("f_1.json").exists());
    assert!(cache.join("f_2.json").exists());
    let out2 = stdout_of(
        bin()
            .args(["omega1", "--n", "2", "--out"])
            .arg(dir.path().join("b"))
            .arg("--cache-dir")
            .arg(cache)
            .output()
            .unwrap(),
    );
    let strip = |s: &str| {
        s.lines()
            .filter(|l| l.starts_with("deg="))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&out1), strip(&out2));
    let a = std::fs::read(dir.path().join("a/f_2.txt")).unwrap();
    let b = std::fs::read(dir.path().join("b/f_2.txt")).unwrap();
    assert_eq!(a, b);
}
