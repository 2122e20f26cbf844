use std::path::Path;
use std::process::Command;

fn bcjulia() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bcjulia"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bcjulia().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn julia2d_writes_expected_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig1a");
    run_ok(&[
        "julia2d",
        "-c",
        "0.25",
        "--points",
        "10000",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    let csv = std::fs::read_to_string(out.with_extension("csv")).unwrap();
    assert_eq!(csv.lines().count(), 10_001); // header + points
    assert!(csv.starts_with("x,y,z,tag\n"));
    assert!(out.with_extension("manifest.json").exists());
}

#[test]
fn julia2d_dendrite_parameters() {
    let dir = tempfile::tempdir().unwrap();
    for (name, c) in [("fig1b", "-0.123,0.745"), ("fig1c", "0,1")] {
        let out = dir.path().join(name);
        run_ok(&[
            "julia2d",
            "-c",
            c,
            "--points",
            "2000",
            "--format",
            "csv",
            "--out",
            out.to_str().unwrap(),
        ]);
        let csv = std::fs::read_to_string(out.with_extension("csv")).unwrap();
        assert_eq!(csv.lines().count(), 2001);
    }
}

#[test]
fn julia3d_iim_writes_csv_ply_and_sidecars() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig4");
    run_ok(&[
        "julia3d-iim",
        "-c",
        "0,1,0,0",
        "--points",
        "20000",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    let csv = std::fs::read_to_string(out.with_extension("csv")).unwrap();
    assert!(csv.lines().count() > 1, "empty sliced cloud");
    let ply = std::fs::read_to_string(out.with_extension("ply")).unwrap();
    assert!(ply.starts_with("ply\nformat ascii 1.0\n"));
    assert!(out.with_extension("csv.meta.json").exists());
    assert!(out.with_extension("manifest.json").exists());
    let meta = std::fs::read_to_string(out.with_extension("csv.meta.json")).unwrap();
    assert!(meta.contains("chacha8"));
}

#[test]
fn julia3d_boundary_tags_and_colors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig2c");
    let stdout = run_ok(&[
        "julia3d-boundary",
        "-c",
        "0.0635,0.3725,0.3725,0.1865",
        "--points",
        "5000",
        "--grid",
        "101x101",
        "--budget",
        "30000",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(stdout.contains("JxJ"));
    let csv = std::fs::read_to_string(out.with_extension("csv")).unwrap();
    assert!(csv.contains(",JxJ"));
    let ply = std::fs::read_to_string(out.with_extension("ply")).unwrap();
    assert!(ply.contains("property uchar red"));
}

#[test]
fn manifest_replay_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("replay");
    run_ok(&[
        "julia3d-iim",
        "-c",
        "0.25,0,0,0",
        "--points",
        "10000",
        "--seed",
        "99",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    let first = std::fs::read(out.with_extension("csv")).unwrap();
    let manifest: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(out.with_extension("manifest.json")).unwrap(),
    )
    .unwrap();
    let argv: Vec<String> = manifest["argv"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    std::fs::remove_file(out.with_extension("csv")).unwrap();
    let status = bcjulia().args(&argv).status().unwrap();
    assert!(status.success());
    let second = std::fs::read(out.with_extension("csv")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn fixed_points_report() {
    let stdout = run_ok(&["fixed-points", "-c", "0.25,0,0,0"]);
    assert!(stdout.contains("1 fixed point(s)"));
    assert!(stdout.contains("indifferent"));
    let stdout = run_ok(&["fixed-points", "-c", "0,0,0,0"]);
    assert!(stdout.contains("4 fixed point(s)"));
    let stdout = run_ok(&["fixed-points", "-c", "0,1,0,0"]);
    assert!(stdout.contains("4 fixed point(s)"));
}

#[test]
fn dendrite_check_verdicts() {
    let grid = ["--grid", "201x201"];
    let stdout = run_ok(&[&["dendrite-check", "-c", "0,1,0,0"], &grid[..]].concat());
    assert!(stdout.contains("verdict: dendrite-consistent"));
    let stdout = run_ok(&[&["dendrite-check", "-c", "0,0,0,0"], &grid[..]].concat());
    assert!(stdout.contains("verdict: not-dendrite"));
}

#[test]
fn parse_errors_are_single_line() {
    let out = bcjulia()
        .args(["julia2d", "-c", "0.2,nope"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.starts_with("error: "));
    assert!(stderr.contains("nope"));
}

#[test]
fn xyz_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cloud");
    run_ok(&[
        "julia3d-iim",
        "-c",
        "0,0,0,0",
        "--points",
        "5000",
        "--format",
        "xyz",
        "--out",
        out.to_str().unwrap(),
    ]);
    let xyz = std::fs::read_to_string(out.with_extension("xyz")).unwrap();
    let first = xyz.lines().next().unwrap();
    assert_eq!(first.split_whitespace().count(), 3);
    assert!(!Path::new(&out.with_extension("csv")).exists());
}
