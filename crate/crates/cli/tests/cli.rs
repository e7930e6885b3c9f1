use std::fs;
use std::path::Path;
use std::process::{Command, Stdio};

use tempfile::TempDir;

/// Runs in-process and returns (exit code, stdout, stderr).
fn run(cache: &Path, args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["nsatoms", "--cache", cache.to_str().unwrap()];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = nsatoms_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fresh() -> (TempDir, std::path::PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.txt");
    (dir, path)
}

#[test]
fn table1_rows() {
    let (_d, c) = fresh();
    let (code, out, _) = run(&c, &["table1", "--max-n", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,Aprime,A,beta,beta_plus_bound,ratio");
    assert_eq!(lines[1], "1,1,1,.250000,1.000000,-");
    assert_eq!(lines[3], "3,3,3,.421875,.843750,.6667");
    let (_, out, _) = run(&c, &["table1", "--max-n", "16"]);
    assert!(out.lines().last().unwrap().starts_with("16,16674,1888802,"));
}

#[test]
fn table2_rows() {
    let (_d, c) = fresh();
    let (code, out, _) = run(&c, &["table2", "--max-n", "8"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[2], "2,1,0,.5,inf");
    assert_eq!(lines[8], "8,37,1,.71094,1");
}

#[test]
fn json_output_is_exact() {
    let (_d, c) = fresh();
    let (code, out, _) = run(&c, &["--format", "json", "table1", "--max-n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""beta":"27/64""#), "{out}");
    assert!(out.contains(r#""A":3"#));
}

#[test]
fn limits_map_to_exit_two() {
    let (_d, c) = fresh();
    let (code, _, err) = run(&c, &["table1", "--max-n", "17"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&c, &["seq", "Bogus", "--max", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&c, &["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn ratios_and_sequences() {
    let (_d, c) = fresh();
    assert_eq!(run(&c, &["beta", "--g", "7", "--exact"]).1.trim(), "27/64");
    assert_eq!(run(&c, &["beta", "--g", "7"]).1.trim(), ".421875");
    assert_eq!(run(&c, &["gamma", "--g", "3", "--exact"]).1.trim(), "3/4");
    assert_eq!(
        run(&c, &["beta-sigma", "--g", "9", "--exact"]).1.trim(),
        "5/8"
    );
    assert_eq!(
        run(&c, &["gamma-sigma", "--g", "1", "--exact"]).1.trim(),
        "1/1"
    );
    let (_, out, _) = run(&c, &["seq", "Aprime", "--max", "7"]);
    assert_eq!(out.lines().nth(7), Some("7,37,enumerated"));
}

#[test]
fn antiatom_exit_codes() {
    let (_d, c) = fresh();
    let (code, out, _) = run(&c, &["antiatom", "g=3;in=2"]);
    assert_eq!(code, 0);
    assert!(out.contains("count 1\n") && out.contains("symmetry symmetric\n"));
    let (_, out, _) = run(&c, &["antiatom", "g=2;in="]);
    assert!(out.contains("count 2\n") && out.contains("symmetry pseudosymmetric\n"));
    let (_, out, _) = run(&c, &["antiatom", "g=5;in="]);
    assert!(out.contains("count 10\n"));
    assert_eq!(run(&c, &["antiatom", "g=5;in=2"]).0, 3);
    assert_eq!(run(&c, &["antiatom", "g=5;in=9"]).0, 2);
    assert_eq!(run(&c, &["antiatom", "nonsense"]).0, 2);
}

#[test]
fn cache_persists_and_rejects_tampering() {
    let (_d, c) = fresh();
    assert_eq!(run(&c, &["table1", "--max-n", "8"]).0, 0);
    let text = fs::read_to_string(&c).unwrap();
    assert!(text.starts_with("#nsatoms-cache v1\n"));
    assert!(text.lines().last().unwrap().starts_with("#sha256 "));
    let (_, out, _) = run(&c, &["seq", "A", "--max", "3"]);
    assert_eq!(out.lines().nth(3), Some("3,3,imported"));

    fs::write(&c, text.replace("A 3 3\n", "A 3 4\n")).unwrap();
    let (code, _, err) = run(&c, &["seq", "A", "--max", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("corrupt cache"), "{err}");

    fs::write(
        &c,
        text.replacen("#nsatoms-cache v1", "#nsatoms-cache v0", 1),
    )
    .unwrap();
    let (code, _, err) = run(&c, &["seq", "A", "--max", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("version"), "{err}");
}

#[test]
fn oeis_round_trip() {
    let (d, c) = fresh();
    let b = d.path().join("b008929.txt");
    let bs = b.to_str().unwrap();
    assert_eq!(
        run(
            &c,
            &["oeis", "export", "A008929", "--terms", "17", "--path", bs]
        )
        .0,
        0
    );
    let text = fs::read_to_string(&b).unwrap();
    assert!(text.starts_with("1 1\n2 1\n3 2\n4 3\n5 6\n"));
    assert!(text.ends_with("17 16194\n"));
    assert_eq!(run(&c, &["oeis", "check", "A008929", "--path", bs]).0, 0);

    fs::write(&b, text.replace("5 6\n", "5 7\n")).unwrap();
    let (code, out, _) = run(&c, &["oeis", "check", "A008929", "--path", bs]);
    assert_eq!(code, 1);
    assert!(out.contains("mismatch at n=5"));
    let missing = d.path().join("absent.txt");
    assert_eq!(
        run(
            &c,
            &[
                "oeis",
                "check",
                "A008929",
                "--path",
                missing.to_str().unwrap()
            ]
        )
        .0,
        2
    );
    assert_eq!(run(&c, &["oeis", "export", "A000045", "--path", bs]).0, 2);
}

#[test]
fn tree_dump_levels() {
    let (_d, c) = fresh();
    let (code, out, _) = run(&c, &["tree", "dump", "--levels", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1 + 3 + 10);
    assert_eq!(lines[0], "0;");
    assert!(lines[1..4]
        .iter()
        .all(|l| l.starts_with("1;") && l.len() == 4));
    let (_, out, _) = run(&c, &["tree", "dump", "--levels", "4", "--sigma"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("4;")).count(), 6);
    assert_eq!(run(&c, &["tree", "dump", "--levels", "11"]).0, 2);
}

#[test]
fn verify_small_suites() {
    let (_d, c) = fresh();
    let (code, out, _) = run(
        &c,
        &["verify", "oracle", "--g-max", "12", "--sigma-g-max", "17"],
    );
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS oracle: |G(12)| = 1084 vs A'_12 = 1084"));
    let (code, out, _) = run(
        &c,
        &[
            "verify",
            "recursions",
            "--k-max",
            "8",
            "--sigma-k-max",
            "12",
        ],
    );
    assert_eq!(code, 0);
    assert!(out.contains("PASS recursions: A'_7 = 2*A'_6 - A_3 (37 vs 37)"));
    assert!(out.ends_with("0 failed\n"));
}

#[test]
fn binary_exit_codes() {
    let (_d, c) = fresh();
    let bin = env!("CARGO_BIN_EXE_nsatoms");
    let status = Command::new(bin)
        .args(["--cache", c.to_str().unwrap(), "antiatom", "g=5;in=2"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
    let out = Command::new(bin)
        .env("NSATOMS_CACHE", &c)
        .args(["table1", "--max-n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().lines().nth(2),
        Some("2,2,2,.375000,.937500,.5000")
    );
    assert!(c.exists());
}
