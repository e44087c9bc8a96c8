use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_jacobi-gaps");

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn spectrum_of_p2_instance() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bands.csv");
    let o = run(&["spectrum", &data("p2.json"), "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[-2.2360679775, -1.0000000000]"), "{text}");
    assert!(text.contains("[1.0000000000, 2.2360679775]"));
    assert!(text.contains("length 2.0000000000"));
    assert!(text.contains("M = 1.5000000000"));
    let rows = fs::read_to_string(csv).unwrap();
    assert_eq!(rows.lines().next(), Some("kind,index,lo,hi,length,closed"));
    assert_eq!(rows.lines().count(), 4);
    assert!(rows
        .contains("gap,1,-1.0000000000000000e0,1.0000000000000000e0,2.0000000000000000e0,false"));
}

#[test]
fn spectrum_of_free_laplacian() {
    let o = run(&["spectrum", &data("free.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[-2.0000000000, 2.0000000000]"));
    assert!(text.contains("gaps: none"));
}

#[test]
fn invalid_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let malformed = write(dir.path(), "bad.json", "{\"a\": [1,");
    let zero = write(dir.path(), "zero.json", r#"{"a":[1,0],"b":[0,0]}"#);
    let empty = write(
        dir.path(),
        "empty.json",
        r#"{"seed":1,"count":0,"p_min":2,"p_max":3}"#,
    );
    for args in [
        vec!["spectrum", malformed.as_str()],
        vec!["verify", zero.as_str()],
        vec!["spectrum", "/nonexistent/config.json"],
        vec![
            "sample",
            &data("p2.json"),
            "--from",
            "0",
            "--to",
            "1",
            "--points",
            "1",
        ],
        vec![
            "sample",
            &data("p2.json"),
            "--from",
            "1",
            "--to",
            "0",
            "--points",
            "5",
        ],
        vec!["sweep", empty.as_str()],
        vec!["oracle4", "1", "0", "1", "1"],
        vec!["oracle4", "1", "2"],
        vec!["nonsense"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["verify", &zero]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("a[1]"));
}

#[test]
fn verify_reports_every_record() {
    let o = run(&["verify", &data("p2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let first = text
        .lines()
        .find(|l| l.starts_with("omega_b_upper"))
        .unwrap();
    assert!(
        first.contains("ratio = 1.000000") && first.ends_with("PASS"),
        "{first}"
    );
    assert!(text.contains("SKIPPED(M < 2)"));

    let o = run(&["verify", &data("constant7.json"), "--strict"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().filter(|l| l.contains("lhs =")) {
        assert!(
            line.ends_with("PASS") || line.ends_with("DEGENERATE"),
            "{line}"
        );
    }
}

#[test]
fn sample_rows() {
    let o = run(&[
        "sample",
        &data("p2.json"),
        "--from",
        "-3",
        "--to",
        "3",
        "--points",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (x, y) = l.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    assert_eq!(text.lines().next(), Some("lambda,discriminant"));
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[3], (0.0, -3.0));

    let o = run(&[
        "sample",
        &data("free.json"),
        "--from",
        "-2",
        "--to",
        "2",
        "--points",
        "3",
    ]);
    let ys: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.parse().unwrap())
        .collect();
    assert_eq!(ys, [-2.0, 0.0, 2.0]);
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "s.json",
        r#"{"seed":42,"count":40,"p_min":2,"p_max":8,"a_lo":0.5,"a_hi":2,"b_lo":-1,"b_hi":1}"#,
    );
    let a = run(&["sweep", &cfg]);
    let b = run(&["sweep", &cfg]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(
        text.lines().next(),
        Some("seed_index,p,omega_a,omega_b,max_gap,ratio_b_upper,ratio_a_upper,ratio_lower,M,all_pass")
    );
    assert_eq!(text.lines().count(), 41);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    assert!(String::from_utf8_lossy(&a.stderr).contains("40 samples, 0 failures"));
}

#[test]
fn perturbation_sweep_passes() {
    let o = run(&["sweep", &data("perturb.json")]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (wa, wb, g): (f64, f64, f64) = (
            f[2].parse().unwrap(),
            f[3].parse().unwrap(),
            f[4].parse().unwrap(),
        );
        assert!(
            g <= 2.0 * (wb + 2.0 * wa) && 2.0 * (wb + 2.0 * wa) <= 6.1e-3,
            "{line}"
        );
    }
}

#[test]
fn oracle4_reports() {
    let o = run(&["oracle4", "1", "2", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("|gamma_int| = 2.0000000000"));
    assert!(text.contains("|gamma_ext| = 0.0000000000"));
    assert!(text.contains("cross-check deviation"));

    let text = stdout(&run(&["oracle4", "1", "1", "2", "2"]));
    assert!(text.contains("|gamma_int| = 0.0000000000"));
    assert!(text.contains("|gamma_ext| = 1.4142135624"));

    let text = stdout(&run(&["oracle4", "1", "1", "1", "1"]));
    assert!(text.contains("single band [-2.0000000000, 2.0000000000]"));
}
