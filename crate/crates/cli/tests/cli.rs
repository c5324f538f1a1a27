use std::fs;
use std::process::{Command, Output};

fn tbounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbounds"))
        .args(args)
        .env_remove("TBOUNDS_VERTEX_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn table_csv_has_provenance() {
    let o = tbounds(&["table", "--nmax", "4", "--dmax", "3", "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.starts_with("n,d,lower,upper,exact,lower_provenance,upper_provenance\n"));
    assert!(s.contains("3,2,14,14,true,even-zeros(n=3),\"mix(T(2,2)+T(2,1))\""));
    assert_eq!(s.lines().count(), 1 + 4 * 3);
}

#[test]
fn reruns_are_byte_identical() {
    let runs: [&[&str]; 4] = [
        &["table", "--nmax", "6", "--dmax", "5", "--format", "records"],
        &["construct", "--family", "greedy", "--n", "4", "--d", "3", "--order", "shuffled", "--seed", "11"],
        &["construct", "--family", "phi-shift", "--n", "4", "--d", "3", "--trials", "50", "--seed", "3"],
        &["asym", "--step", "0.05"],
    ];
    for args in runs {
        let a = tbounds(args);
        let b = tbounds(args);
        assert!(a.status.success(), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let one = tbounds(&["--threads", "1", "asym", "--step", "0.1"]);
    let four = tbounds(&["--threads", "4", "asym", "--step", "0.1"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exact_witness_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t22.txt");
    let p = path.to_str().unwrap();
    let o = tbounds(&["exact", "--n", "2", "--d", "2", "--witness", p, "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("d1,2,2,5,5,exact"));
    let v = tbounds(&["verify", "--code", p, "--d", "2", "--format", "csv"]);
    assert!(v.status.success());
    assert!(stdout(&v).contains("d1,2,5,2,2,true"));
    let too_far = tbounds(&["verify", "--code", p, "--d", "3"]);
    assert_eq!(too_far.status.code(), Some(1));
    assert!(stderr(&too_far).contains("below the required 3"));
}

#[test]
fn hamming_search_and_codebook() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.txt");
    let p = path.to_str().unwrap();
    let o = tbounds(&[
        "exact", "--metric", "hamming", "--q", "3", "--n", "3", "--d", "2", "--witness", p,
        "--format", "records",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("\"lower\":9"));
    assert!(fs::read_to_string(&path).unwrap().starts_with("# n=3 metric=hamming q=3"));
    let v = tbounds(&["verify", "--code", p, "--d", "2"]);
    assert!(v.status.success(), "{}", stderr(&v));
}

#[test]
fn constructions_report_distance_and_bound() {
    for family in ["even-zeros", "greedy", "signed-binary", "support", "coset-scan", "phi-shift"] {
        let d = if family == "even-zeros" { "2" } else { "3" };
        let o = tbounds(&["construct", "--family", family, "--n", "4", "--d", d, "--format", "records"]);
        assert!(o.status.success(), "{family}: {}", stderr(&o));
        let row: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        assert_eq!(row["distance_ok"], true, "{family}");
        assert_eq!(row["meets_bound"], true, "{family}");
    }
}

#[test]
fn construction_from_input_codebook() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("outer.txt");
    fs::write(&input, "# n=3 metric=hamming q=2\n0 0 0\n1 1 1\n").unwrap();
    let out = dir.path().join("code.txt");
    let o = tbounds(&[
        "construct", "--family", "support", "--n", "3", "--d", "3",
        "--input", input.to_str().unwrap(), "--witness", out.to_str().unwrap(), "--format", "csv",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# n=3 metric=d1\n"));
    // one word from the zero outer word, four from A2(3,2) on the full support
    assert_eq!(text.lines().count(), 1 + 5);
}

#[test]
fn counts_subcommands() {
    let pairs = tbounds(&["counts", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&pairs), "n,w,pairs\n2,0,9\n2,1,24\n2,2,28\n2,3,16\n2,4,4\n");
    let shell = tbounds(&["counts", "--n", "3", "--kind", "shell", "--w", "2", "--format", "csv"]);
    assert!(stdout(&shell).contains("3,2,4,5,12"));
    let ball = tbounds(&["counts", "--n", "3", "--kind", "ball", "--format", "csv"]);
    assert!(stdout(&ball).contains("3,2,333,37/3,3"));
    let missing = tbounds(&["counts", "--n", "3", "--kind", "shell"]);
    assert_eq!(missing.status.code(), Some(3));
    assert!(stderr(&missing).contains("--w"));
}

#[test]
fn asym_families_and_optimizer_report() {
    let o = tbounds(&["asym", "--from", "0.85", "--to", "0.85", "--families", "lower_binary,tau_lower_ggv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = stdout(&o);
    assert_eq!(s.lines().next().unwrap(), "delta,tau_lower_binary,tau_lower_ggv,ggv_omega,ggv_beta");
    let bad = tbounds(&["asym", "--families", "nonsense"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stderr(&bad).contains("unknown family `nonsense`"));
    let v = tbounds(&["asym", "--verify-optimizers", "--format", "csv"]);
    assert!(v.status.success(), "{}", stderr(&v));
    assert!(!stdout(&v).contains(",fail"));
}

#[test]
fn malformed_codebook_is_diagnosed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "# n=3 metric=d1\n1 0 -1\n1 2 0\n").unwrap();
    let o = tbounds(&["verify", "--code", path.to_str().unwrap(), "--d", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert!(err.contains("malformed codebook"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn vertex_limit_is_enforced() {
    let o = Command::new(env!("CARGO_BIN_EXE_tbounds"))
        .args(["exact", "--n", "4", "--d", "3"])
        .env("TBOUNDS_VERTEX_LIMIT", "27")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("81 vertices"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tbounds(&["table", "--nmax", "3", "--dmax", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(tbounds(&["exact", "--n", "3"]).status.code(), Some(2));
    assert_eq!(tbounds(&["construct", "--family", "nope", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = tbounds(&["--out", path.to_str().unwrap(), "--format", "csv", "counts", "--n", "1"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), "n,w,pairs\n1,0,3\n1,1,4\n1,2,2\n");
}
