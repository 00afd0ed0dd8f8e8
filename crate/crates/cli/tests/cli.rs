use std::process::{Command, Output};

use dignet_core::BitMatrix;

fn dignet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dignet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).expect("valid JSON")
}

#[test]
fn identities_hold_up_to_64() {
    for m in ["1", "2", "7", "33", "64"] {
        let o = dignet(&["identities", "-m", m]);
        assert_eq!(o.status.code(), Some(0), "m={m}");
        assert_eq!(stdout(&o).trim(), "pass");
    }
    let o = dignet(&["identities", "-m", "5", "--format", "json"]);
    assert_eq!(json(&o), serde_json::json!({"m": 5, "holds": true}));
}

#[test]
fn tvalue_examples() {
    let o = dignet(&["tvalue", "-m", "3", "I", "P", "J"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["t"], 0);
    assert_eq!(v["s"], 3);
    assert!(v["witness"].is_null());

    let o = dignet(&["tvalue", "-m", "2", "I", "I"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["t"], 1);
    assert_eq!(v["witness"], serde_json::json!([1, 1]));
}

#[test]
fn geometric_agrees_with_rank() {
    for args in [["I", "P", "J"], ["I", "PJ", "PJPJ"], ["I", "I", "P"]] {
        let mut full = vec!["tvalue", "-m", "4", "--geometric"];
        full.extend(args);
        let o = dignet(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v = json(&o);
        assert_eq!(v["t"], v["geometric_t"]);
    }
}

#[test]
fn points_listing() {
    let o = dignet(&["points", "-m", "2", "I", "P"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0/4\t0/4\n2/4\t2/4\n1/4\t3/4\n3/4\t1/4\n");

    let o = dignet(&["points", "-m", "2", "I", "P", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn decompose_example_and_negative() {
    let o = dignet(&["decompose", "-m", "2", "01,11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "L = 10,11");

    let o = dignet(&["decompose", "-m", "3", "I"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not decomposable"));
}

#[test]
fn decompose_recomposes_every_orbit_member() {
    let m = 3;
    let o = dignet(&["orbit", "-m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let pj = &BitMatrix::pascal_p(m).unwrap() * &BitMatrix::antidiag_j(m).unwrap();
    let members: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(members.len(), 8);
    for b_text in &members {
        let b: BitMatrix = b_text.parse().unwrap();
        assert_eq!(&b.to_compact(), b_text, "printed matrices re-parse bit-exactly");
        let d = dignet(&["decompose", "-m", "3", b_text, "--format", "json"]);
        assert_eq!(d.status.code(), Some(0));
        let v = json(&d);
        let l: BitMatrix = v["l"].as_str().unwrap().parse().unwrap();
        assert!(l.is_unipotent_lower());
        assert_eq!(&(&l * &pj) * &l.inverse().unwrap(), b);
    }
}

#[test]
fn verify_theorem_small_and_worker_invariant() {
    let run = |workers: &str| {
        let o = dignet(&["verify-theorem", "-m", "3", "--workers", workers]);
        assert_eq!(o.status.code(), Some(0));
        let mut v = json(&o);
        assert_eq!(v["equal_sets"], true);
        assert_eq!(v["all_cubes_identity"], true);
        v["elapsed_ms"] = serde_json::json!(0);
        v
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn verify_theorem_rejects_m6() {
    let o = dignet(&["verify-theorem", "-m", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_report_position() {
    let o = dignet(&["tvalue", "-m", "2", "I", "10,1x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1") && err.contains("column 5"), "{err}");

    let o = dignet(&["tvalue", "-m", "3", "I", "11,10"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dignet(&["tvalue", "-m", "0", "I"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn matrix_from_file() {
    let dir = std::env::temp_dir().join(format!("dignet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.txt");
    std::fs::write(&path, "11\n10\n").unwrap();
    let o = dignet(&["tvalue", "-m", "2", "I", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("t = 0"));

    std::fs::write(&path, "11\n\n1z\n").unwrap();
    let o = dignet(&["tvalue", "-m", "2", "I", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sequence_tuples_and_out_file() {
    let o = dignet(&["sequence", "-m", "2", "11,10", "--seed", "10", "-s", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2/4\t3/4\n3/4\t1/4\n1/4\t2/4\n");

    let path = std::env::temp_dir().join(format!("dignet-seq-{}.json", std::process::id()));
    let o = dignet(&[
        "sequence", "-m", "3", "PJ", "--seed", "100", "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["period"], 3);
    std::fs::remove_file(&path).ok();

    let o = dignet(&["sequence", "-m", "2", "11,10", "--seed", "00"]);
    assert_eq!(o.status.code(), Some(2));
}
