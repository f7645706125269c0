use std::process::Command;

use num_bigint::BigInt;
use pgcd::serial::from_json;
use pgcd::sylvester::pgcd;
use pgcd::DegreeVector;

fn pgcd_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pgcd")).args(args).output().expect("binary runs")
}

#[test]
fn compute_json_round_trips() {
    let out = pgcd_bin(&["compute", "--degrees", "3,3,4", "--algo", "sylvester", "--format", "json"]);
    assert!(out.status.success());
    let t = from_json::<BigInt>(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(t.len(), 10);
    assert_eq!(t, pgcd::<BigInt>(&DegreeVector::new(vec![3, 3, 4]).unwrap()).unwrap());
}

#[test]
fn compute_habicht_is_monic() {
    let out = pgcd_bin(&["compute", "--degrees", "3,3,4", "--algo", "habicht", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["monic"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 10);
}

#[test]
fn compute_writes_file_with_explicit_guards() {
    let dir = std::env::temp_dir().join(format!("pgcd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    let out = pgcd_bin(&[
        "compute", "--degrees", "2,2", "--algo", "sylvester", "--format", "json", "--explicit-conditions", "--normalize",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["cases"][2]["conditions"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_degrees_fail() {
    let out = pgcd_bin(&["compute", "--degrees", "4,3", "--algo", "sylvester", "--format", "text"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("d0 must be the minimum"));
}

#[test]
fn verify_exit_status() {
    let ok = pgcd_bin(&["verify", "--degrees", "2,2,2,2", "--algo", "sylvester", "--trials", "200", "--seed", "42", "--bound", "20"]);
    assert!(ok.status.success());
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["passes"], 200);
    let bad = pgcd_bin(&["verify", "--degrees", "3,3,4", "--algo", "habicht", "--trials", "50", "--seed", "1", "--bound", "20", "--mutate"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn counts_output() {
    let out = pgcd_bin(&["counts", "--d0", "3", "--m", "5", "--n", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "vardulakis,barnett,kakie_ho,proposed\n1114828,4928,198,10\n");
    assert!(!pgcd_bin(&["counts", "--d0", "5", "--m", "3", "--n", "2"]).status.success());
}

#[test]
fn bench_csv() {
    let out = pgcd_bin(&["bench", "--degrees", "2,2,2", "--degrees", "2,3", "--algos", "sylvester,recursive", "--repeat", "2"]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "degrees,algo,n_cases,max_param_degree,wall_ms");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("2 2 2,sylvester,6,"));
    assert!(lines[4].starts_with("2 3,recursive,3,"));
}
