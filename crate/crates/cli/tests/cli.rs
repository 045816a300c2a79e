use std::path::PathBuf;
use std::process::{Command, Output};

fn coend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coend")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coend_l_for_sweedler() {
    let o = coend(&["coend-L", "--algebra", "sweedler"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "dim L = 4"));
}

#[test]
fn genus_two_blocks_for_z2() {
    let o = coend(&["blocks", "--algebra", "z2", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("4"));
}

#[test]
fn blocks_with_insertions_as_json() {
    let o = coend(&["blocks", "--algebra", "s3", "--genus", "1", "--in", "std", "--out", "std", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 5);
    assert_eq!(v["oracle_dimension"], 5);
    assert_eq!(v["match"], true);
    assert_eq!(v["insertions"][0]["orientation"], "outgoing");
}

#[test]
fn verify_all_on_the_double() {
    let o = coend(&["verify", "--suite", "all", "--algebra", "double-z2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("double-z2: 88 passed, 0 failed, 0 skipped\n"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "all", "--algebra", "z2", "--format", "json"];
    let (a, b) = (coend(&args), coend(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["exit_code"], 0);
    let records = v["records"].as_array().unwrap();
    assert_eq!(v["summary"]["passed"].as_u64().unwrap() as usize + 1, records.len());
    for r in records {
        assert!(r["claim"].is_string() && r["witnesses"].is_object());
    }
}

#[test]
fn verify_single_suite_with_generators() {
    let o = coend(&["verify", "--suite", "delta", "--algebra", "s3", "--gens", "triv,std,reg"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS [delta]")).count(), 9);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--suite", "nope", "--algebra", "z2"],
        vec!["blocks", "--algebra", "z2", "--bogus"],
        vec!["validate", "--algebra", "no-such-algebra"],
        vec!["blocks", "--algebra", "z2", "--in", "nonsense"],
        vec![],
    ] {
        assert_eq!(coend(&args).status.code(), Some(2), "{args:?}");
    }
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn double_round_trips_through_a_file() {
    let o = coend(&["double", "--algebra", "z2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("double-z2.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    let o = coend(&["validate", "--algebra", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = coend(&["coend-L", "--algebra", p]);
    assert!(stdout(&o).contains("pairing rank 4 of 4: modular"));
    let o = coend(&["double", "--algebra", "z2"]);
    assert!(stdout(&o).contains("axioms: pass"));
}

#[test]
fn broken_algebra_fails_validation() {
    let o = coend(&["double", "--algebra", "z2", "--format", "json"]);
    let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // break the antipode
    let s = v["antipode"].as_array_mut().unwrap();
    s.swap(0, 1);
    let path = scratch("broken.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let o = coend(&["validate", "--algebra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn catalog_lists_every_algebra() {
    let o = coend(&["catalog", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["ground", "z2", "s3", "sweedler", "double-z2"]);
}
