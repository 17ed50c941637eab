use std::fs;
use std::process::{Command, Output};

use macdonald::json;
use macdonald::macdonald::{e_poly, EPolyCache};
use macdonald::LaurentPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdonald"))
        .args(args)
        .env_remove("MACDONALD_CACHE_DIR")
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
fn e_json_round_trips_and_is_deterministic() {
    let a = run(&["e", "--n", "2", "--mu", "0,1", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["e", "--n", "2", "--mu", "0,1", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let parsed = json::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed, e_poly(&[0, 1], &EPolyCache::new()).unwrap());
    let j: json::PolyJson = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(j.human, "x2 + ((t - 1)/(q*t - 1))*x1");
    assert_eq!(j.terms[0].exp, vec![0, 1]);
}

#[test]
fn pretty_outputs() {
    let o = run(&["p", "--n", "2", "--lambda", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x2 + x1\n");
    let o = run(&["e", "--n", "2", "--mu", "-1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1^-1 + ((t - 1)/(q*t - 1))*x2^-1\n");
    let o = run(&["a", "--n", "2", "--lambda", "0,0"]);
    assert_eq!(stdout(&o), "x2 - t*x1\n");
}

#[test]
fn two_sided_commands_agree() {
    let o = run(&["ct", "--n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("direct: q + 1") && s.contains("closed: q + 1"), "{s}");
    for args in [
        vec!["spec", "e", "--n", "3", "--mu", "0,2,1"],
        vec!["spec", "p", "--n", "3", "--lambda", "2,1,0"],
        vec!["norm", "--n", "2", "--lambda", "1,0", "--k", "2"],
        vec!["ct", "--n", "3", "--k", "1", "--format", "json"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
    let o = run(&["ct", "--n", "3", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], serde_json::Value::Bool(true));
}

#[test]
fn verify_suites_pass() {
    let o = run(&["verify", "eigenvalues", "--n", "2", "--max-deg", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("eigenvalues: PASS"));
    for s in ["relations", "wcf", "adjoints", "levelshift", "norms"] {
        let o = run(&["verify", s, "--n", "2", "--max-deg", "2"]);
        assert_eq!(o.status.code(), Some(0), "{s}: {}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec![],
        vec!["e", "--mu", "0,1"],
        vec!["e", "--n", "3", "--mu", "0,1"],
        vec!["e", "--n", "2", "--mu", "0,x"],
        vec!["p", "--n", "2", "--lambda", "0,1"],
        vec!["verify", "nosuch", "--n", "2"],
        vec!["spec", "e", "--n", "2"],
        vec!["norm", "--n", "2", "--lambda", "1,0", "--k", "-1"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn broken_fixture_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let bad = dir.path().join("bad.json");
    fs::write(&good, json::to_string(&e_poly(&[0, 1], &EPolyCache::new()).unwrap())).unwrap();
    fs::write(&bad, json::to_string(&LaurentPoly::x_pow(&[0, 1]))).unwrap();
    let args = |p: &std::path::Path| {
        run(&["verify", "eigenvalues", "--n", "2", "--mu", "0,1", "--input", p.to_str().unwrap()])
    };
    assert_eq!(args(&good).status.code(), Some(0));
    let o = args(&bad);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample"), "{}", stdout(&o));
}

#[test]
fn cache_cold_warm_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["e", "--n", "3", "--mu", "1,0,2", "--format", "json", "--cache-dir", d];
    let cold = run(&args);
    assert_eq!(cold.status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);

    let warm = run(&args);
    assert_eq!(warm.stdout, cold.stdout);
    assert!(stderr(&warm).is_empty());

    fs::write(&files[0], "{\"n\": 3, \"mu\": [1, 0, 2], \"poly\": 17}").unwrap();
    let repaired = run(&args);
    assert_eq!(repaired.status.code(), Some(0));
    assert_eq!(repaired.stdout, cold.stdout);
    assert!(stderr(&repaired).contains("warning"), "{}", stderr(&repaired));
    assert!(stderr(&run(&args)).is_empty());

    // The environment variable supplies the default directory.
    let env_dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_macdonald"))
        .args(["e", "--n", "2", "--mu", "0,1"])
        .env("MACDONALD_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_dir(env_dir.path()).unwrap().count(), 1);
}
