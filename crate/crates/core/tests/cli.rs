use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_kneser-lab"));
    c.env_remove("KNESER_LAB_BUDGET");
    c
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn verify_all_passes() {
    let (code, out) = run(&["verify", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains(" 0 fail, 0 exhausted"));
    assert!(!out.contains("FAIL "));
}

#[test]
fn verify_json_is_deterministic_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    let strip = |path: &std::path::Path| {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        fn zero(v: &mut Value) {
            match v {
                Value::Object(m) => {
                    for (k, x) in m.iter_mut() {
                        if k == "elapsed" || k == "seconds" {
                            *x = Value::from(0.0);
                        } else {
                            zero(x);
                        }
                    }
                }
                Value::Array(a) => a.iter_mut().for_each(zero),
                _ => {}
            }
        }
        zero(&mut v);
        serde_json::to_string(&v).unwrap()
    };
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(run(&["verify", "all", "--json", a.to_str().unwrap()]).0, 0);
    assert_eq!(run(&["--sequential", "verify", "all", "--json", b.to_str().unwrap()]).0, 0);
    assert_eq!(strip(&a), strip(&b));

    let reports: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    for r in &reports {
        for field in ["claim_id", "parameters", "expected", "computed", "status", "evidence", "elapsed"] {
            assert!(r.get(field).is_some(), "missing {field} in {r}");
        }
        assert!(r["expected"]["provenance"].is_string());
    }
}

#[test]
fn shifts_prints_both_provenances() {
    let (code, out) = run(&["shifts", "stable:n=8,k=2,s=2", "--predict"]);
    assert_eq!(code, 0);
    assert_eq!(out, "brute_force: {r1, r7}\nlemma_formula: {r1, r7}\nagree: true\n");
}

#[test]
fn chi_prints_value_and_certificate() {
    let (code, out) = run(&["chi", "stable:n=8,k=2,s=3"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("chi = 5"));
    assert_eq!(lines.next(), Some("closed form: 5 (s+2)"));
    let cert: Value = serde_json::from_str(&lines.collect::<Vec<_>>().join("\n")).unwrap();
    assert_eq!(cert["kind"], "coloring");
    assert_eq!(cert["coloring"].as_array().unwrap().len(), 12);
}

#[test]
fn construct_then_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.dimacs");
    let f = file.to_str().unwrap();
    assert_eq!(run(&["construct", "kneser:n=5,k=2", "--out", f]).0, 0);
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.contains("p edge 10 15"));
    let (code, out) = run(&["chi", f]);
    assert_eq!(code, 0);
    assert!(out.starts_with("chi = 3\n"));
    let (code, out) = run(&["iso", f, "kneser:n=5,k=2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("isomorphic"));
}

#[test]
fn core_and_hom_verbs() {
    let (code, out) = run(&["core", "cyclepow:n=6,a=1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("not a core"));
    assert_eq!(run(&["core", "kneser:n=5,k=2"]), (0, "core\n".into()));
    let (code, out) = run(&["hom", "stable:n=6,k=2,s=2", "caydih:n=6,gens=r1,r5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("not_exists"));
    let (code, out) = run(&["hom", "circular:n=7,k=3", "circular:n=5,k=2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("found"));
    let (_, out) = run(&["iso", "kneser:n=5,k=2", "cyclepow:n=10,a=1"]);
    assert_eq!(out, "not isomorphic\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["chi", "stable:n=8,k=2,s=3", "--budget", "2,-"]).0, 3);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["chi", "/nonexistent/file"]).0, 64);
    assert_eq!(run(&["chi", "kneser:n=3,k=2"]).0, 64);
    assert_eq!(run(&["verify", "unknown-suite"]).0, 64);

    let out = bin()
        .env("KNESER_LAB_BUDGET", "2,-")
        .args(["core", "stable:n=8,k=2,s=3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn manifest_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.toml");
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/suites/default.toml"))
        .unwrap()
        .replace("n_max = 16", "n_max = 9");
    std::fs::write(&path, text).unwrap();
    let (code, out) = run(&["verify", "shift-grid", "--manifest", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(!out.contains("n=10]"));
    assert!(out.contains("shift-grid [k=2,s=4,n=9]"));

    std::fs::write(&path, "not toml [").unwrap();
    assert_eq!(run(&["verify", "all", "--manifest", path.to_str().unwrap()]).0, 64);
}

#[test]
fn probe_never_fails() {
    let (code, out) = run(&["probe", "--n", "9..10", "--k", "2", "--s", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("conjecture-chi [stable:n=9,k=2,s=3] (probe) expected=6 computed=6"));
    let (code, out) = run(&["probe", "--n", "12", "--k", "2", "--s", "3", "--nodes", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("EXHAUSTED"));
}
