use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use kcausal::json;
use kcausal::verify_coupling;
use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn kcausal(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kcausal"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn check_feasible_writes_witness() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("w.json");
    let out = kcausal(&[&"check", &fixture("chain.json"), &fixture("delta_a.json"), &fixture("delta_b.json"), &"--witness", &w]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "feasible");
    assert_eq!(read_json(&w), serde_json::json!({"pairs": [["a", "b", "1"]]}));

    let space = json::parse_spacetime(&fs::read_to_string(fixture("chain.json")).unwrap()).unwrap();
    let e = space.events();
    let mu = json::parse_measure(&fs::read_to_string(fixture("delta_a.json")).unwrap(), e).unwrap();
    let nu = json::parse_measure(&fs::read_to_string(fixture("delta_b.json")).unwrap(), e).unwrap();
    let omega = json::parse_coupling(&fs::read_to_string(&w).unwrap(), e).unwrap();
    assert!(verify_coupling(&space, &omega, &mu, &nu));
}

#[test]
fn check_infeasible_writes_certificate() {
    let dir = TempDir::new().unwrap();
    let c = dir.path().join("c.json");
    let w = dir.path().join("w.json");
    let out = kcausal(&[
        &"check",
        &fixture("chain.json"),
        &fixture("delta_b.json"),
        &fixture("delta_a.json"),
        &"--certificate",
        &c,
        &"--witness",
        &w,
    ]);
    assert_eq!(code(&out), 1);
    let cert = read_json(&c);
    assert_eq!(cert["verdict"], "infeasible");
    assert_eq!(cert["violator"], serde_json::json!(["b"]));
    assert_eq!(cert["mu_B"], "1");
    assert_eq!(cert["nu_KplusB"], "0");
    assert!(!w.exists());
}

#[test]
fn diamond_with_oracle() {
    let out = kcausal(&[
        &"check",
        &fixture("diamond.json"),
        &fixture("diamond_middle.json"),
        &fixture("diamond_ends.json"),
        &"--oracle",
    ]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("oracle agrees"));
}

#[test]
fn bad_measures_are_usage_errors() {
    for (m, needle) in [
        ("not_normalized.json", "5/6"),
        ("unknown_label.json", "z"),
        ("missing.json", "missing.json"),
    ] {
        let out = kcausal(&[&"check", &fixture("chain.json"), &fixture(m), &fixture("delta_a.json")]);
        assert_eq!(code(&out), 2, "{m}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{m}: {err}");
    }
    assert_eq!(code(&kcausal(&[&"check"])), 2);
    assert_eq!(code(&kcausal(&[&"frobnicate"])), 2);
    assert_eq!(code(&kcausal(&[&"--help"])), 0);
}

#[test]
fn closure_outputs() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("k.json");
    assert_eq!(code(&kcausal(&[&"closure", &fixture("chain.json"), &"--out", &out])), 0);
    let doc = read_json(&out);
    assert_eq!(doc["relation"]["pairs"].as_array().unwrap().len(), 6);
    assert_eq!(doc["relation"]["pairs"][0], serde_json::json!(["a", "a"]));
    // Closure output is itself a spacetime the CLI accepts.
    assert_eq!(code(&kcausal(&[&"closure", &out, &"--out", &dir.path().join("k2.json")])), 0);
    assert_eq!(fs::read(&out).unwrap(), fs::read(dir.path().join("k2.json")).unwrap());

    let anti = kcausal(&[&"closure", &fixture("antichain.json")]);
    let doc: Value = serde_json::from_slice(&anti.stdout).unwrap();
    assert_eq!(doc["relation"]["pairs"], serde_json::json!([["a", "a"], ["b", "b"]]));
}

#[test]
fn sprinkle_closure_is_deterministic() {
    let a = kcausal(&[&"closure", &fixture("sprinkle.json")]);
    let b = kcausal(&[&"closure", &fixture("sprinkle.json")]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn upsets_of_chain() {
    let out = kcausal(&[&"upsets", &fixture("chain.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "[]\n[\"c\"]\n[\"b\",\"c\"]\n[\"a\",\"b\",\"c\"]\n");
}

#[test]
fn timefn_enumeration_and_sampling() {
    let lines = |out: &Output| String::from_utf8_lossy(&out.stdout).lines().count();
    let chain = kcausal(&[&"timefn", &fixture("chain.json"), &"--enumerate"]);
    assert_eq!((code(&chain), lines(&chain)), (0, 1));
    let anti = kcausal(&[&"timefn", &fixture("antichain.json"), &"--enumerate"]);
    assert_eq!((code(&anti), lines(&anti)), (0, 2));

    let s1 = kcausal(&[&"timefn", &fixture("diamond.json"), &"--sample", &"5", &"--seed", &"3"]);
    let s2 = kcausal(&[&"timefn", &fixture("diamond.json"), &"--sample", &"5", &"--seed", &"3"]);
    assert_eq!((code(&s1), lines(&s1)), (0, 5));
    assert_eq!(s1.stdout, s2.stdout);

    let cyclic = kcausal(&[&"timefn", &fixture("cyclic.json"), &"--enumerate"]);
    assert_eq!(code(&cyclic), 1);
    let err = String::from_utf8_lossy(&cyclic.stderr);
    assert!(err.contains("(`a`, `b`)") && err.contains("(`b`, `a`)"), "{err}");

    assert_eq!(code(&kcausal(&[&"timefn", &fixture("chain.json")])), 2);
    assert_eq!(code(&kcausal(&[&"timefn", &fixture("chain.json"), &"--sample", &"2"])), 2);
}

#[test]
fn generate_and_check_round_trip() {
    let dir = TempDir::new().unwrap();
    let st = dir.path().join("st.json");
    let mu = dir.path().join("mu.json");
    let explicit = dir.path().join("explicit.json");
    let gen = |args: &[&dyn AsRef<std::ffi::OsStr>]| {
        let out = kcausal(args);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    };
    gen(&[&"generate", &"--kind", &"random-dag", &"--n", &"12", &"--seed", &"5", &"--out", &st]);
    gen(&[&"generate", &"--kind", &"measure", &"--spacetime", &st, &"--atoms", &"4", &"--seed", &"9", &"--out", &mu]);
    gen(&[&"generate", &"--kind", &"sprinkle", &"--n", &"30", &"--seed", &"5", &"--explicit", &"--out", &explicit]);
    assert_eq!(read_json(&mu)["weights"].as_object().unwrap().len(), 4);
    assert!(read_json(&explicit)["coords"].is_array());

    // Every measure precedes itself.
    assert_eq!(code(&kcausal(&[&"check", &st, &mu, &mu, &"--oracle"])), 0);
    assert_eq!(code(&kcausal(&[&"closure", &explicit])), 0);
    assert_eq!(code(&kcausal(&[&"generate", &"--kind", &"measure", &"--spacetime", &st, &"--atoms", &"13", &"--seed", &"1"])), 2);
    assert_eq!(code(&kcausal(&[&"generate", &"--kind", &"sprinkle", &"--seed", &"1"])), 2);
}

#[test]
fn verify_suites() {
    let dir = TempDir::new().unwrap();
    let r = dir.path().join("report.json");
    let out = kcausal(&[&"verify", &"--suite", &"thm4-oracle", &"--trials", &"200", &"--seed", &"7", &"--report", &r]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_json(&r)["suites"][0]["passed"], 200);

    let out = kcausal(&[&"verify", &"--suite", &"all", &"--trials", &"50", &"--seed", &"1", &"--report", &r]);
    assert_eq!(code(&out), 0);
    let report = read_json(&r);
    assert_eq!(report["suites"].as_array().unwrap().len(), 7);

    let bad = kcausal(&[&"verify", &"--suite", &"thm9"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("lemma6"));
    assert_eq!(code(&kcausal(&[&"verify", &"--suite", &"minguzzi", &"--max-events", &"12"])), 2);
}
