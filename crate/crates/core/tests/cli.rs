use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn altmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(cmd: &str, file: &Path) -> Output {
    altmod(&[cmd, file.to_str().unwrap()])
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn kernel_of_the_example_module() {
    let out = run("kernel", &fixture("degenerate_z2_z4_z8.json"));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["order"], 4);
    assert_eq!(v["invariant_factors"], serde_json::json!([4]));
    assert_eq!(v["generators"], serde_json::json!([[1, 2, 2]]));
}

#[test]
fn lagrangian_reports_n() {
    let out = run("lagrangian", &fixture("degenerate_z2_z4_z8.json"));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 16);
    assert_eq!(v["order"], 16);
}

#[test]
fn classify_needs_a_symplectic_module() {
    let out = run("classify", &fixture("symplectic_z4.json"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["b_orders"], serde_json::json!([4]));

    let out = run("classify", &fixture("degenerate_z2_z4_z8.json"));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("kernel nontrivial"));
}

#[test]
fn embed_then_verify_on_every_module_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["degenerate_z2_z4_z8.json", "trivial_z2_z4.json", "symplectic_z4.json"] {
        let cert = dir.path().join(format!("cert_{name}"));
        let out = altmod(&["embed", fixture(name).to_str().unwrap(), "-o", cert.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
        assert!(out.stdout.is_empty());
        let out = run("verify", &cert);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
        assert_eq!(json(&out)["verdict"], "ok");
    }
}

#[test]
fn hand_certificates() {
    for name in ["cert_stretched_z8.json", "cert_identity_z2_z4.json"] {
        let out = run("verify", &fixture(name));
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
    let out = run("verify", &fixture("cert_corrupted.json"));
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "violations");
    assert!(v["violations"][0].as_str().unwrap().starts_with("well-definedness"));
}

#[test]
fn output_is_deterministic_and_canonical() {
    let a = run("embed", &fixture("degenerate_z2_z4_z8.json"));
    let b = run("embed", &fixture("degenerate_z2_z4_z8.json"));
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, &a.stdout).unwrap();
    // The certificate's source is itself a canonical module document.
    let v = json(&a);
    let source = dir.path().join("source.json");
    std::fs::write(&source, altmod::document::to_canonical_json(&v["source"])).unwrap();
    assert_eq!(run("embed", &source).stdout, a.stdout);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with("}\n"));
    assert_eq!(altmod::document::to_canonical_json(&v), text);
}

#[test]
fn invalid_documents_exit_2_naming_the_invariant() {
    let out = run("kernel", &fixture("not_alternate.json"));
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("alternate"));

    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("broken.json", "{\"orders\": [2,", "malformed"),
        ("skew.json", r#"{"orders":[4,4],"gram":[["0/1","1/4"],["1/4","0/1"]]}"#, "antisymmetry"),
        ("order.json", r#"{"orders":[2,4],"gram":[["0/1","1/4"],["3/4","0/1"]]}"#, "order-compatibility"),
        ("fraction.json", r#"{"orders":[2],"gram":[["a/b"]]}"#, "gram[0][0]"),
        ("one.json", r#"{"orders":[1],"gram":[["0/1"]]}"#, "orders[0]"),
    ];
    for (name, body, needle) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let out = run("lagrangian", &path);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(stderr(&out).contains(needle), "{name}: {}", stderr(&out));
    }
    let out = altmod(&["kernel", "/nonexistent/module.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = altmod(&["frobnicate", fixture("degenerate_z2_z4_z8.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_respects_the_bound() {
    let out = run("check", &fixture("degenerate_z2_z4_z8.json"));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    assert_eq!(v["census"]["maximal_isotropic_orders"], serde_json::json!([16]));

    let out = altmod(&["check", fixture("degenerate_z2_z4_z8.json").to_str().unwrap(), "--bound", "32"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("bound"));
}
