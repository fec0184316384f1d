use skein::frobenius::{alpha, AlgebraElement};
use skein::solidtorus::{kirby_closed_form, KirbyColorJson};
use skein::surfaces::{SurfaceComponent, SurfaceJson, SurfacePresentation};
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn kirby_tensor_output() {
    let o = run(&["kirby", "--algebra", "alpha", "--n", "1", "--format", "tensor"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/2 * 1⊗1 + 1/2*a^-1 * x⊗x\n");
}

#[test]
fn kirby_methods_agree() {
    let o = run(&["kirby", "--n", "2", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let closed = run(&["kirby", "--n", "2", "--method", "closed"]);
    assert_eq!(stdout(&o), stdout(&closed));
}

#[test]
fn bar_natan_is_rejected() {
    let o = run(&["kirby", "--algebra", "bar_natan", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error: pairing singular: algebra not strongly separable"));
}

#[test]
fn verify_kirby_suite_passes() {
    let o = run(&["verify", "--suite", "kirby", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["kirby", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let missing = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("does-not-exist.json");
    assert_eq!(run(&["eval", "--surface", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["kirby", "--n", "3"][..], &["verify", "--suite", "invariants", "--seed", "7"], &["walks", "--n", "4"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn kirby_json_round_trips() {
    let o = run(&["kirby", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: KirbyColorJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j, kirby_closed_form(2).to_json());
}

#[test]
fn pairing_and_walks() {
    let o = run(&["pairing", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("det = 4*a^1"), "{}", stdout(&o));
    let walks = stdout(&run(&["walks", "--n", "3"]));
    assert_eq!(walks.lines().count(), 10);
    assert_eq!(walks.lines().next(), Some("000111"));
}

#[test]
fn eval_reads_surface_json() {
    let a = alpha();
    let torus = SurfacePresentation::new(&a, vec![SurfaceComponent::torus(AlgebraElement::one(&a))]).unwrap();
    let path = temp_file("torus.json", &serde_json::to_string(&torus.to_json()).unwrap());
    let o = run(&["eval", "--surface", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2 * ∅");

    let punctured = r#"{"components":[{"chi":0,"boundary":0,"orientable":true,"label":"1","punctures":1}],"inputs":["x"]}"#;
    let path = temp_file("punctured.json", punctured);
    assert_eq!(stdout(&run(&["eval", "--surface", path.to_str().unwrap()])).trim(), "0");

    let annulus = r#"{"components":[{"chi":0,"boundary":2,"orientable":true,"label":"x","punctures":0}]}"#;
    let path = temp_file("annulus.json", annulus);
    let o = run(&["eval", "--surface", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t: skein::frobenius::TensorJson = serde_json::from_str(&stdout(&o)).unwrap();
    let x = AlgebraElement::basis(&a, 1);
    assert_eq!(skein::frobenius::TensorElement::from_json(&a, &t).unwrap(), x.comul());

    let back: SurfaceJson = serde_json::from_str(annulus).unwrap();
    assert!(SurfacePresentation::from_json(&back).is_ok());
}

#[test]
fn invariant_tables() {
    let s2 = stdout(&run(&["invariant", "--example", "s2xb2", "--max-k", "2"]));
    assert!(s2.contains("S^2 ↦ 1/2*a^-1"), "{s2}");
    assert!(s2.contains("S^4 ↦ 3/8*a^-2"), "{s2}");
    assert!(s2.contains("D ↦ 0"));
    let b3 = stdout(&run(&["invariant", "--example", "b3xs1"]));
    assert!(b3.contains("D ↦ 1") && b3.contains("∅ ↦ 1"), "{b3}");
    let t2 = stdout(&run(&["invariant", "--example", "t2xb2", "--r", "1"]));
    assert!(t2.contains("T^2 ↦ 2"), "{t2}");
    let word = run(&["invariant", "--example", "b3xs1", "--word", "DDS"]);
    assert_eq!(word.status.code(), Some(0));
}
