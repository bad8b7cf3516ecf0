use std::process::{Command, Output};

use serde_json::Value;

fn gtsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtsurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let o = gtsurf(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

#[test]
fn basis_text_lists_seven_forms() {
    let o = gtsurf(&["basis", "--d", "3", "--t", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let forms: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(forms.len(), 7);
    assert!(forms.contains(&"x0^3x1^3 + x0^3x2^3"));
    assert!(forms.contains(&"x1^3x2^3"));
}

#[test]
fn basis_json_has_25_entries() {
    let v = json(&["basis", "--d", "4", "--t", "2", "--format", "json"]);
    assert_eq!(v["count"], 25);
    assert_eq!(v["basis"].as_array().unwrap().len(), 25);
    for b in v["basis"].as_array().unwrap() {
        let kind = b["kind"].as_str().unwrap();
        assert!(matches!(kind, "monomial" | "binomial"));
        assert_eq!(b.get("mirror").is_some(), kind == "binomial");
    }
}

#[test]
fn small_d_is_a_usage_error() {
    let o = gtsurf(&["basis", "--d", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d must be ≥ 3"));
    assert_eq!(gtsurf(&["verify", "--d-range", "39..41"]).status.code(), Some(2));
    assert_eq!(gtsurf(&["wlp", "--d", "5", "--a", "5"]).status.code(), Some(2));
    assert_eq!(gtsurf(&["hilbert"]).status.code(), Some(2));
}

#[test]
fn hilbert_values() {
    let v = json(&["hilbert", "--d", "3", "--t-range", "0..4", "--format", "json"]);
    assert_eq!(v["hf"], serde_json::json!([1, 7, 19, 37, 61]));
    assert_eq!(v["hs_numerator"], serde_json::json!([1, 4, 1]));
    assert_eq!(v["surface"]["gorenstein"], true);
    let csv = stdout(&gtsurf(&[
        "hilbert",
        "--d",
        "3",
        "--t-range",
        "0..4",
        "--format",
        "csv",
    ]));
    assert_eq!(csv.lines().last(), Some("3,4,61"));
}

#[test]
fn wlp_certifies_and_exits_zero() {
    let v = json(&["wlp", "--d", "5", "--format", "json"]);
    assert_eq!(v["certified"], true);
    assert_eq!(v["source_dim"], 55);
    assert_eq!(v["target_dim"], 56);
    assert_eq!(v["trial_results"].as_array().unwrap().len(), 5);
    assert!(v["observed_rank"].as_u64().unwrap() < 55);
}

#[test]
fn syzygy_latex_for_d4() {
    let o = gtsurf(&["syzygy", "--d", "4", "--format", "latex"]);
    assert!(o.status.success());
    let tex = stdout(&o);
    assert!(tex.contains("w_{(1,0)}^{2} & - & w_{(0,0)}w_{(2,0)} & - & 2w_{(0,0)}w_{(4,4)}"));
    assert!(tex.contains("w_{(3,2)}^{2} & - & w_{(2,0)}w_{(4,4)} & - & 2w_{(4,4)}^{2}"));
    let v = json(&["syzygy", "--d", "4", "--format", "json"]);
    assert_eq!((v["binomials"].as_u64(), v["trinomials"].as_u64()), (Some(15), Some(5)));
}

#[test]
fn betti_latex_resolution() {
    let o = gtsurf(&["betti", "--d", "5", "--format", "latex"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(
        "0 \\to S^{2}(-9) \\to S^{7}(-8) \\oplus S^{6}(-7) \\to S^{70}(-6) \\to S^{154}(-5) \\to S^{168}(-4) \\to S^{98}(-3) \\to S^{26}(-2) \\to S"
    ));
}

#[test]
fn verify_range_passes_and_is_deterministic() {
    let args = [
        "verify",
        "--d-range",
        "3..12",
        "--trials",
        "3",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = gtsurf(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let b = Command::new(env!("CARGO_BIN_EXE_gtsurf"))
        .args(args)
        .env("GT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let ds: Vec<u64> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["d"].as_u64().unwrap())
        .collect();
    assert_eq!(ds, (3..=12).collect::<Vec<_>>());
}

#[test]
fn verify_json_check_list() {
    let v = json(&["verify", "--d-range", "3..3", "--format", "json"]);
    let names: Vec<&str> = v["results"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for n in [
        "hf_three_way",
        "mu_bound",
        "basis_invariance",
        "wlp_certificate",
        "quadric_count",
        "relations",
        "betti_fixture",
        "k_polynomial",
    ] {
        assert!(names.contains(&n), "missing {n}");
    }
}

#[test]
fn range_output_is_an_array_and_file_output_works() {
    let v = json(&["betti", "--d-range", "3..5", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    let path = std::env::temp_dir().join(format!("gtsurf-test-{}.json", std::process::id()));
    let o = gtsurf(&[
        "hilbert",
        "--d",
        "4",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["hs_numerator"], serde_json::json!([1, 6, 1]));
}
