use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "datasets", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alexander")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn cyclo_splits_a_cyclotomic_product() {
    let o = run(&["cyclo", "t^4 + t^2 + 1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Phi_3 * Phi_6");
    let o = run(&["cyclo", "t^-1 - 1 + t"]);
    assert_eq!(stdout(&o).trim(), "Phi_6");
}

#[test]
fn cyclo_flags_a_non_cyclotomic_factor() {
    let o = run(&["cyclo", "t^3 + t^2 + 1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--output", "json", "cyclo", "(t^2 - 3*t + 1)*(t+1)"]);
    assert_eq!(o.status.code(), Some(2), "parentheses are not accepted");
    let o = run(&["--output", "json", "cyclo", "t^3 - 2*t^2 - 2*t + 1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cyclotomic"], false);
    assert_eq!(v["factors"][0]["n"], 2);
    assert_eq!(v["remainder"], "t^2 - 3*t + 1");
}

#[test]
fn closure_polynomials() {
    let o = run(&["closure", &data("braids/trefoil.json"), "--one"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "t^2 - t + 1");
    let o = run(&["closure", &data("braids/t33.json"), "--multi"]);
    assert_eq!(stdout(&o).trim(), "t0*t1*t2 - 1");
    let o = run(&["closure", &data("braids/t22.json"), "--hat", "2", "--marked", "1"]);
    assert_eq!(stdout(&o).trim(), "t - 1");
    let o = run(&["closure", &data("braids/trefoil.json"), "--hat", "2", "--marked", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fox_reads_presentations() {
    let o = run(&["fox", &data("presentations/trefoil.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "t^2 - t + 1");
}

#[test]
fn zvk_of_three_lines() {
    let o = run(&["zvk", &data("curves/three_lines/factorization.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "t^2 - 2*t + 1");
    let o = run(&["--output", "json", "zvk", &data("curves/three_lines/factorization.json")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"], 3);
    assert_eq!(v["abelianization"]["free_rank"], 3);
}

#[test]
fn curve_counts() {
    let o = run(&["--output", "json", "curve", &data("curves/nodal_cubic/curve.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["euler_characteristic"]["curve"], 1);
    assert_eq!(v["affine"]["singularities"], 1);
}

#[test]
fn verify_passes_on_the_conic() {
    let o = run(&["verify", &data("curves/conic/curve.json"), "--delta", "1", "--infinity", "generic"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
}

#[test]
fn verify_accepts_a_factorization_for_delta() {
    let curve = data("curves/three_lines/curve.json");
    let f = data("curves/three_lines/factorization.json");
    let o = run(&["verify", &curve, "--delta", &f]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_fails_on_a_wrong_polynomial() {
    let o = run(&["verify", &data("curves/conic/curve.json"), "--delta", "t^2 - 3*t + 1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
}

#[test]
fn malformed_input_names_file_line_and_field() {
    let dir = std::env::temp_dir().join(format!("alexander-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.json");
    std::fs::write(&file, "{\"strands\": 2,\n \"word\": [1, \"x\"]}\n").unwrap();
    let o = run(&["closure", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("bad.json"), "{err}");
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("`word[1]`"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["fox", "/nonexistent/presentation.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--output", "json", "verify", &data("curves/three_lines/curve.json"), "--delta", "t^2 - 2*t + 1"];
    let first = stdout(&run(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&run(&args)), first);
    }
}
