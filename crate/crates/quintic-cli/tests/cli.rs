use std::process::{Command, Output};

fn quintic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(args)
        .env_remove("QUINTIC_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn verify_single_identity() {
    let o = quintic(&["verify", "watson-modular-eq", "--order", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS  watson-modular-eq"));
}

#[test]
fn verify_unknown_name_is_usage_error() {
    let o = quintic(&["verify", "no-such-id"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_schema() {
    let o = quintic(&["verify", "jacobi-quartic", "quintic-fifth-powers", "--order", "30", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    let reports = v["reports"].as_array().unwrap();
    // sorted by name
    assert_eq!(reports[0]["name"], "jacobi-quartic");
    assert_eq!(reports[1]["name"], "quintic-fifth-powers");
    assert!(reports.iter().all(|r| r["passed"] == true && r["order"] == 30));
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(["verify", "jacobi-quartic", "--json"])
        .env("QUINTIC_DEFAULT_ORDER", "17")
        .output()
        .unwrap();
    assert_eq!(json(&o)["reports"][0]["order"], 17);
}

#[test]
fn zero_order_rejected() {
    assert_eq!(quintic(&["verify", "jacobi-quartic", "--order", "0"]).status.code(), Some(2));
}

#[test]
fn verify_with_jobs_and_out_file() {
    let dir = std::env::temp_dir().join(format!("quintic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = quintic(&[
        "verify", "continued-fraction", "triple-product", "--order", "20", "--jobs", "2", "--json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pentarray_a2_middle_row() {
    let o = quintic(&["pentarray", "2", "--which", "A", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o)["rows"].clone();
    assert_eq!(rows[1], serde_json::json!(["22", "5", "-22"]));
}

#[test]
fn pentarray_check_paper() {
    let o = quintic(&["pentarray", "6", "--which", "A", "--check-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("MATCH"));
    let o = quintic(&["pentarray", "1", "--which", "B", "--check-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("MATCH"));
}

#[test]
fn pentarray_out_of_range() {
    assert_eq!(quintic(&["pentarray", "13"]).status.code(), Some(2));
    assert_eq!(quintic(&["pentarray", "0"]).status.code(), Some(2));
}

#[test]
fn scan_theorem_and_conjecture() {
    let o = quintic(&["scan", "-k", "1", "-M", "25", "-a", "25", "-b", "24", "--nmax", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = quintic(&["scan", "-k", "17", "-M", "25", "-a", "5", "-b", "3", "--nmax", "60", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["certificate"]["verdict"], "PASS");
    assert_eq!(v["certificate"]["label"], "conjecture-support");
}

#[test]
fn scan_counterexample() {
    let o = quintic(&["scan", "-k", "1", "-M", "7", "-a", "5", "-b", "4", "--nmax", "50", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let c = &json(&o)["certificate"]["counterexample"];
    // first failure in the progression: p(4) = 5
    assert_eq!(c["argument"], 4);
    assert_eq!(c["value"], "5");
}

#[test]
fn scan_malformed_progression() {
    assert_eq!(quintic(&["scan", "-k", "1", "-M", "5", "-a", "0", "-b", "4", "--nmax", "5"]).status.code(), Some(2));
}

#[test]
fn dump_a_valuation() {
    let o = quintic(&["dump", "A", "--order", "10", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["terms"][0]["exponent"], "1/5");
    assert_eq!(v["terms"][0]["coeff"], "1");
}

#[test]
fn dump_e4_head() {
    let v = json(&quintic(&["dump", "E4", "--order", "5", "--json"]));
    let coeffs: Vec<&str> = v["terms"].as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "240", "2160", "6720", "17520"]);
}

#[test]
fn dump_continued_fraction_head() {
    let v = json(&quintic(&["dump", "R", "--order", "3", "--json"]));
    let t = v["terms"].as_array().unwrap();
    assert_eq!(t[0]["exponent"], "1/5");
    assert_eq!(t[1]["exponent"], "6/5");
    assert_eq!(t[1]["coeff"], "-1");
}

#[test]
fn dump_character_ids() {
    for id in ["E_{1,chi4}", "L_{2,chi3}", "E2,chi1", "t3", "delta", "G", "H", "C", "D"] {
        let o = quintic(&["dump", id, "--order", "6"]);
        assert_eq!(o.status.code(), Some(0), "{id}");
    }
    assert_eq!(quintic(&["dump", "E_{2,chi2}"]).status.code(), Some(2));
    assert_eq!(quintic(&["dump", "nope"]).status.code(), Some(2));
    assert_eq!(quintic(&["dump", "t9"]).status.code(), Some(2));
}

#[test]
fn list_has_registry() {
    let v = json(&quintic(&["list", "--json"]));
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"watson-modular-eq"));
    assert!(names.len() >= 30);
}
