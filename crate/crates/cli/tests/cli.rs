use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cosetlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosetlab"))
        .args(args)
        .env_remove("COSETLAB_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = cosetlab(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn result<'a>(doc: &'a Value, name: &str) -> &'a Value {
    let r = doc["results"].as_array().unwrap().iter().find(|r| r["name"] == name);
    &r.unwrap_or_else(|| panic!("no result {name}"))["payload"]
}

fn checks(doc: &Value) -> Vec<(String, String)> {
    doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["kind"] == "check")
        .map(|r| (r["name"].as_str().unwrap().to_string(), r["payload"]["status"].as_str().unwrap().to_string()))
        .collect()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cosetlab-{}-{name}", std::process::id()))
}

#[test]
fn xi_a1_is_difference_of_extremes() {
    let doc = json(&["xi", "--group", "A1"]);
    assert_eq!(result(&doc, "xi"), &serde_json::json!({"1,1": 1, "2": -1}));
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["config"]["group"], "A1");
}

#[test]
fn xi_a3_has_dimension_33_and_frobenius_images() {
    let doc = json(&["xi", "--group", "A3"]);
    assert_eq!(result(&doc, "dimension"), 33);
    let s = &result(&doc, "frobenius_s")["terms"];
    assert_eq!(s["1,1,1,1"], 6);
    assert_eq!(s["2,2"], 3);
    assert_eq!(result(&doc, "xi_tensor_sign")["2,2"], 2);
}

#[test]
fn xi_b3_sign_twist_sums_to_region_count() {
    let doc = json(&["xi", "--group", "B3"]);
    assert_eq!(result(&doc, "tensor_sign_coefficient_sum"), 15);
    assert_eq!(result(&doc, "sign_multiplicity"), 15);
    assert!(doc["results"].as_array().unwrap().iter().all(|r| r["name"] != "frobenius_h"));
}

#[test]
fn verify_a2_with_five_seeds_passes() {
    let out = cosetlab(&["verify", "--group", "A2", "--seeds", "5", "--format", "json"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let cs = checks(&doc);
    assert_eq!(cs.len(), 13);
    assert!(cs.iter().all(|(_, s)| s == "pass"), "{cs:?}");
    for seed in 1..=5 {
        assert_eq!(result(&doc, &format!("facets[seed {seed}]")), 2);
    }
}

#[test]
fn verify_a3_reproduces_the_h_vector() {
    let doc = json(&["verify", "--group", "A3"]);
    assert_eq!(result(&doc, "h"), &serde_json::json!(["1", "127", "271", "33"]));
    assert_eq!(result(&doc, "maximal_chains"), "432");
    assert!(checks(&doc).iter().all(|(_, s)| s == "pass"));
}

#[test]
fn verify_g2_has_five_facets() {
    let doc = json(&["verify", "--group", "G2", "--checks", "facet_count,shelling_certificate,colored_f"]);
    assert_eq!(result(&doc, "facets[seed 1]"), 5);
    assert_eq!(checks(&doc).len(), 3);
}

#[test]
fn verify_with_spread_vector() {
    let doc = json(&["verify", "--group", "A3", "--rho-mode", "prop75", "--checks", "facet_count,ascents"]);
    assert_eq!(result(&doc, "facets[prop75]"), 6);
}

#[test]
fn svg_shades_the_positive_facets() {
    for (g, facets) in [("A3", 6), ("B3", 15)] {
        let out = cosetlab(&["svg", "--group", g, "--rho-seed", "1"]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("<?xml"));
        assert!(text.contains(r#"version="1.1""#));
        assert_eq!(text.matches(r#"class="facet"#).count(), facets, "{g}");
        assert_eq!(text.matches("fundamental").count(), 2);
        assert!(text.trim_end().ends_with("</svg>"));
    }
}

#[test]
fn svg_is_byte_identical_across_runs() {
    let path = temp_path("a3.svg");
    let p = path.to_str().unwrap();
    assert!(cosetlab(&["svg", "--group", "A3", "--rho-seed", "4", "--out", p]).status.success());
    let first = std::fs::read(&path).unwrap();
    let again = cosetlab(&["svg", "--group", "A3", "--rho-seed", "4"]).stdout;
    assert_eq!(first, again);
    std::fs::remove_file(path).ok();
}

#[test]
fn svg_rejects_other_ranks() {
    assert_eq!(cosetlab(&["svg", "--group", "A2"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["svg", "--group", "F4"]).status.code(), Some(2));
}

#[test]
fn series_tables() {
    let doc = json(&["series", "-n", "5"]);
    assert_eq!(result(&doc, "D"), &serde_json::json!([1, 1, 4, 33, 456]));
    let doc = json(&["series", "-n", "6"]);
    assert_eq!(result(&doc, "D")[5], 9460);
    assert!(checks(&doc).iter().all(|(_, s)| s == "pass"));
    let doc = json(&["series", "-n", "1"]);
    assert_eq!(result(&doc, "xi_1")["terms"], serde_json::json!({"1": 1}));
}

#[test]
fn exit_codes() {
    assert_eq!(cosetlab(&["xi", "--group", "E6"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["xi", "--group", "Z9"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["xi"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["xi", "--group", "A5", "--cap", "100"]).status.code(), Some(3));
    assert_eq!(cosetlab(&["series", "-n", "13"]).status.code(), Some(3));
    assert_eq!(cosetlab(&["verify", "--group", "A2", "--checks", "nope"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["verify", "--group", "A2", "--rho", "1,1"]).status.code(), Some(2));
    assert_eq!(cosetlab(&["verify", "--group", "A2", "--rho", "2,1"]).status.code(), Some(0));
}

#[test]
fn environment_cap_sits_between_file_and_flags() {
    let cfg = temp_path("run.conf");
    std::fs::write(&cfg, "group = A5\nformat = csv\ncap = 10000\n").unwrap();
    let c = cfg.to_str().unwrap();
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_cosetlab"));
        cmd.args(["xi", "--config", c]).args(extra).env_remove("COSETLAB_CAP");
        if let Some(v) = env {
            cmd.env("COSETLAB_CAP", v);
        }
        cmd.output().unwrap()
    };
    let out = run(None, &[]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("name,kind,key,value\n"));
    assert_eq!(run(Some("100"), &[]).status.code(), Some(3));
    assert!(run(Some("100"), &["--cap", "1000"]).status.success());
    assert!(run(None, &["--group", "A2", "--format", "json"]).status.success());
    std::fs::remove_file(cfg).ok();
}

#[test]
fn csv_and_text_outputs() {
    let out = cosetlab(&["xi", "--group", "A2", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert!(rows.iter().any(|r| &r[0] == "dimension" && &r[3] == "4"));
    let text = String::from_utf8(cosetlab(&["xi", "--group", "A2"]).stdout).unwrap();
    assert!(text.contains("dimension: 4"));
}
