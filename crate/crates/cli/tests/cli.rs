use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn anticode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anticode"))
        .args(args)
        .env_remove("ANTICODE_ENUM_CAP")
        .env_remove("ANTICODE_MINIMAL_CAP")
        .env_remove("ANTICODE_GRAPH_K_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn construct_to(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path = dir.path().join(name);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path_str(&path)]);
    let out = anticode(&full);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    path_str(&path).to_string()
}

#[test]
fn construct_families_report_expected_parameters() {
    let cases: [(&[&str], [u64; 4]); 5] = [
        (&["comp-rs", "--q", "2", "--k", "5"], [2, 29, 5, 14]),
        (&["fixed-weight", "--k", "8", "--w", "4"], [2, 70, 7, 32]),
        (&["simplex", "--q", "3", "--k", "3"], [3, 13, 3, 9]),
        (
            &["complement", "--of", "dual-bch", "--m", "3", "--K", "6"],
            [2, 56, 6, 26],
        ),
        (&["concat", "--of", "ovoid", "--s", "2"], [2, 51, 8, 24]),
    ];
    let dir = TempDir::new().unwrap();
    for (args, [q, n, k, d]) in cases {
        let path = dir.path().join("code.json");
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", path_str(&path)]);
        let summary = json(&anticode(&full));
        assert_eq!(summary["q"], q, "{args:?}");
        assert_eq!(summary["n"], n, "{args:?}");
        assert_eq!(summary["k"], k, "{args:?}");
        assert_eq!(summary["d"], d, "{args:?}");
        let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(file["generator"].as_array().unwrap().len() as u64, k);
        assert_eq!(
            file["field"]["p"]
                .as_u64()
                .unwrap()
                .pow(file["field"]["e"].as_u64().unwrap() as u32),
            q
        );
    }
}

#[test]
fn analyze_reports_bounds_and_minimality() {
    let dir = TempDir::new().unwrap();
    let c56 = construct_to(
        &dir,
        "c56.json",
        &["complement", "--of", "dual-bch", "--m", "3", "--K", "6"],
    );
    let r = json(&anticode(&["analyze", &c56]));
    assert_eq!(r["bounds"]["griesmer_defect"], 3);
    assert_eq!(r["bounds"]["antigriesmer_defect"], 0);
    assert_eq!(r["ab_criterion"], true);
    assert_eq!(r["minimal_exact"]["minimal"], true);

    let c29 = construct_to(&dir, "c29.json", &["comp-rs", "--q", "2", "--k", "5"]);
    assert_eq!(
        json(&anticode(&["analyze", &c29]))["bounds"]["griesmer_defect"],
        1
    );

    let s = construct_to(&dir, "s.json", &["simplex", "--q", "2", "--k", "4"]);
    assert_eq!(
        json(&anticode(&["analyze", &s]))["bounds"]["griesmer_defect"],
        0
    );
}

#[test]
fn construction_and_analysis_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = construct_to(&dir, "a.json", &["ovoid", "--q", "4"]);
    let b = construct_to(&dir, "b.json", &["ovoid", "--q", "4"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let first = anticode(&["analyze", &a, "--format", "text"]);
    let second = anticode(&["analyze", &b, "--format", "text"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn complement_and_transform_agree() {
    let dir = TempDir::new().unwrap();
    let base = construct_to(&dir, "ts.json", &["two-subspace", "--q", "3"]);
    let comp = dir.path().join("comp.json");
    let summary = json(&anticode(&[
        "complement",
        &base,
        "--K",
        "4",
        "--out",
        path_str(&comp),
    ]));
    assert_eq!(
        (summary["n"].as_u64(), summary["d"].as_u64()),
        (Some(32), Some(21))
    );
    let predicted = json(&anticode(&["wd-transform", &base, "--K", "4"]));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&comp).unwrap()).unwrap();
    assert_eq!(predicted["counts"], file["weight_distribution"]);

    let typed = dir.path().join("wd.json");
    std::fs::write(
        &typed,
        r#"{"q": 2, "n": 7, "k": 3, "counts": {"0": 1, "4": 7}}"#,
    )
    .unwrap();
    let wd = json(&anticode(&["wd-transform", path_str(&typed), "--K", "5"]));
    assert_eq!(wd["n"], 24);
    assert_eq!(wd["counts"]["12"], 28);
    assert_eq!(wd["counts"]["16"], 3);
}

#[test]
fn swrg_verify_certificates() {
    let dir = TempDir::new().unwrap();
    let c56 = construct_to(
        &dir,
        "c56.json",
        &["complement", "--of", "dual-bch", "--m", "3", "--K", "6"],
    );
    let cert = json(&anticode(&["swrg-verify", &c56, "--l", "3"]));
    assert_eq!(cert["walk_counts"]["constant"]["lambda"], 2746);
    assert_eq!(cert["walk_counts"]["constant"]["mu"], 2730);
    assert_eq!(cert["walk_counts"]["constant"]["nu"], 2730);
    assert_eq!(cert["verdict"], "is_l_swrg");

    let nine = construct_to(
        &dir,
        "nine.json",
        &["complement", "--of", "two-subspace", "--q", "2", "--K", "4"],
    );
    let c54 = construct_to(
        &dir,
        "c54.json",
        &["complement", "--input", &nine, "--K", "6"],
    );
    let cert = json(&anticode(&["swrg-verify", &c54]));
    assert_eq!(cert["weights"], serde_json::json!([26, 28, 32]));
    assert_eq!(cert["verdict"], "conditions_unmet");

    let simplex = construct_to(&dir, "s.json", &["simplex", "--q", "2", "--k", "4"]);
    let out = anticode(&["swrg-verify", &simplex]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("three-weight"));
}

#[test]
fn catalog_verify_exit_codes() {
    let out = anticode(&["catalog", "verify", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,tag,mode,code,weights,defect,optimality,status,detail"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("comp-rs-4-3-antigriesmer,") && l.contains("KNOWN-DISCREPANCY")));

    let dir = TempDir::new().unwrap();
    let wrong = dir.path().join("wrong.toml");
    std::fs::write(
        &wrong,
        "[[entry]]\nid = \"s\"\ntag = \"t\"\nmode = \"construct_and_enumerate\"\n\
         code = { family = \"simplex\", q = 2, k = 3 }\nexpected = { n = 7, k = 3, d = 3 }\n",
    )
    .unwrap();
    assert_eq!(
        anticode(&["catalog", "verify", "--manifest", path_str(&wrong)])
            .status
            .code(),
        Some(1)
    );

    let broken = dir.path().join("broken.toml");
    std::fs::write(&broken, "[[entry]]\nid = 3\n").unwrap();
    assert_eq!(
        anticode(&["catalog", "verify", "--manifest", path_str(&broken)])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn caps_and_usage_errors() {
    let dir = TempDir::new().unwrap();
    let c56 = construct_to(
        &dir,
        "c56.json",
        &["complement", "--of", "dual-bch", "--m", "3", "--K", "6"],
    );
    let out = Command::new(env!("CARGO_BIN_EXE_anticode"))
        .args(["analyze", &c56])
        .env("ANTICODE_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let partial: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(partial["d"].is_null());
    assert!(!partial["skipped"].as_array().unwrap().is_empty());

    assert_eq!(
        anticode(&["construct", "simplex", "--q", "6", "--k", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        anticode(&["construct", "simplex", "--q", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(anticode(&["construct", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        anticode(&["analyze", "/nonexistent/code.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn text_and_csv_outputs() {
    let out = anticode(&[
        "construct",
        "fixed-weight",
        "--k",
        "7",
        "--w",
        "4",
        "--format",
        "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("[35,6,16]_2"));
    assert!(text.contains("16^35 20^28"));
    let out = anticode(&[
        "construct",
        "simplex",
        "--q",
        "3",
        "--k",
        "3",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("label,q,n,k,d,weights,path"));
    assert!(lines.next().unwrap().contains(",3,13,3,9,9:26,"));
}
