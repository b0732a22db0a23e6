use std::collections::BTreeSet;

use assert_cmd::Command;
use grdual_core::network::{minimal_flow_rec, rectangles_chart};
use grdual_core::{GrassmannShape, IndexSubset, LaurentPoly};

fn grdual(args: &[&str]) -> assert_cmd::assert::Assert {
    Command::cargo_bin("grdual").unwrap().args(args).assert()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(grdual(args).success().get_output().stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn verify_gr24_counts_match_the_oracle() {
    let report = json(&["verify", "--k", "2", "--n", "4", "--r", "1,2,3", "--format", "json"]);
    assert_eq!(report["passed"], true);
    assert_eq!(report["class_size"], 2);
    assert_eq!(report["oracle"], serde_json::json!({ "1": 6, "2": 20, "3": 50 }));
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 6);
    for g in results {
        assert_eq!(g["equal"], true);
        assert_eq!(g["lattice_points"], report["oracle"][g["r"].to_string()]);
    }
}

#[test]
fn verify_smallest_shape() {
    let report = json(&["verify", "--k", "2", "--n", "3", "--r", "1", "--format", "json"]);
    assert_eq!(report["class_size"], 1);
    assert_eq!(report["passed"], true);
}

#[test]
fn verify_gr35_rectangles_polytope_has_ten_vertices() {
    let report = json(&["verify", "--k", "3", "--n", "5", "--r", "1", "--format", "json"]);
    assert_eq!(report["passed"], true);
    assert_eq!(report["class_size"], 5);
    let seed = &report["results"][0];
    assert_eq!(seed["path_length"], 0);
    assert_eq!(seed["no_vertices"], 10);
    assert_eq!(seed["q_facets"], 9);
}

#[test]
fn verify_reports_deterministically_apart_from_timings() {
    let args = ["verify", "--k", "3", "--n", "5", "--r", "1,2", "--format", "json"];
    let mut a = json(&args);
    let mut b = json(&args);
    a.as_object_mut().unwrap().remove("timings");
    b.as_object_mut().unwrap().remove("timings");
    assert_eq!(a, b);
}

#[test]
fn verify_failure_exits_nonzero_with_certificates() {
    let out = grdual(&["verify", "--k", "3", "--n", "6", "--r", "1", "--format", "json"]).code(1);
    let report: serde_json::Value = serde_json::from_slice(&out.get_output().stdout).unwrap();
    assert_eq!(report["class_size"], 34);
    let failures: Vec<&serde_json::Value> =
        report["results"].as_array().unwrap().iter().filter(|g| g["equal"] == false).collect();
    assert_eq!(failures.len(), 2);
    for g in failures {
        assert!(g["certificate"].as_str().unwrap().contains("3/2"));
    }
}

#[test]
fn verify_budget_exhaustion_is_an_error() {
    grdual(&["verify", "--k", "3", "--n", "5", "--budget", "3"]).code(2);
}

#[test]
fn chart_polynomials() {
    let got = stdout(&["chart", "--k", "3", "--n", "5", "--J", "2,4"]);
    let want = LaurentPoly::parse("x[3]*x[2,2]*x[3,3]*(1+x[2])").unwrap();
    assert_eq!(LaurentPoly::parse(got.trim()).unwrap(), want);
    assert_eq!(stdout(&["chart", "--k", "3", "--n", "5", "--J", "1,2"]), "1\n");
    let table = stdout(&["chart", "--k", "3", "--n", "5"]);
    assert_eq!(table.lines().count(), 10);
}

#[test]
fn chart_rejects_bad_subsets_and_paths() {
    grdual(&["chart", "--k", "3", "--n", "5", "--J", "1,2,3"]).code(2);
    grdual(&["chart", "--k", "3", "--n", "5", "--path", "3,3", "--J", "1,2"]).code(2);
}

#[test]
fn chart_contains_the_minimal_flow_weight() {
    let sh = GrassmannShape::new(2, 4).unwrap();
    let j = IndexSubset::new(vec![3, 4]);
    let chart = rectangles_chart(sh);
    let weight = chart.flow_weight(&minimal_flow_rec(sh, &j).unwrap()).unwrap();
    let got = LaurentPoly::parse(stdout(&["chart", "--k", "2", "--n", "4", "--J", "3,4"]).trim()).unwrap();
    assert_eq!(got.coefficient(&weight), 1.into());
}

#[test]
fn chart_after_a_move() {
    let got = stdout(&["chart", "--k", "2", "--n", "4", "--path", "1", "--J", "1,3"]);
    assert!(LaurentPoly::parse(got.trim()).unwrap().has_nonnegative_coefficients());
}

#[test]
fn dot_export_matches_fixture() {
    let got = stdout(&["export", "graph", "--k", "3", "--n", "5", "--format", "dot"]);
    assert_eq!(got, include_str!("fixtures/rectangles_3_5.dot"));
    assert_eq!(got, stdout(&["export", "graph", "--k", "3", "--n", "5", "--format", "dot"]));
}

#[test]
fn superpotential_text_terms() {
    let text = stdout(&["export", "superpotential", "--k", "3", "--n", "5", "--format", "text"]);
    let terms: BTreeSet<String> = text.trim().split(" + ").map(str::to_string).collect();
    let want: BTreeSet<String> = [
        "p[1]",
        "p[2]/p[1]",
        "p[3]/p[2]",
        "p[1,1]/p[1]",
        "p[2,2]/(p[1]*p[1,1])",
        "p[2,2]/(p[1]*p[2])",
        "p[1]*p[3,3]/(p[2]*p[2,2])",
        "p[3,3]/(p[2]*p[3])",
        "p[2]*q/p[3,3]",
    ]
    .into_iter()
    .map(str::to_string)
    .collect();
    assert_eq!(terms, want);
}

#[test]
fn polytope_export_has_ten_vertices() {
    let doc = json(&["export", "polytope", "--k", "3", "--n", "5"]);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 10);
    assert_eq!(doc["coords"].as_array().unwrap().len(), 6);
    let q = json(&["export", "polytope", "--k", "3", "--n", "5", "--model", "b"]);
    assert_eq!(q["vertices"], doc["vertices"]);
    assert_eq!(q["inequalities"].as_array().unwrap().len(), 9);
}

#[test]
fn export_to_file_and_unknown_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o.json");
    grdual(&["export", "orientation", "--k", "2", "--n", "4", "--out", out.to_str().unwrap()]).success();
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["sources"], serde_json::json!([1, 2]));
    grdual(&["export", "orientation", "--k", "2", "--n", "4", "--format", "dot"]).code(2);
    grdual(&["export", "polytope", "--k", "2", "--n", "4", "--format", "xml"]).code(2);
}

#[test]
fn moves_listing() {
    let text = stdout(&["moves", "--k", "3", "--n", "5"]);
    assert!(text.starts_with("5 graphs\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("move ")).count(), 5);
    let doc = json(&["moves", "--k", "3", "--n", "6", "--format", "json"]);
    assert_eq!(doc["members"].as_array().unwrap().len(), 34);
    assert_eq!(doc["complete"], true);
}

#[test]
fn tropical_inequalities() {
    let text = stdout(&["superpotential", "--k", "3", "--n", "5", "--r", "1"]);
    assert_eq!(text.lines().count(), 9);
    let plucker = stdout(&["superpotential", "--k", "3", "--n", "5", "--form", "plucker"]);
    assert_eq!(plucker.trim().split(" + ").count(), 5);
    assert_eq!(plucker.matches("q*").count(), 1);
}
