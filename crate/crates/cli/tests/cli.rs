use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn regulab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regulab"))
        .args(args)
        .env_remove("REGULAB_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn square_of_the_pentagon() {
    let v = json(&regulab(&["reg", "--graph", "C5", "--power", "2"]));
    assert_eq!(v["regularity"], 4);
    assert_eq!(v["field"], 0);
    assert!(v["walltime_ms"].is_u64());
    let v = json(&regulab(&[
        "reg",
        "catalog:C5",
        "--power",
        "3",
        "--char",
        "3",
        "--no-timing",
    ]));
    assert_eq!(v["regularity"], 6);
    assert!(v.get("walltime_ms").is_none());
}

#[test]
fn catalog_show_prints_graph_text() {
    let out = regulab(&["catalog", "show", "G_10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let edges = text.lines().filter(|l| !l.starts_with("vertex")).count();
    assert_eq!(edges, 9);
    // the printed text reads back as the same graph
    let f = file(&text);
    let v = json(&regulab(&["classify", f.path().to_str().unwrap()]));
    assert_eq!(v["outcome"], "classified");
    assert_eq!(v["base"], "G_10");
}

#[test]
fn catalog_list_names_every_indexed_graph() {
    let v = json(&regulab(&["catalog", "list"]));
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    for k in 0..=10 {
        assert!(names.contains(&format!("G_{k}").as_str()));
    }
}

#[test]
fn verify_froberg_n5_passes() {
    let out = regulab(&["verify", "--suite", "froberg-n5"]);
    let v = json(&out);
    assert_eq!(v["suite"], "froberg-n5");
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["skipped"], 0);
    assert_eq!(v["summary"]["passed"], v["summary"]["total"]);
}

#[test]
fn verify_alias_for_the_cycle_edge_lemma() {
    let v = json(&regulab(&["verify", "--suite", "lemma-4.4"]));
    assert_eq!(v["suite"], "c5-edge-lemma");
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let one = regulab(&[
        "verify",
        "--suite",
        "classification",
        "--no-timing",
        "--jobs",
        "1",
    ]);
    let four = Command::new(env!("CARGO_BIN_EXE_regulab"))
        .args(["verify", "--suite", "classification", "--no-timing"])
        .env("REGULAB_JOBS", "4")
        .output()
        .unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exhausted_budget_marks_cases_skipped() {
    let out = regulab(&["verify", "--suite", "froberg", "--timeout-secs", "0"]);
    let v = json(&out);
    assert_eq!(v["summary"]["skipped"], v["summary"]["total"]);
}

#[test]
fn malformed_input_exits_2_with_line_number() {
    let g = file("a b\n# fine\nc\n");
    let out = regulab(&["reg", "--graph", g.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let i = file("a*b\nb*+c\n");
    let out = regulab(&["betti", i.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["reg", "--graph", "not-a-graph"],
        &["reg", "C5", "--char", "4"],
        &["reg", "C5", "--power", "0"],
        &["frobnicate"],
        &["catalog", "show", "G_11"],
    ] {
        assert_eq!(regulab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_graph_input() {
    let g = file(r#"{"vertices": ["x"], "edges": [["a", "b"], ["b", "c"], ["c", "d"]]}"#);
    let v = json(&regulab(&["analyze", g.path().to_str().unwrap()]));
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["gap_free"], true);
    assert_eq!(v["complement_chordal"], true);
    assert_eq!(v["regularity"], 2);
}

#[test]
fn analyze_reports_the_dominating_triangle() {
    let v = json(&regulab(&["analyze", "G_1"]));
    assert_eq!(
        v["dominating_clique"],
        serde_json::json!(["a_0", "u_2", "u_3"])
    );
    assert_eq!(v["regularity"], 3);
    assert_eq!(v["star_bound"], 3);
    assert_eq!(v["induced_c5"], 1);
}

#[test]
fn betti_of_an_ideal_file() {
    let i = file("# path a-b-c-d\na*b\nb*c\nc*d\n");
    let v = json(&regulab(&[
        "betti",
        i.path().to_str().unwrap(),
        "--no-timing",
    ]));
    assert_eq!(v["regularity"], 2);
    // the independence complex of P4 is a path, so the resolution stops at two linear syzygies
    assert_eq!(
        v["betti"],
        serde_json::json!([{"i": 0, "j": 2, "b": 3}, {"i": 1, "j": 3, "b": 2}])
    );
}

#[test]
fn colon_graph_of_the_pentagon() {
    let v = json(&regulab(&[
        "colon-graph",
        "--graph",
        "C5",
        "--edges",
        "u1 u2",
    ]));
    // u5 – u1 u2 – u3 is the only new even-connection
    assert_eq!(v["new_edges"], serde_json::json!([["u3", "u5"]]));
    assert_eq!(v["squares"], serde_json::json!([]));
    let out = regulab(&["colon-graph", "C5", "--edges", "u1 u3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_rejects_a_gap() {
    let v = json(&regulab(&["classify", "G_4"]));
    assert_eq!(v["outcome"], "not-gap-diamond-free");
    assert_eq!(v["pattern"], "gap");
}
