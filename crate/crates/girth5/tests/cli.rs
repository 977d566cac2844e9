//! End-to-end checks of the command-line surface and its exit-code contract:
//! 0 success, 1 verification mismatch, 2 input error, 3 search exhaustion.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn girth5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girth5"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("girth5-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_then_verify_roundtrip() {
    let out = tmp("k33.g6");
    let built = girth5(&[
        "build",
        "--route",
        "L q=29 pair=semicirculant d=0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(
        built.status.success(),
        "{}",
        String::from_utf8_lossy(&built.stderr)
    );
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.with_file_name("k33.g6.cert.json")).unwrap())
            .unwrap();
    assert_eq!(cert["k"], 33);
    assert_eq!(cert["n"], 1680);
    assert_eq!(cert["girth"], 5);

    let pass = girth5(&[
        "verify",
        "--input",
        out.to_str().unwrap(),
        "--k",
        "33",
        "--girth",
        "5",
    ]);
    assert_eq!(pass.status.code(), Some(0));
    let fail = girth5(&[
        "verify",
        "--input",
        out.to_str().unwrap(),
        "--k",
        "33",
        "--girth",
        "6",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    let wrong_k = girth5(&[
        "verify",
        "--input",
        out.to_str().unwrap(),
        "--k",
        "34",
        "--girth",
        "5",
    ]);
    assert_eq!(wrong_k.status.code(), Some(1));
}

#[test]
fn builds_are_byte_identical_across_runs() {
    let a = tmp("det-a.g6");
    let b = tmp("det-b.g6");
    for out in [&a, &b] {
        let run = girth5(&[
            "build",
            "--route",
            "C q=17 quad=searched d=0",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(
            run.status.success(),
            "{}",
            String::from_utf8_lossy(&run.stderr)
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(
        fs::read(a.with_file_name("det-a.g6.cert.json")).unwrap(),
        fs::read(b.with_file_name("det-b.g6.cert.json")).unwrap()
    );
}

#[test]
fn malformed_route_is_an_input_error() {
    let out = tmp("junk.g6");
    let run = girth5(&[
        "build",
        "--route",
        "Z q=9 pair=nope d=0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn semiplane_build_writes_block_sidecar() {
    let out = tmp("c4.g6");
    let run = girth5(&["build", "--route", "C:q=4", "--out", out.to_str().unwrap()]);
    assert!(run.status.success());
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.with_file_name("c4.g6.blocks.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["point_blocks"].as_array().unwrap().len(), 4);
    assert_eq!(sidecar["labels"].as_array().unwrap().len(), 32);
}

#[test]
fn span_query_reports_min_order() {
    let out = tmp("span.json");
    let run = girth5(&[
        "build",
        "--route",
        "S:2t=inf;P=2;Q=4;K=3,-7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(run.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["span"], 10);
    assert_eq!(report["min_girth5_order"], 22);
    assert_eq!(report["girth5_conditions_hold"], true);
}

#[test]
fn records_subset_passes() {
    let out = tmp("records.csv");
    let run = girth5(&[
        "records",
        "--k-range",
        "17..22",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let csv = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with(",pass")), "{csv}");
    assert!(csv.contains("17,436,436,17,5,pass"));
}

#[test]
fn records_full_run_has_29_passing_rows() {
    let out = tmp("records-full.csv");
    let run = girth5(&["records", "--out", out.to_str().unwrap()]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let csv = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 29);
    assert!(rows.iter().all(|r| r.ends_with(",pass")), "{csv}");
    assert!(csv.contains("55,4800,4800,55,5,pass"));
    assert!(csv.contains("70,8192,8192,70,5,pass"));
}

#[test]
fn infeasible_search_exits_three() {
    let problem = tmp("bad.json");
    fs::write(
        &problem,
        r#"{"kind":"graph","problem":{"group":{"Cyclic":17},"carrier":[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16],"degrees":{"Regular":3},"palette":[1,16],"forbidden":[],"girth_floor":5}}"#,
    )
    .unwrap();
    let outdir = tmp("badout");
    let run = girth5(&[
        "search",
        "--problem",
        problem.to_str().unwrap(),
        "--out",
        outdir.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(3));
}

#[test]
fn quadruple_search_caches_into_catalog_dir() {
    let problem = tmp("quad16.json");
    fs::write(&problem, r#"{"kind":"quadruple","q":16}"#).unwrap();
    let cachedir = tmp("fresh-catalog");
    let outdir = tmp("quadout");
    let run = girth5(&[
        "--catalog",
        cachedir.to_str().unwrap(),
        "search",
        "--problem",
        problem.to_str().unwrap(),
        "--out",
        outdir.to_str().unwrap(),
    ]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(cachedir.join("searched-q16.quad").exists());
    for name in ["g0.g6", "g1.g6", "h0.g6", "h1.g6", "report.json"] {
        assert!(outdir.join(name).exists(), "{name} missing");
    }
    // A build against the fresh cache reproduces the record order.
    let out = tmp("k19-fresh.g6");
    let build = girth5(&[
        "--catalog",
        cachedir.to_str().unwrap(),
        "build",
        "--route",
        "C q=16 quad=searched d=0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(build.status.success());
    let cert: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(out.with_file_name("k19-fresh.g6.cert.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(cert["n"], 500);
    assert_eq!(cert["k"], 19);
}

#[test]
fn records_output_is_deterministic() {
    let a = tmp("rec-a.csv");
    let b = tmp("rec-b.csv");
    for out in [&a, &b] {
        let run = girth5(&[
            "records",
            "--k-range",
            "17..22",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(run.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn relabel_search_writes_permutation() {
    let problem = tmp("relabel.json");
    fs::write(
        &problem,
        r#"{"kind":"relabel","spec":"S:2t=30;P=6;Q=12;K=1,-1,9","forbid_own_colors":true}"#,
    )
    .unwrap();
    let outdir = tmp("relout");
    let run = girth5(&[
        "search",
        "--problem",
        problem.to_str().unwrap(),
        "--out",
        outdir.to_str().unwrap(),
    ]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let perm = fs::read_to_string(outdir.join("relabel.perm")).unwrap();
    assert_eq!(perm.lines().count(), 30);
    assert!(outdir.join("partner.g6").exists());
    assert!(outdir.join("report.json").exists());
}
