use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_signed-spectra");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn pairs(v: &Value) -> Vec<(f64, u64)> {
    v["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["value"].as_f64().unwrap(), p["mult"].as_u64().unwrap()))
        .collect()
}

fn assert_pairs(v: &Value, expected: &[(f64, u64)]) {
    let got = pairs(v);
    assert_eq!(got.len(), expected.len(), "{got:?}");
    for (g, e) in got.iter().zip(expected) {
        assert!((g.0 - e.0).abs() <= 1e-8 && g.1 == e.1, "{got:?} vs {expected:?}");
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let t10 = dir.path().join("t10.json");
    let out = run(&["construct", "--family", "t2n", "--n", "5", "--out", path_str(&t10)]);
    assert!(out.status.success());
    assert_pairs(&ok_json(&run(&["spectrum", path_str(&t10)])), &[(2.0, 5), (-2.0, 5)]);
}

#[test]
fn fold_piped_into_spectrum() {
    let g = run(&[
        "fold",
        "--kind",
        "signed-cartesian",
        "--dir",
        "right",
        "--factors",
        "k2+,k2+,k2+",
    ]);
    assert!(g.status.success());
    let s = ok_json(&run_stdin(&["spectrum", "-"], &g.stdout));
    let r3 = 3f64.sqrt();
    assert_pairs(&s, &[(r3, 4), (-r3, 4)]);
}

#[test]
fn huang_on_signed_cube() {
    let dir = tempfile::tempdir().unwrap();
    let q3 = dir.path().join("q3signed.json");
    assert!(run(&[
        "construct",
        "--family",
        "huang-hypercube",
        "--n",
        "3",
        "--out",
        path_str(&q3)
    ])
    .status
    .success());
    let r = ok_json(&run(&["huang", "--graph", path_str(&q3), "--k", "5"]));
    assert_eq!(r["brute_min_max_degree"], 2);
    assert_eq!(r["spectral_bound_ceil"], 2);
    assert_eq!(r["witness_subset"].as_array().unwrap().len(), 5);
    let r = ok_json(&run(&["huang", "--graph", path_str(&q3), "--k", "5", "--skip-brute"]));
    assert!(r["brute_min_max_degree"].is_null());
    // default k comes from the spectral bound: 8 - 4 + 1
    assert_eq!(ok_json(&run(&["huang", "--graph", path_str(&q3)]))["subset_size"], 5);
}

#[test]
fn predict_agrees_with_spectrum_of_product() {
    let lefts = ["k2+", "k2-", "p3", "k12", "k22neg", "c4"];
    let rights = ["k2+", "p3", "k3+", "k3-", "t6", "k22neg"];
    let dir = tempfile::tempdir().unwrap();
    for kind in ["signed-cartesian", "signed-semistrong"] {
        for a in lefts {
            for b in rights {
                let factors = format!("{a},{b}");
                let p = ok_json(&run(&["predict", "--kind", kind, "--factors", &factors]));
                assert_eq!(p["matches"], true, "{kind} {factors}");
                let file = dir.path().join("prod.json");
                assert!(run(&[
                    "product",
                    "--kind",
                    kind,
                    "--factors",
                    &factors,
                    "--out",
                    path_str(&file)
                ])
                .status
                .success());
                let s = ok_json(&run(&["spectrum", path_str(&file)]));
                assert_eq!(pairs(&p["prediction"]).len(), pairs(&s).len(), "{kind} {factors}");
                for (x, y) in pairs(&p["prediction"]).iter().zip(pairs(&s)) {
                    assert!((x.0 - y.0).abs() <= 1e-8 && x.1 == y.1, "{kind} {factors}");
                }
            }
        }
    }
    for kind in ["cartesian", "direct", "semistrong"] {
        let p = ok_json(&run(&["predict", "--kind", kind, "--factors", "p3,k3-"]));
        assert_eq!(p["matches"], true);
    }
    for dir in ["left", "right"] {
        let p = ok_json(&run(&[
            "predict",
            "--kind",
            "signed-semistrong",
            "--dir",
            dir,
            "--factors",
            "k22neg,p3,k3+",
        ]));
        assert_eq!(p["matches"], true);
        assert_eq!(p["order"], 36);
    }
}

#[test]
fn provenance_is_reported() {
    let p = ok_json(&run(&["predict", "--kind", "signed-cartesian", "--factors", "p3,k2+"]));
    let groups = p["prediction"]["pairs"].as_array().unwrap();
    assert_eq!(groups.len(), 4);
    assert!(groups[1]["provenance"][0].as_str().unwrap().contains("lambda=0"));
}

#[test]
fn verify_symmetry_both_ways() {
    let sym = ok_json(&run(&[
        "verify-symmetry",
        "--kind",
        "signed-cartesian",
        "--factors",
        "k2+,k3+",
    ]));
    assert_eq!(
        (sym["criterion"].clone(), sym["agree"].clone()),
        (Value::Bool(true), Value::Bool(true))
    );
    let asym = ok_json(&run(&[
        "verify-symmetry",
        "--kind",
        "signed-cartesian",
        "--factors",
        "p3,k3+",
    ]));
    assert_eq!(
        (asym["criterion"].clone(), asym["agree"].clone()),
        (Value::Bool(false), Value::Bool(true))
    );
    let fold = ok_json(&run(&[
        "verify-symmetry",
        "--kind",
        "signed-semistrong",
        "--dir",
        "right",
        "--factors",
        "p3,k2+,k3+",
    ]));
    assert_eq!(fold["criterion"], true);
    assert_eq!(fold["agree"], true);
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["pg-", "s14", "t6", "kbip:2", "conf:6", "q3"] {
        let json = dir.path().join("g.json");
        let txt = dir.path().join("g.txt");
        let again = dir.path().join("g2.json");
        assert!(
            run(&["export", "--graph", name, "--out", path_str(&json)])
                .status
                .success(),
            "{name}"
        );
        assert!(run(&[
            "export",
            "--graph",
            path_str(&json),
            "--format",
            "matrix",
            "--out",
            path_str(&txt)
        ])
        .status
        .success());
        assert!(run(&[
            "export",
            "--graph",
            path_str(&txt),
            "--format",
            "json",
            "--out",
            path_str(&again)
        ])
        .status
        .success());
        let m1 = run(&["export", "--graph", path_str(&json), "--format", "matrix"]).stdout;
        let m2 = run(&["export", "--graph", path_str(&again), "--format", "matrix"]).stdout;
        assert_eq!(m1, m2, "{name}");
        let a: Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
        let b: Value = serde_json::from_slice(&std::fs::read(&again).unwrap()).unwrap();
        assert_eq!(a["edges"], b["edges"], "{name}");
    }
}

#[test]
fn bipartition_is_kept_by_construct_and_recovered_for_files() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k44.json");
    assert!(
        run(&["construct", "--family", "kbip", "--t", "2", "--out", path_str(&k)])
            .status
            .success()
    );
    let v: Value = serde_json::from_slice(&std::fs::read(&k).unwrap()).unwrap();
    assert_eq!(v["bipartition_s"], 4);

    // C4 written with interleaved parts and no split: the CLI two-colors it
    let c4 = dir.path().join("c4.json");
    std::fs::write(
        &c4,
        r#"{"n":4,"edges":[[0,1,1],[1,2,1],[2,3,1],[0,3,-1]],"bipartition_s":null}"#,
    )
    .unwrap();
    let factors = format!("{},k2+", path_str(&c4));
    let out = run(&["predict", "--kind", "signed-cartesian", "--factors", &factors]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("relabeled"));
    let p = ok_json(&out);
    assert_eq!(p["matches"], true);
    assert_pairs(&p["observed"], &[(3f64.sqrt(), 4), (-(3f64.sqrt()), 4)]);
}

#[test]
fn interlace_is_seeded() {
    let args = ["interlace", "--graph", "-", "--size", "6", "--seed", "9"];
    let a = ok_json(&run_stdin(&args, PETERSEN.as_bytes()));
    let b = ok_json(&run_stdin(&args, PETERSEN.as_bytes()));
    assert_eq!(a["subset"], b["subset"]);
    assert_eq!(a["subset"].as_array().unwrap().len(), 6);
    assert_eq!(a["holds"], true);
    let explicit = ok_json(&run_stdin(
        &["interlace", "--graph", "-", "--subset", "0,2,4"],
        PETERSEN.as_bytes(),
    ));
    assert_eq!(explicit["subset"], serde_json::json!([0, 2, 4]));
    let repeated = run_stdin(&["interlace", "--graph", "-", "--subset", "1,1"], PETERSEN.as_bytes());
    assert_eq!(repeated.status.code(), Some(1));
}

const PETERSEN: &str = "10 10
0 1 0 0 1 1 0 0 0 0
1 0 1 0 0 0 1 0 0 0
0 1 0 1 0 0 0 1 0 0
0 0 1 0 1 0 0 0 1 0
1 0 0 1 0 0 0 0 0 1
1 0 0 0 0 0 0 1 1 0
0 1 0 0 0 0 0 0 1 1
0 0 1 0 0 1 0 0 0 1
0 0 0 1 0 1 1 0 0 0
0 0 0 0 1 0 1 1 0 0
";

#[test]
fn search_signature_on_c4() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = dir.path().join("c4.json");
    assert!(
        run(&["construct", "--family", "hypercube", "--n", "2", "--out", path_str(&c4)])
            .status
            .success()
    );
    let r = ok_json(&run(&["search-signature", "--graph", path_str(&c4)]));
    let q3 = ok_json(&run(&["search-signature", "--graph", "q3"]));
    assert!((q3["best_rho"].as_f64().unwrap() - 3f64.sqrt()).abs() <= 1e-8);
    assert!((r["best_rho"].as_f64().unwrap() - 2f64.sqrt()).abs() <= 1e-8);
    assert_eq!(r["satisfied"], true);
    assert_eq!(r["evaluated"], 16);
}

#[test]
fn compose_weighing_variants() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("w.txt");
    let r = ok_json(&run(&[
        "compose-weighing",
        "--variant",
        "1",
        "--w1",
        "conf:6",
        "--w2",
        "w74",
        "--out",
        path_str(&m),
    ]));
    assert_eq!(
        (r["order"].clone(), r["weight"].clone()),
        (Value::from(168), Value::from(9))
    );
    // the written matrix reads back as a weighing matrix of the same weight
    let r2 = ok_json(&run(&[
        "compose-weighing",
        "--variant",
        "3",
        "--w1",
        "w11",
        "--w2",
        path_str(&m),
    ]));
    assert_eq!(r2["weight"], 18);
    let bad = run(&["compose-weighing", "--variant", "4", "--w1", "h:2", "--w2", "w74"]);
    assert_eq!(bad.status.code(), Some(1));
    let bad = run(&["compose-weighing", "--variant", "5", "--w1", "h:2", "--w2", "h:2"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["fold", "--kind", "signed-cartesian", "--factors", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["fold", "--kind", "cartesian", "--factors", "k2+,k2+"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["fold", "--kind", "signed-cartesian", "--factors", "k3+,k2+"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["spectrum", "/definitely/not/here.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn enumeration_cap_honours_env_and_force() {
    let dir = tempfile::tempdir().unwrap();
    let pg = dir.path().join("pg.json");
    assert!(run(&[
        "construct",
        "--family",
        "petersen",
        "--sign",
        "-1",
        "--out",
        path_str(&pg)
    ])
    .status
    .success());
    let capped = Command::new(BIN)
        .args(["huang", "--graph", path_str(&pg), "--k", "7"])
        .env("SIGNED_SPECTRA_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    let forced = Command::new(BIN)
        .args(["huang", "--graph", path_str(&pg), "--k", "7", "--force", "--jobs", "2"])
        .env("SIGNED_SPECTRA_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(ok_json(&forced)["brute_min_max_degree"], 2);
}
