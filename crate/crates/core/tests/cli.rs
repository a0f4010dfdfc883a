use std::path::PathBuf;
use std::process::{Command, Output};

use cylindric::catalog;
use cylindric::cli::{parse_document, render_document, run, WorkbenchDocument, FAIL, PASS, RESOURCE, USAGE};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

fn cylwb(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cylwb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cylwb"));
    cmd.args(args).env_remove("CYLWB_MAX_SIZE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

#[test]
fn validate_b4_passes() {
    let (code, out, _) = cylwb(&["validate", &data("B4.json")]);
    assert_eq!(code, PASS, "{out}");
    assert!(out.contains("B4: PASS"));
}

#[test]
fn validate_broken_fails_with_witness_a() {
    let (code, out, _) = cylwb(&["--json", "validate", &data("broken.json")]);
    assert_eq!(code, FAIL);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let verdicts = v["results"][0]["verdicts"].as_array().unwrap();
    let meet_zero = verdicts.iter().find(|x| x["axiom"] == "ortho.meet-zero").unwrap();
    assert_eq!(meet_zero["pass"], false);
    assert_eq!(meet_zero["witness"], serde_json::json!(["a"]));
}

#[test]
fn json_verdicts_are_schema_stable() {
    let (_, out, _) = cylwb(&["--json", "--seed-catalog", "validate"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "validate");
    for r in v["results"].as_array().unwrap() {
        for verdict in r["verdicts"].as_array().unwrap() {
            let keys: Vec<&str> = verdict.as_object().unwrap().keys().map(String::as_str).collect();
            assert!(keys.contains(&"axiom") && keys.contains(&"pass"), "{verdict}");
            assert!(keys.iter().all(|k| ["axiom", "pass", "witness"].contains(k)));
        }
    }
}

#[test]
fn roundtrip_mo2_prints_the_isomorphism() {
    let (code, out, _) = cylwb(&["roundtrip", &data("MO2.json")]);
    assert_eq!(code, PASS, "{out}");
    assert!(out.contains("a⊥ -> {↑a⊥}"), "{out}");
}

#[test]
fn unknown_element_is_a_parse_error() {
    let (code, _, err) = cylwb(&["validate", &data("unknown_ocomp.json")]);
    assert_eq!(code, USAGE);
    assert!(err.contains("line 7, column 23") && err.contains("`c`"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(cylwb(&["frobnicate"]).0, USAGE);
    assert_eq!(cylwb(&["validate"]).0, USAGE);
    assert_eq!(cylwb(&["--seed-catalog", "validate", "Z9"]).0, USAGE);
    assert_eq!(cylwb(&["filters", &data("B4_frame.json")]).0, USAGE);
    assert_eq!(cylwb(&["validate", "/nonexistent/x.json"]).0, USAGE);
    assert_eq!(cylwb(&["--dims", "3", "--seed-catalog", "validate", "PS4"]).0, USAGE);
    assert_eq!(cylwb(&["--help"]).0, PASS);
}

#[test]
fn resource_guard_exits_3() {
    let (code, _, err) = cylwb(&["--max-size", "4", "--seed-catalog", "complete", "PS4"]);
    assert_eq!(code, RESOURCE, "{err}");
    let out = binary(&["--seed-catalog", "complete", "PS4"], &[("CYLWB_MAX_SIZE", "4")]);
    assert_eq!(out.status.code(), Some(RESOURCE));
}

#[test]
fn boolean_track_refuses_mo2() {
    let (code, _, err) = cylwb(&["--boolean", "--seed-catalog", "roundtrip", "MO2"]);
    assert_eq!(code, FAIL);
    assert!(err.contains("distributive"), "{err}");
}

#[test]
fn spectrum_then_roundtrip_composes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, space, _) = cylwb(&["spectrum", &data("PS4.json")]);
    assert_eq!(code, PASS);
    let path = dir.path().join("S0_PS4.json");
    std::fs::write(&path, &space).unwrap();
    let p = path.display().to_string();
    assert_eq!(cylwb(&["validate", &p]).0, PASS);
    assert_eq!(cylwb(&["roundtrip", &p]).0, PASS);
    let (code, alg, _) = cylwb(&["dualize", &p]);
    assert_eq!(code, PASS);
    let WorkbenchDocument::Algebra(a) = parse_document(&alg).unwrap() else {
        panic!("dualize must print an algebra")
    };
    assert_eq!(a.len(), 16);
}

#[test]
fn boolean_spectrum_dualizes_back() {
    let (code, space, _) = cylwb(&["--boolean", "--seed-catalog", "spectrum", "B8"]);
    assert_eq!(code, PASS);
    let WorkbenchDocument::Space(x) = parse_document(&space).unwrap() else {
        panic!("spectrum must print a space")
    };
    assert_eq!(x.len(), 7);
}

#[test]
fn hom_dual_and_coincide() {
    assert_eq!(cylwb(&["--seed-catalog", "hom-dual"]).0, PASS);
    assert_eq!(cylwb(&["--dims", "2", "hom-dual", &data("B2_into_B4.json")]).0, PASS);
    assert_eq!(cylwb(&["--boolean", "--seed-catalog", "coincide"]).0, PASS);
    let (code, out, _) = cylwb(&["--seed-catalog", "coincide", "MO2"]);
    assert_eq!(code, PASS);
    assert!(out.contains("reported only"));
}

#[test]
fn filters_and_complete_on_catalog() {
    let (code, out, _) = cylwb(&["--seed-catalog", "filters", "MO2"]);
    assert_eq!(code, PASS);
    assert_eq!(out.matches("note: ↑").count(), 5);
    assert_eq!(cylwb(&["--seed-catalog", "complete"]).0, PASS);
    assert_eq!(cylwb(&["--boolean", "--seed-catalog", "complete", "B8"]).0, PASS);
}

#[test]
fn dot_outputs() {
    let (code, b4, _) = cylwb(&["dot", &data("B4.json")]);
    assert_eq!(code, PASS);
    let nodes = |d: &str| d.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    assert_eq!(nodes(&b4), 4);
    let (_, frame, _) = cylwb(&["dot", "--frame", &data("B4.json")]);
    assert_eq!(nodes(&frame), 3);
    assert_eq!(frame.matches("style=dashed").count(), 1);
    let (_, mo2, _) = cylwb(&["--seed-catalog", "dot", "MO2"]);
    assert_eq!(nodes(&mo2), 6);
    assert_eq!(mo2.matches(" -> ").count(), 8);
    assert_eq!(cylwb(&["dot", &data("B2_into_B4.json")]).0, USAGE);
}

#[test]
fn golden_ps4_matches_the_catalog() {
    let text = std::fs::read_to_string(data("PS4.json")).unwrap();
    let doc = parse_document(&text).unwrap();
    let WorkbenchDocument::Algebra(a) = &doc else {
        panic!("PS4.json is an algebra")
    };
    assert_eq!((a.len(), a.dims(), a.delta_table().len()), (16, 2, 2));
    assert_eq!(a, &catalog::ps4());
    assert_eq!(render_document(&doc), text);
}

#[test]
fn catalog_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().display().to_string();
    let (code, out, _) = cylwb(&["catalog", "--export", &d]);
    assert_eq!(code, PASS);
    assert!(out.contains("PS4"));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let doc = parse_document(&text).unwrap();
        assert_eq!(render_document(&doc), text);
    }
    let b4 = std::fs::read_to_string(dir.path().join("B4.json")).unwrap();
    assert_eq!(parse_document(&b4).unwrap(), WorkbenchDocument::Algebra(catalog::b4()));
}

#[test]
fn binary_exit_codes() {
    assert_eq!(binary(&["validate", &data("B4.json")], &[]).status.code(), Some(PASS));
    assert_eq!(binary(&["validate", &data("broken.json")], &[]).status.code(), Some(FAIL));
    assert_eq!(binary(&["validate", &data("unknown_ocomp.json")], &[]).status.code(), Some(USAGE));
}
