//! Drives the `ybe` binary: JSON outputs and the 0/1/2 exit contract.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ybe"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ybe");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("invalid JSON {text:?}: {e}"))
}

fn corpus(name: &str) -> String {
    let (code, out, _) = run(&["corpus", "emit", name], None);
    assert_eq!(code, 0);
    out
}

const S4: &str = r#"{"n":4,"sigma":[[1,2,4,3],[1,2,4,3],[2,1,3,4],[2,1,3,4]]}"#;

#[test]
fn corpus_list_and_emit() {
    let (code, out, _) = run(&["corpus", "list"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out), serde_json::json!(["e24", "s4", "trivial-N"]));
    assert_eq!(corpus("s4").trim(), S4);
    assert_eq!(
        corpus("trivial-2").trim(),
        r#"{"n":2,"sigma":[[1,2],[1,2]]}"#
    );
    let (code, _, err) = run(&["corpus", "emit", "nope"], None);
    assert_eq!(code, 1);
    assert!(err.contains("unknown corpus entry"));
}

#[test]
fn analyze_e24_from_stdin() {
    let (code, out, _) = run(&["analyze", "-"], Some(&corpus("e24")));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["multipermutation_level"], 3);
    assert_eq!(v["abelian"], true);
    assert_eq!(v["orbit_count"], 3);
    assert_eq!(v["orbits"][1][0], 9);
    assert_eq!(v["square_free"], true);
    for key in [
        "n",
        "trivial",
        "group_order",
        "cyclic_generators",
        "retract_class_count",
        "rho_class_count",
        "strong_level",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn twisted_verdicts() {
    let (code, out, _) = run(&["twisted", "-"], Some(&corpus("e24")));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["decomposable"], false);
    assert_eq!(v["mode"], "squarefree");
    assert!(v["witness"]["violation"].is_object());

    let (_, out, _) = run(&["twisted", "-"], Some(S4));
    let v = json(&out);
    assert_eq!(v["decomposable"], true);
    assert_eq!(v["Y"], serde_json::json!([1, 2]));
    assert_eq!(v["Z"], serde_json::json!([3, 4]));

    let (_, out, _) = run(&["twisted", "--mode", "general", "-"], Some(S4));
    assert_eq!(json(&out)["mode"], "general");

    let (_, out, _) = run(&["twisted", "-"], Some(&corpus("trivial-1")));
    assert_eq!(json(&out)["decomposable"], false);
}

#[test]
fn validate_exit_codes() {
    let (code, out, _) = run(&["validate", "-"], Some(S4));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["braid"], true);
    assert_eq!(v["first_failure"], Value::Null);

    // σ_1 = (2 3), σ_2 = (1 3), σ_3 = id breaks the braid relation
    let bad = r#"{"n":3,"sigma":[[1,3,2],[3,2,1],[1,2,3]]}"#;
    let (code, out, _) = run(&["validate", "-"], Some(bad));
    assert_eq!(code, 2);
    let v = json(&out);
    assert_eq!(v["braid"], false);
    assert!(v["first_failure"].is_object());
    let (code, _, _) = run(&["analyze", "-"], Some(bad));
    assert_eq!(code, 2);

    let (code, _, _) = run(&["validate", "-"], Some("{not json"));
    assert_eq!(code, 1);
    let (code, _, _) = run(&["validate", "/definitely/missing.json"], None);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["validate", "-"], Some(r#"{"n":2,"sigma":[[1,1],[1,2]]}"#));
    assert_eq!(code, 1);
}

#[test]
fn r_table_input() {
    let doc = r#"{"n":2,"r":[[[1,1],[2,1]],[[1,2],[2,2]]]}"#;
    let (code, out, _) = run(&["analyze", "-"], Some(doc));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["trivial"], true);
}

#[test]
fn retract_modes() {
    let (code, out, _) = run(&["retract", "-"], Some(&corpus("e24")));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["n"], 1);
    let (_, out, _) = run(&["retract", "--trace", "-"], Some(&corpus("e24")));
    let sizes: Vec<u64> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["n"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![24, 8, 3, 1]);
    let (_, out, _) = run(&["retract", "--mode", "rho", "--trace", "-"], Some(S4));
    assert_eq!(json(&out).as_array().unwrap().len(), 2);
}

#[test]
fn structure_commands() {
    let (code, out, _) = run(&["structure", "-", "--check-relations"], Some(S4));
    assert_eq!(code, 0);
    assert_eq!(json(&out), Value::Bool(true));
    let (code, out, _) = run(&["structure", "-", "--eval", "x1 x3"], Some(S4));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["vec"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(v["perm"], serde_json::json!([2, 1, 4, 3]));
    let (code, _, _) = run(&["structure", "-", "--eval", "x9"], Some(S4));
    assert_eq!(code, 1);
    let (code, _, _) = run(&["structure", "-"], Some(S4));
    assert_eq!(code, 1);
}

#[test]
fn enumerate_outputs() {
    let (code, out, _) = run(&["enumerate", "--n", "2", "--up-to-iso"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out).as_array().unwrap().len(), 1);
    let (_, out, _) = run(&["enumerate", "--n", "4", "--jsonl"], None);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 30);
    for l in lines {
        json(l);
    }
    let (code, _, err) = run(&["enumerate", "--n", "7"], None);
    assert_eq!(code, 1);
    assert!(err.contains("--force"));
    let (code, _, _) = run(&["enumerate", "--n", "9", "--force"], None);
    assert_eq!(code, 1);
}

#[test]
fn sweep_reports() {
    let (code, out, _) = run(
        &[
            "sweep",
            "--n-max",
            "4",
            "--claim",
            "abelian_collapse",
            "--filter",
            "abelian",
        ],
        None,
    );
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["claim"], "abelian_collapse");
    assert_eq!(v["asserted"], true);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    let (code, _, _) = run(&["sweep", "--n-max", "3", "--claim", "bogus"], None);
    assert_eq!(code, 1);
    let (code, out, _) = run(
        &["sweep", "--n-max", "4", "--claim", "conjecture_I_bound"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(json(&out)["asserted"], false);
}

#[test]
fn iso_command() {
    let dir = std::env::temp_dir().join(format!("ybe-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    let c = dir.join("c.json");
    std::fs::write(&a, S4).unwrap();
    // S4 relabeled by (1 3)
    std::fs::write(
        &b,
        r#"{"n":4,"sigma":[[1,3,2,4],[4,2,3,1],[4,2,3,1],[1,3,2,4]]}"#,
    )
    .unwrap();
    std::fs::write(
        &c,
        r#"{"n":4,"sigma":[[1,2,3,4],[1,2,3,4],[1,2,3,4],[1,2,3,4]]}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["iso", a.to_str().unwrap(), b.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let map: Vec<usize> = serde_json::from_str(&out).unwrap();
    let p = ybe::Perm::from_one_based(&map).unwrap();
    let sa = ybe::json::read_solution(S4).unwrap();
    let sb = ybe::json::read_solution(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(sa.relabel(&p), sb);
    let (_, out, _) = run(&["iso", a.to_str().unwrap(), c.to_str().unwrap()], None);
    assert_eq!(json(&out), Value::Null);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn pretty_output_is_the_same_json() {
    let (_, compact, _) = run(&["analyze", "-"], Some(S4));
    let (_, pretty, _) = run(&["--pretty", "analyze", "-"], Some(S4));
    assert!(pretty.lines().count() > 1);
    assert_eq!(json(&compact), json(&pretty));
}
