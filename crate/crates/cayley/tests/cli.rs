use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = cayley(&full);
    let doc = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: not one JSON document: {e}"));
    (o.status.code().unwrap(), doc)
}

fn crate_file(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn load(rel: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(crate_file(rel)).unwrap()).unwrap()
}

fn temp_collection(name: &str, preset: &str, bundles: &[&[i32]]) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("{name}.json"));
    let doc = json!({
        "name": name,
        "preset": preset,
        "crossed": 1,
        "bundles": bundles.iter().map(|w| json!({"weight": w})).collect::<Vec<_>>(),
    });
    std::fs::write(&path, doc.to_string()).unwrap();
    path
}

#[test]
fn dim_of_the_minuscule_module() {
    let o = cayley(&["dim", "--preset", "E6-paper", "--weight", "0,0,0,0,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "27\n");
}

#[test]
fn rank_mismatch_is_a_usage_error() {
    let o = cayley(&["dim", "--preset", "E6-paper", "--weight", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("rank 6"), "{err}");
    assert!(err.contains("Usage: cayley dim"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_flags_and_presets_exit_two() {
    assert_eq!(cayley(&["dim", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        cayley(&["dim", "--preset", "G2", "--weight", "1,0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cayley(&["dim", "--preset", "A2", "--cartan", "x.json", "--weight", "1,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(cayley(&[]).status.code(), Some(2));
}

#[test]
fn verify_cayley27_passes() {
    let o = cayley(&["verify", "cayley27"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    assert!(
        first.starts_with("cayley27: PASS, 729 pairs checked, 0 violations, "),
        "{first}"
    );
    assert!(first.ends_with(" s"));
}

#[test]
fn exit_one_iff_verdict_fails() {
    let canonical = temp_collection(
        "canonical-twist",
        "E6-paper",
        &[&[0, 0, 0, 0, 0, 0], &[-12, 0, 0, 0, 0, 0]],
    );
    let (code, doc) = json_of(&["verify", canonical.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["verdict"], "fail");
    assert_eq!(
        doc["violations"][0],
        json!({"pair": [1, 2], "degree": 16, "dim": 1, "rule": "forward-ext"})
    );

    let single = temp_collection("structure-sheaf", "E6-paper", &[&[0, 0, 0, 0, 0, 0]]);
    let (code, doc) = json_of(&["verify", single.to_str().unwrap()]);
    assert_eq!((code, &doc["verdict"]), (0, &json!("pass")));
    assert_eq!(doc["hom_matrix"], json!([[1]]));

    let mut reversed = load("data/cayley27.json");
    reversed["bundles"].as_array_mut().unwrap().reverse();
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cayley27-reversed.json");
    std::fs::write(&path, reversed.to_string()).unwrap();
    let (code, doc) = json_of(&["verify", path.to_str().unwrap()]);
    assert_eq!((code, &doc["verdict"]), (1, &json!("fail")));
    assert!(doc["violations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|v| v["rule"] == "backward" && v["degree"] == 0));
}

#[test]
fn hom_matrices_of_small_collections() {
    for (name, bundles) in [
        ("o-o1", [[0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]]),
        ("sdual-o", [[-1, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0]]),
    ] {
        let path = temp_collection(name, "E6-paper", &[&bundles[0], &bundles[1]]);
        let (code, doc) = json_of(&["verify", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(doc["hom_matrix"], json!([[1, 27], [0, 1]]), "{name}");
    }
}

#[test]
fn json_reports_do_not_depend_on_jobs_or_cache() {
    for target in ["cayley27", "kapranovQ7"] {
        let base = cayley(&["--format", "json", "verify", target]).stdout;
        for extra in [
            &["--jobs", "1"][..],
            &["--jobs", "3"],
            &["--no-cache"],
            &["--jobs", "2", "--no-cache"],
        ] {
            let mut args = vec!["--format", "json"];
            args.extend_from_slice(extra);
            args.extend_from_slice(&["verify", target]);
            assert!(cayley(&args).stdout == base, "{target} {extra:?}");
        }
    }
}

#[test]
fn shipped_files_match_built_ins() {
    assert_eq!(
        stdout(&cayley(&["ledger", "dump"])),
        std::fs::read_to_string(crate_file("data/builtin_ledger.json")).unwrap()
    );
    for name in ["cayley27", "kapranovQ7"] {
        let file = cayley(&[
            "--format",
            "json",
            "verify",
            crate_file(&format!("data/{name}.json")).to_str().unwrap(),
        ]);
        let builtin = cayley(&["--format", "json", "verify", name]);
        assert!(file.stdout == builtin.stdout, "{name}");
    }
    let (code, doc) = json_of(&["ledger", crate_file("data/builtin_ledger.json").to_str().unwrap()]);
    assert_eq!((code, &doc["verdict"]), (0, &json!("pass")));
}

#[test]
fn ledger_reports_failures_with_the_difference() {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("bad-ledger.json");
    let ledger = json!([
        {"name": "twist", "kind": "iso", "terms": ["O", "O(1)"]},
        {"name": "dual", "kind": "iso", "terms": ["dual(E[0,0,0,0,0,1])", "E[0,0,0,0,0,1](-1)"]},
    ]);
    std::fs::write(&path, ledger.to_string()).unwrap();
    let (code, doc) = json_of(&["ledger", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!((doc["passed"].clone(), doc["failed"].clone()), (json!(1), json!(1)));
    let diff = &doc["results"][0]["difference"];
    assert_eq!(
        diff,
        &json!([{"weight": [1, 0, 0, 0, 0, 0], "mult": 1}, {"weight": [0, 0, 0, 0, 0, 0], "mult": -1}])
    );

    let text = stdout(&cayley(&["ledger", path.to_str().unwrap()]));
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("note: checks are character-level"));
    assert!(text.contains("FAIL  twist"));

    std::fs::write(
        &path,
        r#"[{"name": "broken", "kind": "iso", "terms": ["wedge^2(", "O"]}]"#,
    )
    .unwrap();
    let o = cayley(&["ledger", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("byte 8"));
}

/// Every JSON document the CLI can print, including an error document.
fn sample_documents() -> Vec<(Vec<&'static str>, i32, Value)> {
    let cases: Vec<Vec<&str>> = vec![
        vec!["dim", "--weight", "0,0,0,0,0,1"],
        vec!["dim", "--levi", "--weight", "-1,0,0,0,0,1"],
        vec!["char", "--weight", "1,0,0,0,0,0"],
        vec!["char", "--levi", "--weight", "0,0,0,1,0,0"],
        vec!["tensor", "--weight", "1,0,0,0,0,0", "--weight2", "0,0,0,0,0,1"],
        vec![
            "tensor",
            "--levi",
            "--weight",
            "0,0,0,0,0,1",
            "--weight2",
            "-1,0,0,0,0,1",
        ],
        vec!["branch", "--weight", "0,0,0,1,0,0"],
        vec!["cohomology", "--weight", "0,0,0,0,0,1"],
        vec!["cohomology", "--weight", "-12,0,0,0,0,0"],
        vec!["ext", "--weight", "-1,0,1,0,0,0", "--weight2", "0,0,0,0,0,1"],
        vec!["c1", "--weight", "0,0,0,0,0,1"],
        vec!["verify", "kapranovQ7"],
        vec!["ledger"],
        vec!["presets"],
        vec!["dim", "--weight", "1,2"],
        vec!["--preset", "B4", "cohomology", "--weight", "0,0,0,1"],
    ];
    cases
        .into_iter()
        .map(|args| {
            let (code, doc) = json_of(&args);
            (args, code, doc)
        })
        .collect()
}

#[test]
fn json_outputs_match_the_shipped_schema() {
    let validator = jsonschema::validator_for(&load("schemas/output.schema.json")).unwrap();
    let mut docs = sample_documents();
    let (_, cayley27) = json_of(&["verify", "cayley27"]);
    docs.push((vec!["verify", "cayley27"], 0, cayley27));
    for (args, _, doc) in &docs {
        let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert!(doc["command"].is_string());
    }
    for (schema, file) in [
        ("schemas/ledger.schema.json", "data/builtin_ledger.json"),
        ("schemas/collection.schema.json", "data/cayley27.json"),
        ("schemas/collection.schema.json", "data/kapranovQ7.json"),
    ] {
        let v = jsonschema::validator_for(&load(schema)).unwrap();
        assert!(v.is_valid(&load(file)), "{file}");
    }
    let cartan = jsonschema::validator_for(&load("schemas/cartan.schema.json")).unwrap();
    assert!(cartan.is_valid(&json!({"rank": 2, "entries": [[2, -1], [-1, 2]]})));
    assert!(!cartan.is_valid(&json!({"rank": 2})));
}

#[test]
fn every_degree_is_listed() {
    let (_, doc) = json_of(&["ext", "--weight", "0,0,0,0,0,0", "--weight2", "1,0,0,0,0,0"]);
    let table = doc["table"].as_array().unwrap();
    assert_eq!(table.len(), 17);
    assert_eq!(table[0]["dim"], 27);
    assert_eq!(
        table[0]["weights"],
        json!([{"weight": [1, 0, 0, 0, 0, 0], "dual": [0, 0, 0, 0, 0, 1], "mult": 1}])
    );
    assert!(table[1..].iter().all(|e| e["dim"] == 0 && e["weights"] == json!([])));
}

fn numbers(s: &str) -> Vec<i64> {
    s.split(|c: char| !(c.is_ascii_digit() || c == '-'))
        .filter_map(|t| t.parse().ok())
        .collect()
}

#[test]
fn text_and_json_report_the_same_numbers() {
    let text_of = |args: &[&str]| stdout(&cayley(args));

    let (_, d) = json_of(&["dim", "--weight", "0,0,1,0,0,0"]);
    assert_eq!(
        text_of(&["dim", "--weight", "0,0,1,0,0,0"]).trim(),
        d["dim"].to_string()
    );

    let (_, c) = json_of(&["c1", "--weight", "0,0,0,0,0,1"]);
    assert_eq!(
        text_of(&["c1", "--weight", "0,0,0,0,0,1"]),
        format!("E[0,0,0,0,0,1]: rank {}, c1 {}\n", c["rank"], c["c1"])
    );

    let args = ["branch", "--weight", "0,0,0,1,0,0"];
    let (_, b) = json_of(&args);
    let text_dims: Vec<i64> = text_of(&args).lines().map(|l| *numbers(l).last().unwrap()).collect();
    let mut json_dims: Vec<i64> = b["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["dim"].as_i64().unwrap())
        .collect();
    json_dims.push(b["total_dim"].as_i64().unwrap());
    assert_eq!(text_dims, json_dims);
    assert_eq!(json_dims, [16, 45, 1, 16, 78]);

    for args in [
        &["cohomology", "--weight", "0,0,0,0,0,1"][..],
        &["cohomology", "--weight", "-12,0,0,0,0,0"],
        &["ext", "--weight", "-1,0,1,0,0,0", "--weight2", "0,0,0,0,0,1"],
        &["ext", "--weight", "0,0,0,1,0,0", "--weight2", "0,0,0,1,0,0"],
    ] {
        let (_, doc) = json_of(args);
        let nonzero: Vec<(i64, i64)> = doc["table"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|e| e["dim"] != 0)
            .map(|e| (e["degree"].as_i64().unwrap(), e["dim"].as_i64().unwrap()))
            .collect();
        let from_text: Vec<(i64, i64)> = text_of(args)
            .lines()
            .filter(|l| l.starts_with("H^") || l.starts_with("Ext^"))
            .filter(|l| !l.contains("^* = 0"))
            .map(|l| {
                let n = numbers(l);
                (n[0], n[1])
            })
            .collect();
        assert_eq!(from_text, nonzero, "{args:?}");
    }

    for target in ["kapranovQ7", "cayley27"] {
        let (_, doc) = json_of(&["verify", target]);
        let text = text_of(&["verify", target]);
        let hom: Vec<Vec<i64>> = text
            .lines()
            .skip_while(|l| !l.starts_with("Hom matrix"))
            .skip(1)
            .take_while(|l| !l.is_empty())
            .filter(|l| !l.starts_with('-'))
            .map(|l| numbers(l)[1..].to_vec())
            .collect();
        let json_hom: Vec<Vec<i64>> = doc["hom_matrix"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_array().unwrap().iter().map(|d| d.as_i64().unwrap()).collect())
            .collect();
        assert_eq!(hom, json_hom, "{target}");
        let summary: Vec<i64> = text
            .lines()
            .next()
            .unwrap()
            .split(", ")
            .skip(1)
            .take(2)
            .map(|p| numbers(p)[0])
            .collect();
        assert_eq!(
            summary,
            [
                doc["pairs_checked"].as_i64().unwrap(),
                doc["violations"].as_array().unwrap().len() as i64
            ]
        );
    }

    let (_, l) = json_of(&["ledger"]);
    let head = numbers(text_of(&["ledger"]).lines().next().unwrap());
    assert_eq!(
        head[head.len() - 3..],
        [
            l["total"].as_i64().unwrap(),
            l["passed"].as_i64().unwrap(),
            l["failed"].as_i64().unwrap()
        ]
    );
}
