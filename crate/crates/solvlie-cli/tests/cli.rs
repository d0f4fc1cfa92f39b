//! End-to-end tests of the `solvlie` binary: exit-code contract, canonical
//! round-trips, schema conformance of the JSON outputs, and the documented
//! error messages for family preconditions.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_solvlie"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("solvlie-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

const H1_DOC: &str = r#"{
  "kind": "algebra",
  "dim": 3,
  "basis": ["Z", "Y1", "X1"],
  "brackets": [ { "i": 1, "j": 2, "coeffs": { "0": "1" } } ]
}"#;

/// Heisenberg table plus [Z, X1] = -X1 (so [X1, Z] = X1): Jacobi fails.
const BAD_JACOBI_DOC: &str = r#"{
  "kind": "algebra",
  "dim": 3,
  "basis": ["Z", "Y1", "X1"],
  "brackets": [
    { "i": 1, "j": 2, "coeffs": { "0": "1" } },
    { "i": 0, "j": 2, "coeffs": { "2": "-1" } }
  ]
}"#;

const BAD_LEIBNIZ_DOC: &str = r#"{
  "kind": "semidirect",
  "algebra": {
    "dim": 3,
    "basis": ["Z", "Y1", "X1"],
    "brackets": [ { "i": 1, "j": 2, "coeffs": { "0": "1" } } ]
  },
  "derivation": [["3","0","0"],["0","1","0"],["0","0","1"]]
}"#;

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", write_temp("h1.json", H1_DOC).to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));

    let bad = run(&[
        "validate",
        write_temp("bad_jacobi.json", BAD_JACOBI_DOC)
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("jacobi"), "{}", stdout(&bad));

    let leib = run(&[
        "validate",
        write_temp("bad_leibniz.json", BAD_LEIBNIZ_DOC)
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(leib.status.code(), Some(1));
    assert!(stdout(&leib).contains("leibniz"), "{}", stdout(&leib));

    let garbled = run(&[
        "validate",
        write_temp("garbled.json", "{ nope").to_str().unwrap(),
    ]);
    assert_eq!(garbled.status.code(), Some(2));

    let float = run(&[
        "validate",
        write_temp("float.json", &H1_DOC.replace("\"1\"", "\"0.5\""))
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(float.status.code(), Some(2));
    assert!(stderr(&float).contains("exact fraction"));

    // bracket entries must have i < j (antisymmetric completion is implied)
    let swapped = run(&[
        "validate",
        write_temp(
            "swapped.json",
            &H1_DOC.replace("\"i\": 1, \"j\": 2", "\"i\": 2, \"j\": 1"),
        )
        .to_str()
        .unwrap(),
    ]);
    assert_eq!(swapped.status.code(), Some(2));
    assert!(stderr(&swapped).contains("i < j"), "{}", stderr(&swapped));
}

#[test]
fn family_emit_round_trips_byte_identically() {
    let out = run(&["family", "heisenberg", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["dim"], 7);

    // emitted file validates
    let path = write_temp("h3.json", &text);
    let val = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(val.status.code(), Some(0));

    // parse -> emit is byte-identical: deform at h = 1 on a 2-step algebra
    // reproduces the identical document
    let deformed = run(&[
        "deform",
        path.to_str().unwrap(),
        "--phi",
        "scaling",
        "--h",
        "1",
    ]);
    assert_eq!(deformed.status.code(), Some(0));
    assert_eq!(stdout(&deformed), text);
}

#[test]
fn family_precondition_errors_carry_the_condition() {
    let out = run(&["family", "n6n15", "--a", "1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("a_1+a_2+a_3=0"), "{}", stderr(&out));

    let out = run(&["family", "n6n15", "--a", "1,-1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("a_1a_2a_3"), "{}", stderr(&out));

    let out = run(&[
        "family", "hk", "--k", "C", "--n", "1", "--a", "1", "--b", "2", "--c", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("a_k+b_k=c"), "{}", stderr(&out));
}

#[test]
fn hk_family_emits_twelve_dimensional_file() {
    let out = run(&["family", "hk", "--k", "H", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["dim"], 12);
    let path = write_temp("hk_h1.json", &stdout(&out));
    assert_eq!(
        run(&["validate", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn analyze_reports_structure() {
    let out = run(&["family", "heisenberg", "--n", "2", "--emit"]);
    assert_eq!(out.status.code(), Some(2)); // --emit requires a value

    let gen = run(&["family", "heisenberg", "--n", "2"]);
    let path = write_temp("h2.json", &stdout(&gen));
    let out = run(&["analyze", path.to_str().unwrap(), "--json", "--exact-rank"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let fields = doc["fields"].as_array().unwrap();
    let get = |name: &str| -> &Value {
        &fields
            .iter()
            .find(|f| f["name"] == name)
            .unwrap_or_else(|| panic!("missing field {name}"))["value"]
    };
    assert_eq!(*get("center_dim"), Value::from(1));
    assert_eq!(*get("generic_orbit_dim"), Value::from(4));
    assert_eq!(*get("has_generic_flat_orbits"), Value::from(true));
    // every field names the operation that produced it
    assert!(fields.iter().all(|f| f["operation"].is_string()));

    // free 2-step: flat orbits fail
    let gen = run(&["family", "free_two_step"]);
    let path = write_temp("free.json", &stdout(&gen));
    let out = run(&["analyze", path.to_str().unwrap(), "--json", "--exact-rank"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let flat = doc["fields"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["name"] == "has_generic_flat_orbits")
        .unwrap();
    assert_eq!(flat["value"], Value::from(false));
    assert_eq!(flat["citation"], Value::from("Lemma extra"));
}

fn family_doc(family: &str, params: Value) -> String {
    serde_json::json!({"kind": "family", "family": family, "params": params}).to_string()
}

#[test]
fn classify_single_and_batch_match_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../schema/verdict.schema.json")).unwrap();

    let p1 = write_temp(
        "cls_h1.json",
        &family_doc(
            "heisenberg",
            serde_json::json!({"n": 1, "diag_xyz": ["2", "-1", "1"]}),
        ),
    );
    let out = run(&["classify", p1.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    schema_check(&schema, &schema, &doc).unwrap();
    assert_eq!(doc["verdict"]["af_embeddable"], "yes");
    let cites: Vec<&str> = doc["verdict"]["rules_fired"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["citation"].as_str().unwrap())
        .collect();
    assert!(cites.contains(&"Prop. Heis(iv)"), "{cites:?}");

    let p2 = write_temp(
        "cls_n6n15.json",
        &family_doc(
            "n6n15",
            serde_json::json!({"a": ["1","1","-2"], "b": ["1","2","3"]}),
        ),
    );
    let p3 = write_temp(
        "cls_hk.json",
        &family_doc(
            "hk",
            serde_json::json!({"k": "C", "n": 1, "a": ["1"], "b": ["1"], "c": "2"}),
        ),
    );
    let out = run(&[
        "classify",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        p3.to_str().unwrap(),
        "--batch",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    schema_check(&schema, &schema, &doc).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert_eq!(reports[1]["verdict"]["stably_finite"], "no");
    assert_eq!(reports[2]["verdict"]["stably_projectionless"], "no");

    // multiple inputs without --batch are a usage error
    let out = run(&["classify", p1.to_str().unwrap(), p2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_accepts_rank_flags() {
    let path = write_temp(
        "flags.json",
        &family_doc(
            "heisenberg",
            serde_json::json!({"n": 1, "diag_xyz": ["2", "-1", "1"]}),
        ),
    );
    let out = run(&[
        "classify",
        path.to_str().unwrap(),
        "--exact-rank",
        "--seed",
        "7",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    // verdicts never depend on the sampling seed
    let out2 = run(&["classify", path.to_str().unwrap(), "--seed", "99", "--json"]);
    assert_eq!(stdout(&out), stdout(&out2));
}

#[test]
fn classify_rejects_bare_algebra_inputs() {
    let path = write_temp("bare.json", H1_DOC);
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn emitted_documents_match_input_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../schema/input.schema.json")).unwrap();
    for args in [
        vec!["family", "heisenberg", "--n", "1", "--diag-xyz", "2,-1,1"],
        vec!["family", "free_two_step"],
        vec!["family", "n6n15", "--a", "1,1,-2", "--b", "1,2,3"],
        vec!["family", "hk", "--k", "O", "--n", "1"],
        vec!["family", "axb", "--d", "1,0;0,-1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
        schema_check(&schema, &schema, &doc).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn validate_and_analyze_json_match_report_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../schema/report.schema.json")).unwrap();

    let path = write_temp("rs_h1.json", H1_DOC);
    let out = run(&["validate", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    schema_check(&schema, &schema, &doc).unwrap();

    let bad = write_temp("rs_bad.json", BAD_JACOBI_DOC);
    let out = run(&["validate", bad.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    schema_check(&schema, &schema, &doc).unwrap();
    assert_eq!(doc["ok"], false);

    let out = run(&["analyze", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    schema_check(&schema, &schema, &doc).unwrap();
}

#[test]
fn deform_limit_and_failure() {
    let gen = run(&["family", "heisenberg", "--n", "1"]);
    let path = write_temp("h1_deform.json", &stdout(&gen));

    // scaling limit: abelian R^3
    let out = run(&[
        "deform",
        path.to_str().unwrap(),
        "--phi",
        "scaling",
        "--limit",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["dim"], 3);
    assert_eq!(doc["brackets"].as_array().unwrap().len(), 0);

    // h = 1/2 scales the bracket
    let out = run(&[
        "deform",
        path.to_str().unwrap(),
        "--phi",
        "scaling",
        "--h",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["brackets"][0]["coeffs"]["0"], "1/2");

    // scaling Z only: h^{-1} survives, the limit must be rejected
    let out = run(&[
        "deform",
        path.to_str().unwrap(),
        "--phi",
        "diag:1,0,0",
        "--limit",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("limit does not exist"),
        "{}",
        stderr(&out)
    );
}

// ---------------------------------------------------------------------------
// Minimal JSON-Schema checker covering the subset used by the shipped
// schemas: type, enum, required, properties, additionalProperties, items,
// oneOf, maxItems, $ref into #/definitions.
// ---------------------------------------------------------------------------

fn schema_check(root: &Value, schema: &Value, value: &Value) -> Result<(), String> {
    if let Some(r) = schema.get("$ref") {
        let path = r.as_str().ok_or("bad $ref")?;
        let target = path
            .strip_prefix("#/")
            .ok_or("unsupported $ref")?
            .split('/')
            .try_fold(root, |acc, key| acc.get(key).ok_or("dangling $ref"))?;
        return schema_check(root, target, value);
    }
    if let Some(options) = schema.get("oneOf").and_then(|v| v.as_array()) {
        let mut errs = Vec::new();
        for opt in options {
            match schema_check(root, opt, value) {
                Ok(()) => return Ok(()),
                Err(e) => errs.push(e),
            }
        }
        return Err(format!("no oneOf branch matched: {}", errs.join(" | ")));
    }
    if let Some(allowed) = schema.get("enum").and_then(|v| v.as_array()) {
        if !allowed.contains(value) {
            return Err(format!("{value} not in enum {allowed:?}"));
        }
        return Ok(());
    }
    if let Some(ty) = schema.get("type").and_then(|v| v.as_str()) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            _ => return Err(format!("unsupported type {ty}")),
        };
        if !ok {
            return Err(format!("expected {ty}, got {value}"));
        }
    }
    if let Some(obj) = value.as_object() {
        if let Some(req) = schema.get("required").and_then(|v| v.as_array()) {
            for key in req {
                let key = key.as_str().unwrap();
                if !obj.contains_key(key) {
                    return Err(format!("missing required key {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(|v| v.as_object());
        for (key, sub) in obj {
            if let Some(ps) = props.and_then(|p| p.get(key)) {
                schema_check(root, ps, sub).map_err(|e| format!("{key}: {e}"))?;
            } else if let Some(ap) = schema.get("additionalProperties") {
                if !ap.is_boolean() {
                    schema_check(root, ap, sub).map_err(|e| format!("{key}: {e}"))?;
                }
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(max) = schema.get("maxItems").and_then(|v| v.as_u64()) {
            if arr.len() as u64 > max {
                return Err(format!("array longer than maxItems {max}"));
            }
        }
        if let Some(items) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                schema_check(root, items, item).map_err(|e| format!("[{i}]: {e}"))?;
            }
        }
    }
    Ok(())
}
