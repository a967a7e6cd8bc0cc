//! End-to-end checks of the binary: exit codes, JSON reports against the
//! shipped schema, and determinism.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn lglab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lglab"))
}

fn tempfile(name: &str) -> std::path::PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("lglab-test-{}-{name}", std::process::id()));
    p
}

// ---------------------------------------------------------------------------
// A small structural validator for the subset of JSON Schema the shipped
// schema uses: type, required, properties, items, enum.
// ---------------------------------------------------------------------------

fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(expected) = schema.get("type").and_then(Value::as_str) {
        let matches = match expected {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            "number" => value.is_number(),
            other => return Err(format!("{path}: unsupported schema type {other}")),
        };
        if !matches {
            return Err(format!("{path}: expected {expected}, found {value}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().expect("required entries are strings");
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required field '{key}'"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, subschema) in props {
            if let Some(sub) = value.get(key) {
                validate(subschema, sub, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = value.as_array() {
            for (i, item) in array.iter().enumerate() {
                validate(items, item, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn shipped_schema() -> Value {
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json"),
    )
    .expect("schema file");
    serde_json::from_str(&text).expect("schema parses")
}

#[test]
fn report_json_matches_schema_and_round_trips() {
    let schema = shipped_schema();
    let json_path = tempfile("report.json");
    let status = lglab()
        .args(["report", "--poly", "x^3 - y^2", "--vars", "x,y", "--json"])
        .arg(&json_path)
        .status()
        .expect("spawn");
    assert!(status.success());
    let text = std::fs::read_to_string(&json_path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    validate(&schema, &value, "$").unwrap();
    // Round trip through the typed structures.
    let typed: lglab::report::Report = serde_json::from_str(&text).unwrap();
    assert!(!serde_json::to_string(&typed).unwrap().is_empty());
    assert!(typed.ok);
    std::fs::remove_file(&json_path).ok();
}

#[test]
fn milnor_and_pairing_json_match_schema() {
    let schema = shipped_schema();
    for (cmd, poly) in [("milnor", "x^3 + y^4"), ("pairing", "x^2 + y^2")] {
        let json_path = tempfile(&format!("{cmd}.json"));
        let status = lglab()
            .args([cmd, "--poly", poly, "--vars", "x,y", "--json"])
            .arg(&json_path)
            .status()
            .expect("spawn");
        assert!(status.success(), "{cmd} failed");
        let value: Value =
            serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
        validate(&schema, &value, "$").unwrap_or_else(|e| panic!("{cmd}: {e}"));
        std::fs::remove_file(&json_path).ok();
    }
}

#[test]
fn reports_are_deterministic_modulo_timestamp() {
    let mut outputs = Vec::new();
    for run in 0..2 {
        let json_path = tempfile(&format!("det-{run}.json"));
        let status = lglab()
            .args(["freeness", "--poly", "x^2*y + y^3", "--vars", "x,y", "--json"])
            .arg(&json_path)
            .status()
            .expect("spawn");
        assert!(status.success());
        let mut value: Value =
            serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
        value["timestamp_unix"] = Value::from(0);
        outputs.push(serde_json::to_string(&value).unwrap());
        std::fs::remove_file(&json_path).ok();
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn exit_codes() {
    // Parse error: 2.
    let status = lglab()
        .args(["milnor", "--poly", "x +", "--vars", "x"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    // Unknown variable: 2.
    let status = lglab()
        .args(["milnor", "--poly", "x + w", "--vars", "x,y"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    // Precondition: non-isolated critical locus.
    let status = lglab()
        .args(["milnor", "--poly", "x*y*z", "--vars", "x,y,z"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
    // Precondition: tameness gate without the override.
    let status = lglab()
        .args(["brieskorn", "--poly", "x*y", "--vars", "x,y"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
    // The override lifts it.
    let status = lglab()
        .args(["brieskorn", "--poly", "x*y", "--vars", "x,y", "--assume-tame"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
}

#[test]
fn seed_changes_only_the_extra_sample() {
    let mut sample_sets = Vec::new();
    for seed in ["0", "12345"] {
        let json_path = tempfile(&format!("seed-{seed}.json"));
        let status = lglab()
            .args([
                "fibers", "--poly", "x^2", "--vars", "x", "--seed", seed, "--json",
            ])
            .arg(&json_path)
            .status()
            .unwrap();
        assert!(status.success());
        let value: Value =
            serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
        let samples: Vec<String> = value["job"]["samples"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect();
        assert_eq!(samples.len(), 6);
        assert_eq!(&samples[..5], &["0", "1", "-1", "2", "7/3"]);
        sample_sets.push(samples);
        std::fs::remove_file(&json_path).ok();
    }
    assert_ne!(sample_sets[0][5], sample_sets[1][5]);
    // The environment variable provides the seed as well.
    let json_path = tempfile("seed-env.json");
    let status = lglab()
        .env("LGLAB_SEED", "12345")
        .args(["fibers", "--poly", "x^2", "--vars", "x", "--json"])
        .arg(&json_path)
        .status()
        .unwrap();
    assert!(status.success());
    let value: Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(value["job"]["seed"], Value::from(12345));
    assert_eq!(
        value["job"]["samples"][5].as_str().unwrap(),
        sample_sets[1][5]
    );
    std::fs::remove_file(&json_path).ok();
}

#[test]
fn corpus_edge_cases() {
    // Empty corpus: empty report, exit 0, schema-valid JSON.
    let empty = tempfile("empty.corpus");
    let json_path = tempfile("empty-corpus.json");
    std::fs::write(&empty, "# nothing here\n\n").unwrap();
    let out = lglab()
        .arg("corpus")
        .arg(&empty)
        .arg("--json")
        .arg(&json_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 entries, 0 failed"));
    let value: Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    validate(&shipped_schema(), &value, "$").unwrap();
    std::fs::remove_file(&empty).ok();
    std::fs::remove_file(&json_path).ok();

    // Malformed corpus line: exit 2.
    let bad = tempfile("bad.corpus");
    std::fs::write(&bad, "just one field\n").unwrap();
    let out = lglab().arg("corpus").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&bad).ok();

    // A corpus entry with a wrong expectation fails with a nonzero exit.
    let wrong = tempfile("wrong.corpus");
    std::fs::write(&wrong, "bad_mu | x^2 + y^2 | x,y | mu=7\n").unwrap();
    let out = lglab().arg("corpus").arg(&wrong).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    std::fs::remove_file(&wrong).ok();
}

#[test]
fn torsion_pathology_via_cli() {
    let out = lglab()
        .args([
            "fibers",
            "--poly",
            "0",
            "--vars",
            "t",
            "--deg-ladder",
            "2,4,6,8",
        ])
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("torsion-growth"), "stdout: {stdout}");
}
