use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jsonschema::{Draft, JSONSchema};
use serde_json::Value;

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn bundled_manifest() -> PathBuf {
    crate_dir().join("../core/data/manifest.txt")
}

fn idemgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idemgen"))
        .args(args)
        .env_remove("IDEMGEN_BUDGET")
        .output()
        .expect("binary runs")
}

fn schema() -> JSONSchema {
    let text = std::fs::read_to_string(crate_dir().join("schema/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::options()
        .with_draft(Draft::Draft202012)
        .compile(&schema)
        .expect("schema compiles")
}

/// Runs the command, requires `code`, and validates stdout against the schema.
fn report(args: &[&str], code: i32) -> Value {
    let out = idemgen(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}\nstderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let schema = schema();
    if let Err(errors) = schema.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{args:?} violates the schema: {msgs:#?}");
    }
    v
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn grid_road_closure_witness() {
    for m in [3usize, 4] {
        let recipe = format!("recipe:grid({m})");
        let v = report(&["check", "--group", &recipe, "--property", "road-closure"], 0);
        assert_eq!(v["verdict"], false);
        assert_eq!(v["degree"], m * m);
        let w = &v["witness"];
        assert_eq!(w["components"].as_array().unwrap().len(), m);
        assert_eq!(w["orbit_rep"], serde_json::json!([1, 2]));
        // The deleted block is the horizontal edges: every edge stays in one row.
        for e in w["block_edges"].as_array().unwrap() {
            let (a, b) = (e[0].as_u64().unwrap() - 1, e[1].as_u64().unwrap() - 1);
            assert_eq!(a / m as u64, b / m as u64);
        }
    }
}

#[test]
fn cyclic_seven_is_not_three_id() {
    let v = report(&["check", "--group", "recipe:cyclic(7)", "--property", "kid", "--k", "3"], 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["results"][0]["k"], 3);
    assert!(v["witness"]["t"].is_string());

    let v = report(&["check-kid", "--group", "recipe:cyclic(7)", "--t", "2211552"], 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["k"], 3);
    assert_eq!(v["witness"]["t"], "2211552");

    let v = report(&["check", "--group", "recipe:cyclic(7)", "--property", "kid", "--k", "2"], 0);
    assert_eq!(v["verdict"], true);
}

#[test]
fn agl15_every_singular_map() {
    let v = report(
        &["check", "--group", "recipe:agl1(5)", "--property", "kid", "--k", "2,3,4", "--all-t"],
        0,
    );
    assert_eq!(v["verdict"], true);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    for r in results {
        assert_eq!(r["verdict"], true);
        assert!(r["failures"].as_array().unwrap().is_empty());
        assert!(r["representatives"].as_u64().unwrap() > 0);
    }
}

#[test]
fn other_properties_report() {
    let v = report(&["check", "--group", "recipe:cyclic(6)", "--property", "houghton"], 0);
    assert_eq!(v["verdict"], false);
    assert!(v["witness"]["partition"].is_array());

    let v = report(&["check", "--group", "recipe:grid(3)", "--property", "basic"], 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["q"], 3);
    assert_eq!(v["witness"]["d"], 2);

    let v = report(&["check", "--group", "recipe:pgl2(7)", "--property", "strong-kut", "--k", "2,3"], 0);
    assert_eq!(v["verdict"], true);

    let v = report(&["check", "--group", "recipe:cyclic(7)", "--property", "kut", "--k", "3"], 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["k"], 3);

    let v = report(&["check", "--group", "recipe:dihedral(7)", "--property", "2id"], 0);
    assert_eq!(v["verdict"], true);
    assert!(v.get("witness").is_none());
}

#[test]
fn group_files_are_accepted() {
    let file = crate_dir().join("../core/data/groups/prim_7_1.grp");
    let v = report(&["check", "--group", file.to_str().unwrap(), "--property", "road-closure"], 0);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["degree"], 7);
}

#[test]
fn exit_codes() {
    let out = idemgen(&["check", "--group", "recipe:nonsense(3)", "--property", "basic"]);
    assert_eq!(out.status.code(), Some(1));
    let out = idemgen(&["check", "--group", "recipe:cyclic(7)", "--property", "kid"]);
    assert_eq!(out.status.code(), Some(1), "missing --k");
    let out = idemgen(&["check-kid", "--group", "recipe:cyclic(7)", "--t", "1234567"]);
    assert_eq!(out.status.code(), Some(1), "a permutation has no singular part");
    let out = idemgen(&["check", "--group", "recipe:symmetric(7)", "--property", "kid", "--k", "3", "--budget", "50"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_idemgen"))
        .args(["check", "--group", "recipe:symmetric(7)", "--property", "kid", "--k", "3"])
        .env("IDEMGEN_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "IDEMGEN_BUDGET is honoured");
}

#[test]
fn budgets_are_reported() {
    let v = report(&["check", "--group", "recipe:cyclic(5)", "--property", "2id", "--budget", "123456"], 0);
    assert_eq!(v["budget"]["semigroup_cap"], 123456);
    assert_eq!(v["budget"]["orbit_cap"], 123456);
}

#[test]
fn bundled_manifest_has_no_diffs() {
    let path = bundled_manifest();
    let v = report(&["scan", path.to_str().unwrap(), "--jobs", "4"], 0);
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["errors"], 0);
    assert_eq!(v["budget_exceeded"], 0);
    assert!(v["checks"].as_u64().unwrap() >= 100);
}

const SMALL_MANIFEST: &str = "\
C5 | recipe:cyclic(5) | 5 | expected:{road-closure=true, kid@2=true}
C6 | recipe:cyclic(6) | 6 | expected:{primitive=false, road-closure=false}
grid | recipe:grid(3) | 9 | expected:{basic=false, road-closure=false}
AGL(1,8) | recipe:agl1(8) | 8 | expected:{kid@3=true, strong-kut@3=false}
C7 | recipe:cyclic(7) | 7 | expected:{kid@3=false}
";

#[test]
fn scan_is_independent_of_jobs() {
    let path = scratch("small.txt", SMALL_MANIFEST);
    let p = path.to_str().unwrap();
    for format in ["json", "csv"] {
        let one = idemgen(&["scan", p, "--jobs", "1", "--format", format]);
        let many = idemgen(&["scan", p, "--jobs", "8", "--format", format]);
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, many.stdout, "{format}");
    }
    let csv = idemgen(&["scan", p, "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("line,name,degree,source,property,expected,actual,status,error"));
    assert_eq!(lines.count(), 9);
}

#[test]
fn scan_reports_wrong_expectations() {
    let wrong = SMALL_MANIFEST.replace("kid@3=false", "kid@3=true");
    let path = scratch("wrong.txt", &wrong);
    let out = idemgen(&["scan", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("DIFF line 5 C7 kid@3"), "{stderr}");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mismatches"], 1);
    let diff: Vec<&Value> = v["rows"].as_array().unwrap().iter().filter(|r| r["status"] == "diff").collect();
    assert_eq!(diff.len(), 1);
    assert_eq!(diff[0]["actual"], false);

    let bad = scratch("bad.txt", "C5 | recipe:cyclic(5) | 5\n");
    assert_eq!(idemgen(&["scan", bad.to_str().unwrap()]).status.code(), Some(1));
    let degree = scratch("degree.txt", "C5 | recipe:cyclic(5) | 6 | expected:{transitive=true}\n");
    assert_eq!(idemgen(&["scan", degree.to_str().unwrap()]).status.code(), Some(1));
}

fn rms_file(name: &str) -> String {
    crate_dir().join("data/rms").join(name).to_str().unwrap().to_string()
}

#[test]
fn rms_examples() {
    let v = report(&["rms", "--file", &rms_file("identity_2x2.rms")], 0);
    assert_eq!(v["connected"], true);
    assert_eq!(v["idempotent_generated"], false);
    assert_eq!(v["graham"]["blocks"][0]["subgroup_order"], 1);

    let v = report(&["rms", "--file", &rms_file("diagonal_2x2.rms")], 0);
    assert_eq!(v["connected"], false);
    assert_eq!(v["components"], 2);
    assert_eq!(v["idempotent_generated"], false);

    let v = report(&["check-rms", "--file", &rms_file("c4_rank2.rms")], 0);
    assert_eq!(v["connected"], true);
    assert_eq!(v["idempotent_generated"], true);
    assert_eq!(v["graham"]["normalized"], serde_json::json!([["12", "12"], ["12", "21"]]));

    let v = report(&["rms", "--file", &rms_file("c4_rank2_split.rms")], 0);
    assert_eq!(v["components"], 2);
    assert_eq!(v["idempotent_generated"], false);
}

#[test]
fn rms_errors() {
    let singular = scratch("singular.rms", "group degree 2\n(1,2)\nrows 2 cols 2\n12 0\n0 0\n");
    let out = idemgen(&["rms", "--file", singular.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not regular"));
    let short = scratch("short.rms", "group degree 2\n(1,2)\nrows 2 cols 2\n12\n12 12\n");
    assert_eq!(idemgen(&["rms", "--file", short.to_str().unwrap()]).status.code(), Some(1));
}
