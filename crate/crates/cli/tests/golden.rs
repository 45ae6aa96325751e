//! Runs every `$ repst …` example in README.md and compares stdout byte for
//! byte, then checks the error contract (stderr object and exit status).

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn repst(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repst"))
        .args(args)
        .env("REPST_CACHE_DIR", cache)
        .output()
        .expect("run repst")
}

/// `(command line, expected stdout)` pairs from the README's console blocks.
fn readme_examples() -> Vec<(String, String)> {
    let readme = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md")).unwrap();
    let mut out = Vec::new();
    let mut current: Option<(String, String)> = None;
    for line in readme.lines() {
        if let Some(cmd) = line.strip_prefix("$ repst ") {
            out.extend(current.take());
            current = Some((cmd.to_string(), String::new()));
        } else if line.starts_with("```") {
            out.extend(current.take());
        } else if let Some((_, expected)) = current.as_mut() {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_examples_are_reproduced_exactly() {
    let examples = readme_examples();
    assert!(examples.len() >= 3, "README examples not found");
    let cache = tempfile::tempdir().unwrap();
    for (cmd, expected) in &examples {
        let args = shlex::split(cmd).unwrap();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        // Twice: the second run may read tables written by the first.
        for _ in 0..2 {
            let out = repst(&args, cache.path());
            assert!(out.status.success(), "repst {cmd}: {}", String::from_utf8_lossy(&out.stderr));
            assert_eq!(String::from_utf8(out.stdout).unwrap(), *expected, "repst {cmd}");
        }
    }
}

#[test]
fn spec_examples_are_in_the_readme() {
    let cmds: Vec<String> = readme_examples().into_iter().map(|(c, _)| c).collect();
    for needle in [
        "diagrams compose --a unit --b counit",
        "center k0-rank --n 3",
        r#"center odot --a '{"mu":[2],"irrep":"triv"}' --b '{"mu":[2],"irrep":"triv"}'"#,
    ] {
        assert!(cmds.iter().any(|c| c == needle), "missing example {needle}");
    }
}

fn error_object(out: &Output) -> Value {
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(stderr.lines().count(), 1, "error stream: {stderr}");
    let v: Value = serde_json::from_str(&stderr).unwrap();
    assert!(v.get("error").and_then(Value::as_str).is_some());
    assert!(v.get("message").and_then(Value::as_str).is_some());
    assert!(v.get("context").is_some());
    assert!(out.stdout.is_empty());
    v
}

#[test]
fn usage_errors_exit_with_status_two() {
    let cache = tempfile::tempdir().unwrap();
    for args in [
        vec!["frobnicate"],
        vec!["center", "odot", "--a", "{"],
        vec!["center", "odot", "--a", r#"{"mu":[2],"irrep":"triv"}"#],
        vec!["center", "odot", "--a", r#"{"mu":[2],"irrep":"bogus"}"#, "--b", r#"{"mu":[2],"irrep":"triv"}"#],
        vec!["pieri", "--lambda", "[1,2]"],
        vec!["oracle", "verify", "nope"],
        vec!["diagrams", "compose", "--a", "id:x", "--b", "unit"],
    ] {
        let out = repst(&args, cache.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        error_object(&out);
    }
}

#[test]
fn domain_errors_exit_with_status_one() {
    let cache = tempfile::tempdir().unwrap();
    let out = repst(&["center", "simples", "--n", "40"], cache.path());
    assert_eq!(out.status.code(), Some(1));
    let v = error_object(&out);
    assert_eq!(v["error"], "cap_exceeded");
    assert_eq!(v["context"]["value"], 40);

    let out = repst(&["diagrams", "compose", "--a", "unit", "--b", "unit"], cache.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_object(&out)["error"], "shape_mismatch");
}

#[test]
fn payloads_can_come_from_files() {
    let cache = tempfile::tempdir().unwrap();
    let file = cache.path().join("a.json");
    std::fs::write(&file, r#"{"mu":[2],"irrep":"sign"}"#).unwrap();
    let at = format!("@{}", file.display());
    let from_file = repst(&["center", "odot", "--a", &at, "--b", &at], cache.path());
    let inline = repst(
        &["center", "odot", "--a", r#"{"mu":[2],"irrep":"sign"}"#, "--b", r#"{"mu":[2],"irrep":"sign"}"#],
        cache.path(),
    );
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, inline.stdout);
}

#[test]
fn cache_commands_use_the_configured_directory() {
    let cache = tempfile::tempdir().unwrap();
    let out = repst(&["cache", "path"], cache.path());
    let path: String = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(Path::new(&path), cache.path());

    assert!(repst(&["chars", "wreath", "--c", "2", "--m", "3"], cache.path()).status.success());
    let written = std::fs::read_dir(cache.path()).unwrap().count();
    assert!(written > 0, "no cache files written");
    let out = repst(&["cache", "clear"], cache.path());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["removed"], written);
    assert_eq!(std::fs::read_dir(cache.path()).unwrap().count(), 0);

    let other = tempfile::tempdir().unwrap();
    let flag = other.path().display().to_string();
    let out = repst(&["--cache-dir", &flag, "cache", "path"], cache.path());
    let path: String = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(path, flag);
}

#[test]
fn verification_suites_report_success() {
    let cache = tempfile::tempdir().unwrap();
    let out = repst(&["oracle", "verify", "yd"], cache.path());
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "yd");
}

#[test]
fn output_is_stable_under_operand_order() {
    let cache = tempfile::tempdir().unwrap();
    let a = r#"{"mu":[3],"irrep":{"factors":[{"c":3,"multipartition":[[],[1],[]]}]}}"#;
    let b = r#"{"mu":[3],"irrep":{"factors":[{"c":3,"multipartition":[[],[],[1]]}]}}"#;
    let ab = repst(&["center", "odot", "--a", a, "--b", b], cache.path());
    let ba = repst(&["center", "odot", "--a", b, "--b", a], cache.path());
    assert!(ab.status.success());
    assert_eq!(ab.stdout, ba.stdout);
    let v: Value = serde_json::from_slice(&ab.stdout).unwrap();
    assert_eq!(v["terms"][0]["simple"]["name"], "V_2^{ζ3^1,ζ3^2}");
}
