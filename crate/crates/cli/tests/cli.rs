use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use ialex::laurent::parse_laurent;
use ialex_cli::{corpus, corpus_reports, run_str, Options, Status};
use serde_json::{json, Value};

fn ialex(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ialex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn factor_difference_of_squares() {
    let (code, out) = ialex(&["factor"], r#"{"poly": "t^2 - 1"}"#);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["values"], json!({"factors": [["t - 1", 1], ["t + 1", 1]]}));
}

#[test]
fn degree_cap_exits_two() {
    let (code, out) = ialex(&["factor", "--degree-cap", "3"], r#"{"poly": "t^5 - 1"}"#);
    assert_eq!(code, 2);
    assert_eq!(json_of(&out)["error"]["code"], "degree-cap-exceeded");
}

#[test]
fn schema_errors_carry_the_path() {
    let r = run_str(r#"{"kind": "ia-point", "payload": {"n": 4, "perversity": "zero", "a": ["1", 7]}}"#, &Options::default());
    assert_eq!(r.status, Status::Error);
    let f = r.error.unwrap();
    assert_eq!((f.code.as_str(), f.path.as_deref()), ("schema", Some("payload.a[1]")));

    let r = run_str(r#"{"kind": "snf", "payload": {"matrix": [["t", "t^"]]}}"#, &Options::default());
    assert_eq!(r.error.unwrap().path.as_deref(), Some("payload.matrix[0][1]"));

    let r = run_str(r#"{"kind": "nope", "payload": {}}"#, &Options::default());
    assert_eq!((r.kind.as_str(), r.exit_code()), ("nope", 1));
}

#[test]
fn subcommands_wrap_payloads_and_check_kinds() {
    let (code, out) = ialex(&["ia", "dual"], r#"{"kind": "factor", "payload": {"poly": "t"}}"#);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["error"]["code"], "kind-mismatch");
    let (code, out) = ialex(&["bounds", "exclude"], r#"{"op": "allowed", "i": 1, "n": 4, "k": 2, "c": "1", "xi": []}"#);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["error"]["path"], "payload.op");
    let (code, _) = ialex(&["seq", "check"], r#"{"polys": ["t - 1", null]}"#);
    assert_eq!(code, 1);
    let (code, out) = ialex(&["seq", "solve"], r#"{"polys": ["t - 1", null], "splittings": [null, null, "1"]}"#);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json_of(&out)["values"]["polys"], json!(["t - 1", "t - 1"]));
}

#[test]
fn non_exact_sequence_fails_with_certificate() {
    let (code, out) = ialex(&["seq", "check"], r#"{"polys": ["t - 1", "t + 2"]}"#);
    assert_eq!(code, 1);
    let v = json_of(&out);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["certificates"][0]["code"], "not-exact-compatible");
}

#[test]
fn bounds_check_reports_violations() {
    let payload = r#"{"ia": "t^4 - 2t^3 + 3t^2 - 2t + 1", "allowed": ["t^2 - t + 1"], "power_bounds": {"t^2 - t + 1": 1}}"#;
    let (code, out) = ialex(&["bounds", "check"], payload);
    assert_eq!(code, 1);
    let cert = &json_of(&out)["certificates"][0];
    assert_eq!(cert["result"], "power-exceeded");
    assert_eq!((cert["observed"].as_u64(), cert["allowed"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn product_needs_kernel_data_unless_assumed_zero() {
    let payload = json!({
        "n": 4, "k": 2, "perversity": "zero",
        "sigma": [{"free": 1}, {"free": 1}],
        "link": [{"torsion": ["t - 1"]}],
        "lambda": ["t - 1", "t^2 - 3t + 1", "1", "1"],
        "c": ["1", "t^2 - 3t + 1", "1", "1"]
    })
    .to_string();
    let (code, out) = ialex(&["ia", "product"], &payload);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["error"]["path"], "payload.a_high");
    let (code, out) = ialex(&["ia", "product", "--assume-zero-kernel"], &payload);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json_of(&out)["values"]["ia"][0], "t - 1");
}

#[test]
fn verify_reports_mismatches() {
    let case = json!({
        "kind": "verify",
        "payload": {"cases": [
            {"name": "good", "case": {"kind": "factor", "payload": {"poly": "t^2 - 1"}},
             "expect": {"values": {"factors": [["t - 1", 1], ["t + 1", 1]]}}},
            {"name": "bad", "case": {"kind": "factor", "payload": {"poly": "t^2 - 1"}},
             "expect": {"values": {"factors": []}}},
            {"name": "rejected", "case": {"kind": "seq", "payload": {"polys": ["t + 2"]}},
             "expect": {"status": "fail"}}
        ]}
    });
    let r = run_str(&case.to_string(), &Options::default());
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.values["passed"], 2);
    assert_eq!(r.certificates.unwrap()[0]["name"], "bad");
}

#[test]
fn text_output_is_a_branch_table() {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/ia-point-three-branch.json");
    let (code, out) = ialex(&["run", "--text", "--input", fixture.to_str().unwrap()], "");
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    let header = lines.iter().position(|l| l.split_whitespace().eq(["degree", "branch", "value"])).unwrap();
    let branches: Vec<&str> = lines[header + 1..header + 6].iter().map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(branches, ["lambda", "lambda", "c", "mu", "mu"]);
}

#[test]
fn empty_corpus_passes() {
    let dir = tempfile::tempdir().unwrap();
    let r = corpus(dir.path(), &Options::default());
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.values["total"], 0);
    let (code, _) = ialex(&["corpus", dir.path().to_str().unwrap()], "");
    assert_eq!(code, 0);
}

#[test]
fn corrupted_case_file_is_named() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a-good.json"), r#"{"kind": "factor", "payload": {"poly": "t + 1"}}"#).unwrap();
    std::fs::write(dir.path().join("b-broken.json"), r#"{"kind": "factor", "payl"#).unwrap();
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let (code, out) = ialex(&["corpus", dir.path().to_str().unwrap()], "");
    assert_eq!(code, 1);
    let v = json_of(&out);
    assert_eq!(v["values"]["total"], 2);
    assert_eq!(v["certificates"][0]["file"], "b-broken.json");
    let (_, text) = ialex(&["corpus", "--text", dir.path().to_str().unwrap()], "");
    assert!(text.lines().any(|l| l.starts_with("  b-broken.json") && l.contains("error")));
}

#[test]
fn missing_corpus_directory_is_an_io_error() {
    let r = corpus(Path::new("/nonexistent/ialex-corpus"), &Options::default());
    assert_eq!(r.error.unwrap().code, "io");
}

fn polynomial_strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) if parse_laurent(s).is_ok() => out.push(s.clone()),
        Value::Array(items) => items.iter().for_each(|x| polynomial_strings(x, out)),
        Value::Object(m) => m.values().for_each(|x| polynomial_strings(x, out)),
        _ => {}
    }
}

#[test]
fn printed_polynomials_reparse_to_themselves() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut seen = Vec::new();
    for (_, r) in corpus_reports(&dir, &Options::default()).unwrap() {
        polynomial_strings(&r.values, &mut seen);
    }
    assert!(seen.len() > 50);
    for s in seen {
        let p = parse_laurent(&s).unwrap().normalize().unwrap();
        assert_eq!(p.to_string(), s);
    }
}
