use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn udcodes(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_udcodes"));
    cmd.args(args).env_remove("CODES_UNIVERSE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let out = udcodes(args, &[]);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (value, out.status.code().unwrap())
}

fn code_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn check_reports_infinite_delay() {
    let f = code_file("alphabet 2\n10\n100\n000\n");
    let (r, status) = report(&["check", f.path().to_str().unwrap(), "--delay"]);
    assert_eq!(status, 0);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["command"], "check");
    let res = &r["results"];
    assert_eq!(
        (res["ud"].as_bool(), res["prefix"].as_bool()),
        (Some(true), Some(false))
    );
    assert_eq!(res["delay"]["finite"], false);
    assert_eq!(res["delay"]["witness"]["rendered"], "10(000)^∞");
    assert_eq!(res["delay"]["witness"]["normalized"]["period"], "0");
}

#[test]
fn check_single_word() {
    let f = code_file("alphabet 3\n# one word\n012\n");
    let (r, _) = report(&["check", f.path().to_str().unwrap(), "--delay"]);
    assert_eq!(r["results"]["ud"], true);
    assert_eq!(r["results"]["delay"]["delay"], 0);
}

#[test]
fn check_gives_counterexample_and_trace() {
    let f = code_file("alphabet 2\n0\n01\n10\n");
    let (r, status) = report(&["check", f.path().to_str().unwrap(), "--trace"]);
    assert_eq!(status, 0);
    let res = &r["results"];
    assert_eq!(res["ud"], false);
    assert_eq!(res["counterexample"]["word"], "010");
    assert_eq!(res["trace"]["violation"]["word"], "0");
    assert_eq!(res["trace"]["rounds"][1][0], "1");
}

#[test]
fn check_parse_errors_carry_position() {
    let f = code_file("alphabet 2\n01\n 0a\n");
    let (r, status) = report(&["check", f.path().to_str().unwrap()]);
    assert_eq!(status, 2);
    assert_eq!(r["status"], "error");
    let message = r["message"].as_str().unwrap();
    assert!(
        message.contains("line 3") && message.contains("column 3"),
        "{message}"
    );
}

#[test]
fn count_methods() {
    let (r, status) = report(&[
        "count",
        "--lengths",
        "2,3,3",
        "--alphabet",
        "2",
        "--method",
        "both",
    ]);
    assert_eq!(status, 0);
    assert_eq!(r["results"]["pr"], "120");
    assert_eq!(r["results"]["ud"], "180");
    assert_eq!(r["results"]["discrepancies"], serde_json::json!([]));

    let (r, _) = report(&["count", "--lengths", "1,1,2", "--alphabet", "2"]);
    let res = &r["results"];
    assert_eq!(
        (res["pr"].as_str(), res["fd"].as_str(), res["ud"].as_str()),
        (Some("0"), Some("0"), Some("0"))
    );
    assert_eq!(res["kraft_sum"], "5/4");
    assert_eq!(res["feasible"], false);

    let (r, _) = report(&["count", "--lengths", "1,2,3", "--method", "formula"]);
    assert_eq!(r["results"]["ud"], Value::Null);
    assert_eq!(r["results"]["pr"], "8");
}

#[test]
fn count_anchored_bound() {
    let (r, status) = report(&[
        "count",
        "--lengths",
        "2,3,3",
        "--alphabet",
        "2",
        "--anchored",
        "2,3",
    ]);
    assert_eq!(status, 0);
    let res = &r["results"];
    assert_eq!(res["anchored"]["count"], "10");
    assert_eq!(res["bound"]["lower_bound"], "13/12");
    assert_eq!(res["bound"]["satisfied"], true);
    assert_eq!(res["bound"]["pr_plus_anchored_le_ud"], true);
}

#[test]
fn universe_cap_from_environment() {
    let out = udcodes(
        &["count", "--lengths", "2,3,3", "--method", "enumerate"],
        &[("CODES_UNIVERSE_CAP", "100")],
    );
    assert_eq!(out.status.code(), Some(2));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r["message"].as_str().unwrap().contains("256"));

    let out = udcodes(
        &["count", "--lengths", "2,3,3", "--method", "enumerate"],
        &[("CODES_UNIVERSE_CAP", "x")],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn witnesses() {
    let (r, status) = report(&[
        "witness",
        "--kind",
        "infinite-delay",
        "--lengths",
        "2,2,3",
        "--alphabet",
        "2",
    ]);
    assert_eq!(status, 0);
    assert_eq!(r["results"]["code"], serde_json::json!(["11", "00", "110"]));
    assert_eq!(r["results"]["classification"]["ud"], true);
    assert_eq!(r["results"]["classification"]["finite_delay"], false);
    assert_eq!(r["results"]["file"], "alphabet 2\n11\n00\n110\n");

    let (r, _) = report(&["witness", "--kind", "ud-nonprefix", "--lengths", "3,2,3"]);
    let class = &r["results"]["classification"];
    assert_eq!(
        (class["ud"].as_bool(), class["prefix"].as_bool()),
        (Some(true), Some(false))
    );
    let lengths: Vec<usize> = r["results"]["code"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w.as_str().unwrap().len())
        .collect();
    assert_eq!(lengths, vec![3, 2, 3]);

    let (r, status) = report(&[
        "witness",
        "--kind",
        "infinite-delay",
        "--lengths",
        "1,1,2",
        "--alphabet",
        "2",
    ]);
    assert_eq!(status, 2);
    assert!(r["message"].as_str().unwrap().contains("a | b"));

    let (r, _) = report(&["witness", "--kind", "prefix", "--lengths", "3,1,2"]);
    assert_eq!(r["results"]["code"], serde_json::json!(["110", "0", "10"]));
}

#[test]
fn verify_suites() {
    let (r, status) = report(&["verify", "--alphabet-max", "3"]);
    assert_eq!(status, 0);
    assert_eq!(r["results"]["failures"], 0);
    assert!(r["results"]["checks"].as_u64().unwrap() > 100);

    let f = code_file("2,3,3\n");
    let (r, status) = report(&[
        "verify",
        "--suite",
        f.path().to_str().unwrap(),
        "--alphabet-max",
        "2",
    ]);
    assert_eq!(status, 0);
    assert_eq!(r["results"]["profiles"], 1);

    let f = code_file("# nothing\n");
    let (r, status) = report(&["verify", "--suite", f.path().to_str().unwrap()]);
    assert_eq!(status, 0);
    assert_eq!(r["results"]["checks"], 0);
}

#[test]
fn classify_all_csv() {
    let out = udcodes(
        &["classify-all", "--lengths", "1,2", "--alphabet", "2"],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["code", "injective", "prefix", "ud", "finite_delay", "delay"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(&rows[1], vec!["0;01", "true", "false", "true", "true", "2"]);
    assert_eq!(rows.iter().filter(|r| &r[3] == "true").count(), 6);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.csv");
    let (r, status) = report(&[
        "classify-all",
        "--lengths",
        "2,3,3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(status, 0);
    assert_eq!(r["results"]["rows"], 256);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 257);
}

#[test]
fn output_is_byte_stable() {
    let a = udcodes(
        &[
            "count",
            "--lengths",
            "2,3,3",
            "--method",
            "both",
            "--anchored",
            "2,3",
        ],
        &[],
    );
    let b = udcodes(
        &[
            "count",
            "--lengths",
            "2,3,3",
            "--method",
            "both",
            "--anchored",
            "2,3",
        ],
        &[],
    );
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pretty_output() {
    let out = udcodes(&["count", "--lengths", "2,2", "--pretty"], &[]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("  pr: 12"), "{text}");
    assert!(text.contains("status: ok"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        udcodes(&["count", "--lengths", "0,1"], &[]).status.code(),
        Some(2)
    );
    assert_eq!(udcodes(&["frobnicate"], &[]).status.code(), Some(2));
    assert_eq!(
        udcodes(&["count", "--lengths", "1", "--alphabet", "1"], &[])
            .status
            .code(),
        Some(2)
    );
}
