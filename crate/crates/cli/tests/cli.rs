use std::io::Cursor;

use ryser_cli::{run, ErrorKind, RunReport, Timings, SCHEMA};
use serde_json::Value;
use sha2::{Digest, Sha256};

struct Ran {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ryser(args: &[&str], stdin: &str) -> Ran {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ryser").chain(args.iter().copied());
    let code = run(argv, &mut Cursor::new(stdin.as_bytes().to_vec()), &mut out, &mut err);
    Ran {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn generated(args: &[&str]) -> String {
    let ran = ryser(args, "");
    assert_eq!(ran.code, 0, "{args:?}: {}", ran.stderr);
    ran.stdout
}

fn report(args: &[&str], stdin: &str) -> (i32, RunReport) {
    let ran = ryser(args, stdin);
    let report: RunReport = serde_json::from_str(&ran.stdout).unwrap_or_else(|e| panic!("{e}: {}", ran.stdout));
    (ran.code, report)
}

const NOT_TRANSITIVE: &str = "colored n 3 r 2\ne 0 1 1\ne 0 2 2\ne 1 2 1\n";

#[test]
fn blowup_of_the_smallest_plane_is_sharp() {
    let cgf = generated(&["gen", "blowup", "--q", "2", "--b", "1"]);
    let (code, r) = report(&["sharp", "-", "--json"], &cgf);
    assert_eq!(code, 0);
    assert_eq!(r.outputs["isSharp"], true);
    assert_eq!(r.outputs["bound"], 3);
    assert_eq!(r.outputs["oracleMax"], 3);
    assert_eq!(r.outputs["witness"]["order"], 2);
    assert_eq!(r.outputs["witness"]["b"], 1);

    let text = ryser(&["sharp", "-"], &cgf);
    assert!(text.stdout.contains("isSharp: true"));
    assert!(text.stdout.contains("bound: 3\n"));
}

#[test]
fn cover_t_rejects_small_t() {
    let cgf = generated(&["gen", "random-colored", "--n", "8", "--r", "8", "--min-colors", "2"]);
    let ran = ryser(&["cover-t", "-", "--t", "2"], &cgf);
    assert_eq!(ran.code, 2);
    assert!(ran.stderr.contains("cover_t: precondition violated"), "{}", ran.stderr);
    assert!(ran.stderr.contains("t > r/4"));

    let (code, r) = report(&["cover-t", "-", "--t", "2", "--json"], &cgf);
    assert_eq!(code, 2);
    assert!(!r.ok);
    assert_eq!(r.error.unwrap().kind, ErrorKind::Input);
}

#[test]
fn cover_t_reports_parts_and_trace() {
    for seed in ["1", "2", "3"] {
        let cgf = generated(&["gen", "random-colored", "--n", "12", "--r", "6", "--min-colors", "3", "--seed", seed]);
        let (code, r) = report(&["cover-t", "-", "--t", "3", "--json"], &cgf);
        assert_eq!(code, 0);
        assert!(r.outputs["partCount"].as_u64().unwrap() <= 3);
        assert!(!r.outputs["trace"].as_array().unwrap().is_empty());
        assert!(r.assertions.iter().all(|a| a.passed));
    }
}

#[test]
fn closure_flag_repairs_input() {
    let ran = ryser(&["cover-partial", "-"], NOT_TRANSITIVE);
    assert_eq!(ran.code, 2, "{}", ran.stdout);
    let ran = ryser(&["cover-partial", "-", "--closure"], NOT_TRANSITIVE);
    assert_eq!(ran.code, 0, "{}", ran.stderr);

    let closed = ryser(&["closure", "-"], NOT_TRANSITIVE);
    assert_eq!(closed.code, 0);
    assert!(closed.stdout.contains("e 0 2 1,2"));
    let (_, r) = report(&["analyze", "-", "--json"], &closed.stdout);
    assert_eq!(r.outputs["transitive"], true);
}

#[test]
fn selftest_passes() {
    let ran = ryser(&["selftest"], "");
    assert_eq!(ran.code, 0, "{}", ran.stdout);
    assert_eq!(ran.stdout.lines().filter(|l| l.starts_with("criterion")).count(), 9);
    assert!(!ran.stdout.contains("FAIL"));
}

#[test]
fn reports_round_trip_and_carry_the_schema() {
    let hgf = generated(&["gen", "plane", "--q", "3"]);
    let ran = ryser(&["analyze", "-", "--json"], &hgf);
    let raw: Value = serde_json::from_str(&ran.stdout).unwrap();
    let keys: Vec<&str> = raw.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["schema", "command", "input", "ok", "outputs", "assertions", "error", "timings"]);
    assert_eq!(raw["schema"], SCHEMA);

    let r: RunReport = serde_json::from_value(raw.clone()).unwrap();
    assert_eq!(serde_json::to_value(&r).unwrap(), raw);
    let again: RunReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);

    assert_eq!(r.command, ["analyze", "-", "--json"]);
    let input = r.input.unwrap();
    assert_eq!(input.sha256, hex::encode(Sha256::digest(hgf.as_bytes())));
    assert_eq!(input.bytes, hgf.len());
    assert_eq!(r.outputs["parameters"]["tau"], 3);
    assert_eq!(r.outputs["parameters"]["nu"], 1);
}

#[test]
fn same_input_same_report() {
    let cgf = generated(&["gen", "random-colored", "--n", "9", "--r", "4", "--seed", "5"]);
    for args in [
        &["cover-partial", "-", "--json"][..],
        &["sharp", "-", "--json"],
        &["oracle", "mincover", "-", "--json"],
        &["analyze", "-", "--json"],
    ] {
        let (_, mut a) = report(args, &cgf);
        let (_, mut b) = report(args, &cgf);
        a.timings = Timings::default();
        b.timings = Timings::default();
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn generators_are_reproducible() {
    let a = generated(&["gen", "random-hyp", "--r", "4", "--t", "2", "--m", "6", "--seed", "9"]);
    let b = generated(&["gen", "random-hyp", "--r", "4", "--t", "2", "--m", "6", "--seed", "9"]);
    assert_eq!(a, b);
    assert!(a.starts_with("r 4\n"));
    let (_, r) = report(&["gen", "random-delta2", "--r", "3", "--m", "5", "--mode", "cycle", "--json"], "");
    assert_eq!(r.outputs["format"], "hgf");
    assert!(r.outputs["text"].as_str().unwrap().starts_with("r 3\n"));
}

#[test]
fn gen_writes_files() {
    let path = std::env::temp_dir().join(format!("ryser-cli-test-{}.cgf", std::process::id()));
    let p = path.to_str().unwrap();
    let ran = ryser(&["gen", "blowup", "--q", "3", "--b", "2", "-o", p], "");
    assert_eq!(ran.code, 0);
    assert!(ran.stdout.contains("n: 18"));
    let (code, r) = report(&["analyze", p, "--json"], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(r.outputs["affineBlowup"]["b"], 2);
}

#[test]
fn delta2_and_oracles_agree() {
    for seed in 0..5 {
        let s = seed.to_string();
        let hgf = generated(&["gen", "random-delta2", "--r", "4", "--m", "8", "--seed", &s]);
        let (code, d) = report(&["delta2", "-", "--json"], &hgf);
        assert_eq!(code, 0);
        let (_, tau) = report(&["oracle", "tau", "-", "--json"], &hgf);
        let (_, nu) = report(&["oracle", "nu", "-", "--json"], &hgf);
        assert_eq!(d.outputs["nu"], nu.outputs["value"]);
        let size = d.outputs["size"].as_u64().unwrap();
        assert!(tau.outputs["value"].as_u64().unwrap() <= size);
        assert!(size <= 3 * nu.outputs["value"].as_u64().unwrap());
    }
}

#[test]
fn gyarfas_of_truncated_plane() {
    let hgf = generated(&["gen", "plane", "--q", "3", "--truncated"]);
    let ran = ryser(&["gyarfas", "-"], &hgf);
    assert_eq!(ran.code, 0);
    let (_, r) = report(&["analyze", "-", "--json", "--closure"], &ran.stdout);
    assert_eq!(r.outputs["affineBlowup"]["order"], 3);
}

#[test]
fn usage_errors_exit_2() {
    let ran = ryser(&["sharp", "-", "--frobnicate"], "");
    assert_eq!(ran.code, 2);
    assert!(ran.stderr.contains("Usage"));
    assert_eq!(ryser(&["oracle", "tau", "-"], NOT_TRANSITIVE).code, 2);
    assert_eq!(ryser(&["analyze", "-"], "r 3\nedge a b\n").code, 2);
    assert_eq!(ryser(&["gen", "plane", "--q", "6"], "").code, 2);
    let help = ryser(&["cover-t", "--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("--t <T>"));
}
