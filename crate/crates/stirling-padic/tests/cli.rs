//! End-to-end tests of the command-line interface: output formats,
//! round-trips, exit codes, and the config file.

use std::process::{Command, Output};

use num_bigint::BigInt;
use serde_json::Value;
use stirling_padic::stirling::{stirling1, stirling2};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stirling-padic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn json(output: &Output) -> Value {
    serde_json::from_str(&stdout(output)).expect("valid JSON on stdout")
}

#[test]
fn compute_stirling_with_padic_data() {
    let out = run(&["compute", "s2", "9", "5", "--p", "3", "--json"]);
    assert!(out.status.success());
    let record = json(&out);
    assert_eq!(record["schema_version"], 1);
    assert_eq!(record["command"], "compute");
    assert_eq!(record["results"]["value"], "6951");
    assert_eq!(record["results"]["nu"], 1);
    assert_eq!(record["results"]["eps_residue"], 1);

    let text = stdout(&run(&["compute", "s2", "9", "5", "--p", "3"]));
    assert!(text.contains("S(9,5) = 6951"));
    assert!(text.contains("nu_3 = 1"));
}

#[test]
fn compute_degenerate_and_negative_order() {
    let out = run(&["compute", "s2", "3", "5", "--json"]);
    assert_eq!(json(&out)["results"]["value"], "0");

    let out = run(&["compute", "bern", "2", "-3", "--json"]);
    assert_eq!(json(&out)["results"]["value"], "5/2");

    let out = run(&["compute", "bernpoly", "2", "-3", "--json"]);
    let record = json(&out);
    assert_eq!(record["results"]["display"], "x^2 + 3*x + 5/2");
    assert_eq!(record["results"]["coefficients"][0], "5/2");
    assert_eq!(record["results"]["coefficients"][2], "1");

    let out = run(&["compute", "s1", "4", "2"]);
    assert!(stdout(&out).contains("s(4,2) = 11"));
}

#[test]
fn classify_reports() {
    let out = run(&["classify", "second", "5", "3", "--p", "2", "--json"]);
    let record = json(&out);
    assert_eq!(record["results"]["is_min_zero"], true);
    assert_eq!(record["results"]["r"], 2);

    let out = run(&["classify", "second", "6", "4", "--p", "2", "--json"]);
    assert_eq!(json(&out)["results"]["is_min_zero"], false);

    let out = run(&[
        "classify", "first", "6", "4", "--p", "2", "--witness", "--json",
    ]);
    let record = json(&out);
    assert_eq!(record["results"]["is_min_zero"], true);
    assert_eq!(record["results"]["witnessed_valuation"], 0);

    // k = 0 is outside the domain
    let out = run(&["classify", "second", "4", "0"]);
    assert!(!out.status.success());
}

#[test]
fn table_round_trips_exactly() {
    // CSV: every value re-parses to the exact library integer
    let out = run(&["table", "s1", "--nmax", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,value"));
    let mut seen = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let (n, k): (u64, u64) = (fields[0].parse().unwrap(), fields[1].parse().unwrap());
        let value: BigInt = fields[2].parse().unwrap();
        assert_eq!(value, stirling1(n, k), "row ({n},{k})");
        seen += 1;
    }
    assert_eq!(seen, 13 * 14 / 2);

    // JSON: decimal strings, exact
    let out = run(&["table", "s2", "--nmax", "10", "--format", "json"]);
    let record = json(&out);
    let rows = record["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for (n, row) in rows.iter().enumerate() {
        for (k, v) in row.as_array().unwrap().iter().enumerate() {
            let value: BigInt = v.as_str().unwrap().parse().unwrap();
            assert_eq!(value, stirling2(n as u64, k as u64));
        }
    }
}

#[test]
fn valuation_table_uses_null_for_infinite() {
    let out = run(&["table", "s2-nu", "--p", "2", "--nmax", "4", "--format", "json"]);
    let record = json(&out);
    let rows = record["results"]["rows"].as_array().unwrap();
    // nu_2 of S(4, 0..=4) = (inf, 0, 0, 1, 0)
    assert_eq!(rows[4][0], Value::Null);
    assert_eq!(rows[4][1], 0);
    assert_eq!(rows[4][3], 1);

    let out = run(&["table", "s2-nu", "--p", "2", "--nmax", "4"]);
    let text = stdout(&out);
    assert!(text.starts_with("n,k,nu\n"));
    assert!(text.contains("4,0,\n"));
    assert!(text.contains("4,3,1\n"));
}

#[test]
fn table_rejects_empty_range() {
    let out = run(&["table", "s2", "--nmax", "0"]);
    assert!(!out.status.success());
}

#[test]
fn verify_single_claim_and_exit_codes() {
    let out = run(&["verify", "--claim", "EQ1.1", "--p", "2", "--hmax", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("claim=EQ1.1"));
    assert!(text.contains("verdict=PASS"));

    // unknown claim and missing mode are usage errors
    assert_eq!(run(&["verify", "--claim", "ZZZ"]).status.code(), Some(1));
    assert_eq!(run(&["verify"]).status.code(), Some(1));
    // p = 2 claims reject other primes
    assert_eq!(
        run(&["verify", "--claim", "EQ1.1", "--p", "3"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_emits_machine_readable_summary() {
    let out = run(&[
        "verify", "--claim", "T2.4", "--kmax", "64", "--json", "-",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let json_start = text.find('{').expect("summary document present");
    let record: Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert_eq!(record["schema_version"], 1);
    assert_eq!(record["command"], "verify");
    assert_eq!(record["results"]["verdict"], "pass");
    let report = &record["results"]["reports"][0];
    assert_eq!(report["claim"], "T2.4");
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert_eq!(report["cases_checked"], 3 * 64);
}

#[test]
fn config_file_presets_ranges_and_flags_override() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("stirling-padic-test-{}.conf", std::process::id()));
    std::fs::write(&path, "nmax = 40\nprimes = 2\n").unwrap();

    let from_config = run(&[
        "verify",
        "--claim",
        "L2.1",
        "--config",
        path.to_str().unwrap(),
        "--json",
        "-",
    ]);
    assert!(from_config.status.success());
    let text = stdout(&from_config);
    let record: Value =
        serde_json::from_str(&text[text.find('{').unwrap()..]).unwrap();
    let report = &record["results"]["reports"][0];
    // one prime, 40*40 enumerated pairs
    assert_eq!(
        report["cases_checked"].as_u64().unwrap() + report["skipped"].as_u64().unwrap(),
        40 * 40
    );

    // the command-line flag wins over the config value
    let overridden = run(&[
        "verify",
        "--claim",
        "L2.1",
        "--config",
        path.to_str().unwrap(),
        "--nmax",
        "20",
        "--json",
        "-",
    ]);
    let text = stdout(&overridden);
    let record: Value =
        serde_json::from_str(&text[text.find('{').unwrap()..]).unwrap();
    let report = &record["results"]["reports"][0];
    assert_eq!(
        report["cases_checked"].as_u64().unwrap() + report["skipped"].as_u64().unwrap(),
        20 * 20
    );

    // the environment variable is honored when --config is absent
    let via_env = bin()
        .args(["verify", "--claim", "L2.1", "--json", "-"])
        .env("STIRLING_PADIC_CONFIG", &path)
        .output()
        .unwrap();
    assert!(via_env.status.success());
    let text = String::from_utf8(via_env.stdout).unwrap();
    let record: Value =
        serde_json::from_str(&text[text.find('{').unwrap()..]).unwrap();
    assert_eq!(
        record["results"]["reports"][0]["cases_checked"].as_u64().unwrap()
            + record["results"]["reports"][0]["skipped"].as_u64().unwrap(),
        40 * 40
    );

    std::fs::remove_file(&path).ok();
}

#[test]
fn profile_restricted_to_unregistered_prime_is_empty() {
    // a prime outside every claim's registered set leaves nothing to run
    let out = run(&["verify", "--profile", "quick", "--p", "11"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verify: 0 claims"));
}

#[test]
fn usage_errors_exit_nonzero() {
    assert!(!run(&["compute", "s2", "9"]).status.success());
    assert!(!run(&["compute", "s2", "9", "-5"]).status.success());
    assert!(!run(&["compute", "nope", "1", "2"]).status.success());
    assert!(!run(&["classify", "second", "3", "2", "--p", "4"]).status.success());
}
