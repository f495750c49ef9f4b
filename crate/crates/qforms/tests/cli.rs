use std::process::Command;

use clap::Parser;
use qforms::cli::{run, Cli, EXIT_FALSE, EXIT_INPUT, EXIT_TRUE, EXIT_UNKNOWN};
use qforms_core::{is_irreducible, Fq, Poly};
use serde_json::Value;

fn qforms(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qforms")).args(args).env_remove("QFORMS_SEED").output().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap();
    (json, out.status.code().unwrap())
}

fn in_process(args: &[String]) -> (Value, i32) {
    let cli = Cli::try_parse_from(std::iter::once("qforms".to_string()).chain(args.iter().cloned())).unwrap();
    let out = run(&cli);
    (out.json, out.exit_code)
}

fn expected_exit(verdict: &Value) -> i32 {
    match verdict.as_str().unwrap() {
        "solvable" | "true" => EXIT_TRUE,
        "unsolvable" | "false" => EXIT_FALSE,
        "unknown" => EXIT_UNKNOWN,
        other => panic!("unexpected verdict {other}"),
    }
}

fn all_polys(field: Fq, max_deg: u32) -> Vec<Poly> {
    let q = field.q() as u64;
    (0..q.pow(max_deg + 1))
        .map(|mut idx| {
            let mut coeffs = Vec::new();
            while idx > 0 {
                coeffs.push((idx % q) as u32);
                idx /= q;
            }
            Poly::new(field, coeffs)
        })
        .collect()
}

#[test]
fn documented_examples() {
    let (json, code) = qforms(&["solve", "--q", "3", "--a", "-1", "--b", "t", "--c", "-(t^3-t^2+1)", "--g", "1"]);
    assert_eq!((json["verdict"].as_str(), code), (Some("solvable"), 0));
    assert_eq!(json["witnesses"][0], serde_json::json!(["1", "0"]));
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["command", "instance", "verdict", "witnesses", "failed_place", "artin_parity", "complete", "stage", "elapsed_ms"]
    );
    let (json, code) = qforms(&["solve", "--q", "3", "--a", "-1", "--b", "t", "--c", "-(t^3-t^2+1)", "--g", "t-1"]);
    assert_eq!((json["verdict"].as_str(), code), (Some("unsolvable"), 1));
    assert_eq!(json["failed_place"], "t+2");
    let (json, code) = qforms(&["criterion", "--spec", "f3-example", "--g", "(t-1)*(t^2-t-1)"]);
    assert_eq!((json["verdict"].as_str(), code), (Some("true"), 0));
}

#[test]
fn input_errors_exit_3() {
    let (json, code) = qforms(&["solve", "--g", "t^2 + * 1"]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(json["position"], 7);
    let (json, code) = qforms(&["solve", "--no-such-flag"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(json["error"].is_string());
    let (_, code) = qforms(&["solve", "--q", "4", "--g", "1"]);
    assert_eq!(code, EXIT_INPUT);
    let (_, code) = qforms(&["solve", "--g", "1", "--spec", "no-such-preset"]);
    assert_eq!(code, EXIT_INPUT);
    // two places above infinity and no bound
    let (_, code) = qforms(&["oracle", "--a", "1", "--b", "0", "--c", "-(t^2-1)", "--g", "t"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn bounded_search_reports_unknown() {
    let (json, code) = qforms(&["oracle", "--a", "1", "--b", "0", "--c", "-(t^2-1)", "--g", "t", "--bound", "1"]);
    assert_eq!((json["verdict"].as_str(), code, json["complete"].as_bool()), (Some("unknown"), 2, Some(false)));
}

#[test]
fn seed_from_environment_and_flag() {
    let run_with = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qforms"));
        cmd.args(["factor", "--f", "t^12 - 1"]).env_remove("QFORMS_SEED");
        if let Some(v) = env {
            cmd.env("QFORMS_SEED", v);
        }
        if let Some(v) = flag {
            cmd.args(["--seed", v]);
        }
        let out = cmd.output().unwrap();
        (serde_json::from_slice::<Value>(&out.stdout).unwrap(), out.status.code().unwrap())
    };
    let (base, code) = run_with(None, None);
    assert_eq!(code, 0);
    assert_eq!(run_with(Some("7"), None).0, base);
    assert_eq!(run_with(Some("7"), Some("0x99")).0, base);
    assert_eq!(run_with(Some("not-a-seed"), None).1, EXIT_INPUT);
    assert_eq!(run_with(Some("not-a-seed"), Some("5")).1, 0);
}

#[test]
fn spec_file_and_inline_record() {
    let dir = std::env::temp_dir().join(format!("qforms-spec-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.json");
    std::fs::write(&path, qforms::spec_to_json(&qforms_core::ClassFieldSpec::f3_example())).unwrap();
    let (json, code) = qforms(&["solve", "--g", "t-1", "--spec", path.to_str().unwrap()]);
    assert_eq!((code, json["artin_parity"].as_u64()), (1, Some(1)));
    let inline = r#"{"kind":"quadratic_kummer","q":3,"d":"t^3+t^2+1","m":"t^2-t-1","ramified_frob":[["t-1",-1],["t^2-t-1",-1]]}"#;
    let (json, code) = qforms(&["solve", "--g", "(t-1)*(t^2-t-1)", "--spec", inline]);
    assert_eq!((code, json["stage"].as_str()), (0, Some("artin+oracle")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn symbol_commands() {
    let (json, _) = qforms(&["symbol", "--f", "t^2+1", "--p", "t^3+2*t^2+2*t+2"]);
    assert_eq!(json["kind"], "residue");
    let (json, _) = qforms(&["hilbert", "--f", "t", "--h", "t", "--p", "t"]);
    assert_eq!(json["value"], -1);
    let (json, _) = qforms(&["hilbert", "--f", "t", "--h", "2", "--p", "inf"]);
    assert_eq!(json["value"], -1);
    let (json, code) = qforms(&["factor", "--f", "(t-1)*(t^2-t-1)"]);
    assert_eq!(code, 0);
    assert_eq!(json["factors"], serde_json::json!([["t+2", 1], ["t^2+2*t+2", 1]]));
}

/// Over the worked-example corpus, `solve` agrees with `oracle`, `criterion`
/// agrees with both, and every exit code matches its verdict.
#[test]
fn corpus_solve_oracle_criterion_agree() {
    let field = Fq::new(3).unwrap();
    for g in all_polys(field, 4) {
        let g = g.to_string();
        let base = |cmd: &str| vec![cmd.to_string(), "--spec".into(), "f3-example".into(), "--g".into(), g.clone()];
        let (solve, solve_code) = in_process(&base("solve"));
        let (oracle, oracle_code) = in_process(&base("oracle"));
        let (criterion, criterion_code) = in_process(&base("criterion"));
        assert_eq!(solve["verdict"], oracle["verdict"], "g = {g}");
        assert_eq!(solve_code, expected_exit(&solve["verdict"]));
        assert_eq!(oracle_code, expected_exit(&oracle["verdict"]));
        assert_eq!(criterion_code, expected_exit(&criterion["verdict"]));
        assert_eq!(solve_code, criterion_code, "g = {g}");
    }
    let big_d = Poly::from_i64(field, &[1, 0, 1, 1]);
    for l in all_polys(field, 3).into_iter().filter(|l| l.is_monic() && !l.is_constant()) {
        if !is_irreducible(&l).unwrap() || big_d.rem(&l).unwrap().is_zero() {
            continue;
        }
        let args = ["criterion".to_string(), "--l".into(), l.to_string()];
        let (crit, code) = in_process(&args);
        assert_eq!(code, expected_exit(&crit["verdict"]));
        let inst = &crit["instance"];
        let oracle_args: Vec<String> = ["oracle", "--a", "1", "--b", "0", "--c"]
            .iter()
            .map(|s| s.to_string())
            .chain([inst["c"].as_str().unwrap().to_string(), "--g".into(), inst["g"].as_str().unwrap().to_string()])
            .collect();
        let (oracle, _) = in_process(&oracle_args);
        let solvable = oracle["verdict"] == "solvable";
        assert_eq!(crit["verdict"] == "true", solvable, "l = {l}");
    }
}
