use std::process::Command as Process;

use clap::Parser;
use serde_json::Value;
use skewtab::{run, run_with, Case, Cli, EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_VERDICT};
use skewtab_core::Error;

fn cli(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("skewtab").chain(args.iter().copied())).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(&cli(args));
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn binary(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_skewtab"))
        .args(args)
        .envs(env.iter().copied())
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn count_example_shape() {
    let v = json(&["count", "4,4,3,2/2,1"]);
    assert_eq!(v["e"], "3060");
    assert_eq!(v["F"], "1260");
    assert_eq!(v["xi"], "5");
}

#[test]
fn count_single_cell() {
    let v = json(&["count", "1"]);
    assert_eq!((&v["e"], &v["F"], &v["xi"]), (&"1".into(), &"1".into(), &"1".into()));
}

#[test]
fn count_with_cross_check() {
    let v = json(&["count", "5,4,4,1/2,1", "--check"]);
    assert_eq!(v["check"]["agree"], true);
    assert_eq!(v["check"]["brute_force"], v["e"]);
}

#[test]
fn big_counts_are_decimal_strings() {
    let v = json(&["count", "thick-ribbon:k=12"]);
    let e = v["e"].as_str().unwrap();
    assert!(e.len() > 200 && e.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn family_spec_as_target() {
    let v = json(&["count", "thick-ribbon:k=4"]);
    assert_eq!(v["shape"], "7,6,5,4,3,2,1/3,2,1");
}

#[test]
fn parse_errors_name_the_index_and_position() {
    let out = run(&cli(&["count", "3,4/1"]));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("not weakly decreasing at index 2"), "{}", out.stderr);
    assert!(out.stderr.contains("position 2"));
    assert!(out.stderr.ends_with("  3,4/1\n    ^\n"), "{}", out.stderr);

    let out = run(&cli(&["bounds", "4,4/5"]));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("not contained in outer at index 1"));

    let out = run(&cli(&["count", "thick-ribbon:q=4"]));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("unknown key 'q'"));
}

#[test]
fn cap_errors_exit_with_three() {
    let out = run(&cli(&["excited", "6,6,6,6/3,3", "--max-excited", "10"]));
    assert_eq!(out.code, EXIT_CAP);
    let out = run(&cli(&["count", "5,5,5,5,5", "--check", "--max-brute", "10"]));
    assert_eq!(out.code, EXIT_CAP);
}

#[test]
fn verify_exit_codes() {
    let small = ["verify", "--max-size", "4", "--max-k", "4"];
    assert_eq!(run(&cli(&small)).code, EXIT_OK);

    let failing = Case::new("injected", "always fails", || {
        Err(Error::Numeric("stub verdict".into()))
    });
    let out = run_with(&cli(&small), vec![failing]);
    assert_eq!(out.code, EXIT_VERDICT);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let injected = v["groups"].as_array().unwrap().last().unwrap();
    assert_eq!(injected["group"], "injected");
    assert_eq!(injected["failures"][0]["message"], "numeric error: stub verdict");

    let capped = ["verify", "--max-size", "4", "--groups", "counting", "--max-brute", "2"];
    assert_eq!(run(&cli(&capped)).code, EXIT_CAP);
}

#[test]
fn output_is_identical_across_thread_counts() {
    let runs: Vec<String> = ["1", "2", "8"]
        .iter()
        .map(|t| run(&cli(&["verify", "--max-size", "6", "--threads", t])).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let fam: Vec<String> = ["1", "3"]
        .iter()
        .map(|t| {
            run(&cli(&["family", "square", "--k", "1..6", "--format", "csv", "--threads", t]))
                .stdout
        })
        .collect();
    assert_eq!(fam[0], fam[1]);
    let again = run(&cli(&["bounds", "5,4,4,1/2,1"])).stdout;
    assert_eq!(again, run(&cli(&["bounds", "5,4,4,1/2,1"])).stdout);
}

#[test]
fn family_csv_columns() {
    let out = run(&cli(&["family", "thick-ribbon", "--k", "2,4", "--format", "csv"]));
    assert_eq!(out.code, EXIT_OK);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("family,k,n,log_e_exact,c_k,logF,logXi,verdict"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[..3], ["thick-ribbon", "2", "5"]);
    assert_eq!(row[4], "-0.2502012118");
    assert_eq!(row[7], "holds");
}

#[test]
fn bounds_report_rows() {
    let v = json(&["bounds", "4,4,3,2/2,1"]);
    let value = |name: &str| {
        v["bounds"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["name"] == name)
            .unwrap()["value"]
            .clone()
    };
    assert_eq!(value("rank-factorial"), "864");
    assert_eq!(value("hp"), "672");
    assert_eq!(value("chain"), "16800");
    assert_eq!(value("skew-lr"), "241920");
    assert_eq!(value("xi-times-f"), "6300");
    assert_eq!(v["all_hold"], true);
}

#[test]
fn excited_diagrams_and_paths() {
    let v = json(&["excited", "5,4,4,1/2,1", "--paths"]);
    assert_eq!(v["xi"], "8");
    let diagrams = v["diagrams"].as_array().unwrap();
    assert_eq!(diagrams.len(), 8);
    assert_eq!(diagrams[0]["cells"], serde_json::json!([[1, 1], [1, 2], [2, 1]]));
    assert_eq!(diagrams[0]["paths"].as_array().unwrap().len(), 2);
    let text = run(&cli(&["excited", "3,3/1", "--format", "text"])).stdout;
    assert!(text.contains("diagram 2\n...\n.#.\n"), "{text}");
}

#[test]
fn lr_expansion_and_single_coefficient() {
    let v = json(&["lr", "4,4,3,2/2,1"]);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["sum"], "3060");
    let c = json(&["lr", "3,2,1/2,1", "--nu", "2,1"]);
    assert_eq!(c["c"], "2");
}

#[test]
fn integrate_inline_and_from_file() {
    let spec = r#"{"omega": [[0,1],[1,1]], "pi": [[0,0],[1,0]]}"#;
    let v = json(&["integrate", spec]);
    assert!((v["value"].as_f64().unwrap() - skewtab_core::asymptotics::c1()).abs() < 1e-4);
    let path = std::env::temp_dir().join(format!("skewtab-spec-{}.json", std::process::id()));
    std::fs::write(&path, spec).unwrap();
    let w = json(&["integrate", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v, w);
    let bad = run(&cli(&["integrate", "{\"omega\": 1}"]));
    assert_eq!(bad.code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes_and_env_overrides() {
    let (code, out, _) = binary(&["count", "4,4,3,2/2,1"], &[]);
    assert_eq!(code, 0);
    assert!(out.contains("\"e\":\"3060\""));
    let (code, _, err) = binary(&["count", "3,4/1"], &[]);
    assert_eq!(code, 2);
    assert!(err.contains("index 2"));
    let (code, _, _) = binary(&["frobnicate"], &[]);
    assert_eq!(code, 2);
    let (code, _, _) = binary(&["excited", "6,6,6,6/3,3"], &[("SKEWTAB_MAX_EXCITED", "10")]);
    assert_eq!(code, 3);
    let (code, out, _) = binary(&["count", "2,1"], &[("SKEWTAB_FORMAT", "csv")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("shape,n,e,F,xi,method\n"));
}
