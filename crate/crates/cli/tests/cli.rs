use std::process::Command;

use spindual::output::run;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spindual"))
}

fn run_args(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("spindual").chain(args.iter().copied()));
    (out.code, out.output)
}

#[test]
fn spec_examples_exit_zero() {
    for args in [
        &["verify", "relations", "--N", "5"][..],
        &["verify", "cubic", "--N", "4"],
        &["verify", "duality", "--N", "3", "--n", "6"],
    ] {
        let (code, out) = run_args(args);
        assert_eq!(code, 0, "{args:?}\n{out}");
        assert!(out.contains("PASS") && !out.contains("FAIL"));
    }
}

#[test]
fn multiplicity_table_json_schema() {
    let (code, out) = run_args(&["table", "multiplicities", "--N", "5", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["N"], 5);
    assert_eq!(v["n"], 2);
    assert_eq!(v["mode"], "multiplicities");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    for e in entries {
        assert_eq!(e["multiplicity"], 1);
        assert!(e["weight"].is_array() && e["complement"].is_array() && e["dimension"].is_u64());
    }
    let dims: u64 = entries.iter().map(|e| e["dimension"].as_u64().unwrap()).sum();
    assert_eq!(dims, 16);
}

#[test]
fn classical_spectrum_table() {
    let (code, out) = run_args(&["table", "spectrum", "--N", "4", "--q", "one", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<(String, u64)> = r
        .records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[4].to_string(), rec[5].parse().unwrap())
        })
        .collect();
    let want: Vec<(String, u64)> = [("-2", 1), ("-1", 4), ("0", 6), ("1", 4), ("2", 1)].iter().map(|(e, m)| (e.to_string(), *m)).collect();
    assert_eq!(rows, want);
}

#[test]
fn fusion_table_is_below_generic() {
    let parse = |args: &[&str]| -> serde_json::Value { serde_json::from_str(&run_args(args).1).unwrap() };
    let fused = parse(&["table", "multiplicities", "--N", "5", "--n", "4", "--level", "7", "--format", "json"]);
    let generic = parse(&["table", "multiplicities", "--N", "5", "--n", "4", "--format", "json"]);
    assert_eq!(fused["level"], 7);
    for e in fused["entries"].as_array().unwrap() {
        let g = generic["entries"].as_array().unwrap().iter().find(|x| x["weight"] == e["weight"]).unwrap();
        assert!(e["multiplicity"].as_u64() <= g["multiplicity"].as_u64());
    }
}

#[test]
fn text_output_uses_halves() {
    let (_, out) = run_args(&["table", "complements", "--N", "3", "--n", "2"]);
    assert!(out.contains("dual=(3/2)") && out.contains("dual=(1/2)"), "{out}");
}

#[test]
fn identical_config_identical_output() {
    for args in [
        &["fft-count", "--N", "5", "--n", "3", "--seed", "7", "--format", "json"][..],
        &["verify", "cubic", "--N", "6", "--q", "spec", "--seed", "3", "--format", "json"],
        &["table", "spectrum", "--N", "5", "--q", "spec", "--seed", "2", "--format", "csv"],
    ] {
        let a = bin().args(args).output().unwrap();
        let b = bin().args(args).output().unwrap();
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seeds_are_reported() {
    let (_, out) = run_args(&["verify", "spectrum", "--N", "5", "--q", "spec", "--seed", "11"]);
    assert!(out.contains("seed 11") && out.contains("point v0 = "), "{out}");
    let (_, out) = run_args(&["fft-count", "--N", "3", "--n", "3", "--seed", "5"]);
    assert!(out.contains("seed 5"), "{out}");
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["verify", "relations", "--N", "1"][..],
        &["verify", "relations", "--n", "0"],
        &["verify", "fft", "--N", "5", "--n", "3", "--q", "one"],
        &["verify", "nonsense"],
        &["table", "multiplicities", "--format", "yaml"],
        &["fft-count", "--N", "5", "--n", "3", "--q", "sym"],
    ] {
        let status = bin().args(args).output().unwrap().status;
        assert_eq!(status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("spindual-{}.json", std::process::id()));
    let status = bin()
        .args(["table", "multiplicities", "--N", "3", "--n", "4", "--format", "json", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["N"], 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn sign_flag_accepts_minus() {
    let (code, out) = run_args(&["verify", "spectrum", "--N", "3", "--q", "one", "--sign", "-"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("sign -1"));
}
