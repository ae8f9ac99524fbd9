//! Golden cases shared by the CLI tests and the acceptance runner.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub name: &'static str,
    /// `{out}` is replaced by a fresh temporary directory.
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

/// Every documented command example plus the exit-code matrix.
pub const CASES: &[Case] = &[
    case("hs_squares", &["hs", "squares.ideal"], 0),
    case("hs_squares_json", &["--json", "hs", "squares.ideal"], 0),
    case("hs_not_artinian", &["hs", "xy.ideal"], 3),
    case("hs_truncate", &["hs", "truncate3.ideal"], 0),
    case("hs_rational", &["hs", "rational.ideal"], 0),
    case("hs_common_factor", &["hs", "common_factor.ideal"], 3),
    case("hs_missing_file", &["hs", "no-such-file.ideal"], 2),
    case("hs_inhomogeneous", &["hs", "inhomogeneous.ideal"], 2),
    case("hs_syntax", &["hs", "syntax.ideal"], 2),
    case("classify_t2", &["classify", "1,2,1"], 0),
    case("classify_t2_json", &["--json", "classify", "1,2,1"], 0),
    case("classify_infinite", &["classify", "1,2,3,2,1"], 0),
    case("classify_t6", &["classify", "(1, 2, 2, 2)"], 0),
    case("classify_invalid", &["classify", "1,2,4"], 3),
    case("classify_unparsable", &["classify", "1,a"], 2),
    case("enumerate_6", &["enumerate", "--colength", "6"], 0),
    case("enumerate_3", &["enumerate", "--colength", "3"], 0),
    case("enumerate_max_4", &["enumerate", "--max-colength", "4"], 0),
    case(
        "enumerate_max_4_json",
        &["--json", "enumerate", "--max-colength", "4"],
        0,
    ),
    case("enumerate_too_small", &["enumerate", "--colength", "2"], 3),
    case("catalog_t2", &["catalog", "1,2,1", "--out", "{out}"], 0),
    case("catalog_t2_json", &["--json", "catalog", "1,2,1"], 0),
    case(
        "catalog_infinite",
        &["catalog", "1,2,3,2,1", "--out", "{out}"],
        3,
    ),
    case("catalog_t3", &["catalog", "1,2,3,1", "--out", "{out}"], 0),
    case("catalog_invalid", &["catalog", "1,3"], 3),
    case(
        "iso_t2",
        &["iso", "t2_distinct.ideal", "t2_double.ideal"],
        0,
    ),
    case(
        "iso_t2_json",
        &["--json", "iso", "t2_distinct.ideal", "t2_double.ideal"],
        0,
    ),
    case(
        "iso_swap",
        &["iso", "swap_left.ideal", "swap_right.ideal"],
        0,
    ),
    case(
        "iso_swap_json",
        &["--json", "iso", "swap_left.ideal", "swap_right.ideal"],
        0,
    ),
    case(
        "iso_irrational",
        &["iso", "t2_distinct.ideal", "irrational.ideal"],
        0,
    ),
    case("iso_not_artinian", &["iso", "squares.ideal", "xy.ideal"], 3),
    case(
        "iso_parse_error",
        &["iso", "squares.ideal", "syntax.ideal"],
        2,
    ),
    case("diagram_121", &["diagram", "1,2,1"], 0),
    case("diagram_1234", &["diagram", "1,2,3,4"], 0),
    case("diagram_12322", &["diagram", "1,2,3,2,2"], 0),
    case("diagram_json", &["--json", "diagram", "1,2,3,2,2"], 0),
    case("diagram_invalid", &["diagram", "1,2,2,3"], 3),
    case(
        "sample_runs",
        &[
            "sample", "1,2,2,2", "--seed", "7", "--count", "3", "--out", "{out}",
        ],
        0,
    ),
    case(
        "sample_one",
        &["sample", "1,2,1", "--seed", "1", "--out", "{out}"],
        0,
    ),
    case(
        "sample_json",
        &[
            "--json",
            "sample",
            "1,2,3,2,1",
            "--seed",
            "3",
            "--count",
            "2",
        ],
        0,
    ),
    case("sample_invalid", &["sample", "1,2,4", "--seed", "1"], 3),
    case(
        "sample_exhausted",
        &["sample", "1,2,1", "--retries", "0"],
        4,
    ),
    case("usage_no_command", &[], 1),
    case("usage_unknown_command", &["frobnicate"], 1),
    case("usage_missing_argument", &["enumerate"], 1),
    case(
        "usage_bad_number",
        &["sample", "1,2,1", "--seed", "minus"],
        1,
    ),
    case("usage_help", &["--help"], 0),
    case("usage_version", &["--version"], 0),
];

pub fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_hsft"))
}

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

/// Runs `hsft` from the data directory.
pub fn hsft(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("hsft runs")
}

/// Runs a case with `{out}` pointing at `out`.
pub fn run_case(case: &Case, out: &Path) -> Output {
    let out = out.to_str().expect("utf-8 temp path");
    let args: Vec<String> = case.args.iter().map(|a| a.replace("{out}", out)).collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    hsft(&refs)
}

/// The stream a golden file records: stdout on success, stderr otherwise.
pub fn recorded(case: &Case, output: &Output) -> String {
    let bytes = if case.code == 0 {
        &output.stdout
    } else {
        &output.stderr
    };
    String::from_utf8(bytes.clone()).expect("utf-8 output")
}

/// Compares a case with its golden file, or rewrites the file when
/// `HSFT_BLESS` is set. Returns a description of the first mismatch.
pub fn check_case(case: &Case) -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let output = run_case(case, &dir.path().join("out"));
    let code = output.status.code();
    if code != Some(case.code) {
        return Err(format!(
            "{}: exit {code:?}, expected {}; stderr: {}",
            case.name,
            case.code,
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    let actual = recorded(case, &output);
    let path = golden_dir().join(format!("{}.txt", case.name));
    if std::env::var_os("HSFT_BLESS").is_some() {
        fs::write(&path, &actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if actual != expected {
        return Err(format!(
            "{}: output differs from {}\n--- expected\n{expected}--- actual\n{actual}",
            case.name,
            path.display()
        ));
    }
    Ok(())
}

pub fn validator(schema: &str) -> jsonschema::Validator {
    let path = schema_dir().join(format!("{schema}.schema.json"));
    let text = fs::read_to_string(&path).expect("schema file");
    let value: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&value).expect("schema compiles")
}

/// Validation errors of `json` against the named schema.
pub fn schema_errors(schema: &str, json: &str) -> Vec<String> {
    let value: serde_json::Value = match serde_json::from_str(json) {
        Ok(v) => v,
        Err(e) => return vec![format!("not JSON: {e}")],
    };
    validator(schema)
        .iter_errors(&value)
        .map(|e| format!("{}: {e}", e.instance_path()))
        .collect()
}
