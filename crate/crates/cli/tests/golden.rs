//! Byte-exact end-to-end output of every command.
//!
//! Each case pins stdout, stderr and the exit code. `UPDATE_GOLDEN=1 cargo test`
//! rewrites the files under `tests/golden`; review the diff before committing.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

const CASES: &[Case] = &[
    case("info-p2", &["info", "example:p2"], 0),
    case("info-prz", &["info", "example:example-prz"], 0),
    case("info-cube", &["info", "example:cube-face-fan"], 0),
    case("info-redundant", &["info", "@redundant.json"], 1),
    case("info-nonprimitive", &["info", "@nonprimitive.json"], 1),
    case("info-overlap", &["info", "@overlap.json"], 1),
    case("info-malformed", &["info", "@malformed.json"], 1),
    case("info-short-ray", &["info", "@short-ray.json"], 1),
    case("info-unknown-example", &["info", "example:p7x"], 1),
    case("info-json", &["--format", "json", "info", "example:p2"], 0),
    case("info-csv", &["--format", "csv", "info", "example:example-prz"], 0),
    case("weights-prz", &["weights", "example:example-prz"], 0),
    case("weights-torus2", &["weights", "example:torus2"], 0),
    case("weights-torus2-prime", &["weights", "example:torus2", "--prime", "5"], 0),
    case("weights-c2-minus-origin", &["weights", "example:c2-minus-origin"], 0),
    case("weights-square", &["weights", "example:cone-over-square"], 1),
    case("weights-bad-prime", &["weights", "example:p1", "--prime", "1"], 1),
    case("weights-hirzebruch-file", &["weights", "@hirzebruch2.json"], 0),
    case("weights-json", &["--format", "json", "weights", "example:example-prz", "--prime", "2"], 0),
    case("weights-csv", &["--format", "csv", "weights", "example:example-prz"], 0),
    case("betti-c2-minus-origin", &["betti", "example:c2-minus-origin"], 0),
    case("betti-cube", &["betti", "example:cube-face-fan"], 0),
    case("betti-square", &["betti", "example:cone-over-square"], 1),
    case("ip-prz", &["ip", "example:example-prz"], 0),
    case("ip-square", &["ip", "example:cone-over-square"], 0),
    case("ip-hexagon", &["ip", "example:cone-over-hexagon"], 0),
    case("ip-cube", &["ip", "example:cube-face-fan"], 0),
    case("ip-torus", &["ip", "example:torus(2)"], 0),
    case("ip-csv", &["--format", "csv", "ip", "example:example-prz"], 0),
    case("eqseries-square", &["eqseries", "example:cone-over-square", "--cutoff", "5"], 0),
    case("eqseries-prz", &["eqseries", "example:example-prz"], 0),
    case("koszul-tables-prz", &["koszul-tables", "example:example-prz"], 0),
    case("koszul-tables-p2", &["koszul-tables", "example:p2", "--cutoff", "2"], 0),
    case("koszul-tables-square", &["koszul-tables", "example:cone-over-square"], 1),
    case("deligne-prz", &["deligne", "example:example-prz-completion"], 0),
    case("deligne-cstar", &["deligne", "example:cstar-completion"], 0),
    case("deligne-p2", &["deligne", "example:p2-completion"], 0),
    case("deligne-line-removed", &["deligne", "@p1xp1-minus-line.json"], 0),
    case("deligne-singular", &["deligne", "@singular-pair.json"], 1),
    case("deligne-needs-pair", &["deligne", "example:p2"], 1),
    case("deligne-csv", &["--format", "csv", "deligne", "example:cstar-completion"], 0),
    case("example-list", &["example"], 0),
    case("example-p2", &["example", "p2"], 0),
    case("example-prz-completion", &["example", "example-prz-completion"], 0),
    case("validate-fan", &["validate", "@hirzebruch2.json"], 0),
    case("validate-pair", &["validate", "@p1xp1-minus-line.json"], 0),
    case("validate-missing", &["validate", "@does-not-exist.json"], 1),
    case("usage-missing-input", &["weights"], 1),
];

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// `@name` refers to a fixture; paths are passed relative to the crate root so
/// error messages stay machine independent.
fn resolve(arg: &str) -> String {
    match arg.strip_prefix('@') {
        Some(f) => format!("tests/fixtures/{f}"),
        None => arg.to_string(),
    }
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_toric-weights"))
        .current_dir(manifest())
        .args(args.iter().map(|a| resolve(a)))
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exited normally"),
    )
}

fn compare(path: &Path, actual: &str, update: bool, failures: &mut Vec<String>) {
    if update {
        fs::write(path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    if expected != actual {
        failures.push(format!("{}:\n--- expected\n{expected}--- actual\n{actual}", path.display()));
    }
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = manifest().join("tests/golden");
    let mut failures = Vec::new();
    for c in CASES {
        let (stdout, stderr, code) = run(c.args);
        if code != c.exit {
            failures.push(format!("{}: exit {code}, expected {}\n{stderr}", c.name, c.exit));
        }
        compare(&dir.join(format!("{}.out", c.name)), &stdout, update, &mut failures);
        compare(&dir.join(format!("{}.err", c.name)), &stderr, update, &mut failures);
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let (stdout, _, code) = run(&[flag]);
        assert_eq!(code, 0);
        assert!(stdout.contains("toric-weights"));
    }
}

#[test]
fn example_output_round_trips() {
    for name in ["p2", "example-prz", "example-prz-completion", "cube-face-fan", "torus(0)"] {
        let (json, _, code) = run(&["example", name]);
        assert_eq!(code, 0);
        let file = tempfile::NamedTempFile::new().unwrap();
        fs::write(file.path(), json).unwrap();
        let path = file.path().to_str().unwrap();
        let (from_file, _, _) = run(&["info", path]);
        let (from_name, _, _) = run(&["info", &format!("example:{name}")]);
        assert_eq!(from_file, from_name, "{name}");
    }
}
