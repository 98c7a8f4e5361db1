use std::io::Write;
use std::process::{Command, Output, Stdio};

use fmrig::freerig::nf_from_json;
use fmrig::{normalize, parse, Rig};

fn fmrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmrig"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = fmrig(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["normalize", "x[2]+x[3]"]), "5*x[0]");
    assert_eq!(stdout(&["derive", "--n", "2", "f(x[1])"]), "2*(1 ⊗ e[0])");
    assert_eq!(
        stdout(&["eval", "--target", "square", "--phi", "3", "f(x[1])"]),
        "9"
    );
}

#[test]
fn level_two_flattening() {
    assert_eq!(
        stdout(&["--level", "2", "mu", "g(y[x[1]]) * y[x[2]]"]),
        "2*x[0]*f(x[0])"
    );
    let out = fmrig(&["mu", "x[1]"]);
    assert!(!out.status.success());
}

#[test]
fn structured_output_reparses_to_the_same_element() {
    for (k, expr) in [
        ("1", "f(x[1] * f(0)) + x[2] * x[1] + 1"),
        ("2", "x[1,2] * f(x[0,1] + 1)"),
    ] {
        let json = stdout(&["--carrier", k, "--format", "structured", "normalize", expr]);
        let rig = Rig::nat(k.parse().unwrap());
        let back = nf_from_json(&serde_json::from_str(&json).unwrap(), &rig).unwrap();
        assert_eq!(
            back,
            normalize(&parse(expr, rig.base()).unwrap(), &rig).unwrap()
        );
    }
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fmrig"))
        .args(["normalize", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"x[1] +\n x[1]\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2*x[0]");
}

#[test]
fn errors_exit_nonzero_with_a_location() {
    let out = fmrig(&["normalize", "x[1] +\n  * 1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 3"), "{err}");
    assert!(!fmrig(&[
        "--carrier",
        "2",
        "eval",
        "--target",
        "id",
        "--phi",
        "1",
        "x[1,1]"
    ])
    .status
    .success());
    assert!(!fmrig(&["--level", "3", "normalize", "1"]).status.success());
    assert!(!fmrig(&["eval", "--target", "f(x[1])", "--phi", "1", "1"])
        .status
        .success());
}

#[test]
fn symmetric_derivative() {
    assert_eq!(
        stdout(&[
            "--symmetric",
            "--carrier",
            "2",
            "derive",
            "x[1,0]*x[1,0]*x[0,1]"
        ]),
        "(x[0]^2 ⊗ e[1]) + 2*(x[0]*x[1] ⊗ e[0])"
    );
    assert!(!fmrig(&["--symmetric", "derive", "f(x[1])"])
        .status
        .success());
}

#[test]
fn evaluation_targets() {
    assert_eq!(
        stdout(&["eval", "--target", "successor", "--phi", "2", "f(f(x[1]))"]),
        "4"
    );
    assert_eq!(
        stdout(&["eval", "--target", "x[1]*x[1] + 1", "--phi", "2", "f(x[1])"]),
        "5"
    );
    assert_eq!(
        stdout(&[
            "--carrier",
            "2",
            "eval",
            "--target",
            "double",
            "--phi",
            "2,5",
            "f(x[1,1])"
        ]),
        "14"
    );
}

#[test]
fn distinctness_lists_n() {
    let text = stdout(&["distinctness", "--n-values", "0,3,7"]);
    assert_eq!(
        text,
        "n = 0: 0\nn = 3: 3\nn = 7: 7\npairwise distinct: true"
    );
}

#[test]
fn laws_exit_status_and_report() {
    let out = stdout(&[
        "--format",
        "structured",
        "laws",
        "--cases",
        "15",
        "--only",
        "product_rule,chain_rule",
    ]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    let laws = report["laws"].as_array().unwrap();
    assert_eq!(laws.len(), 2);
    assert!(laws
        .iter()
        .all(|l| l["failures"].as_array().unwrap().is_empty()));
    assert!(!fmrig(&["laws", "--only", "nope"]).status.success());
    assert!(!fmrig(&["laws", "--cases", "0"]).status.success());
    assert!(stdout(&["laws", "--list"])
        .lines()
        .any(|l| l == "interchange_rule"));
}
