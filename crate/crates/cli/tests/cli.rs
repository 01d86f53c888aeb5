use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const EXAMPLE: &str = r#"{"word":"+++++---++","partitions":[[1,1],[1,1],[1,1],[1,1],[1,1],[1,1],[],[],[],[1],[2,1]]}"#;
const MATCHING_EXAMPLE: &str = r#"{"diamond":"h+,h+,v+,v-,v-,h-","partitions":[[],[2],[2],[3,1],[2,1],[1],[]]}"#;

fn steep(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_steep"))
        .args(args)
        .env_remove("OBLIQUE_TRUNC_DEFAULT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = steep(args, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn piped(args: &[&str], stdin: &str) -> Output {
    steep(args, Some(stdin))
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn formula_examples() {
    assert_eq!(ok(&["formula", "--word", "+-", "--model", "pure", "--trunc", "4"]), "1 + q\n");
    assert_eq!(ok(&["formula", "--word", "+-+-+-+-", "--model", "pure", "--trunc", "99", "--at-one"]), "1024\n");
}

#[test]
fn cyclic_model_needs_both_signs() {
    let out = steep(&["formula", "--word", "++", "--model", "cyclic", "--trunc", "4"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("one + and one"));
    let out = steep(&["oracle", "--word", "--", "--model", "cylindric"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn at_one_only_for_polynomials() {
    for args in [
        &["formula", "--word", "++--", "--at-one"][..],
        &["formula", "--word", "+-+-", "--model", "free", "--at-one"],
        &["formula", "--word", "+-+-+-+-", "--trunc", "20", "--at-one"],
    ] {
        assert_eq!(steep(args, None).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_words_are_usage_errors() {
    for w in ["+-+", "+x", ""] {
        assert_eq!(steep(&["formula", "--word", w], None).status.code(), Some(2), "{w:?}");
    }
    assert_eq!(steep(&["extended", "--diamond", "h+,x"], None).status.code(), Some(2));
    assert_eq!(steep(&["formula", "--word", "+-", "--model", "toroidal"], None).status.code(), Some(2));
}

#[test]
fn oracle_agrees_with_formula() {
    for (w, model, n) in
        [("+-", "pure", "4"), ("++--", "free", "6"), ("+-+-", "mixed", "6"), ("+--+", "cylindric", "6")]
    {
        let args = |cmd| vec![cmd, "--word", w, "--model", model, "--trunc", n];
        assert_eq!(ok(&args("formula")), ok(&args("oracle")), "{w} {model}");
    }
    let args = |cmd| vec![cmd, "--word", "+-+-", "--model", "free", "--trunc", "4", "--multi"];
    assert_eq!(ok(&args("formula")), ok(&args("oracle")));
}

#[test]
fn oracle_constant_term_is_one() {
    for model in ["pure", "mixed", "free", "cyclic"] {
        for w in ["+-", "-+", "++-+", "+-+-+-"] {
            let v = json(&ok(&["oracle", "--word", w, "--model", model, "--trunc", "3", "--format", "json"]));
            assert_eq!(v["series"]["coeffs"][0], 1, "{w} {model}");
        }
    }
}

#[test]
fn default_truncation_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_steep"))
        .args(["formula", "--word", "++--"])
        .env("OBLIQUE_TRUNC_DEFAULT", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 + q + 2*q^2 + 3*q^3\n");
    let v = json(&ok(&["formula", "--word", "+-", "--format", "json"]));
    assert_eq!(v["trunc"], 10);
}

#[test]
fn extended_methods_agree() {
    let d = "h+,v+,v-,h-";
    let f = ok(&["extended", "--diamond", d, "--trunc", "6"]);
    assert_eq!(f, ok(&["extended", "--diamond", d, "--trunc", "6", "--method", "oracle"]));
    assert_eq!(f, ok(&["extended", "--diamond", d, "--trunc", "6", "--method", "enumerate"]));
    let m = |method| ok(&["extended", "--diamond", d, "--trunc", "4", "--multi", "--method", method]);
    assert_eq!(m("formula"), m("oracle"));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "formulas", "--max-len", "6", "--trunc", "10"][..],
        &["verify", "--suite", "commutation", "--trunc", "8"],
        &["verify", "--suite", "flips", "--max-len", "4", "--max-size", "5"],
    ] {
        let out = ok(args);
        assert!(out.trim_end().ends_with(": pass"), "{out}");
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn verify_json_report() {
    let v = json(&ok(&["verify", "--suite", "reflection", "--suite", "bijection", "--trunc", "5", "--format", "json"]));
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["reflection", "bijection"]);
    assert_eq!(steep(&["verify", "--max-len", "20"], None).status.code(), Some(2));
}

#[test]
fn sequence_tiling_round_trip() {
    let t = piped(&["bijection", "--direction", "seq-to-tiling"], EXAMPLE);
    assert_eq!(t.status.code(), Some(0));
    let back = piped(&["bijection", "--direction", "tiling-to-seq"], std::str::from_utf8(&t.stdout).unwrap());
    assert_eq!(json(std::str::from_utf8(&back.stdout).unwrap()), json(EXAMPLE));
}

#[test]
fn sequence_matching_round_trip() {
    let m = piped(&["bijection", "--direction", "seq-to-matching"], MATCHING_EXAMPLE);
    assert_eq!(m.status.code(), Some(0));
    let back = piped(&["bijection", "--direction", "matching-to-seq"], std::str::from_utf8(&m.stdout).unwrap());
    assert_eq!(json(std::str::from_utf8(&back.stdout).unwrap()), json(MATCHING_EXAMPLE));
}

#[test]
fn invalid_sequence_names_the_step() {
    let bad = r#"{"word":"+-+-","partitions":[[],[1],[1],[1,1,1],[]]}"#;
    let out = piped(&["bijection", "--direction", "seq-to-tiling"], bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("step 3"), "{}", String::from_utf8_lossy(&out.stderr));
    let out = piped(&["bijection", "--direction", "tiling-to-seq"], r#"{"word":"+-"}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_minimal_tiling_svg() {
    let a = ok(&["render", "--word", "+++++---++"]);
    assert_eq!(a, ok(&["render", "--word", "+++++---++"]));
    assert!(a.starts_with("<svg"));
    assert!(a.contains("#2e8b57") && a.contains("#ff8c00"));
    let t = json(
        &String::from_utf8(
            piped(
                &["bijection", "--direction", "seq-to-tiling"],
                r#"{"word":"+++++---++","partitions":[[],[],[],[],[],[],[],[],[],[],[]]}"#,
            )
            .stdout,
        )
        .unwrap(),
    );
    assert_eq!(a.matches("<rect").count(), t["dominos"].as_array().unwrap().len());
}

#[test]
fn render_matching_and_particles() {
    let svg = ok(&["render", "--diamond", "h+,h-,v+,v-"]);
    assert!(svg.starts_with("<svg") && svg.contains("<line"));
    let out = piped(&["render", "--format", "ascii", "--particles", "--input", "-"], EXAMPLE);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().all(|l| l.contains('•') && l.contains('∘')));
    let out = piped(&["render", "--format", "ascii", "--input", "-"], MATCHING_EXAMPLE);
    assert_eq!(out.status.code(), Some(2));
}
