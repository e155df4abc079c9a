//! End-to-end runs of the `oddlength` binary.

use std::process::Command;

use oddlength::IntPolynomial;

fn oddlength(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_oddlength"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn stats_worked_example() {
    let (code, stdout, _) = oddlength(&[
        "stats",
        "--group",
        "B",
        "--window",
        "-2,4,3,-1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["odd_length"], 4);
    let parts = [&v["oinv"], &v["oneg"], &v["onsp"]].map(|x| x.as_u64().unwrap());
    assert_eq!(parts.iter().sum::<u64>(), 4);
}

#[test]
fn gf_and_closed_agree_on_json() {
    let (c1, gf, _) = oddlength(&[
        "gf", "--group", "A", "--n", "5", "--set", "", "--format", "json",
    ]);
    let (c2, closed, _) = oddlength(&[
        "closed",
        "--formula",
        "sn-quotient",
        "--n",
        "5",
        "--set",
        "",
        "--format",
        "json",
    ]);
    assert_eq!((c1, c2), (0, 0));
    let parse = |s: &str| -> IntPolynomial {
        let v: serde_json::Value = serde_json::from_str(s).unwrap();
        serde_json::from_value(v["polynomial"].clone()).unwrap()
    };
    let expected = &IntPolynomial::one_minus_x_pow(2) * &IntPolynomial::one_minus_x_pow(4);
    assert_eq!(parse(&gf), expected);
    assert_eq!(parse(&closed), expected);
}

#[test]
fn exit_codes() {
    let (code, stdout, stderr) = oddlength(&["gf", "--group", "A", "--n", "4"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty() && !stderr.is_empty());
    assert_eq!(
        oddlength(&["gf", "--group", "A", "--n", "12", "--set", ""]).0,
        3
    );
    let (code, stdout, _) = oddlength(&[
        "verify",
        "--suite",
        "thm4_1_plus,thm5_4_conjB",
        "--max-n-a",
        "7",
        "--max-n-b",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("2/2 checks passed"));
}
