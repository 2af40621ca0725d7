use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pocfrob").chain(args.iter().copied());
    let code = pocfrob::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn census_tsv_starts_with_s3() {
    let (code, out, _) = run(&["census", "--max", "15000"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 39);
    assert_eq!(out.lines().next(), Some("6\tC3\tC2\tThmC\tC3:C2"));
}

#[test]
fn census_formats_are_deterministic() {
    for format in ["tsv", "json", "markdown"] {
        let a = run(&["census", "--max", "15000", "--format", format]);
        let b = run(&["census", "--max", "15000", "--format", format]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
    assert_eq!(run(&["census", "--max", "100", "--format", "csv"]).0, 2);
    assert_eq!(run(&["census", "--max", "5"]).0, 1);
}

#[test]
fn census_crosscheck_reports_on_stderr() {
    let (code, out, err) = run(&["census", "--max", "1000", "--crosscheck", "600"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 18);
    assert!(
        err.contains("crosscheck: 17 passed, 1 skipped, 0 failed"),
        "{err}"
    );
}

#[test]
fn check_prints_verdict_and_trace() {
    let (code, out, _) = run(&["check", "H(11,1,2):SL(2,5)"]);
    assert_eq!(code, 0);
    assert!(out.contains("POC: yes (Theorem B)"), "{out}");
    let (_, out, _) = run(&["check", "H(19,1,2):SL(2,5)"]);
    assert!(out.contains("POC: no (Theorem B)"), "{out}");
    let (_, out, _) = run(&["check", "H(3,1,2):C8", "--brute"]);
    assert!(
        out.contains("census {1:1, 2:9, 3:8, 4:18, 8:36}, POC yes"),
        "{out}"
    );
    assert!(out.contains("malnormal yes"), "{out}");
}

#[test]
fn orders_symbolic_and_brute_agree() {
    for spec in [
        "H(5,1,2):SL(2,3)",
        "H(3,1,4):M(5,16,4)",
        "H(7,1,1):C6",
        "Q8xC3",
        "M(5,16,4)",
        "SL(2,5)",
    ] {
        let sym = run(&["orders", spec]);
        let brute = run(&["orders", spec, "--brute"]);
        assert_eq!(sym.0, 0, "{spec}: {}", sym.2);
        assert_eq!(sym, brute, "{spec}");
    }
    let (_, out, _) = run(&["orders", "C4", "--format", "json"]);
    assert_eq!(
        out,
        "{\"group_order\":4,\"counts\":{\"1\":1,\"2\":1,\"4\":2}}\n"
    );
}

#[test]
fn solve_prints_tuples() {
    let (code, out, _) = run(&["solve", "DIO240", "--bound", "1000000"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(11,4,61,1)\n(41,2,7,1)\n");
    let (code, out, _) = run(&["solve", "sandwich_23", "--bound", "1000000"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(2)\n(3)\n(5)\n(7)\n(17)\n");
    assert_eq!(run(&["solve", "DIFF_2Q", "--bound", "100"]).0, 1);
    assert_eq!(run(&["solve", "NOPE", "--bound", "100"]).0, 2);
}

#[test]
fn embed_reports_witness_or_absence() {
    let (code, out, _) = run(&[
        "embed",
        "--dim",
        "2",
        "--prime",
        "11",
        "--spec",
        "M(5,24,2)",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "no embedding\n");
    let (_, out, _) = run(&[
        "embed", "--dim", "2", "--prime", "11", "--spec", "SL(2,5)", "--fpf",
    ]);
    assert!(
        out.starts_with("embedding found: order 120 subgroup of GL(2, Z/11)"),
        "{out}"
    );
}

#[test]
fn zsigmondy_output() {
    assert_eq!(
        run(&[
            "zsigmondy",
            "--a",
            "2",
            "--b",
            "1",
            "--n",
            "4",
            "--eps",
            "-1"
        ])
        .1,
        "5\n"
    );
    assert_eq!(
        run(&[
            "zsigmondy",
            "--a",
            "2",
            "--b",
            "1",
            "--n",
            "6",
            "--eps",
            "-1"
        ])
        .1,
        "exception (listed case)\n"
    );
    assert_eq!(
        run(&[
            "zsigmondy",
            "--a",
            "4",
            "--b",
            "2",
            "--n",
            "3",
            "--eps",
            "1"
        ])
        .0,
        1
    );
}

#[test]
fn exit_statuses() {
    let (code, _, err) = run(&["check", "H(3,1,2:C8"]);
    assert_eq!(code, 2);
    assert!(err.contains("position"), "{err}");
    assert_eq!(run(&["check", "H(9,1,2):C8"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn limit_flag_and_environment() {
    let (code, _, err) = run(&["--limit", "1000", "orders", "H(11,1,2):SL(2,5)", "--brute"]);
    assert_eq!(code, 1);
    assert!(err.contains("limit"), "{err}");
    let out = Command::new(env!("CARGO_BIN_EXE_pocfrob"))
        .args(["orders", "H(5,1,2):C24", "--brute"])
        .env("POCFROB_LIMIT", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_pocfrob"))
        .args(["orders", "H(5,1,2):C24", "--brute"])
        .env("POCFROB_LIMIT", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
