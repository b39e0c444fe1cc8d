use std::process::Command;

use dimfermat::cli::run;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dimfermat")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn report_m3_passes() {
    let (code, stdout, _) = bin(&["report", "--m", "3"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("OK ")));
    for claim in ["lemma-generators-Y", "theorem-unexpected", "mult-abc", "dual-expansion", "bpf", "bpf-case-analysis"]
    {
        assert!(stdout.lines().any(|l| l.split(' ').nth(1) == Some(claim)), "missing {claim}");
    }
}

#[test]
fn report_m4_passes() {
    let (code, stdout, _) = bin(&["report", "--m", "4"]);
    assert_eq!(code, 0, "{stdout}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["report", "--m", "0"]).0, 2);
    assert_eq!(bin(&["report"]).0, 2);
    assert_eq!(bin(&["--m", "3", "frobnicate"]).0, 2);
    assert_eq!(bin(&["report", "--m", "3", "--trials", "0"]).0, 2);
    assert_eq!(bin(&["report", "--sweep", "5..3"]).0, 2);
    assert_eq!(bin(&["report", "--m", "3", "--sweep", "3..4"]).0, 2);
    assert_eq!(bin(&["ideal-check", "--m", "3", "--d-min", "9", "--d-max", "8"]).0, 2);
}

#[test]
fn failures_exit_one() {
    let (code, stdout, _) = bin(&["unexpected-check", "--m", "3", "--mult", "1"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("FAIL unexpectedness m=3 degree=7 mult=1\n"));
    let (code, _, stderr) = bin(&["gamma", "--m", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error: "));
    let (code, stdout, _) = bin(&["bpf-check", "--m", "1"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("INCONCLUSIVE bpf"));
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["report", "--m", "3", "--output", "json", "--only", "unexpected,gamma-membership", "--seed", "7"];
    let first = bin(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, bin(&args));
    let doc = dimfermat::json::parse_document(&first.1).unwrap();
    assert_eq!(doc.len(), 2);
    assert_eq!(
        doc[0].witness.get("trials").map(|t| matches!(t, dimfermat_core::Witness::List(v) if v.len() == 3)),
        Some(true)
    );
}

#[test]
fn output_format_aliases() {
    let a = run(["dimfermat", "dual-check", "--m", "3", "--output", "json"]);
    let b = run(["dimfermat", "dual-check", "--m", "3", "--output", "json-like"]);
    let c = run(["dimfermat", "dual-check", "--m", "3", "--output", "structured"]);
    assert_eq!(a.code, 0);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn points_listing() {
    let (code, stdout, _) = bin(&["points", "--m", "3", "--set", "Z"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 30);
    let mut sorted: Vec<&str> = stdout.lines().collect();
    sorted.sort();
    assert_eq!(sorted, stdout.lines().collect::<Vec<_>>());
    assert_eq!(run(["dimfermat", "points", "--m", "6", "--set", "w"]).stdout.lines().count(), 36);
    assert_eq!(run(["dimfermat", "points", "--m", "3", "--set", "x"]).stdout.lines().count(), 3);
    let y = run(["dimfermat", "points", "--m", "3", "--set", "y", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&y.stdout).unwrap();
    assert_eq!(v["count"], 27);
}

#[test]
fn single_claim_subcommands() {
    let g = run(["dimfermat", "gamma", "--m", "3"]);
    assert_eq!(g.code, 0);
    assert_eq!(g.stdout.lines().count(), 1);
    assert_eq!(g.stdout.matches(" + ").count(), 29);
    for side in ["xyz", "abc"] {
        let out = run(["dimfermat", "mult-cert", "--m", "3", "--side", side]);
        assert_eq!((out.code, out.stdout), (0, format!("OK mult-{side} m=3\n")));
    }
    let ideal = run(["dimfermat", "ideal-check", "--m", "3", "--set", "y"]);
    assert_eq!(ideal.stdout, "OK ideal-generation m=3 d_min=6 d_max=12\n");
    let bpf = run(["dimfermat", "bpf-check", "--m", "3", "--n-max", "9"]);
    assert_eq!((bpf.code, bpf.stdout.starts_with("INCONCLUSIVE bpf m=3 n_max=9")), (1, true));
    let unexpected = run(["dimfermat", "unexpected-check", "--m", "3", "--trials", "2"]);
    assert_eq!(unexpected.stdout, "OK unexpectedness m=3 degree=7 mult=3\n");
}

#[test]
fn sweep_is_ordered_by_m() {
    let out = run(["dimfermat", "report", "--sweep", "2..4", "--only", "configurations,dual"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let ms: Vec<&str> = out.stdout.lines().map(|l| l.split(' ').nth(2).unwrap()).collect();
    assert_eq!(ms, ["m=2", "m=2", "m=3", "m=3", "m=3", "m=4", "m=4"]);
}
