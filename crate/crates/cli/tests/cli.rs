use std::io::Write;

use gdua_cli::parse::{parse_poly, parse_scalar};
use gdua_cli::report::{ErrorReport, Report};
use gdua_cli::run;
use proptest::prelude::*;

fn gdua(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gdua").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(stdout: &str) -> Report {
    serde_json::from_str(stdout.trim()).unwrap()
}

#[test]
fn exit_0_on_success() {
    let (code, out, _) = gdua(&["classify", "--f", "h", "--r", "1", "--s", "1", "--gamma", "1", "--json"]);
    assert_eq!(code, 0);
    let c = report(&out).classification.unwrap();
    assert_eq!(c.verdict, "UFD");
    assert!(c.fired_rule.starts_with("ThmA"));
}

#[test]
fn not_noetherian_is_a_successful_answer() {
    let (code, out, _) = gdua(&["classify", "--f", "0", "--r", "0", "--s", "2", "--gamma", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: NOT_NOETHERIAN"));
}

#[test]
fn exit_1_on_usage_and_syntax_errors() {
    assert_eq!(gdua(&["classify", "--r", "1"]).0, 1);
    assert_eq!(gdua(&["no-such-command"]).0, 1);
    let (code, out, _) = gdua(&["classify", "--f", "h^", "--r", "1", "--s", "1", "--json"]);
    assert_eq!(code, 1);
    let e: ErrorReport = serde_json::from_str(out.trim()).unwrap();
    assert_eq!((e.error.kind.as_str(), e.error.offset), ("syntax_error", Some(2)));
    assert_eq!(gdua(&["classify-downup", "--alpha", "1", "--beta", "0"]).0, 1);
    assert_eq!(gdua(&["--help"]).0, 0);
}

#[test]
fn exit_2_on_unsupported_scalars() {
    let (code, out, _) = gdua(&["classify", "--f", "h", "--r", "1+zeta(4)", "--s", "1", "--json"]);
    assert_eq!(code, 2);
    let e: ErrorReport = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(e.error.kind, "unsupported_scalar_form");
    assert_eq!(gdua(&["classify-downup", "--alpha", "0", "--beta", "2"]).0, 2);
}

#[test]
fn exit_3_when_a_check_fails() {
    // d is normal but not q-central in L(0, 1, 2, 1)
    let (code, out, _) = gdua(&["verify", "--f", "0", "--r", "1", "--s", "2", "--gamma", "1"]);
    assert_eq!(code, 3);
    assert!(out.contains("fail     inventory D q-commutes"));
    assert_eq!(gdua(&["verify", "--f", "h", "--r", "zeta(3)", "--s", "1"]).0, 0);
}

#[test]
fn json_is_byte_stable() {
    let args = ["classify", "--f", "h^2 - 1", "--r", "zeta(3)", "--s", "2", "--gamma", "1", "--json"];
    let first = gdua(&args).1;
    for _ in 0..5 {
        assert_eq!(gdua(&args).1, first);
    }
    // and independent of how the input was spelled
    let respelled = gdua(&["classify", "--f", "(h-1)*(h+1)", "--r", "zeta(6)^2", "--s", "4/2", "--gamma", "1", "--json"]).1;
    assert_eq!(respelled, first);
}

#[test]
fn report_round_trips_through_json() {
    let (_, out, _) = gdua(&["cross-check", "--f", "h", "--r", "2", "--s", "3", "--json"]);
    let rep = report(&out);
    assert_eq!(serde_json::from_str::<Report>(&rep.to_json()).unwrap(), rep);
    assert_eq!(rep.agree, Some(true));
}

#[test]
fn downup_accepts_roots_directly() {
    let (code, out, _) = gdua(&["classify-downup", "--r", "2", "--s", "1", "--gamma", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(report(&out).classification.unwrap().verdict, "NOT_UFR");
}

#[test]
fn batch_preserves_order_and_count() {
    let dir = std::env::temp_dir().join(format!("gdua-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.jsonl");
    let mut file = std::fs::File::create(&path).unwrap();
    let scalars = ["1", "-1", "zeta(3)", "2", "1/2", "-2"];
    let mut expected = Vec::new();
    for r in scalars {
        for s in scalars {
            writeln!(file, "{{\"f\": \"h^2 - h\", \"r\": \"{r}\", \"s\": \"{s}\", \"gamma\": 1}}").unwrap();
            expected.push((r, s));
        }
    }
    drop(file);
    let (code, out, err) = gdua(&["cross-check", "--batch", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(err.trim(), "disagreements: 0");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), expected.len());
    for (line, (r, s)) in lines.iter().zip(&expected) {
        let rep = report(line);
        let echo_r = parse_scalar(rep.input.r.as_deref().unwrap()).unwrap();
        let echo_s = parse_scalar(rep.input.s.as_deref().unwrap()).unwrap();
        assert_eq!((echo_r, echo_s), (parse_scalar(r).unwrap(), parse_scalar(s).unwrap()));
    }
    std::fs::remove_dir_all(dir).unwrap();
}

fn arb_root() -> impl Strategy<Value = String> {
    (prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]), prop::option::of(-7i32..=7)).prop_map(|(n, e)| match e {
        Some(e) => format!("zeta({n})^{e}"),
        None => format!("zeta({n})"),
    })
}

fn arb_rational() -> impl Strategy<Value = String> {
    (0u32..=40, prop::option::of(1u32..=9)).prop_map(|(a, b)| match b {
        Some(b) => format!("{a}/{b}"),
        None => a.to_string(),
    })
}

/// `term := rational ('*' root)? | root`
fn arb_scalar_term() -> impl Strategy<Value = String> {
    prop_oneof![
        (arb_rational(), prop::option::of(arb_root())).prop_map(|(q, r)| match r {
            Some(r) => format!("{q}*{r}"),
            None => q,
        }),
        arb_root(),
    ]
}

fn join(first_neg: bool, terms: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, t)) in terms.into_iter().enumerate() {
        match (i, neg || (i == 0 && first_neg)) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t);
    }
    out
}

fn arb_scalar_text() -> impl Strategy<Value = String> {
    (any::<bool>(), prop::collection::vec((any::<bool>(), arb_scalar_term()), 1..4)).prop_map(|(n, ts)| join(n, ts))
}

/// `term := scalar ('*' 'h' ('^' nat)?)? | 'h' ('^' nat)?`, with
/// multi-term scalars parenthesised.
fn arb_poly_term() -> impl Strategy<Value = String> {
    let power = prop::option::of(0u32..=5).prop_map(|e| match e {
        Some(e) => format!("h^{e}"),
        None => "h".to_string(),
    });
    prop_oneof![
        (arb_scalar_term(), prop::option::of(power.clone())).prop_map(|(c, p)| match p {
            Some(p) => format!("{c}*{p}"),
            None => c,
        }),
        (arb_scalar_text(), power.clone()).prop_map(|(c, p)| format!("({c})*{p}")),
        power,
    ]
}

fn arb_poly_text() -> impl Strategy<Value = String> {
    (any::<bool>(), prop::collection::vec((any::<bool>(), arb_poly_term()), 1..5)).prop_map(|(n, ts)| join(n, ts))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn poly_round_trip(text in arb_poly_text()) {
        let p = parse_poly(&text).unwrap();
        let printed = p.to_string();
        prop_assert_eq!(parse_poly(&printed).unwrap(), p, "{} -> {}", text, printed);
    }

    #[test]
    fn scalar_round_trip(text in arb_scalar_text()) {
        let x = parse_scalar(&text).unwrap();
        let printed = x.to_string();
        let y = parse_scalar(&printed).unwrap();
        prop_assert_eq!(&y, &x, "{} -> {}", text, printed);
        prop_assert_eq!(y.to_string(), printed);
    }
}
