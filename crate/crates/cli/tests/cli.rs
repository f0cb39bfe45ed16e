use std::process::Command;

use polrep::current::{apply, GeneratorSymbol, WeightVector};
use polrep::sympoly::graded_basis;
use polrep::Composition;
use polrep_cli::{eval, parse_expr, parse_poly, render, run, Outcome};
use proptest::prelude::*;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("polrep").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout.trim_end().to_string()
}

fn nu(v: &[u32]) -> Composition {
    Composition::from(v)
}

#[test]
fn first_example_by_every_method() {
    for method in ["both", "linear", "formula"] {
        let got = stdout(&[
            "coinv-dim",
            "--lambda",
            "5,2,1,1",
            "--nu",
            "3,1,2,3",
            "--method",
            method,
        ]);
        assert_eq!(got, "[[0,1],[1,2],[2,4],[3,3],[4,2]]");
    }
}

#[test]
fn weight_space_is_the_multinomial() {
    let got = stdout(&["weyl-dim", "--lambda", "5,0,0", "--nu", "3,1,1"]);
    assert_eq!(got, "[[0,1],[1,2],[2,3],[3,4],[4,4],[5,3],[6,2],[7,1]]");
    let coinv = stdout(&["coinv-dim", "--lambda", "5,0,0", "--nu", "3,1,1"]);
    assert_eq!(got, coinv);
}

#[test]
fn kostka_commands() {
    assert_eq!(
        stdout(&["kostka", "--lambda", "3,1,1", "--mu", "1,1,1,1,1"]),
        "[[3,1],[4,1],[5,2],[6,1],[7,1]]"
    );
    assert_eq!(
        stdout(&[
            "kostka",
            "--lambda",
            "3,1,1",
            "--mu",
            "1,1,1,1,1",
            "--number"
        ]),
        "6"
    );
}

#[test]
fn act_and_theta() {
    let got = stdout(&[
        "act", "--gen", "F", "--i", "1", "--j", "0", "--nu", "2,0", "--poly", "1",
    ]);
    assert_eq!(got, r#"{"nu":"1,1","poly":"-X(1) + X(2)"}"#);
    let got = stdout(&[
        "act", "--gen", "E", "--i", "1", "--j", "0", "--nu", "2,0", "--poly", "1",
    ]);
    assert_eq!(got, r#"{"nu":null,"poly":"0"}"#);
    let got = stdout(&[
        "theta",
        "bubble",
        "--i",
        "1",
        "--nu",
        "1,1",
        "--r",
        "1",
        "--orientation",
        "cw",
    ]);
    assert_eq!(got, r#"{"nu":"1,1","poly":"X(1) - X(2)"}"#);
    let got = stdout(&[
        "theta",
        "bubble",
        "--i",
        "1",
        "--nu",
        "1,1",
        "--r",
        "-1",
        "--orientation",
        "ccw",
    ]);
    assert_eq!(got, r#"{"nu":"1,1","poly":"0"}"#);
    let got = stdout(&["theta", "pi", "--i", "1", "--j", "0", "--nu", "3,1"]);
    assert_eq!(got, r#"{"nu":"3,1","poly":"2"}"#);
}

#[test]
fn weyl_char_formats() {
    let json = stdout(&["weyl-char", "--lambda", "1,1,0"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["lambda"], "1,1,0");
    assert_eq!(doc["entries"].as_array().unwrap().len(), 3);
    assert_eq!(doc["entries"][0]["dim"], serde_json::json!([[0, 1]]));
    let csv = stdout(&["weyl-char", "--lambda", "1,1,0", "--csv"]);
    assert!(csv.lines().count() > 1);
    assert_eq!(
        cli(&["weyl-char", "--lambda", "1,1,0", "--csv", "--json"]).code,
        2
    );
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["kostka", "--lambda", "1,2", "--mu", "2,1"],
        &[
            "coinv-dim",
            "--lambda",
            "2,1",
            "--nu",
            "1,1",
            "--method",
            "both",
        ],
        &[
            "act", "--gen", "E", "--i", "1", "--j", "0", "--nu", "2,1", "--poly", "X(1)",
        ],
        &[
            "act", "--gen", "E", "--i", "2", "--j", "0", "--nu", "2,1", "--poly", "1",
        ],
        &[
            "act", "--gen", "E", "--i", "1", "--j", "0", "--nu", "2,1", "--poly", "e(1,1",
        ],
        &["verify", "--suite", "nope", "--n", "2", "--N", "2"],
    ];
    for args in cases {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn small_verify_run_passes() {
    let out = cli(&[
        "verify", "--suite", "all", "--n", "2", "--N", "3", "--cutoff", "3", "--jmax", "2",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    let suites: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["suite"].as_str().unwrap())
        .collect();
    assert_eq!(suites, ["current", "theta", "coinv", "kostka", "weyl"]);
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_polrep");
    let args = [
        "verify", "--suite", "current", "--n", "3", "--N", "2", "--cutoff", "2", "--jmax", "1",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(bin)
        .args(["weyl-char", "--lambda", "2,1,0"])
        .output()
        .unwrap();
    let d = Command::new(bin)
        .args(["weyl-char", "--lambda", "2,1,0"])
        .output()
        .unwrap();
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polrep");
    let ok = Command::new(bin)
        .args(["kostka", "--lambda", "2,1", "--mu", "1,1,1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin)
        .args(["kostka", "--lambda", "2,1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn parse_poly_examples() {
    let p = parse_poly("e(1,1)", &nu(&[2, 1])).unwrap();
    assert_eq!(render(&p.poly), "X(1) + X(2)");
    assert!(parse_poly("X(1)*X(2) - e(2,1)", &nu(&[2, 1]))
        .unwrap()
        .poly
        .is_zero());
    assert!(parse_poly("X(1)", &nu(&[2, 1])).is_err());
    assert!(parse_poly("X3 + X(1)*X2", &nu(&[2, 1])).is_ok());
}

fn round_trip(text: &str, nu: &Composition) {
    let p = eval(&parse_expr(text).unwrap(), nu).unwrap();
    let back = eval(&parse_expr(&render(&p)).unwrap(), nu).unwrap();
    assert_eq!(back, p, "{text} -> {}", render(&p));
}

#[test]
fn emitted_polynomials_round_trip() {
    for v in [vec![2, 1, 1], vec![1, 2, 1], vec![0, 2, 2]] {
        let nu = nu(&v);
        for d in 0..=2 {
            for b in graded_basis(&nu, d) {
                for i in 1..3 {
                    for j in 0..2 {
                        for g in [
                            GeneratorSymbol::e(i, j),
                            GeneratorSymbol::f(i, j),
                            GeneratorSymbol::h(i, j),
                        ] {
                            let out = apply(g, &WeightVector::new(nu.clone(), b.poly.clone()));
                            if let Some(tgt) = &out.nu {
                                let text = render(&out.p);
                                assert_eq!(parse_poly(&text, tgt).unwrap().poly, out.p, "{text}");
                            }
                        }
                    }
                }
            }
        }
    }
}

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        (-5i64..=5).prop_map(|c| format!("({c})")),
        (1usize..=4).prop_map(|k| format!("X({k})")),
        (1usize..=4).prop_map(|k| format!("X{k}")),
        (0u32..=3, 1usize..=2, 0usize..3)
            .prop_map(|(r, b, s)| format!("{}({r},{b})", ["e", "h", "p"][s])),
    ]
}

fn expr() -> impl Strategy<Value = String> {
    atom().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner, 0u32..=2).prop_map(|(a, k)| format!("({a})^{k}")),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(text in expr()) {
        round_trip(&text, &nu(&[2, 2]));
    }
}
