use std::path::PathBuf;

use feyncomb_cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{name}.json")).display().to_string()
}

fn cli(args: &[&str]) -> feyncomb_cli::Outcome {
    run(std::iter::once("feyncomb").chain(args.iter().copied()))
}

#[test]
fn help_is_not_an_error() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("selftest"));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(cli(&["poly", "tutte"]).code, 2);
    assert_eq!(cli(&["poly", "tutte", "/no/such/file.json"]).code, 2);
    assert_eq!(cli(&["poly", "br", &fixture("fig4")]).code, 2);
    assert_eq!(cli(&["param", "v", &fixture("fig3")]).code, 2);
    assert_eq!(cli(&["hopf", "coproduct", &fixture("bridge")]).code, 2);
    assert_eq!(cli(&["hopf", "coproduct", &fixture("fig4"), "--model", "gw"]).code, 2);
    assert_eq!(cli(&["param", "integrand", &fixture("fig4"), "--mass2", "one"]).code, 2);
    assert_eq!(cli(&["poly", "tutte", &fixture("fig4"), "--colour"]).code, 2);
}

#[test]
fn malformed_fixture_names_the_field() {
    let dir = std::env::temp_dir().join(format!("feyncomb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"type":"graph","vertices":["v1"],"edges":[{"id":"e1","tail":"v1","head":"v9"}],"external":[]}"#)
        .unwrap();
    let out = cli(&["poly", "tutte", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("v9"), "{}", out.stderr);
}

#[test]
fn polynomial_output_and_json() {
    let out = cli(&["poly", "chromatic", &fixture("fig4"), "--json"]);
    assert_eq!(out.code, 0);
    let (first, rest) = out.stdout.split_once('\n').unwrap();
    assert_eq!(first, "k^2 - k");
    let v: serde_json::Value = serde_json::from_str(rest).unwrap();
    assert_eq!(v["command"], "poly chromatic");
    assert_eq!(v["result"].as_array().unwrap().len(), 2);
}

#[test]
fn checks_print_verdicts() {
    let out = cli(&["param", "ustar", &fixture("interleaved"), "--check-all"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("a.e1*a.e2 + 1/4*theta^2"));
    assert_eq!(out.stdout.lines().filter(|l| l.starts_with("PASS ")).count(), 3);
}

#[test]
fn hopf_output_names_generators() {
    let out = cli(&["hopf", "renorm", &fixture("fig5")]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("Phi(G) - T[Phi(G)] + T[T[Phi(g1)]*Phi(g2)] - T[Phi(g1)]*Phi(g2)"));
    assert_eq!(lines.next(), Some("where"));
    assert!(lines.next().unwrap().starts_with("  G = [e1 e2 e3 e4 e5 e6]"));
    let rbar = cli(&["hopf", "rbar", &fixture("fig5"), "--check"]);
    assert_eq!(rbar.stdout.lines().next(), Some("Phi(G) - T[Phi(g1)]*Phi(g2)"));
    assert_eq!(rbar.code, 0);
}
