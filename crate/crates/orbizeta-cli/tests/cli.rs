use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbizeta")).args(args).env("ORBIZETA_THREADS", "2").output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn triangle_torsion_both_methods() {
    let out = run(&["torsion", "--preset", "triangle-(2,3,7)-sl2", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("10.0978"), "{text}");
}

#[test]
fn trivial_rep_is_not_acyclic() {
    let out = run(&["torsion", "--preset", "trivial-(1;2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ruelle0"));
    let out = run(&["ruelle0", "--preset", "trivial-(1;2)"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_inputs_exit_two() {
    assert_eq!(run(&["torsion", "--preset", "no-such-preset"]).status.code(), Some(2));
    assert_eq!(run(&["torsion", "--rep", "/nonexistent/rep.json"]).status.code(), Some(2));
    assert_eq!(run(&["elliptic-check", "--preset", "trivial-(1;2)", "--eps", "0.5"]).status.code(), Some(2));
}

#[test]
fn integer_check_reports_minus_one() {
    let out = run(&["integer-check", "--preset", "trivial-(0;2,3,7)", "--m", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["nearest"], -1);
}

#[test]
fn spectrum_cache_feeds_zeta() {
    let dir = std::env::temp_dir().join(format!("orbizeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cache = dir.join("sp.json");
    let cache = cache.to_str().unwrap();
    let out = run(&["--out", cache, "spectrum", "--preset", "triangle-(2,3,7)", "--max-length", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for what in ["Z", "R", "L", "l"] {
        let out = run(&["zeta", "--preset", "triangle-(2,3,7)-sl2", "--spectrum", cache, "--s", "3,0", "--what", what]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(json(&out)["value"][0].as_f64().unwrap().is_finite());
    }
    let out = run(&["zeta", "--preset", "triangle-(2,3,7)-sl2", "--spectrum", cache, "--s", "0.5,0"]);
    assert_ne!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn suite_fails_with_tight_comparison() {
    let out = run(&["suite", "--filter", "torsion", "--comparison-tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}
