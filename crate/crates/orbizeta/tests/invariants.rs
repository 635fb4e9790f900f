use orbizeta::json::{rep_from_str, rep_to_value};
use orbizeta::linalg::c;
use orbizeta::representation::{admissible_lambdas, catalog_rep, random_rep, validate, DEFAULT_TOL};
use orbizeta::torsion::{assembled_torsion, closed_form_torsion, sign_distance};
use orbizeta::zeta_contour::{eta, ruelle_at_zero};
use orbizeta::orbifold::parse_signature_label;
use proptest::prelude::*;

#[test]
fn json_round_trip_through_file() {
    let sig = parse_signature_label("(1;3)").unwrap();
    let lam = admissible_lambdas(&sig, 2)[0];
    let rep = random_rep(&sig, 2, lam, 7).unwrap();
    let path = std::env::temp_dir().join(format!("orbizeta-rep-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&rep_to_value(&rep)).unwrap()).unwrap();
    let back = rep_from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(rep, back);
    assert!(validate(&back, &sig, DEFAULT_TOL).unwrap().passed);
}

#[test]
fn triangle_torsion_four_ways() {
    let (rep, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
    let a = closed_form_torsion(&rep, &sig).unwrap().value;
    let b = assembled_torsion(&rep, &sig).unwrap().value;
    let r = ruelle_at_zero(&rep, &sig).unwrap().leading_coefficient;
    let e = eta(c(1.0, 0.0), &rep, &sig).unwrap().inv();
    for v in [b, r, e] {
        assert!(sign_distance(a, v) < 1e-9, "{a} vs {v}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn random_reps_agree_and_conjugation_invariant(seed in 0u64..10_000, pick in 0usize..4) {
        let label = ["(1;2)", "(1;3)", "(2;2,2)", "(2;)"][pick];
        let sig = parse_signature_label(label).unwrap();
        let lams = admissible_lambdas(&sig, 2);
        prop_assume!(!lams.is_empty());
        let lam = lams[seed as usize % lams.len()];
        let rep = random_rep(&sig, 2, lam, seed).unwrap();
        let a = closed_form_torsion(&rep, &sig).unwrap().value;
        let b = assembled_torsion(&rep, &sig).unwrap().value;
        prop_assert!(sign_distance(a, b) < 1e-6);
        let p = orbizeta::linalg::CMat::from_row_slice(2, 2, &[c(1.0, 0.3), c(0.2, 0.0), c(-0.4, 0.1), c(0.9, -0.2)]);
        let conj = rep.conjugate(&p);
        let a2 = closed_form_torsion(&conj, &sig).unwrap().value;
        prop_assert!(sign_distance(a, a2) < 1e-6);
    }
}
