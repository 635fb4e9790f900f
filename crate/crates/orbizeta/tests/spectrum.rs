use orbizeta::groups::standard_group;
use orbizeta::linalg::c;
use orbizeta::representation::catalog_rep;
use orbizeta::spectrum::{
    canonical_t_exponent, cached_spectrum, enumerate_spectrum, inverse_word, truncated_log_derivative, truncated_ruelle,
    truncated_selberg, Spectrum, Truncation,
};

#[test]
fn triangle_spectrum_stable_in_word_bound() {
    let grp = standard_group("triangle-(2,3,7)").unwrap();
    let a = enumerate_spectrum(&grp, 4.0, 30).unwrap();
    let b = enumerate_spectrum(&grp, 4.0, 40).unwrap();
    let cut = a.certified_length.min(b.certified_length);
    let la: Vec<f64> = a.classes.iter().filter(|x| x.length <= cut).map(|x| x.length).collect();
    let lb: Vec<f64> = b.classes.iter().filter(|x| x.length <= cut).map(|x| x.length).collect();
    assert_eq!(la.len(), lb.len());
    for (x, y) in la.iter().zip(&lb) {
        assert!((x - y).abs() < 1e-9);
    }
    assert!((a.shortest_length().unwrap() - 0.983_99).abs() < 1e-4);
}

#[test]
fn inverse_words_have_equal_length() {
    let grp = standard_group("genus2-octagon").unwrap();
    let spec = enumerate_spectrum(&grp, 5.0, 40).unwrap();
    for cl in spec.primes().take(40) {
        let m = grp.matrix_of(cl.prime_word());
        let mi = grp.matrix_of(&inverse_word(cl.prime_word()));
        assert!(((m[(0, 0)] + m[(1, 1)]).abs() - (mi[(0, 0)] + mi[(1, 1)]).abs()).abs() < 1e-9);
    }
}

#[test]
fn powers_carry_multiplicity_and_double_exponent() {
    let grp = standard_group("triangle-(2,3,7)").unwrap();
    let spec = enumerate_spectrum(&grp, 4.0, 40).unwrap();
    for cl in spec.classes.iter().filter(|c| !c.is_prime()) {
        let p = cl.prime_word();
        let k = cl.word.len() / p.len();
        assert_eq!(cl.multiplicity as usize, k);
        assert_eq!(cl.word, p.repeat(k));
        let tp = canonical_t_exponent(p, &grp).unwrap();
        assert_eq!(cl.t_exponent, k as i64 * tp);
    }
}

#[test]
fn cache_round_trip_and_format_check() {
    let dir = std::env::temp_dir().join(format!("orbizeta-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.json");
    let grp = standard_group("triangle-(2,3,7)").unwrap();
    let a = cached_spectrum(&path, &grp, 3.5, 30).unwrap();
    let b = Spectrum::load(&path).unwrap();
    assert_eq!(a.classes.len(), b.classes.len());
    for (x, y) in a.classes.iter().zip(&b.classes) {
        assert_eq!(x.word, y.word);
        assert_eq!(x.length, y.length);
    }
    let text = std::fs::read_to_string(&path).unwrap().replace("orbizeta-spectrum-1", "other-format");
    assert!(Spectrum::from_json(&text).is_err());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ruelle_is_selberg_ratio_and_log_derivative_matches() {
    let (rep, _) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
    let grp = standard_group("triangle-(2,3,7)").unwrap();
    let spec = enumerate_spectrum(&grp, 4.5, 40).unwrap();
    let tr = Truncation::new(4.5);
    let s = c(3.0, 0.7);
    let z0 = truncated_selberg(s, &rep, &spec, &tr).unwrap();
    let z1 = truncated_selberg(s + 1.0, &rep, &spec, &tr).unwrap();
    let r = truncated_ruelle(s, &rep, &spec, &tr).unwrap();
    assert!((r - z0 / z1).norm() < 1e-10 * r.norm());
    let h = 1e-5;
    let fd = (truncated_selberg(s + h, &rep, &spec, &tr).unwrap().ln() - truncated_selberg(s - h, &rep, &spec, &tr).unwrap().ln())
        / (2.0 * h);
    let l = truncated_log_derivative(s, &rep, &spec, &tr).unwrap();
    assert!((l - fd).norm() < 1e-6 * l.norm().max(1.0));
}

#[test]
fn products_refuse_outside_convergence_domain() {
    let (rep, _) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
    let grp = standard_group("triangle-(2,3,7)").unwrap();
    let spec = enumerate_spectrum(&grp, 4.0, 40).unwrap();
    assert!(truncated_selberg(c(0.5, 0.0), &rep, &spec, &Truncation::new(4.0)).is_err());
}
