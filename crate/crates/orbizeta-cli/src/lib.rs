//! Verification suites behind `orbizeta suite` and the acceptance test target.
//!
//! Each criterion returns one [`CriterionResult`] with the worst observed deviation and the
//! tolerance it was held to.

use std::f64::consts::PI;
use std::time::Instant;

use orbizeta::groups::{long_relator, standard_group};
use orbizeta::linalg::{c, C64, ONE};
use orbizeta::representation::{admissible_lambdas, catalog_rep, fixed_decomposition, random_rep, Representation};
use orbizeta::spectrum::{enumerate_spectrum, translation_number, truncated_log_derivative, truncated_ruelle, truncated_selberg, Spectrum, Truncation};
use orbizeta::torsion::{assembled_torsion, closed_form_torsion, sign_distance};
use orbizeta::trace::{geometric_side, geometric_side_with_weight};
use orbizeta::zeta_contour::{
    elliptic_asymptotic_fit, elliptic_closed_form, elliptic_contribution, eta, eta_with_radius, identity_closed_form, identity_unit,
    integer_check, multiplicity_rhs, ruelle_at_zero,
};
use orbizeta::{new_signature, Error, OrbifoldSignature, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

pub mod tol {
    pub const AGREEMENT_REL: f64 = 1e-6;
    pub const MODULUS: f64 = 1e-7;
    pub const ARGUMENT: f64 = 1e-6;
    pub const SLOPE_REL: f64 = 0.01;
    pub const PREFACTOR_REL: f64 = 1e-4;
    pub const RUELLE_VALUE: f64 = 1e-8;
    pub const INTEGER: f64 = 1e-8;
    pub const REFLECTION: f64 = 1e-8;
    pub const RADIUS: f64 = 1e-9;
    pub const SHORTEST: f64 = 1e-9;
    pub const SQUARE: f64 = 1e-10;
    pub const TAIL: f64 = 1e-3;
    pub const LOG_DERIVATIVE: f64 = 1e-6;
    pub const TRACE_IMAG: f64 = 1e-6;
    pub const WEIGHT_SHIFT: f64 = 1e-6;
}

/// Signatures used for random representations in the agreement checks.
pub const RANDOM_SIGNATURES: [(i64, &[i64]); 4] = [(1, &[2]), (1, &[3]), (2, &[2, 2]), (2, &[])];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub filter: Option<String>,
    /// Replaces the torsion agreement tolerance.
    pub comparison_tol: Option<f64>,
    pub seed: u64,
    pub random_reps: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { filter: None, comparison_tol: None, seed: 0, random_reps: 50 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    /// Worst deviation seen, in the units of `tol`.
    pub worst: f64,
    pub tol: f64,
    pub cases: usize,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} [{}] criterion {:>2} {:<28} worst {:.3e} tol {:.1e} cases {:>4}  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.id,
            self.name,
            self.worst,
            self.tol,
            self.cases,
            self.detail
        )
    }
}

/// Running maximum of a deviation together with the case that produced it.
struct Worst {
    value: f64,
    case: String,
    cases: usize,
    errors: Vec<String>,
}

impl Worst {
    fn new() -> Self {
        Worst { value: 0.0, case: String::new(), cases: 0, errors: Vec::new() }
    }

    fn see(&mut self, v: f64, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !(v <= self.value) {
            self.value = if v.is_nan() { f64::INFINITY } else { v };
            self.case = case();
        }
    }

    fn error(&mut self, case: String, e: &Error) {
        self.cases += 1;
        self.value = f64::INFINITY;
        self.errors.push(format!("{case}: {e}"));
    }

    fn finish(self, id: u32, suite: &'static str, name: &'static str, tol: f64, start: Instant) -> CriterionResult {
        let mut detail = if self.case.is_empty() { String::new() } else { format!("worst at {}", self.case) };
        if let Some(e) = self.errors.first() {
            detail = format!("{} error(s), first: {e}", self.errors.len());
        }
        CriterionResult {
            id,
            suite,
            name,
            passed: self.errors.is_empty() && self.value <= tol,
            worst: self.value,
            tol,
            cases: self.cases,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

fn arg_distance(a: C64, b: C64, period: f64) -> f64 {
    let d = (a.arg() - b.arg()).rem_euclid(period);
    d.min(period - d)
}

/// Random representations over the signatures in [`RANDOM_SIGNATURES`], λ cycling through the
/// admissible roots of unity other than 1.
pub fn random_reps(sig: &OrbifoldSignature, count: usize, seed: u64) -> Vec<(String, Result<Representation>)> {
    let dims: Vec<usize> = (1..=3).filter(|&n| !admissible_lambdas(sig, n).is_empty()).collect();
    (0..count)
        .map(|k| {
            let n = dims[k % dims.len()];
            let lams = admissible_lambdas(sig, n);
            let lambda = lams[(k / dims.len()) % lams.len()];
            let s = seed.wrapping_mul(1_000_003).wrapping_add(k as u64);
            let label = format!("{sig} n={n} λ=e^{{{:.4}i}} seed={s}", lambda.arg());
            (label, random_rep(sig, n, lambda, s))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct AgreementReport {
    pub closed_form: [f64; 2],
    pub assembled: [f64; 2],
    pub ruelle_at_zero: [f64; 2],
    pub inverse_eta_at_one: [f64; 2],
    pub m: f64,
    /// Largest relative distance between any two values, up to sign.
    pub max_relative_disagreement: f64,
    pub tol: f64,
    pub passed: bool,
    pub sign_ambiguous: bool,
}

pub fn verify_agreement(rep: &Representation, sig: &OrbifoldSignature, tol: f64) -> Result<AgreementReport> {
    let closed = closed_form_torsion(rep, sig)?.value;
    let assembled = assembled_torsion(rep, sig)?.value;
    let r0 = ruelle_at_zero(rep, sig)?;
    let inv_eta = eta(ONE, rep, sig)?.inv();
    let vals = [closed, assembled, r0.leading_coefficient, inv_eta];
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in i + 1..4 {
            worst = worst.max(sign_distance(vals[i], vals[j]));
        }
    }
    let p = |z: C64| [z.re, z.im];
    Ok(AgreementReport {
        closed_form: p(closed),
        assembled: p(assembled),
        ruelle_at_zero: p(r0.leading_coefficient),
        inverse_eta_at_one: p(inv_eta),
        m: r0.m,
        max_relative_disagreement: worst,
        tol,
        passed: worst <= tol,
        sign_ambiguous: true,
    })
}

// ---------------------------------------------------------------------------------------------
// Criteria

pub fn torsion_agreement(cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let tol = cfg.comparison_tol.unwrap_or(tol::AGREEMENT_REL);
    let mut w = Worst::new();
    let mut check = |label: String, rep: Result<Representation>, sig: &OrbifoldSignature| match rep
        .and_then(|r| verify_agreement(&r, sig, tol))
    {
        Ok(rep) => w.see(rep.max_relative_disagreement, || label),
        Err(e) => w.error(label, &e),
    };
    for preset in ["triangle-(2,3,7)-sl2", "genus2-octagon-sl2"] {
        match catalog_rep(preset) {
            Ok((rep, sig)) => check(preset.to_string(), Ok(rep), &sig),
            Err(e) => check(preset.to_string(), Err(e), &new_signature(2, &[]).unwrap()),
        }
    }
    for (g, nu) in RANDOM_SIGNATURES {
        let sig = new_signature(g, nu).unwrap();
        for (label, rep) in random_reps(&sig, cfg.random_reps, cfg.seed) {
            check(label, rep, &sig);
        }
    }
    w.finish(1, "torsion", "torsion-agreement", tol, start)
}

pub fn identity_contour(_: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    for m in [0.1, 0.25, 0.5, 0.75, 1.0] {
        match identity_unit(m, orbizeta::zeta_contour::DEFAULT_RADIUS) {
            Ok(v) => {
                let r = identity_closed_form(m);
                let dev = ((v.norm() - r.norm()).abs() / tol::MODULUS).max(arg_distance(v, r, PI) / tol::ARGUMENT);
                w.see(dev, || format!("m={m}"));
            }
            Err(e) => w.error(format!("m={m}"), &e),
        }
    }
    w.finish(2, "contour", "identity-integral", 1.0, start)
}

pub fn elliptic_contour(cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6c656d6d61);
    let mut done = 0;
    let mut attempts = 0;
    while done < 20 && attempts < 400 {
        attempts += 1;
        let nu = rng.random_range(2..=12u32);
        let n = rng.random_range(1..=4usize);
        let sig = new_signature(1, &[nu as i64]).unwrap();
        let lams = admissible_lambdas(&sig, n);
        if lams.is_empty() {
            continue;
        }
        let lambda = lams[rng.random_range(0..lams.len())];
        let seed = rng.random::<u64>();
        let Ok(rep) = random_rep(&sig, n, lambda, seed) else { continue };
        done += 1;
        let label = format!("ν={nu} n={n} λ=e^{{{:.4}i}} seed={seed}", lambda.arg());
        let m = rep.weight_m().unwrap();
        match (elliptic_contribution(&rep, &sig, 0, m), elliptic_closed_form(&rep, &sig, 0)) {
            (Ok(v), Ok(r)) => {
                let dev = ((v.norm() - r.norm()).abs() / r.norm() / tol::MODULUS)
                    .max(arg_distance(v, r, PI / nu as f64) / tol::ARGUMENT);
                w.see(dev, || label);
            }
            (Err(e), _) | (_, Err(e)) => w.error(label, &e),
        }
    }
    if done < 20 {
        w.errors.push(format!("only {done} random cases could be built"));
    }
    w.finish(3, "contour", "elliptic-factor", 1.0, start)
}

/// Weight-zero representations for the ε-asymptotics: trivial ones and random ones with λ = 1.
pub fn weight_zero_reps(seed: u64) -> Vec<(String, Representation, OrbifoldSignature)> {
    let mut out = Vec::new();
    for label in ["(1;2)", "(1;3)", "(0;2,3,7)", "(2;2,5)"] {
        let sig = orbizeta::orbifold::parse_signature_label(label).unwrap();
        for n in [1, 2] {
            out.push((format!("trivial {label} n={n}"), Representation::trivial(&sig, n), sig.clone()));
        }
    }
    for (g, nu) in [(1, vec![3]), (1, vec![4]), (2, vec![2, 2]), (1, vec![5, 3])] {
        let sig = new_signature(g, &nu).unwrap();
        for n in [2, 3] {
            let s = seed.wrapping_add(17 * n as u64 + nu[0] as u64);
            if let Ok(rep) = random_rep(&sig, n, ONE, s) {
                out.push((format!("random {sig} n={n} seed={s}"), rep, sig.clone()));
            }
        }
    }
    out
}

pub fn elliptic_asymptotics(cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    for (label, rep, sig) in weight_zero_reps(cfg.seed) {
        for (j, &nu) in sig.cone_orders().iter().enumerate() {
            let case = format!("{label} cone {}", j + 1);
            match elliptic_asymptotic_fit(&rep, &sig, j, [1e-3, 1e-4]) {
                Ok(fit) => {
                    let scale = fit.expected_slope.abs().max(1.0 / nu as f64);
                    let dev = ((fit.slope - fit.expected_slope).abs() / scale / tol::SLOPE_REL)
                        .max((fit.prefactor_ratio - 1.0).abs() / tol::PREFACTOR_REL);
                    w.see(dev, || case);
                }
                Err(e) => w.error(case, &e),
            }
        }
    }
    w.finish(4, "contour", "elliptic-asymptotics", 1.0, start)
}

pub fn ruelle_leading_term(_: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    let (rep, sig) = catalog_rep("trivial-(1;2)").unwrap();
    match ruelle_at_zero(&rep, &sig) {
        Ok(r) if r.vanishing_order == 0 => w.see(sign_distance(r.leading_coefficient, c(2.0, 0.0)) * 2.0, || "(1;2)".into()),
        Ok(r) => w.error("(1;2)".into(), &Error::Input(format!("order {}", r.vanishing_order))),
        Err(e) => w.error("(1;2)".into(), &e),
    }
    for g in 2..=5i64 {
        let sig = new_signature(g, &[]).unwrap();
        let rep = Representation::trivial(&sig, 1);
        match ruelle_at_zero(&rep, &sig) {
            Ok(r) => w.see(if r.vanishing_order == 2 * g - 2 { 0.0 } else { f64::INFINITY }, || format!("({g};)")),
            Err(e) => w.error(format!("({g};)"), &e),
        }
    }
    w.finish(5, "zeta-at-zero", "ruelle-leading-term", tol::RUELLE_VALUE, start)
}

pub fn integrality(cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    let mut failures = Vec::new();
    let mut check = |label: String, rep: &Representation, sig: &OrbifoldSignature, expect: Option<i64>| {
        let m = match rep.weight_m() {
            Ok(m) => m,
            Err(e) => return w.error(label, &e),
        };
        let chk = integer_check(multiplicity_rhs(rep, sig, m), tol::INTEGER);
        let off = expect.is_some_and(|e| e != chk.nearest);
        w.see(if off { f64::INFINITY } else { chk.residual }, || label);
    };
    for preset in ["trivial-(0;2,3,7)", "trivial-(1;2)", "trivial-(2;)", "triangle-(2,3,7)-sl2", "genus2-octagon-sl2"] {
        let (rep, sig) = catalog_rep(preset).unwrap();
        check(preset.into(), &rep, &sig, (preset == "trivial-(0;2,3,7)").then_some(-1));
    }
    for (g, nu) in [(1, &[2][..]), (1, &[3]), (2, &[2, 2])] {
        let sig = new_signature(g, nu).unwrap();
        for (label, rep) in random_reps(&sig, cfg.random_reps, cfg.seed.wrapping_add(7)) {
            match rep {
                Ok(rep) => check(label, &rep, &sig, None),
                Err(e) => failures.push((label, e)),
            }
        }
    }
    for (label, e) in failures {
        w.error(label, &e);
    }
    w.finish(6, "multiplicity", "integrality", tol::INTEGER, start)
}

pub fn functional_equation(cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    let (sl2, sl2_sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
    let sig12 = new_signature(1, &[2]).unwrap();
    let mut reps = vec![("triangle-(2,3,7)-sl2".to_string(), sl2, sl2_sig)];
    for (label, rep) in random_reps(&sig12, 2, cfg.seed.wrapping_add(11)) {
        if let Ok(rep) = rep {
            reps.push((label, rep, sig12.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7265666c);
    for (label, rep, sig) in &reps {
        match eta(c(0.5, 0.0), rep, sig) {
            Ok(v) => w.see(if v == ONE { 0.0 } else { f64::INFINITY }, || format!("{label} s=1/2")),
            Err(e) => w.error(label.clone(), &e),
        }
        let mut done = 0;
        while done < 20 {
            let s = c(rng.random_range(-1.0..2.0), rng.random_range(-1.5..1.5));
            match (eta(s, rep, sig), eta(ONE - s, rep, sig)) {
                (Ok(a), Ok(b)) => {
                    done += 1;
                    w.see((a * b - ONE).norm() / tol::REFLECTION, || format!("{label} s={s}"));
                }
                (Err(Error::PoleOnEndpoint(_)), _) | (_, Err(Error::PoleOnEndpoint(_))) => continue,
                (Err(e), _) | (_, Err(e)) => {
                    w.error(format!("{label} s={s}"), &e);
                    break;
                }
            }
        }
        match (eta_with_radius(ONE, rep, sig, 0.02), eta_with_radius(ONE, rep, sig, 0.05)) {
            (Ok(a), Ok(b)) => w.see((a - b).norm() / b.norm() / tol::RADIUS, || format!("{label} radius")),
            (Err(e), _) | (_, Err(e)) => w.error(label.clone(), &e),
        }
    }
    w.finish(7, "contour", "functional-equation", 1.0, start)
}

/// Octagon spectrum shared by the geodesic, product and trace criteria.
pub const OCTAGON_LENGTH: f64 = 6.5;
pub const TRIANGLE_LENGTH: f64 = 5.0;
pub const MAX_WORD: usize = 40;

pub fn octagon_spectrum() -> Result<Spectrum> {
    enumerate_spectrum(&standard_group("genus2-octagon")?, OCTAGON_LENGTH, MAX_WORD)
}

pub fn triangle_spectrum() -> Result<Spectrum> {
    enumerate_spectrum(&standard_group("triangle-(2,3,7)")?, TRIANGLE_LENGTH, MAX_WORD)
}

pub fn geodesics(_: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    match octagon_spectrum() {
        Ok(spec) => {
            let l0 = 2.0 * (1.0 + 2f64.sqrt()).acosh();
            w.see((spec.shortest_length().unwrap() - l0).abs() / tol::SHORTEST, || "shortest".into());
            let mut squares = 0;
            for cl in spec.classes.iter().filter(|cl| cl.multiplicity == 2) {
                let prime = spec.classes.iter().find(|p| p.word == cl.prime_word());
                let dev = prime.map_or(f64::INFINITY, |p| (cl.length - 2.0 * p.length).abs() / tol::SQUARE);
                squares += 1;
                w.see(dev, || format!("square of {:?}", cl.prime_word()));
            }
            if squares == 0 {
                w.errors.push("no squares enumerated".into());
            }
        }
        Err(e) => w.error("genus2-octagon".into(), &e),
    }
    let relators: Vec<(&str, Vec<i32>, f64)> = vec![
        ("genus2-octagon", long_relator(2, 0), 2.0),
        ("triangle-(2,3,7)", long_relator(0, 3), 1.0),
        ("triangle-(2,3,7)", vec![1; 2], 1.0),
        ("triangle-(2,3,7)", vec![2; 3], 1.0),
        ("triangle-(2,3,7)", vec![3; 7], 1.0),
        ("triangle-(3,3,4)", long_relator(0, 3), 1.0),
    ];
    for (preset, word, expect) in relators {
        let grp = standard_group(preset).unwrap();
        let tau = translation_number(&word, &grp) / PI;
        // Exact agreement up to rounding of the circle-map arithmetic.
        w.see(if (tau - expect).abs() < 1e-9 { 0.0 } else { f64::INFINITY }, || format!("{preset} {word:?}"));
    }
    w.finish(8, "geodesics", "length-spectrum", 1.0, start)
}

pub fn truncated_products(_: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    let spec = match octagon_spectrum() {
        Ok(s) => s,
        Err(e) => {
            w.error("genus2-octagon".into(), &e);
            return w.finish(9, "products", "truncated-products", 1.0, start);
        }
    };
    let s = c(3.0, 0.0);
    for preset in ["trivial-(2;)", "genus2-octagon-sl2"] {
        let (rep, _) = catalog_rep(preset).unwrap();
        let run = || -> Result<(f64, f64)> {
            let lo = Truncation::new(OCTAGON_LENGTH - 1.0);
            let hi = Truncation::new(OCTAGON_LENGTH);
            let z_lo = truncated_selberg(s, &rep, &spec, &lo)?;
            let z_hi = truncated_selberg(s, &rep, &spec, &hi)?;
            let tail = (z_hi - z_lo).norm() / z_hi.norm();
            let h = 1e-5;
            let fd = (truncated_selberg(s + h, &rep, &spec, &hi)?.ln() - truncated_selberg(s - h, &rep, &spec, &hi)?.ln()) / (2.0 * h);
            let l = truncated_log_derivative(s, &rep, &spec, &hi)?;
            let r = truncated_ruelle(s, &rep, &spec, &hi)?;
            let ratio = z_hi / truncated_selberg(s + 1.0, &rep, &spec, &hi)?;
            let alg = (ratio - r).norm() / r.norm();
            Ok(((tail / tol::TAIL).max(alg / 1e-12), (fd - l).norm() / l.norm().max(1.0) / tol::LOG_DERIVATIVE))
        };
        match run() {
            Ok((a, b)) => w.see(a.max(b), || preset.into()),
            Err(e) => w.error(preset.into(), &e),
        }
    }
    w.finish(9, "products", "truncated-products", 1.0, start)
}

pub fn trace_formula(_: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let mut w = Worst::new();
    let cases = [("triangle-(2,3,7)-sl2", triangle_spectrum(), TRIANGLE_LENGTH), ("genus2-octagon-sl2", octagon_spectrum(), OCTAGON_LENGTH)];
    for (preset, spec, cutoff) in cases {
        let (rep, sig) = catalog_rep(preset).unwrap();
        let spec = match spec {
            Ok(s) => s,
            Err(e) => {
                w.error(preset.into(), &e);
                continue;
            }
        };
        let m = rep.weight_m().unwrap();
        for t in [0.5, 1.0, 2.0] {
            let run = || -> Result<(f64, f64)> {
                let g = geometric_side(t, &rep, &sig, Some(&spec), cutoff)?;
                let shifted = geometric_side_with_weight(t, &rep, &sig, Some(&spec), cutoff, m + 2.0)?;
                let expect = multiplicity_rhs(&rep, &sig, m) * ((m + 1.0).powi(2) * t / 4.0).exp();
                let diff = shifted.total - g.total;
                Ok((g.total.im.abs() / tol::TRACE_IMAG, (diff - expect).norm() / expect.norm().max(1.0) / tol::WEIGHT_SHIFT))
            };
            match run() {
                Ok((a, b)) => w.see(a.max(b), || format!("{preset} t={t}")),
                Err(e) => w.error(format!("{preset} t={t}"), &e),
            }
        }
    }
    let (rep, sig) = catalog_rep("trivial-(0;2,3,7)").unwrap();
    for t in [0.5, 1.0, 2.0] {
        match (geometric_side_with_weight(t, &rep, &sig, None, 0.0, 0.0), geometric_side_with_weight(t, &rep, &sig, None, 0.0, 2.0)) {
            (Ok(a), Ok(b)) => {
                let expect = multiplicity_rhs(&rep, &sig, 0.0) * (t / 4.0).exp();
                w.see((b.total - a.total - expect).norm() / tol::WEIGHT_SHIFT, || format!("trivial (0;2,3,7) t={t}"));
            }
            (Err(e), _) | (_, Err(e)) => w.error(format!("trivial t={t}"), &e),
        }
    }
    w.finish(10, "trace", "geometric-side", 1.0, start)
}

type Criterion = fn(&SuiteConfig) -> CriterionResult;

pub const CRITERIA: [(u32, &str, Criterion); 10] = [
    (1, "torsion", torsion_agreement),
    (2, "contour", identity_contour),
    (3, "contour", elliptic_contour),
    (4, "contour", elliptic_asymptotics),
    (5, "zeta-at-zero", ruelle_leading_term),
    (6, "multiplicity", integrality),
    (7, "contour", functional_equation),
    (8, "geodesics", geodesics),
    (9, "products", truncated_products),
    (10, "trace", trace_formula),
];

fn selected(filter: &Option<String>, id: u32, suite: &str) -> bool {
    match filter {
        None => true,
        Some(f) => f.split(',').any(|f| {
            let f = f.trim();
            f == suite || f == format!("c{id}") || f == id.to_string()
        }),
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter(|(id, suite, _)| selected(&cfg.filter, *id, suite))
        .map(|(_, _, f)| f(cfg))
        .collect()
}

/// JUnit-style summary: one testsuite per suite name, one testcase per criterion.
pub fn junit_json(results: &[CriterionResult]) -> Value {
    let mut suites: Vec<&str> = results.iter().map(|r| r.suite).collect();
    suites.dedup();
    let mut seen = Vec::new();
    let suites: Vec<Value> = suites
        .into_iter()
        .filter(|s| {
            let fresh = !seen.contains(s);
            seen.push(*s);
            fresh
        })
        .map(|s| {
            let cases: Vec<&CriterionResult> = results.iter().filter(|r| r.suite == s).collect();
            json!({
                "name": s,
                "tests": cases.len(),
                "failures": cases.iter().filter(|r| !r.passed).count(),
                "time": cases.iter().map(|r| r.seconds).sum::<f64>(),
                "testcases": cases.iter().map(|r| {
                    let mut v = json!({
                        "classname": format!("orbizeta.{s}"),
                        "name": format!("criterion-{}-{}", r.id, r.name),
                        "time": r.seconds,
                        "worst": r.worst,
                        "tol": r.tol,
                        "cases": r.cases,
                    });
                    if !r.passed {
                        v["failure"] = json!({ "message": r.detail });
                    }
                    v
                }).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "tests": results.len(),
        "failures": results.iter().filter(|r| !r.passed).count(),
        "testsuites": suites,
    })
}

/// Fixed-part data of every cone, for reporting.
pub fn fixed_parts(rep: &Representation, sig: &OrbifoldSignature) -> Result<Vec<Value>> {
    (0..sig.num_cones())
        .map(|j| fixed_decomposition(rep, sig, j).map(|fd| serde_json::to_value(fd).expect("serialisable")))
        .collect()
}
