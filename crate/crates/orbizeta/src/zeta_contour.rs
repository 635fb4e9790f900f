//! Contour integrals behind the functional equation of the twisted Selberg zeta function, the
//! value (or leading term) of the Ruelle zeta function at zero, and the multiplicity expression.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{c, real_power, C64, I, ONE, ZERO};
use crate::orbifold::OrbifoldSignature;
use crate::quadrature::{integrate_path, QuadConfig, Segment};
use crate::representation::{fixed_decomposition, lambda_from_m, FixedPartDecomposition, Representation};

pub const DEFAULT_RADIUS: f64 = 0.05;
pub const DEFAULT_EPS: f64 = 1e-4;
const IMAG_LEG: f64 = 0.05;

/// cos(πm/2), exactly zero at m = 1.
fn cos_half(m: f64) -> f64 {
    (PI * (1.0 - m) / 2.0).sin()
}

/// cos 2πξ + cos πm = 2(cos(πm/2) − sin πξ)(cos(πm/2) + sin πξ).
fn denominator(xi: C64, m: f64) -> C64 {
    let s = (xi * PI).sin();
    let cm = cos_half(m);
    (c(cm, 0.0) - s) * (c(cm, 0.0) + s) * 2.0
}

fn identity_integrand(xi: C64, m: f64) -> C64 {
    xi * (xi * (2.0 * PI)).sin() / denominator(xi, m)
}

/// Weights `π tr ρ(c^k) / (ν sin(kπ/ν))` for k = 1..ν−1.
fn elliptic_weights(traces: &[C64], nu: u32) -> Vec<(f64, C64)> {
    (1..nu)
        .map(|k| {
            let theta = k as f64 * PI / nu as f64;
            (theta, traces[k as usize] * (PI / (nu as f64 * theta.sin())))
        })
        .collect()
}

/// E(ξ) = −Σ_k w_k (cos 2(π−θ_k)ξ + e^{iπm} cos 2θ_kξ) / (cos 2πξ + cos πm).
fn elliptic_integrand(xi: C64, m: f64, weights: &[(f64, C64)]) -> C64 {
    let cm = cos_half(m);
    let phase = C64::from_polar(2.0 * cm, PI * m / 2.0);
    let s = (xi * PI).sin();
    let mut num = ZERO;
    for &(theta, w) in weights {
        let a = -2.0 * s * (xi * (PI - 2.0 * theta)).sin() + phase * (xi * (2.0 * theta)).cos();
        num += w * a;
    }
    -num / denominator(xi, m)
}

/// Real poles ±(1−m)/2 + k of the integrands that lie strictly between `lo` and `hi`; the
/// removable point 0 at m = 1 is skipped.
pub fn real_poles(m: f64, lo: f64, hi: f64) -> Vec<f64> {
    let base = (1.0 - m) / 2.0;
    let mut out = Vec::new();
    let kmin = (lo - 2.0).floor() as i64;
    let kmax = (hi + 2.0).ceil() as i64;
    for k in kmin..=kmax {
        for p in [base + k as f64, -base + k as f64] {
            if p > lo && p < hi && !(m == 1.0 && p.abs() < 1e-15) && !out.iter().any(|q: &f64| (q - p).abs() < 1e-15) {
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// The pole ξ₀ in (0, 1/2] (None at m = 1, where the only candidate 0 is removable).
pub fn xi0(m: f64) -> Option<f64> {
    if m == 1.0 {
        None
    } else if m >= 0.0 {
        Some((1.0 - m) / 2.0)
    } else {
        Some((1.0 + m) / 2.0)
    }
}

/// Path from 0 to `w`: for nearly real `w` the real axis with upper half-circles of radius at
/// most `radius` over the poles, then a short vertical leg; otherwise up the imaginary axis
/// first and across.
pub fn contour(w: C64, m: f64, radius: f64) -> Result<Vec<Segment>> {
    if w == ZERO {
        return Ok(Vec::new());
    }
    for p in real_poles(m, w.re.min(0.0) - 1.0, w.re.max(0.0) + 1.0) {
        if (w - c(p, 0.0)).norm() < 1e-10 {
            return Err(Error::PoleOnEndpoint(format!("{w}")));
        }
    }
    if w.im.abs() >= IMAG_LEG {
        return Ok(vec![Segment::line(ZERO, c(0.0, w.im)), Segment::line(c(0.0, w.im), w)]);
    }
    let x = w.re;
    let (lo, hi) = if x >= 0.0 { (0.0, x) } else { (x, 0.0) };
    let mut poles = real_poles(m, lo, hi);
    if x < 0.0 {
        poles.reverse();
    }
    let all = real_poles(m, lo - 2.0, hi + 2.0);
    let mut segs = Vec::new();
    let mut cur = 0.0;
    let dir = if x >= 0.0 { 1.0 } else { -1.0 };
    for &p in &poles {
        let mut r = radius.min(p.abs() / 2.0).min((x - p).abs() / 2.0);
        for &q in &all {
            if q != p {
                r = r.min((q - p).abs() / 2.0);
            }
        }
        if m == 1.0 {
            r = r.min(p.abs() / 2.0);
        }
        let before = p - dir * r;
        let after = p + dir * r;
        segs.push(Segment::line(c(cur, 0.0), c(before, 0.0)));
        let (from, to) = if dir > 0.0 { (PI, 0.0) } else { (0.0, PI) };
        segs.push(Segment::Arc { center: c(p, 0.0), radius: r, from, to });
        cur = after;
    }
    segs.push(Segment::line(c(cur, 0.0), c(x, 0.0)));
    if w.im != 0.0 {
        segs.push(Segment::line(c(x, 0.0), w));
    }
    Ok(segs)
}

fn integrate<F: Fn(C64) -> C64>(f: F, path: &[Segment]) -> Result<C64> {
    if path.is_empty() {
        return Ok(ZERO);
    }
    Ok(integrate_path(f, path, &QuadConfig::default())?.value)
}

/// exp ∫_{𝒞₊} −2πξ sin 2πξ / (cos 2πξ + cos πm) dξ from 0 to 1/2 (m ≠ 0), which is ±(1 − e^{iπm}).
pub fn identity_unit(m: f64, radius: f64) -> Result<C64> {
    if m == 0.0 {
        return Err(Error::WeightZero);
    }
    let path = contour(c(0.5, 0.0), m, radius)?;
    Ok(integrate(|z| identity_integrand(z, m) * (-2.0 * PI), &path)?.exp())
}

/// The m = 0 unit integral taken past the pole at 1/2 to 1/2 + σ; vanishes like −2πσ.
pub fn identity_unit_shifted(sigma: f64) -> Result<C64> {
    let path = contour(c(0.5 + sigma, 0.0), 0.0, sigma / 2.0)?;
    Ok(integrate(|z| identity_integrand(z, 0.0) * (-2.0 * PI), &path)?.exp())
}

/// exp(n·Vol(X)·∫_{𝒞₊} ξ sin 2πξ / (cos 2πξ + cos πm) dξ), the identity factor of η(1).
pub fn identity_contribution(m: f64, sig: &OrbifoldSignature, n: usize) -> Result<C64> {
    if m == 0.0 {
        return Err(Error::WeightZero);
    }
    let scale = n as f64 * sig.hyperbolic_area();
    let path = contour(c(0.5, 0.0), m, DEFAULT_RADIUS)?;
    Ok(integrate(|z| identity_integrand(z, m) * scale, &path)?.exp())
}

fn check_cone(rep: &Representation, sig: &OrbifoldSignature, j: usize) -> Result<u32> {
    if j >= sig.num_cones() || j >= rep.c.len() {
        return Err(Error::DimensionMismatch(format!("no cone {}", j + 1)));
    }
    Ok(sig.cone_orders()[j])
}

/// exp ∫_{𝒞₊} E_j from 0 to 1/2 for cone `j` (0-based).
pub fn elliptic_contribution(rep: &Representation, sig: &OrbifoldSignature, j: usize, m: f64) -> Result<C64> {
    if m == 0.0 {
        return Err(Error::WeightZero);
    }
    let nu = check_cone(rep, sig, j)?;
    let weights = elliptic_weights(&rep.cone_traces(j, nu), nu);
    let path = contour(c(0.5, 0.0), m, DEFAULT_RADIUS)?;
    Ok(integrate(|z| elliptic_integrand(z, m, &weights), &path)?.exp())
}

/// det(I − ρ(c_j)) / det(I − ρ(t))^{1/ν_j} on the principal branch.
pub fn elliptic_closed_form(rep: &Representation, sig: &OrbifoldSignature, j: usize) -> Result<C64> {
    let nu = check_cone(rep, sig, j)?;
    let n = rep.n;
    let num = crate::linalg::det(&(crate::linalg::identity(n) - &rep.c[j]));
    let den = real_power((ONE - rep.lambda).powi(n as i32), 1.0 / nu as f64);
    Ok(num / den)
}

/// exp ∫₀^{1/2−ε} E_j at m = 0.
pub fn elliptic_asymptotic(rep: &Representation, sig: &OrbifoldSignature, j: usize, eps: f64) -> Result<C64> {
    if rep.weight_m()? != 0.0 {
        return Err(Error::WeightNonzero);
    }
    if !(eps > 0.0 && eps <= 0.1) {
        return Err(Error::Input(format!("eps = {eps} outside (0, 0.1]")));
    }
    let nu = check_cone(rep, sig, j)?;
    let weights = elliptic_weights(&rep.cone_traces(j, nu), nu);
    let path = [Segment::line(ZERO, c(0.5 - eps, 0.0))];
    Ok(integrate(|z| elliptic_integrand(z, 0.0, &weights), &path)?.exp())
}

/// (det T_j)^{−1/2} det(I − T_j) (2πε)^{−n/ν_j + n_j} i^{n−n_j} ν_j^{−n_j}.
pub fn elliptic_asymptotic_closed_form(fd: &FixedPartDecomposition, n: usize, nu: u32, eps: f64) -> C64 {
    let expo = -(n as f64) / nu as f64 + fd.n_j as f64;
    real_power(fd.det_t, -0.5)
        * fd.det_i_minus_t
        * (2.0 * PI * eps).powf(expo)
        * I.powi((n - fd.n_j) as i32)
        * (nu as f64).powi(-(fd.n_j as i32))
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticFit {
    pub eps: [f64; 2],
    pub slope: f64,
    pub expected_slope: f64,
    /// |quadrature| / |closed form| at each ε.
    pub prefactor_ratios: [f64; 2],
    /// Richardson extrapolation of the ratios to ε → 0, removing the O(ε) term.
    pub prefactor_ratio: f64,
}

pub fn elliptic_asymptotic_fit(rep: &Representation, sig: &OrbifoldSignature, j: usize, eps: [f64; 2]) -> Result<AsymptoticFit> {
    let nu = check_cone(rep, sig, j)?;
    let fd = fixed_decomposition(rep, sig, j)?;
    let v = [elliptic_asymptotic(rep, sig, j, eps[0])?, elliptic_asymptotic(rep, sig, j, eps[1])?];
    let slope = (v[1].norm() / v[0].norm()).ln() / (eps[1] / eps[0]).ln();
    let ratios = [
        v[0].norm() / elliptic_asymptotic_closed_form(&fd, rep.n, nu, eps[0]).norm(),
        v[1].norm() / elliptic_asymptotic_closed_form(&fd, rep.n, nu, eps[1]).norm(),
    ];
    let q = eps[0] / eps[1];
    let prefactor_ratio = (q * ratios[1] - ratios[0]) / (q - 1.0);
    Ok(AsymptoticFit {
        eps,
        slope,
        expected_slope: -(rep.n as f64) / nu as f64 + fd.n_j as f64,
        prefactor_ratios: ratios,
        prefactor_ratio,
    })
}

/// Full integrand of η for a representation.
pub struct EtaIntegrand {
    m: f64,
    scale: f64,
    weights: Vec<Vec<(f64, C64)>>,
}

impl EtaIntegrand {
    pub fn new(rep: &Representation, sig: &OrbifoldSignature) -> Result<Self> {
        let m = rep.weight_m()?;
        let weights = sig
            .cone_orders()
            .iter()
            .enumerate()
            .map(|(j, &nu)| elliptic_weights(&rep.cone_traces(j, nu), nu))
            .collect();
        Ok(EtaIntegrand { m, scale: rep.n as f64 * sig.hyperbolic_area(), weights })
    }

    pub fn eval(&self, xi: C64) -> C64 {
        let mut v = identity_integrand(xi, self.m) * self.scale;
        for w in &self.weights {
            v += elliptic_integrand(xi, self.m, w);
        }
        v
    }

    pub fn m(&self) -> f64 {
        self.m
    }
}

pub fn eta_with_radius(s: C64, rep: &Representation, sig: &OrbifoldSignature, radius: f64) -> Result<C64> {
    let f = EtaIntegrand::new(rep, sig)?;
    let w = s - 0.5;
    if w == ZERO {
        return Ok(ONE);
    }
    let path = contour(w, f.m(), radius)?;
    Ok(integrate(|z| f.eval(z), &path)?.exp())
}

/// η(s; ρ) = exp ∫₀^{s−1/2} of the functional-equation integrand.
pub fn eta(s: C64, rep: &Representation, sig: &OrbifoldSignature) -> Result<C64> {
    eta_with_radius(s, rep, sig, DEFAULT_RADIUS)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RuelleAtZero {
    pub vanishing_order: i64,
    /// Coefficient of x^order in R(x/2π) (the value R(0) when the order is 0).
    #[serde(serialize_with = "ser_c")]
    pub leading_coefficient: C64,
    /// Coefficient of s^order in R(s).
    #[serde(serialize_with = "ser_c")]
    pub s_coefficient: C64,
    pub m: f64,
    pub sign_ambiguous: bool,
}

fn ser_c<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

/// Order and leading coefficient of R(s; ρ) at s = 0 from the fixed-part data of the ρ(c_j).
pub fn ruelle_at_zero(rep: &Representation, sig: &OrbifoldSignature) -> Result<RuelleAtZero> {
    let m = rep.weight_m()?;
    let n = rep.n as i64;
    let k = sig.relator_t_power();
    let fds: Vec<FixedPartDecomposition> =
        (0..sig.num_cones()).map(|j| fixed_decomposition(rep, sig, j)).collect::<Result<_>>()?;
    if m != 0.0 {
        // det(ρ(t) − I)^{n(2g+s−2)} / ∏ det(ρ(c_j) − I), with det(ρ(c_j) − I) = (−1)^n det(I − T_j).
        let mut v = (rep.lambda - ONE).powi((n * k) as i32);
        for fd in &fds {
            v /= fd.det_i_minus_t * if n % 2 == 0 { 1.0 } else { -1.0 };
        }
        return Ok(RuelleAtZero { vanishing_order: 0, leading_coefficient: v, s_coefficient: v, m, sign_ambiguous: true });
    }
    let sum_nj: i64 = fds.iter().map(|fd| fd.n_j as i64).sum();
    let order = n * k - sum_nj;
    let mut coef = I.powi(order.rem_euclid(4) as i32);
    for (fd, &nu) in fds.iter().zip(sig.cone_orders()) {
        coef *= (nu as f64).powi(fd.n_j as i32);
        coef /= fd.det_i_minus_t;
    }
    let s_coef = coef * (2.0 * PI).powi(order as i32);
    Ok(RuelleAtZero { vanishing_order: order, leading_coefficient: coef, s_coefficient: s_coef, m, sign_ambiguous: true })
}

/// Vol(X)·n·(m+1)/(4π) + Σ_ell i tr ρ(γ) e^{i(m+1)θ} / (2M sin θ).
pub fn multiplicity_rhs(rep: &Representation, sig: &OrbifoldSignature, m: f64) -> C64 {
    let mut v = c(sig.hyperbolic_area() * rep.n as f64 * (m + 1.0) / (4.0 * PI), 0.0);
    for (j, &nu) in sig.cone_orders().iter().enumerate() {
        let tr = rep.cone_traces(j, nu);
        // Pair k with ν − k so the imaginary parts cancel term by term.
        for k in 1..=nu / 2 {
            let mut ks = vec![k];
            if nu - k != k {
                ks.push(nu - k);
            }
            let mut pair = ZERO;
            for kk in ks {
                let theta = kk as f64 * PI / nu as f64;
                pair += I * tr[kk as usize] * C64::from_polar(1.0, (m + 1.0) * theta) / (2.0 * nu as f64 * theta.sin());
            }
            v += pair;
        }
    }
    v
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct IntegerCheck {
    #[serde(serialize_with = "ser_c")]
    pub value: C64,
    pub nearest: i64,
    pub residual: f64,
    pub passed: bool,
}

pub fn integer_check(value: C64, tol: f64) -> IntegerCheck {
    let nearest = value.re.round();
    let residual = (value.re - nearest).abs() + value.im.abs();
    IntegerCheck { value, nearest: nearest as i64, residual, passed: residual < tol }
}

/// ±(1 − e^{iπm}).
pub fn identity_closed_form(m: f64) -> C64 {
    ONE - lambda_from_m(-m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::new_signature;
    use crate::representation::{catalog_rep, random_rep};
    use crate::torsion::{closed_form_torsion, sign_distance};
    use proptest::prelude::*;

    fn arg_mod(a: C64, b: C64, period: f64) -> f64 {
        let d = (a.arg() - b.arg()).rem_euclid(period);
        d.min(period - d)
    }

    #[test]
    fn unit_integral_closed_form() {
        for m in [0.1, 0.25, 0.5, 0.75, 1.0] {
            let v = identity_unit(m, DEFAULT_RADIUS).unwrap();
            let r = identity_closed_form(m);
            assert!((v.norm() - r.norm()).abs() < 1e-9, "m={m}");
            assert!(arg_mod(v, r, PI) < 1e-8, "m={m}");
        }
        assert!((identity_unit(1.0, 0.05).unwrap() - c(2.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn identity_vanishes_linearly_at_weight_zero() {
        let a = identity_unit_shifted(1e-3).unwrap();
        let b = identity_unit_shifted(1e-4).unwrap();
        assert!(((a.norm() / b.norm()) - 10.0).abs() < 0.1);
        assert!((b / (-2.0 * PI * 1e-4) - ONE).norm() < 1e-3);
    }

    #[test]
    fn elliptic_closed_form_examples() {
        let sig = new_signature(1, &[2]).unwrap();
        let scal = |z: C64| crate::linalg::CMat::from_element(1, 1, z);
        let rep = Representation {
            n: 1,
            a: vec![scal(ONE)],
            b: vec![scal(ONE)],
            c: vec![scal(C64::from_polar(1.0, -PI / 4.0))],
            lambda: C64::from_polar(1.0, -PI / 2.0),
        };
        let v = elliptic_contribution(&rep, &sig, 0, 0.5).unwrap();
        let r = elliptic_closed_form(&rep, &sig, 0).unwrap();
        assert!((v.norm() - r.norm()).abs() < 1e-9);
        assert!(arg_mod(v, r, PI / 2.0) < 1e-8);

        let (rep, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
        let v = elliptic_contribution(&rep, &sig, 0, 1.0).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-9);
        assert!(matches!(elliptic_contribution(&rep, &sig, 0, 0.0), Err(Error::WeightZero)));
    }

    #[test]
    fn truncated_elliptic_trivial() {
        let (rep, sig) = catalog_rep("trivial-(1;2)").unwrap();
        let fit = elliptic_asymptotic_fit(&rep, &sig, 0, [1e-3, 1e-4]).unwrap();
        assert!((fit.slope - 0.5).abs() < 0.005, "{fit:?}");
        assert!((fit.prefactor_ratio - 1.0).abs() < 1e-4, "{fit:?}");
        let (sl2, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
        assert!(matches!(elliptic_asymptotic(&sl2, &sig, 0, 1e-3), Err(Error::WeightNonzero)));
    }

    #[test]
    fn eta_basics() {
        let (rep, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
        assert_eq!(eta(c(0.5, 0.0), &rep, &sig).unwrap(), ONE);
        let s = c(0.3, 0.2);
        let p = eta(s, &rep, &sig).unwrap() * eta(ONE - s, &rep, &sig).unwrap();
        assert!((p - ONE).norm() < 1e-8);
        let e1 = eta(ONE, &rep, &sig).unwrap();
        let tor = closed_form_torsion(&rep, &sig).unwrap().value;
        assert!(sign_distance(e1.inv(), tor) < 1e-7, "{} vs {}", e1.inv(), tor);
        let e2 = eta_with_radius(ONE, &rep, &sig, 0.02).unwrap();
        assert!((e1 - e2).norm() < 1e-9 * e1.norm());
    }

    #[test]
    fn ruelle_examples() {
        let (rep, sig) = catalog_rep("trivial-(1;2)").unwrap();
        let r = ruelle_at_zero(&rep, &sig).unwrap();
        assert_eq!(r.vanishing_order, 0);
        assert!(sign_distance(r.leading_coefficient, c(2.0, 0.0)) < 1e-12);
        for g in 2..5 {
            let (rep, sig) = catalog_rep(&format!("trivial-({g};)")).unwrap();
            let r = ruelle_at_zero(&rep, &sig).unwrap();
            assert_eq!(r.vanishing_order, 2 * g - 2);
            let expect = I.powi((2 * g - 2) as i32) * (2.0 * PI).powi((2 * g - 2) as i32);
            assert!(sign_distance(r.s_coefficient, expect) < 1e-12);
        }
        let (rep, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
        let r = ruelle_at_zero(&rep, &sig).unwrap();
        assert_eq!(r.vanishing_order, 0);
        assert!(sign_distance(r.leading_coefficient, c(1.0 / (2.0 * (PI / 14.0).sin().powi(2)), 0.0)) < 1e-10);
    }

    #[test]
    fn multiplicity_examples() {
        let (rep, sig) = catalog_rep("trivial-(0;2,3,7)").unwrap();
        let v = multiplicity_rhs(&rep, &sig, 0.0);
        let chk = integer_check(v, 1e-8);
        assert!(chk.passed && chk.nearest == -1, "{v}");
        for g in 2..5 {
            let (rep, sig) = catalog_rep(&format!("trivial-({g};)")).unwrap();
            let chk = integer_check(multiplicity_rhs(&rep, &sig, 0.0), 1e-12);
            assert!(chk.passed && chk.nearest == g - 1);
        }
    }

    #[test]
    fn poles_and_paths() {
        assert_eq!(real_poles(0.5, 0.0, 0.5), vec![0.25]);
        assert_eq!(real_poles(-0.5, 0.0, 0.5), vec![0.25]);
        assert!(real_poles(1.0, -0.5, 0.5).is_empty());
        assert!(matches!(contour(c(0.25, 0.0), 0.5, 0.05), Err(Error::PoleOnEndpoint(_))));
        let path = contour(c(0.5, 0.0), 0.5, 0.05).unwrap();
        assert_eq!(path.len(), 3);
        assert!((path.last().unwrap().end() - c(0.5, 0.0)).norm() < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn contour_agreement_random(seed in 0u64..10_000, which in 0usize..3) {
            let sigs = [(1, vec![2]), (1, vec![3]), (2, vec![2, 2])];
            let (g, nu) = &sigs[which];
            let sig = new_signature(*g, nu).unwrap();
            let n = 2 + (seed % 2) as usize;
            let lams = crate::representation::admissible_lambdas(&sig, n);
            let lambda = lams[seed as usize % lams.len()];
            let rep = random_rep(&sig, n, lambda, seed).unwrap();
            let tor = closed_form_torsion(&rep, &sig).unwrap().value;
            let e1 = eta(ONE, &rep, &sig).unwrap();
            prop_assert!(sign_distance(e1.inv(), tor) < 1e-6, "{} vs {}", e1.inv(), tor);
            let r0 = ruelle_at_zero(&rep, &sig).unwrap();
            prop_assert!(sign_distance(r0.leading_coefficient, tor) < 1e-8);
            let chk = integer_check(multiplicity_rhs(&rep, &sig, rep.weight_m().unwrap()), 1e-8);
            prop_assert!(chk.passed, "{:?}", chk);
        }
    }
}
