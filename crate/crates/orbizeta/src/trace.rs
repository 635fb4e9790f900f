//! Geometric side of the Selberg trace formula for the shifted Laplacian twisted by a
//! (not necessarily unitary) representation.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{c, C64, ZERO};
use crate::orbifold::OrbifoldSignature;
use crate::quadrature::{integrate_real, QuadConfig};
use crate::representation::Representation;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GeometricSide {
    #[serde(serialize_with = "ser_c")]
    pub identity: C64,
    #[serde(serialize_with = "ser_c")]
    pub hyperbolic: C64,
    #[serde(serialize_with = "ser_c")]
    pub elliptic: C64,
    #[serde(serialize_with = "ser_c")]
    pub total: C64,
    /// Classes that entered the hyperbolic sum.
    pub hyperbolic_terms: usize,
    /// Gaussian tail factor e^{−cutoff²/4t} bounding the omitted hyperbolic terms.
    pub tail_factor: f64,
}

fn ser_c<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

fn cos_half(m: f64) -> f64 {
    (PI * (1.0 - m) / 2.0).sin()
}

/// cosh 2πλ + cos πm = 2 sinh²πλ + 2 cos²(πm/2).
fn denominator(x: f64, m: f64) -> f64 {
    2.0 * (PI * x).sinh().powi(2) + 2.0 * cos_half(m).powi(2)
}

/// Upper end of the λ-integrals beyond which e^{−tλ²} times the integrand is negligible.
fn lambda_cutoff(t: f64) -> f64 {
    (40.0 / t).sqrt() + 1.0
}

fn even_integral<F: Fn(f64) -> C64>(f: F, t: f64) -> Result<C64> {
    Ok(integrate_real(f, 0.0, lambda_cutoff(t), &QuadConfig::default())?.value * 2.0)
}

/// Odd ℓ with 1 ≤ ℓ < |m|.
fn discrete_series(m: f64) -> impl Iterator<Item = f64> {
    (1..).step_by(2).map(|l| l as f64).take_while(move |&l| l < m.abs())
}

/// ∫_R e^{−tλ²} λ sinh 2πλ / (cosh 2πλ + cos πm) dλ + Σ_{odd ℓ<|m|} (|m|−ℓ) e^{((|m|−ℓ)/2)² t}.
pub fn identity_term(t: f64, m: f64) -> Result<f64> {
    let integral = even_integral(|x| c((-t * x * x).exp() * x * (2.0 * PI * x).sinh() / denominator(x, m), 0.0), t)?;
    let discrete: f64 = discrete_series(m).map(|l| (m.abs() - l) * (((m.abs() - l) / 2.0).powi(2) * t).exp()).sum();
    Ok(integral.re + discrete)
}

/// Bracket of the elliptic term for rotation angle θ.
pub fn elliptic_bracket(t: f64, m: f64, theta: f64) -> Result<C64> {
    let cm = cos_half(m);
    let phase = C64::from_polar(2.0 * cm, PI * m / 2.0);
    // cosh 2(π−θ)λ + e^{iπm} cosh 2θλ = 2 sinh πλ sinh (π−2θ)λ + 2cos(πm/2) e^{iπm/2} cosh 2θλ.
    let f = |x: f64| {
        let num = c(2.0 * (PI * x).sinh() * ((PI - 2.0 * theta) * x).sinh(), 0.0) + phase * (2.0 * theta * x).cosh();
        num * ((-t * x * x).exp() / denominator(x, m))
    };
    let integral = even_integral(f, t)?;
    let sg = m.signum();
    let discrete: C64 = discrete_series(m)
        .map(|l| {
            let k = m.abs() - l;
            C64::from_polar(1.0, sg * k * theta) * ((k / 2.0).powi(2) * t).exp()
        })
        .sum();
    Ok(integral + c(0.0, 2.0 * sg) * discrete)
}

/// Geometric side with the weight of the rep.
pub fn geometric_side(t: f64, rep: &Representation, sig: &OrbifoldSignature, spectrum: Option<&Spectrum>, cutoff: f64) -> Result<GeometricSide> {
    geometric_side_with_weight(t, rep, sig, spectrum, cutoff, rep.weight_m()?)
}

/// Geometric side for an explicit weight `m`; ρ enters only through its values on canonical lifts,
/// so `m` and `m + 2` describe the same ρ(t).
pub fn geometric_side_with_weight(
    t: f64,
    rep: &Representation,
    sig: &OrbifoldSignature,
    spectrum: Option<&Spectrum>,
    cutoff: f64,
    m: f64,
) -> Result<GeometricSide> {
    if !(t > 0.0) {
        return Err(Error::Input(format!("t = {t} must be positive")));
    }
    let n = rep.n as f64;
    let identity = c(sig.hyperbolic_area() * n / (4.0 * PI) * identity_term(t, m)?, 0.0);

    let mut hyperbolic = ZERO;
    let mut hyperbolic_terms = 0;
    if cutoff > 0.0 {
        let spec = spectrum.filter(|s| !s.classes.is_empty()).ok_or(Error::EmptySpectrum)?;
        let pref = 1.0 / (2.0 * (4.0 * PI * t).sqrt());
        for cl in spec.classes.iter().filter(|cl| cl.length <= cutoff) {
            let l = cl.length;
            hyperbolic += cl.rho(rep).trace() * (l * (-l * l / (4.0 * t)).exp() / (cl.multiplicity as f64 * (l / 2.0).sinh()));
            hyperbolic_terms += 1;
        }
        hyperbolic *= pref;
    }

    let mut elliptic = ZERO;
    for (j, &nu) in sig.cone_orders().iter().enumerate() {
        let traces = rep.cone_traces(j, nu);
        for k in 1..nu {
            let theta = k as f64 * PI / nu as f64;
            elliptic += traces[k as usize] / (4.0 * nu as f64 * theta.sin()) * elliptic_bracket(t, m, theta)?;
        }
    }
    Ok(GeometricSide {
        identity,
        hyperbolic,
        elliptic,
        total: identity + hyperbolic + elliptic,
        hyperbolic_terms,
        tail_factor: (-cutoff * cutoff / (4.0 * t)).exp(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::standard_group;
    use crate::representation::catalog_rep;
    use crate::spectrum::enumerate_spectrum;
    use crate::zeta_contour::multiplicity_rhs;

    #[test]
    fn identity_term_positive_and_monotone() {
        let mut prev = f64::INFINITY;
        for t in [0.5, 1.0, 2.0, 4.0, 8.0] {
            let v = identity_term(t, 0.0).unwrap();
            assert!(v > 0.0 && v < prev);
            prev = v;
        }
        // Removable point at λ = 0 when m = 1.
        assert!(identity_term(1.0, 1.0).unwrap().is_finite());
    }

    #[test]
    fn weight_shift_difference() {
        let (rep, sig) = catalog_rep("trivial-(0;2,3,7)").unwrap();
        for t in [0.5, 1.0] {
            let a = geometric_side_with_weight(t, &rep, &sig, None, 0.0, 0.0).unwrap();
            let b = geometric_side_with_weight(t, &rep, &sig, None, 0.0, 2.0).unwrap();
            let expect = multiplicity_rhs(&rep, &sig, 0.0) * (t / 4.0).exp();
            assert!((b.total - a.total - expect).norm() < 1e-9, "{} vs {}", b.total - a.total, expect);
        }
    }

    #[test]
    fn sl2_rep_gives_real_trace() {
        let (rep, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
        let grp = standard_group("triangle-(2,3,7)").unwrap();
        let spec = enumerate_spectrum(&grp, 4.0, 40).unwrap();
        for t in [0.5, 1.0, 2.0] {
            let g = geometric_side(t, &rep, &sig, Some(&spec), 4.0).unwrap();
            assert!(g.total.im.abs() < 1e-6);
            assert!(g.hyperbolic_terms > 0);
        }
        assert!(matches!(geometric_side(1.0, &rep, &sig, None, 4.0), Err(Error::EmptySpectrum)));
    }
}
