//! Elements of the universal cover of PSL(2,R).
//!
//! An element is a pair `(A, F(0))` where `A ∈ SL(2,R)` and `F: R → R` is the continuous lift of
//! the action of `A` on direction angles, with `v(ψ) = (cos ψ, −sin ψ)`. With this parametrisation
//! the rotation `k_θ` acts by `ψ ↦ ψ + θ` and the central generator is `t = (−I, F(x) = x + π)`.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};

pub type Mat2 = Matrix2<f64>;

const TWO_PI: f64 = 2.0 * PI;

fn dir(psi: f64) -> Vector2<f64> {
    Vector2::new(psi.cos(), -psi.sin())
}

fn dir_angle(w: &Vector2<f64>) -> f64 {
    (-w.y).atan2(w.x)
}

pub fn rotation(theta: f64) -> Mat2 {
    Mat2::new(theta.cos(), theta.sin(), -theta.sin(), theta.cos())
}

pub fn translation(t: f64) -> Mat2 {
    Mat2::new((t / 2.0).exp(), 0.0, 0.0, (-t / 2.0).exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lift {
    pub matrix: Mat2,
    pub f0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

pub fn classify(m: &Mat2, tol: f64) -> Kind {
    let tr = m.trace().abs();
    if tr < 2.0 - tol {
        Kind::Elliptic
    } else if tr > 2.0 + tol {
        Kind::Hyperbolic
    } else {
        Kind::Parabolic
    }
}

impl Lift {
    pub fn identity() -> Self {
        Lift { matrix: Mat2::identity(), f0: 0.0 }
    }

    /// The central fibre class `t = k̃_π`.
    pub fn fiber() -> Self {
        Lift { matrix: -Mat2::identity(), f0: PI }
    }

    pub fn rotation(theta: f64) -> Self {
        Lift { matrix: rotation(theta), f0: theta }
    }

    pub fn translation(t: f64) -> Self {
        Lift { matrix: translation(t), f0: 0.0 }
    }

    /// Some lift of `m`, with `F(0)` in `(−π, π]`.
    pub fn any_lift(m: Mat2) -> Self {
        Lift { f0: dir_angle(&(m * dir(0.0))), matrix: m }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let q = (x / PI).floor();
        let xr = x - q * PI;
        let ray = dir_angle(&(self.matrix * dir(xr)));
        let mut d = (ray - self.f0).rem_euclid(TWO_PI);
        if d > 1.5 * PI {
            d -= TWO_PI;
        }
        self.f0 + d + q * PI
    }

    pub fn compose(&self, other: &Lift) -> Lift {
        Lift { matrix: self.matrix * other.matrix, f0: self.eval(other.f0) }
    }

    pub fn inverse(&self) -> Lift {
        let inv = self.matrix.try_inverse().expect("SL(2,R) element");
        let y0 = dir_angle(&(inv * dir(0.0)));
        let k = (self.eval(y0) / TWO_PI).round();
        Lift { matrix: inv, f0: y0 - k * TWO_PI }
    }

    pub fn pow(&self, k: i64) -> Lift {
        let base = if k < 0 { self.inverse() } else { *self };
        let mut out = Lift::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Lift {
        let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        Lift { matrix: self.matrix * sign, f0: self.f0 + k as f64 * PI }
    }

    /// Translation number estimated from `iterations` steps of the lifted circle map.
    pub fn translation_number(&self, iterations: usize) -> f64 {
        let mut x = 0.0;
        for _ in 0..iterations {
            x = self.eval(x);
        }
        x / iterations as f64
    }

    /// Exact translation number of a hyperbolic or parabolic lift, read off at a fixed direction.
    pub fn fixed_point_translation(&self) -> Option<f64> {
        let m = &self.matrix;
        let tr = m.trace();
        let disc = tr * tr / 4.0 - 1.0;
        if disc < -1e-14 {
            return None;
        }
        let mu = tr / 2.0 + disc.max(0.0).sqrt() * tr.signum();
        // Eigenvector for eigenvalue mu.
        let v1 = Vector2::new(m[(0, 1)], mu - m[(0, 0)]);
        let v2 = Vector2::new(mu - m[(1, 1)], m[(1, 0)]);
        let v = if v1.norm() > v2.norm() { v1 } else { v2 };
        if v.norm() == 0.0 {
            return Some(self.f0);
        }
        let psi = dir_angle(&v);
        Some(self.eval(psi) - psi)
    }

    /// `round(τ/π)` for a hyperbolic lift, cross-checked against iteration of the circle map.
    pub fn t_exponent(&self) -> Result<i64> {
        let exact = self
            .fixed_point_translation()
            .ok_or_else(|| Error::Input("t_exponent needs a hyperbolic element".into()))?;
        let e = (exact / PI).round();
        let residual = (exact / PI - e).abs();
        let iterated = self.translation_number(4096) / PI;
        let residual = residual.max((iterated - e).abs());
        if residual >= 0.05 {
            return Err(Error::NonConvergent(residual));
        }
        Ok(e as i64)
    }

    /// The lift of the same projective element conjugate to `ã_ℓ` (hyperbolic) or to `k̃_θ`
    /// with `θ ∈ (0, π)` (elliptic).
    pub fn canonical(&self) -> Result<Lift> {
        match classify(&self.matrix, 1e-12) {
            Kind::Hyperbolic | Kind::Parabolic => Ok(self.shift(-self.t_exponent()?)),
            Kind::Elliptic => {
                let theta = self.rotation_angle();
                let k = (self.translation_number(4096) - theta) / PI;
                let kr = k.round();
                if (k - kr).abs() > 0.05 {
                    return Err(Error::NonConvergent((k - kr).abs()));
                }
                Ok(self.shift(-(kr as i64)))
            }
        }
    }

    /// θ ∈ (0, π) such that the projective class is conjugate to `k_θ`.
    pub fn rotation_angle(&self) -> f64 {
        // Conjugate so the fixed point is i; the rotation angle is then read from the ray map.
        let m = &self.matrix;
        let (a, c, d) = (m[(0, 0)], m[(1, 0)], m[(1, 1)]);
        // Fixed point z = x + iy in the upper half plane of z ↦ (az+b)/(cz+d).
        let disc = 4.0 - (a + d).powi(2);
        let x = (a - d) / (2.0 * c);
        let y = disc.max(0.0).sqrt() / (2.0 * c.abs());
        let s = y.sqrt();
        let h = Mat2::new(s, x / s, 0.0, 1.0 / s);
        let conj = h.try_inverse().unwrap() * m * h;
        // conj = ±k_θ; its action on directions is a rigid shift by θ mod π.
        let shift = dir_angle(&(conj * dir(0.0)));
        shift.rem_euclid(PI)
    }
}

/// Hyperbolic translation length from a trace.
pub fn length_from_trace(tr: f64) -> f64 {
    2.0 * (tr.abs() / 2.0).acosh()
}
