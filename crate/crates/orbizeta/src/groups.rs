//! Explicit cocompact Fuchsian groups with generator lifts to the universal cover.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::cover::{classify, Kind, Lift, Mat2};
use crate::error::{Error, Result};
use crate::orbifold::{new_signature, OrbifoldSignature};

/// A word: letter `k + 1` is generator `k`, letter `−(k + 1)` its inverse.
pub type Word = Vec<i32>;

#[derive(Debug, Clone)]
pub struct FuchsianPresentation {
    pub name: String,
    pub signature: OrbifoldSignature,
    /// Lifts of the generators `a_1, b_1, …, a_g, b_g, c_1, …, c_s`.
    pub generators: Vec<Lift>,
    pub relation_words: Vec<Relation>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Relation {
    pub word: Word,
    /// Power of the fibre class `t` the lifted word equals.
    pub t_power: i64,
}

impl FuchsianPresentation {
    pub fn lift_of(&self, word: &[i32]) -> Lift {
        let mut out = Lift::identity();
        for &l in word {
            let g = self.generators[(l.unsigned_abs() - 1) as usize];
            out = out.compose(&if l > 0 { g } else { g.inverse() });
        }
        out
    }

    pub fn matrix_of(&self, word: &[i32]) -> Mat2 {
        let mut out = Mat2::identity();
        for &l in word {
            let g = self.generators[(l.unsigned_abs() - 1) as usize].matrix;
            out *= if l > 0 { g } else { g.try_inverse().unwrap() };
        }
        out
    }

    /// Max over relation words of ‖W ∓ I‖, taking the better sign.
    pub fn relation_residual(&self) -> f64 {
        self.relation_words
            .iter()
            .map(|r| {
                let m = self.matrix_of(&r.word);
                (m - Mat2::identity()).norm().min((m + Mat2::identity()).norm())
            })
            .fold(0.0, f64::max)
    }

    pub fn generator_names(&self) -> Vec<String> {
        let g = self.signature.genus() as usize;
        let mut names = Vec::new();
        for i in 1..=g {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
        for j in 1..=self.signature.num_cones() {
            names.push(format!("c{j}"));
        }
        names
    }
}

/// Long relation `[a_1,b_1]⋯[a_g,b_g] c_1⋯c_s` as a word.
pub fn long_relator(g: usize, s: usize) -> Word {
    let mut w = Vec::new();
    for i in 0..g {
        let a = (2 * i + 1) as i32;
        let b = (2 * i + 2) as i32;
        w.extend_from_slice(&[a, b, -a, -b]);
    }
    for j in 0..s {
        w.push((2 * g + j + 1) as i32);
    }
    w
}

pub fn standard_group(preset: &str) -> Result<FuchsianPresentation> {
    if preset == "genus2-octagon" {
        return octagon();
    }
    if let Some((p, q, r)) = parse_triangle(preset) {
        return triangle(p, q, r);
    }
    Err(Error::UnknownPreset(preset.to_string()))
}

pub(crate) fn parse_triangle(preset: &str) -> Option<(u32, u32, u32)> {
    let inner = preset.strip_prefix("triangle-(")?.strip_suffix(')')?;
    let v: Vec<u32> = inner.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
    (v.len() == 3).then(|| (v[0], v[1], v[2]))
}

fn triangle(p: u32, q: u32, r: u32) -> Result<FuchsianPresentation> {
    let signature = new_signature(0, &[p as i64, q as i64, r as i64])?;
    let (ap, aq, ar) = (PI / p as f64, PI / q as f64, PI / r as f64);
    let cosh_d = (ar.cos() + ap.cos() * aq.cos()) / (ap.sin() * aq.sin());
    let d = cosh_d.acosh();
    let x = Lift::rotation(ap);
    for side in [1.0, -1.0] {
        let shift = Lift::translation(side * d);
        let y = shift.compose(&Lift::rotation(aq)).compose(&shift.inverse());
        let z = Lift::fiber().compose(&x.compose(&y).inverse());
        if classify(&z.matrix, 1e-9) != Kind::Elliptic {
            continue;
        }
        let theta = z.rotation_angle();
        let tau = z.translation_number(8192);
        if (theta - ar).abs() < 1e-9 && (tau - ar).abs() < 1e-3 {
            let relation_words = vec![
                Relation { word: vec![1; p as usize], t_power: 1 },
                Relation { word: vec![2; q as usize], t_power: 1 },
                Relation { word: vec![3; r as usize], t_power: 1 },
                Relation { word: long_relator(0, 3), t_power: 1 },
            ];
            return Ok(FuchsianPresentation {
                name: format!("triangle-({p},{q},{r})"),
                signature,
                generators: vec![x, y, z],
                relation_words,
            });
        }
    }
    Err(Error::Input(format!("triangle-({p},{q},{r}) construction failed")))
}

/// Converts a disc-model element [[α, β], [β̄, ᾱ]] of SU(1,1) to SL(2,R).
fn su11_to_sl2(alpha: (f64, f64), beta: (f64, f64)) -> Mat2 {
    // Conjugation by the Cayley map z ↦ (z − i)/(z + i).
    let (ar, ai) = alpha;
    let (br, bi) = beta;
    Mat2::new(ar + br, ai - bi, -ai - bi, ar - br)
}

fn octagon() -> Result<FuchsianPresentation> {
    let signature = new_signature(2, &[])?;
    let alpha = 1.0 + SQRT_2;
    let beta = (2.0 * alpha).sqrt();
    let g: Vec<Mat2> = (0..4)
        .map(|k| {
            let ang = k as f64 * PI / 4.0;
            su11_to_sl2((alpha, 0.0), (beta * ang.cos(), beta * ang.sin()))
        })
        .collect();
    let inv = |m: &Mat2| m.try_inverse().unwrap();
    // Standard generators with [a1,b1][a2,b2] equal to the side-pairing relator.
    let a1 = g[0] * inv(&g[1]);
    let b1 = g[2] * inv(&g[3]) * inv(&g[1]);
    let a2 = g[2] * inv(&g[3]);
    let b2 = inv(&g[3]);
    let j = Mat2::new(1.0, 0.0, 0.0, -1.0);
    let relator = long_relator(2, 0);
    for flip in [false, true] {
        let gens: Vec<Lift> = [a1, b1, a2, b2]
            .iter()
            .map(|m| {
                let m = if flip { j * m * j } else { *m };
                Lift::any_lift(m).canonical()
            })
            .collect::<Result<_>>()?;
        let pres = FuchsianPresentation {
            name: "genus2-octagon".into(),
            signature: signature.clone(),
            generators: gens,
            relation_words: vec![Relation { word: relator.clone(), t_power: 2 }],
        };
        let lifted = pres.lift_of(&relator);
        if (lifted.f0 - 2.0 * PI).abs() < 1e-6 {
            return Ok(pres);
        }
    }
    Err(Error::Input("octagon orientation calibration failed".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::length_from_trace;

    #[test]
    fn triangle_237_relations() {
        let g = standard_group("triangle-(2,3,7)").unwrap();
        assert!(g.relation_residual() < 1e-9);
        for rel in &g.relation_words {
            let l = g.lift_of(&rel.word);
            assert!((l.f0 - rel.t_power as f64 * PI).abs() < 1e-9, "{:?} -> {}", rel.word, l.f0);
            assert!((l.matrix - Lift::fiber().pow(rel.t_power).matrix).norm() < 1e-9);
        }
        for (k, nu) in [2u32, 3, 7].iter().enumerate() {
            let theta = g.generators[k].rotation_angle();
            assert!((theta - PI / *nu as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn other_triangles() {
        for (p, q, r) in [(2, 3, 8), (3, 3, 4), (2, 4, 5), (4, 4, 4), (2, 5, 5)] {
            let g = standard_group(&format!("triangle-({p},{q},{r})")).unwrap();
            assert!(g.relation_residual() < 1e-9);
            let l = g.lift_of(&long_relator(0, 3));
            assert!((l.f0 - PI).abs() < 1e-9);
        }
        assert!(matches!(standard_group("triangle-(2,3,6)"), Err(Error::NonHyperbolic(_))));
        assert!(matches!(standard_group("square"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn octagon_relation_and_orientation() {
        let g = standard_group("genus2-octagon").unwrap();
        assert!(g.relation_residual() < 1e-9);
        let l = g.lift_of(&long_relator(2, 0));
        assert!((l.f0 - 2.0 * PI).abs() < 1e-9);
        assert!((l.matrix - Mat2::identity()).norm() < 1e-9);
        for gen in &g.generators {
            assert!(gen.matrix.trace() > 2.0);
        }
        // a2 = g2 g3⁻¹ and b2 = g3⁻¹; b2 is a side pairing of trace 2(1+√2).
        assert!((g.generators[3].matrix.trace().abs() - 2.0 * (1.0 + SQRT_2)).abs() < 1e-12);
        assert!((length_from_trace(g.generators[3].matrix.trace()) - 2.0 * (1.0 + SQRT_2).acosh()).abs() < 1e-12);
    }
}
