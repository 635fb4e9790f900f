//! Globally adaptive Gauss–Kronrod (7/15) quadrature along piecewise paths in the complex plane.

use crate::error::{Error, Result};
use crate::linalg::{C64, ZERO};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    Line { a: C64, b: C64 },
    /// `center + radius·e^{iφ}` for φ running from `from` to `to`.
    Arc { center: C64, radius: f64, from: f64, to: f64 },
}

impl Segment {
    pub fn line(a: C64, b: C64) -> Self {
        Segment::Line { a, b }
    }

    pub fn start(&self) -> C64 {
        self.point(0.0).0
    }

    pub fn end(&self) -> C64 {
        self.point(1.0).0
    }

    /// Point and derivative at parameter `u ∈ [0, 1]`.
    fn point(&self, u: f64) -> (C64, C64) {
        match *self {
            Segment::Line { a, b } => (a + (b - a) * u, b - a),
            Segment::Arc { center, radius, from, to } => {
                let phi = from + (to - from) * u;
                let e = C64::from_polar(radius, phi);
                (center + e, e * C64::new(0.0, to - from))
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { abs_tol: 1e-10, rel_tol: 1e-9, max_panels: 10_000 }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: C64,
    pub error: f64,
    pub panels: usize,
}

struct Panel {
    seg: usize,
    u0: f64,
    u1: f64,
    value: C64,
    error: f64,
}

fn kronrod<F: Fn(C64) -> C64>(f: &F, seg: &Segment, u0: f64, u1: f64) -> (C64, f64) {
    let half = 0.5 * (u1 - u0);
    let mid = 0.5 * (u1 + u0);
    let eval = |u: f64| {
        let (z, dz) = seg.point(u);
        f(z) * dz
    };
    let fc = eval(mid);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let s = eval(mid - dx) + eval(mid + dx);
        k += s * WGK[i];
        if i % 2 == 1 {
            g += s * WG[i / 2];
        }
    }
    let k = k * half;
    let g = g * half;
    let err = (k - g).norm();
    let err = if err.is_finite() { err } else { f64::INFINITY };
    (k, err)
}

pub fn integrate_path<F: Fn(C64) -> C64>(f: F, path: &[Segment], cfg: &QuadConfig) -> Result<QuadResult> {
    let mut panels: Vec<Panel> = Vec::new();
    for (i, seg) in path.iter().enumerate() {
        for p in 0..4 {
            let (u0, u1) = (p as f64 / 4.0, (p + 1) as f64 / 4.0);
            let (value, error) = kronrod(&f, seg, u0, u1);
            panels.push(Panel { seg: i, u0, u1, value, error });
        }
    }
    loop {
        let total: C64 = sum_ordered(&mut panels);
        let err: f64 = panels.iter().map(|p| p.error).sum();
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::QuadratureFailure("non-finite integrand".into()));
        }
        if err <= cfg.abs_tol.max(cfg.rel_tol * total.norm()) {
            return Ok(QuadResult { value: total, error: err, panels: panels.len() });
        }
        if panels.len() >= cfg.max_panels {
            return Err(Error::QuadratureFailure(format!(
                "estimated error {err:.3e} after {} panels",
                panels.len()
            )));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.partial_cmp(&b.1.error).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.u0 + p.u1);
        let seg = &path[p.seg];
        for (u0, u1) in [(p.u0, mid), (mid, p.u1)] {
            let (value, error) = kronrod(&f, seg, u0, u1);
            panels.push(Panel { seg: p.seg, u0, u1, value, error });
        }
    }
}

fn sum_ordered(panels: &mut [Panel]) -> C64 {
    let mut order: Vec<usize> = (0..panels.len()).collect();
    order.sort_by(|&a, &b| {
        (panels[a].seg, panels[a].u0)
            .partial_cmp(&(panels[b].seg, panels[b].u0))
            .unwrap()
    });
    order.iter().fold(ZERO, |acc, &i| acc + panels[i].value)
}

/// Integral of a real-line function over `[a, b]`.
pub fn integrate_real<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    integrate_path(|z: C64| f(z.re), &[Segment::line(C64::new(a, 0.0), C64::new(b, 0.0))], cfg)
}
