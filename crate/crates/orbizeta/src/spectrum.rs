//! Closed geodesics of explicit Fuchsian groups and truncated Euler products over them.
//!
//! Group elements are found by a pruned search of the Cayley graph in the upper half plane
//! around a generic basepoint `o`. Conjugacy classes are represented by the conjugates whose
//! axis passes within the covering radius of `o`; among those the one with the smallest matrix
//! key is the class representative.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::{length_from_trace, Mat2};
use crate::error::{Error, Result};
use crate::groups::{FuchsianPresentation, Word};
use crate::linalg::{det, identity, scalar, CMat, C64, ONE};
use crate::representation::Representation;

pub const CACHE_FORMAT: &str = "orbizeta-spectrum-1";
const BASEPOINT: C64 = C64::new(0.0713, 1.0931);
const HYP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeodesicClass {
    pub word: Word,
    pub length: f64,
    /// n_Γ(γ): the class is the n-th power of a prime class.
    pub multiplicity: u32,
    pub trace: f64,
    pub t_exponent: i64,
}

impl GeodesicClass {
    pub fn prime_word(&self) -> &[i32] {
        &self.word[..self.word.len() / self.multiplicity as usize]
    }

    pub fn is_prime(&self) -> bool {
        self.multiplicity == 1
    }

    /// ρ of the canonical lift: ρ(word)·λ^{−t_exponent}.
    pub fn rho(&self, rep: &Representation) -> CMat {
        rep.eval_word(&self.word) * rep.lambda.powi(-self.t_exponent as i32)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub format: String,
    pub preset: String,
    pub max_word: usize,
    pub max_length: f64,
    /// Length below which the class list is believed complete.
    pub certified_length: f64,
    pub covering_radius: f64,
    pub elements_searched: usize,
    pub classes: Vec<GeodesicClass>,
}

impl Spectrum {
    pub fn primes(&self) -> impl Iterator<Item = &GeodesicClass> {
        self.classes.iter().filter(|c| c.is_prime())
    }

    pub fn shortest_length(&self) -> Option<f64> {
        self.classes.first().map(|c| c.length)
    }

    pub fn matches(&self, preset: &str, max_word: usize, max_length: f64) -> bool {
        self.format == CACHE_FORMAT && self.preset == preset && self.max_word == max_word && self.max_length == max_length
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("serialisable");
        std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Spectrum> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Spectrum> {
        let s: Spectrum = serde_json::from_str(text).map_err(|e| Error::Input(format!("spectrum cache: {e}")))?;
        if s.format != CACHE_FORMAT {
            return Err(Error::Input(format!("unsupported spectrum cache format {:?}", s.format)));
        }
        Ok(s)
    }
}

/// Loads `path` if it holds a spectrum for these parameters, otherwise enumerates and writes it.
pub fn cached_spectrum(path: &Path, grp: &FuchsianPresentation, max_length: f64, max_word: usize) -> Result<Spectrum> {
    if let Ok(s) = Spectrum::load(path) {
        if s.matches(&grp.name, max_word, max_length) {
            return Ok(s);
        }
    }
    let s = enumerate_spectrum(grp, max_length, max_word)?;
    s.save(path)?;
    Ok(s)
}

// ---------------------------------------------------------------------------------------------
// Hyperbolic plane helpers

fn mobius(m: &Mat2, z: C64) -> C64 {
    (z * m[(0, 0)] + m[(0, 1)]) / (z * m[(1, 0)] + m[(1, 1)])
}

fn hdist(z: C64, w: C64) -> f64 {
    (1.0 + (z - w).norm_sqr() / (2.0 * z.im * w.im)).acosh()
}

fn displacement(m: &Mat2) -> f64 {
    hdist(BASEPOINT, mobius(m, BASEPOINT))
}

fn inv2(m: &Mat2) -> Mat2 {
    Mat2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

type Key = [i64; 4];

/// Matrix key of a projective class.
fn key(m: &Mat2) -> Key {
    let e = [m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]];
    let s = e.iter().find(|x| x.abs() > 1e-5).map_or(1.0, |x| x.signum());
    e.map(|x| (x * s * 1e6).round() as i64)
}

/// Distance from the basepoint to the axis of a hyperbolic element of length `len`.
fn axis_distance(disp: f64, len: f64) -> f64 {
    ((disp / 2.0).sinh() / (len / 2.0).sinh()).max(1.0).acosh()
}

pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(word: &[i32]) -> Word {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w = w[1..w.len() - 1].to_vec();
    }
    w
}

pub fn inverse_word(word: &[i32]) -> Word {
    word.iter().rev().map(|l| -l).collect()
}

// ---------------------------------------------------------------------------------------------
// Ball search

#[derive(Debug, Clone)]
struct Elem {
    word: Word,
    mat: Mat2,
    disp: f64,
}

struct Ball {
    elems: Vec<Elem>,
    /// Smallest displacement of an element that the word-length limit kept out of the ball.
    missing: f64,
}

fn ball_search(steps: &[(Word, Mat2)], radius: f64, max_word: usize) -> Ball {
    let mut elems = vec![Elem { word: Vec::new(), mat: Mat2::identity(), disp: 0.0 }];
    let mut seen: HashMap<Key, usize> = HashMap::new();
    seen.insert(key(&Mat2::identity()), 0);
    let mut blocked: Vec<(Key, f64)> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (sw, sm) in steps {
            let mat = elems[i].mat * sm;
            let disp = displacement(&mat);
            if disp > radius {
                continue;
            }
            let k = key(&mat);
            if seen.contains_key(&k) {
                continue;
            }
            let mut word = elems[i].word.clone();
            word.extend_from_slice(sw);
            let word = free_reduce(&word);
            if word.len() > max_word {
                blocked.push((k, disp));
                continue;
            }
            seen.insert(k, elems.len());
            elems.push(Elem { word, mat, disp });
            queue.push_back(elems.len() - 1);
        }
    }
    let missing = blocked
        .iter()
        .filter(|(k, _)| !seen.contains_key(k))
        .map(|&(_, d)| d)
        .fold(f64::INFINITY, f64::min);
    Ball { elems, missing }
}

/// Largest distance from a sample point near the basepoint to the orbit of the basepoint.
fn covering_radius(orbit: &[C64], sample_radius: f64) -> f64 {
    let (x0, y0) = (BASEPOINT.re, BASEPOINT.im);
    let to_base = Mat2::new(y0.sqrt(), x0 / y0.sqrt(), 0.0, 1.0 / y0.sqrt());
    let mut worst: f64 = 0.0;
    let nr = (sample_radius / 0.05).ceil() as usize;
    for ir in 1..=nr {
        let r = ir as f64 * 0.05;
        for ia in 0..96 {
            let a = ia as f64 * PI / 96.0;
            let rot = crate::cover::rotation(a);
            let p = mobius(&(to_base * rot), C64::new(0.0, r.exp()));
            let f = orbit.iter().map(|&q| hdist(p, q)).fold(f64::INFINITY, f64::min);
            worst = worst.max(f);
        }
    }
    worst
}

/// Generators and their inverses as search steps.
fn generator_steps(grp: &FuchsianPresentation) -> Vec<(Word, Mat2)> {
    let mut steps = Vec::new();
    for k in 0..grp.generators.len() as i32 {
        for l in [k + 1, -(k + 1)] {
            steps.push((vec![l], grp.matrix_of(&[l])));
        }
    }
    steps
}

struct Geometry {
    steps: Vec<(Word, Mat2)>,
    covering_radius: f64,
}

fn geometry(grp: &FuchsianPresentation) -> Result<Geometry> {
    let mut probe = 4.0;
    loop {
        let ball = ball_search(&generator_steps(grp), probe, 64);
        let orbit: Vec<C64> = ball.elems.iter().map(|e| mobius(&e.mat, BASEPOINT)).collect();
        let sample = probe / 2.0;
        let d = covering_radius(&orbit, sample) + 0.05;
        if d < sample - 0.1 {
            let steps = ball
                .elems
                .iter()
                .filter(|e| !e.word.is_empty() && e.disp <= 2.0 * d + 0.1)
                .map(|e| (e.word.clone(), e.mat))
                .collect();
            return Ok(Geometry { steps, covering_radius: d });
        }
        if probe > 8.0 {
            return Err(Error::NonConvergent(d));
        }
        probe += 2.0;
    }
}

// ---------------------------------------------------------------------------------------------
// Enumeration

struct Candidate {
    idx: usize,
    len: f64,
}

pub fn enumerate_spectrum(grp: &FuchsianPresentation, max_length: f64, max_word: usize) -> Result<Spectrum> {
    if !(max_length > 0.0) {
        return Err(Error::Input("max_length must be positive".into()));
    }
    let geo = geometry(grp)?;
    let d = geo.covering_radius;
    let keep = max_length + 2.0 * d;
    let ball = ball_search(&geo.steps, keep + d, max_word);
    let elems = &ball.elems;

    let mut cands: Vec<Candidate> = Vec::new();
    let mut cand_keys: HashMap<Key, usize> = HashMap::new();
    for (idx, e) in elems.iter().enumerate() {
        let tr = e.mat.trace().abs();
        if e.disp > keep || tr <= 2.0 + HYP_TOL {
            continue;
        }
        let len = length_from_trace(tr);
        if len > max_length + 1e-9 || axis_distance(e.disp, len) > d {
            continue;
        }
        cand_keys.insert(key(&e.mat), cands.len());
        cands.push(Candidate { idx, len });
    }
    let conj_radius = 2.0 * d + max_length / 2.0 + 0.1;
    let conjugators: Vec<&Elem> = elems.iter().filter(|e| e.disp <= conj_radius).collect();

    // For each candidate: smallest key among candidate conjugates, the conjugator that reaches
    // it, and whether a shorter commuting element exists.
    let results: Vec<(Key, Option<usize>, bool)> = cands
        .par_iter()
        .map(|cand| {
            let h = elems[cand.idx].mat;
            let own = key(&h);
            let mut best = (own, None);
            let mut primitive = true;
            let hn = h.norm();
            for (gi, g) in conjugators.iter().enumerate() {
                if g.disp > 2.0 * d + cand.len / 2.0 + 0.1 {
                    continue;
                }
                let conj = g.mat * h * inv2(&g.mat);
                let k = key(&conj);
                if k < best.0 && cand_keys.contains_key(&k) {
                    best = (k, Some(gi));
                }
                let gtr = g.mat.trace().abs();
                if primitive && gtr > 2.0 + HYP_TOL && length_from_trace(gtr) < cand.len - 1e-9 {
                    let comm = g.mat * h - h * g.mat;
                    if comm.norm() < 1e-8 * hn * g.mat.norm() {
                        primitive = false;
                    }
                }
            }
            (best.0, best.1, primitive)
        })
        .collect();

    let mut primes: Vec<GeodesicClass> = Vec::new();
    for (cand, (best, _, primitive)) in cands.iter().zip(&results) {
        if !primitive || *best != key(&elems[cand.idx].mat) {
            continue;
        }
        let word = cyclic_reduce(&elems[cand.idx].word);
        primes.push(make_class(grp, word, 1)?);
    }
    if primes.is_empty() {
        return Err(Error::CutoffTooSmall);
    }
    primes.sort_by(|a, b| a.length.partial_cmp(&b.length).unwrap().then_with(|| a.word.cmp(&b.word)));

    let mut classes = Vec::new();
    for p in &primes {
        let mut k = 1u32;
        while k as f64 * p.length <= max_length + 1e-9 {
            if k == 1 {
                classes.push(p.clone());
            } else {
                classes.push(make_class(grp, p.word.repeat(k as usize), k)?);
            }
            k += 1;
        }
    }
    classes.sort_by(|a, b| a.length.partial_cmp(&b.length).unwrap().then_with(|| a.word.cmp(&b.word)));
    let certified = (ball.missing - 3.0 * d).clamp(0.0, max_length);
    Ok(Spectrum {
        format: CACHE_FORMAT.to_string(),
        preset: grp.name.clone(),
        max_word,
        max_length,
        certified_length: certified,
        covering_radius: d,
        elements_searched: elems.len(),
        classes,
    })
}

fn make_class(grp: &FuchsianPresentation, word: Word, multiplicity: u32) -> Result<GeodesicClass> {
    let trace = grp.matrix_of(&word).trace();
    Ok(GeodesicClass {
        length: length_from_trace(trace),
        t_exponent: canonical_t_exponent(&word, grp)?,
        word,
        multiplicity,
        trace,
    })
}

/// Translation number of the lifted word, in units of radians on the direction line.
pub fn translation_number(word: &[i32], grp: &FuchsianPresentation) -> f64 {
    let lift = grp.lift_of(word);
    lift.fixed_point_translation().unwrap_or_else(|| lift.translation_number(4096))
}

/// Power of t separating the lifted word from the canonical lift of its hyperbolic class.
pub fn canonical_t_exponent(word: &[i32], grp: &FuchsianPresentation) -> Result<i64> {
    grp.lift_of(word).t_exponent()
}

// ---------------------------------------------------------------------------------------------
// Truncated Euler products

#[derive(Debug, Clone, Copy)]
pub struct Truncation {
    /// Only classes with length ≤ cutoff enter.
    pub cutoff: f64,
    /// Largest acceptable estimate of the omitted tail.
    pub tail_tol: f64,
}

impl Truncation {
    pub fn new(cutoff: f64) -> Self {
        Truncation { cutoff, tail_tol: 1e-3 }
    }
}

/// Exponential growth rate of ‖ρ(γ)‖ against ℓ(γ) over the stored classes.
fn growth_rate(rep: &Representation, spec: &Spectrum) -> f64 {
    spec.primes()
        .map(|c| {
            let r = crate::linalg::eigenvalues(&c.rho(rep)).iter().map(|z| z.norm()).fold(0.0, f64::max);
            r.ln().max(0.0) / c.length
        })
        .fold(0.0, f64::max)
}

fn check_domain(s: C64, rep: &Representation, spec: &Spectrum, tr: &Truncation) -> Result<()> {
    if spec.classes.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let excess = s.re - 1.0 - growth_rate(rep, spec);
    let l = tr.cutoff.max(1.0);
    let tail = rep.n as f64 * (-excess * l).exp() / (excess * l);
    if excess <= 0.0 || tail > tr.tail_tol {
        return Err(Error::ConvergenceDomain(format!(
            "Re(s) = {} too small for cutoff {} (tail estimate {tail:.2e})",
            s.re, tr.cutoff
        )));
    }
    Ok(())
}

fn euler_factor(rho: &CMat, z: C64) -> C64 {
    det(&(identity(rho.nrows()) - rho * z))
}

/// Largest exponent σ·ℓ kept in the k-product of Z.
const K_EXPONENT: f64 = 36.9;

/// ∏_{prime γ, ℓ ≤ cutoff} ∏_k det(I − ρ(γ) e^{−(s+k)ℓ}).
pub fn truncated_selberg(s: C64, rep: &Representation, spec: &Spectrum, tr: &Truncation) -> Result<C64> {
    check_domain(s, rep, spec, tr)?;
    let mut z = ONE;
    for p in spec.primes().filter(|c| c.length <= tr.cutoff) {
        let rho = p.rho(rep);
        let mut k = 0u32;
        while (s.re + k as f64) * p.length <= K_EXPONENT || k == 0 {
            z *= euler_factor(&rho, (-(s + k as f64) * p.length).exp());
            k += 1;
        }
    }
    Ok(z)
}

/// ∏_{prime γ, ℓ ≤ cutoff} det(I − ρ(γ) e^{−sℓ}).
pub fn truncated_ruelle(s: C64, rep: &Representation, spec: &Spectrum, tr: &Truncation) -> Result<C64> {
    check_domain(s, rep, spec, tr)?;
    let mut z = ONE;
    for p in spec.primes().filter(|c| c.length <= tr.cutoff) {
        z *= euler_factor(&p.rho(rep), (-s * p.length).exp());
    }
    Ok(z)
}

/// Σ_γ ℓ(γ) tr ρ(γ) e^{−(s−1/2)ℓ(γ)} / (2 n_Γ(γ) sinh(ℓ(γ)/2)) over all powers γ = γ₀^k of the
/// primes γ₀ with ℓ(γ₀) ≤ cutoff, so that it is the exact log-derivative of the truncated Z.
pub fn truncated_log_derivative(s: C64, rep: &Representation, spec: &Spectrum, tr: &Truncation) -> Result<C64> {
    check_domain(s, rep, spec, tr)?;
    let decay = s.re - 0.5 - growth_rate(rep, spec);
    let mut sum = C64::new(0.0, 0.0);
    for p in spec.primes().filter(|c| c.length <= tr.cutoff) {
        let rho = p.rho(rep);
        let mut power = rho.clone();
        let mut k = 1u32;
        loop {
            let l = k as f64 * p.length;
            sum += power.trace() * l * (-(s - 0.5) * l).exp() / (2.0 * k as f64 * (l / 2.0).sinh());
            if decay * l > K_EXPONENT {
                break;
            }
            power = &power * &rho;
            k += 1;
        }
    }
    Ok(sum)
}

/// The matrix ρ(t) for a representation; handy when comparing lifts.
pub fn fiber_image(rep: &Representation) -> CMat {
    scalar(rep.n, rep.lambda)
}
