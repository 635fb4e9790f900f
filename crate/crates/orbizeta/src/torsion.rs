//! Reidemeister torsion of based acyclic complexes and of the unit tangent bundle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, det, identity, max_norm, scalar, submatrix, CMat, C64, ONE};
use crate::orbifold::OrbifoldSignature;
use crate::representation::Representation;

const RANK_TOL: f64 = 1e-10;
const PIVOT_TOL: f64 = 1e-12;
const RETRIES: u64 = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct BasedChainComplex {
    /// dim C_i for i = 0..=d.
    pub dims: Vec<usize>,
    /// `boundaries[i − 1]` is ∂_i : C_i → C_{i−1}, of shape dims[i−1] × dims[i].
    pub boundaries: Vec<CMat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TorsionValue {
    #[serde(serialize_with = "ser_c")]
    pub value: C64,
    pub sign_ambiguous: bool,
}

fn ser_c<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

impl TorsionValue {
    pub fn new(value: C64) -> Self {
        TorsionValue { value, sign_ambiguous: true }
    }

    /// Relative distance of the ratio to the nearer of ±1.
    pub fn sign_distance(&self, other: &TorsionValue) -> f64 {
        sign_distance(self.value, other.value)
    }

    pub fn agrees_up_to_sign(&self, other: &TorsionValue, tol: f64) -> bool {
        self.sign_distance(other) <= tol
    }
}

pub fn sign_distance(a: C64, b: C64) -> f64 {
    let r = a / b;
    (r - ONE).norm().min((r + ONE).norm())
}

impl BasedChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<CMat>) -> Result<Self> {
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch("need one boundary map per positive degree".into()));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if d.nrows() != dims[i] || d.ncols() != dims[i + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "∂_{} is {}x{}, expected {}x{}",
                    i + 1,
                    d.nrows(),
                    d.ncols(),
                    dims[i],
                    dims[i + 1]
                )));
            }
        }
        Ok(BasedChainComplex { dims, boundaries })
    }

    /// max_i ‖∂_i ∂_{i+1}‖.
    pub fn chain_residual(&self) -> f64 {
        self.boundaries
            .windows(2)
            .map(|w| max_norm(&(&w[0] * &w[1])))
            .fold(0.0, f64::max)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.boundaries.iter().map(|d| linalg::rank(d, RANK_TOL)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let r = self.ranks();
        (0..self.dims.len()).all(|i| {
            let out = if i == 0 { 0 } else { r[i - 1] };
            let inc = r.get(i).copied().unwrap_or(0);
            out + inc == self.dims[i]
        })
    }
}

/// Choose `k` columns of `m` (restricted to `cols`) greedily by residual norm; with `rng`, the
/// choice among near-maximal candidates is randomised.
fn choose_columns(m: &CMat, cols: &[usize], k: usize, rng: Option<&mut ChaCha8Rng>) -> Vec<usize> {
    match rng {
        None => linalg::pivot_columns(m, k, cols, PIVOT_TOL),
        Some(rng) => {
            let mut order = cols.to_vec();
            order.shuffle(rng);
            // Greedy over a random order, keeping any column that stays well independent.
            let mut chosen: Vec<usize> = Vec::new();
            let scale = linalg::singular_values(m).first().copied().unwrap_or(1.0);
            for &c in &order {
                if chosen.len() == k {
                    break;
                }
                let mut trial = chosen.clone();
                trial.push(c);
                let sub = submatrix(m, &(0..m.nrows()).collect::<Vec<_>>(), &trial);
                let sv = linalg::singular_values(&sub);
                if sv.last().copied().unwrap_or(0.0) > 1e-3 * scale * rng.random_range(0.5..1.0) {
                    chosen = trial;
                }
            }
            chosen
        }
    }
}

fn try_torsion(cx: &BasedChainComplex, rng: Option<&mut ChaCha8Rng>) -> Result<(C64, f64)> {
    let mut rng = rng;
    let mut value = ONE;
    let mut worst = f64::INFINITY;
    // α_0 = ∅: all of C_0 must be hit by ∂_1.
    let mut beta: Vec<usize> = (0..cx.dims[0]).collect();
    for (idx, d) in cx.boundaries.iter().enumerate() {
        let i = idx + 1;
        let rows = submatrix(d, &beta, &(0..d.ncols()).collect::<Vec<_>>());
        let all_cols: Vec<usize> = (0..d.ncols()).collect();
        let alpha = choose_columns(&rows, &all_cols, beta.len(), rng.as_deref_mut());
        if alpha.len() != beta.len() {
            return Err(Error::IllConditioned(format!("no pivot block for ∂_{i}")));
        }
        let block = submatrix(d, &beta, &alpha);
        let sv = linalg::singular_values(&block);
        let scale = linalg::singular_values(d).first().copied().unwrap_or(1.0).max(1e-300);
        if let Some(&smin) = sv.last() {
            worst = worst.min(smin / scale);
        }
        let dv = det(&block);
        value *= if i % 2 == 0 { dv } else { dv.inv() };
        let mut alpha_sorted = alpha.clone();
        alpha_sorted.sort_unstable();
        beta = (0..cx.dims[i]).filter(|c| alpha_sorted.binary_search(c).is_err()).collect();
    }
    if !beta.is_empty() {
        return Err(Error::NotAcyclic("top-degree chains are not all boundaries".into()));
    }
    Ok((value, worst))
}

/// tor = ∏_i [b^i ⊔ b̃^{i−1} : c^i]^{(−1)^i}, evaluated through square pivot blocks of the ∂_i.
pub fn torsion_of_complex(cx: &BasedChainComplex) -> Result<TorsionValue> {
    if !cx.is_acyclic() {
        return Err(Error::NotAcyclic(format!("ranks {:?} vs dims {:?}", cx.ranks(), cx.dims)));
    }
    let (v, cond) = try_torsion(cx, None)?;
    if cond > PIVOT_TOL {
        return Ok(TorsionValue::new(v));
    }
    for seed in 0..RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Ok((v, cond)) = try_torsion(cx, Some(&mut rng)) {
            if cond > PIVOT_TOL {
                return Ok(TorsionValue::new(v));
            }
        }
    }
    Err(Error::IllConditioned(format!("pivot blocks below {PIVOT_TOL:e} of scale")))
}

/// Same, with a seeded random pivot choice (for invariance testing).
pub fn torsion_with_pivot_seed(cx: &BasedChainComplex, seed: u64) -> Result<TorsionValue> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    try_torsion(cx, Some(&mut rng)).map(|(v, _)| TorsionValue::new(v))
}

/// Twisted cellular complex of the 2-complex X₀.
pub fn x0_complex(rep: &Representation, sig: &OrbifoldSignature) -> BasedChainComplex {
    let n = rep.n;
    let k = 2 * sig.genus() as usize + sig.num_cones();
    let gens: Vec<&CMat> = rep.generators();
    let t = rep.t_matrix();
    let id = identity(n);
    let mut d2 = CMat::zeros(n * (k + 1), n * k);
    for (b, g) in gens.iter().enumerate() {
        d2.view_mut((b * n, b * n), (n, n)).copy_from(&(&id - &t));
        d2.view_mut((k * n, b * n), (n, n)).copy_from(&(*g - &id));
    }
    let mut d1 = CMat::zeros(n, n * (k + 1));
    for (b, g) in gens.iter().enumerate() {
        d1.view_mut((0, b * n), (n, n)).copy_from(&(*g - &id));
    }
    d1.view_mut((0, k * n), (n, n)).copy_from(&(&t - &id));
    BasedChainComplex { dims: vec![n, n * (k + 1), n * k], boundaries: vec![d1, d2] }
}

pub fn solid_torus_torsion(core: &CMat) -> Result<TorsionValue> {
    let n = core.nrows();
    let d = det(&(identity(n) - core));
    let scale = linalg::singular_values(core).first().copied().unwrap_or(1.0).max(1.0);
    if d.norm() < 1e-12 * scale.powi(n as i32) {
        return Err(Error::NonAcyclicTorus);
    }
    Ok(TorsionValue::new(d.inv()))
}

fn require_acyclic(rep: &Representation) -> Result<()> {
    if (rep.lambda - ONE).norm() < 1e-10 {
        return Err(Error::NotAcyclic("λ = 1".into()));
    }
    Ok(())
}

/// tor(X₀)·tor(N_t)·∏_j tor(N_j).
pub fn assembled_torsion(rep: &Representation, sig: &OrbifoldSignature) -> Result<TorsionValue> {
    require_acyclic(rep)?;
    let mut v = torsion_of_complex(&x0_complex(rep, sig))?.value;
    v *= solid_torus_torsion(&scalar(rep.n, rep.lambda))?.value;
    for cj in &rep.c {
        v *= solid_torus_torsion(cj)?.value;
    }
    Ok(TorsionValue::new(v))
}

/// det(ρ(t) − I)^{2g+s−2} / ∏_j det(ρ(c_j) − I).
pub fn closed_form_torsion(rep: &Representation, sig: &OrbifoldSignature) -> Result<TorsionValue> {
    require_acyclic(rep)?;
    let n = rep.n;
    let id = identity(n);
    let dt = det(&(rep.t_matrix() - &id));
    let mut v = dt.powi(sig.relator_t_power() as i32);
    for cj in &rep.c {
        v /= det(&(cj - &id));
    }
    Ok(TorsionValue::new(v))
}
