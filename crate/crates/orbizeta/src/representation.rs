//! Representations of π₁ of the unit tangent bundle, given on the generators of the presentation
//! `[a_1,b_1]⋯[a_g,b_g] c_1⋯c_s = t^{2g−2+s}`, `c_j^{ν_j} = t`, `t` central.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{parse_triangle, standard_group};
use crate::linalg::{self, c, commutator, det, identity, inverse, max_norm, pow, scalar, CMat, C64, ONE};
use crate::orbifold::{parse_signature_label, OrbifoldSignature};

pub const DEFAULT_TOL: f64 = 1e-9;
const CLUSTER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub n: usize,
    pub a: Vec<CMat>,
    pub b: Vec<CMat>,
    pub c: Vec<CMat>,
    pub lambda: C64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub r1_residuals: Vec<f64>,
    pub r2_residual: f64,
    pub lambda_modulus_residual: f64,
    pub root_of_unity_residual: f64,
    pub max_condition_number: f64,
    pub tol: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPartDecomposition {
    pub cone_index: usize,
    pub n_j: usize,
    #[serde(serialize_with = "ser_complex_vec")]
    pub nonfixed_eigenvalues: Vec<C64>,
    #[serde(serialize_with = "ser_complex")]
    pub det_i_minus_t: C64,
    #[serde(serialize_with = "ser_complex")]
    pub det_t: C64,
}

fn ser_complex<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

fn ser_complex_vec<S: serde::Serializer>(v: &[C64], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
}

impl Representation {
    pub fn trivial(sig: &OrbifoldSignature, n: usize) -> Self {
        let g = sig.genus() as usize;
        Representation {
            n,
            a: vec![identity(n); g],
            b: vec![identity(n); g],
            c: vec![identity(n); sig.num_cones()],
            lambda: ONE,
        }
    }

    /// ρ(t) = λ·I.
    pub fn t_matrix(&self) -> CMat {
        scalar(self.n, self.lambda)
    }

    /// Generator matrices in presentation order a_1, b_1, …, a_g, b_g, c_1, …, c_s.
    pub fn generators(&self) -> Vec<&CMat> {
        let mut out = Vec::new();
        for (a, b) in self.a.iter().zip(&self.b) {
            out.push(a);
            out.push(b);
        }
        out.extend(self.c.iter());
        out
    }

    /// ρ of a word over the generators (letters as in [`crate::groups::Word`]).
    pub fn eval_word(&self, word: &[i32]) -> CMat {
        let gens = self.generators();
        let mut out = identity(self.n);
        for &l in word {
            let g = gens[(l.unsigned_abs() - 1) as usize];
            out = if l > 0 { out * g } else { out * inverse(g).expect("invertible generator") };
        }
        out
    }

    pub fn weight_m(&self) -> Result<f64> {
        weight_m(self.lambda)
    }

    /// Conjugates every generator by `p`.
    pub fn conjugate(&self, p: &CMat) -> Self {
        let pinv = inverse(p).expect("invertible change of basis");
        let cj = |ms: &[CMat]| ms.iter().map(|m| p * m * &pinv).collect();
        Representation { n: self.n, a: cj(&self.a), b: cj(&self.b), c: cj(&self.c), lambda: self.lambda }
    }

    /// tr ρ(c_j^k) for k = 0..ν_j−1 (0-based cone index).
    pub fn cone_traces(&self, j: usize, nu: u32) -> Vec<C64> {
        let mut out = Vec::with_capacity(nu as usize);
        let mut p = identity(self.n);
        for _ in 0..nu {
            out.push(p.trace());
            p = &p * &self.c[j];
        }
        out
    }
}

/// m ∈ (−1, 1] with λ = e^{−iπm}.
pub fn weight_m(lambda: C64) -> Result<f64> {
    let modulus = lambda.norm();
    if (modulus - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitModulusLambda(modulus));
    }
    let m = -lambda.arg() / PI;
    // arg ∈ (−π, π] gives m ∈ [−1, 1); move −1 to +1.
    Ok(if m <= -1.0 + 1e-15 { 1.0 } else { m + 0.0 })
}

pub fn lambda_from_m(m: f64) -> C64 {
    C64::from_polar(1.0, -PI * m)
}

fn check_dims(rep: &Representation, sig: &OrbifoldSignature) -> Result<()> {
    let g = sig.genus() as usize;
    if rep.a.len() != g || rep.b.len() != g || rep.c.len() != sig.num_cones() {
        return Err(Error::DimensionMismatch(format!(
            "expected {g} A, {g} B, {} C matrices, got {}, {}, {}",
            sig.num_cones(),
            rep.a.len(),
            rep.b.len(),
            rep.c.len()
        )));
    }
    for m in rep.generators() {
        if m.nrows() != rep.n || m.ncols() != rep.n {
            return Err(Error::DimensionMismatch(format!("generator is {}x{}, n = {}", m.nrows(), m.ncols(), rep.n)));
        }
    }
    Ok(())
}

/// Product [A_1,B_1]⋯[A_g,B_g].
fn commutator_product(rep: &Representation) -> Option<CMat> {
    let mut prod = identity(rep.n);
    for (a, b) in rep.a.iter().zip(&rep.b) {
        prod *= commutator(a, b)?;
    }
    Some(prod)
}

pub fn validate(rep: &Representation, sig: &OrbifoldSignature, tol: f64) -> Result<ValidationReport> {
    check_dims(rep, sig)?;
    let n = rep.n;
    let lambda_modulus_residual = (rep.lambda.norm() - 1.0).abs();
    let max_condition_number = rep
        .generators()
        .iter()
        .map(|m| linalg::condition_number(m))
        .fold(1.0, f64::max);
    let r1_residuals: Vec<f64> = rep
        .c
        .iter()
        .zip(sig.cone_orders())
        .map(|(cj, &nu)| max_norm(&(pow(cj, nu) - scalar(n, rep.lambda))))
        .collect();
    let r2_residual = match commutator_product(rep) {
        Some(mut lhs) => {
            for cj in &rep.c {
                lhs *= cj;
            }
            let k = sig.relator_t_power();
            max_norm(&(lhs - scalar(n, rep.lambda.powi(k as i32))))
        }
        None => f64::INFINITY,
    };
    let e = sig.lambda_root_exponent(n);
    let root_of_unity_residual = (rep.lambda.powi(e as i32) - ONE).norm();
    let passed = max_condition_number.is_finite()
        && max_condition_number < 1e12
        && lambda_modulus_residual <= tol
        && r2_residual <= tol
        && r1_residuals.iter().all(|&r| r <= tol)
        && root_of_unity_residual <= tol.max(1e-9);
    Ok(ValidationReport {
        r1_residuals,
        r2_residual,
        lambda_modulus_residual,
        root_of_unity_residual,
        max_condition_number,
        tol,
        passed,
    })
}

pub fn fixed_decomposition(rep: &Representation, sig: &OrbifoldSignature, j: usize) -> Result<FixedPartDecomposition> {
    let cj = rep
        .c
        .get(j)
        .ok_or_else(|| Error::DimensionMismatch(format!("no cone {}", j + 1)))?;
    let nu = sig.cone_orders()[j];
    let eig = linalg::eigenvalues(cj);
    let scale = rep.lambda.norm().max(1.0);
    for a in &eig {
        if (a.powu(nu) - rep.lambda).norm() > CLUSTER_TOL * 10.0 * scale * nu as f64 {
            return Err(Error::NotDiagonalizable(j + 1));
        }
    }
    let fixed_by_eig = eig.iter().filter(|a| (*a - ONE).norm() < CLUSTER_TOL).count();
    let kernel = linalg::null_space(&(cj - identity(rep.n)), CLUSTER_TOL * linalg::singular_values(cj)[0].max(1.0)).ncols();
    if kernel != fixed_by_eig {
        return Err(Error::NotDiagonalizable(j + 1));
    }
    let nonfixed: Vec<C64> = eig.into_iter().filter(|a| (*a - ONE).norm() >= CLUSTER_TOL).collect();
    let det_i_minus_t = nonfixed.iter().fold(ONE, |acc, a| acc * (ONE - a));
    let det_t = nonfixed.iter().fold(ONE, |acc, a| acc * a);
    Ok(FixedPartDecomposition { cone_index: j + 1, n_j: kernel, nonfixed_eigenvalues: nonfixed, det_i_minus_t, det_t })
}

// ---------------------------------------------------------------------------------------------
// Random representations

fn gaussian_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    CMat::from_fn(n, n, |_, _| {
        // Box–Muller.
        let (u1, u2): (f64, f64) = (rng.random::<f64>().max(1e-300), rng.random());
        let r = (-2.0 * u1.ln()).sqrt();
        c(r * (2.0 * PI * u2).cos(), r * (2.0 * PI * u2).sin()) * std::f64::consts::FRAC_1_SQRT_2
    })
}

fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    gaussian_matrix(n, rng).qr().q()
}

/// U₁·diag(e^{x})·U₂ with x ∈ [−½, ½]: condition number at most e.
fn random_conditioned(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    let d: Vec<C64> = (0..n).map(|_| c((rng.random::<f64>() - 0.5).exp(), 0.0)).collect();
    random_unitary(n, rng) * linalg::diag(&d) * random_unitary(n, rng)
}

fn random_unit_scalar(rng: &mut ChaCha8Rng) -> C64 {
    C64::from_polar((rng.random::<f64>() - 0.5).exp(), 2.0 * PI * rng.random::<f64>())
}

/// Residues (K_1, …, K_s) with Π_j det C_j = λ^{n(2g−2+s)} when C_j has eigenvalues e^{iφ/ν_j}ω_j^{k}
/// with Σk ≡ K_j.
pub fn feasible_residues(sig: &OrbifoldSignature, n: usize, lambda: C64) -> Vec<Vec<u32>> {
    let nu = sig.cone_orders();
    let phi = lambda.arg();
    let target = lambda.powi((n as i64 * sig.relator_t_power()) as i32);
    let mut out = Vec::new();
    let total: u64 = nu.iter().map(|&v| v as u64).product();
    if total > 2_000_000 {
        return out;
    }
    let mut tuple = vec![0u32; nu.len()];
    loop {
        let mut prod = ONE;
        for (j, &v) in nu.iter().enumerate() {
            let ang = n as f64 * phi / v as f64 + 2.0 * PI * tuple[j] as f64 / v as f64;
            prod *= C64::from_polar(1.0, ang);
        }
        if (prod - target).norm() < 1e-9 {
            out.push(tuple.clone());
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == nu.len() {
                return out;
            }
            tuple[i] += 1;
            if tuple[i] < nu[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// A random representation with ρ(t) = λ, deterministic in `seed`.
pub fn random_rep(sig: &OrbifoldSignature, n: usize, lambda: C64, seed: u64) -> Result<Representation> {
    if sig.genus() == 0 {
        return Err(Error::GenusZeroUnsupported);
    }
    if n == 0 {
        return Err(Error::Input("dimension must be positive".into()));
    }
    weight_m(lambda)?;
    let e = sig.lambda_root_exponent(n);
    if (lambda.powi(e as i32) - ONE).norm() > 1e-9 {
        return Err(Error::InfeasibleLambda(format!("λ^{e} ≠ 1")));
    }
    let residues = feasible_residues(sig, n, lambda);
    if residues.is_empty() {
        return Err(Error::InfeasibleLambda("no eigenvalue pattern satisfies the determinant condition".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = sig.genus() as usize;
    let phi = lambda.arg();
    for _attempt in 0..64 {
        let tuple = &residues[rng.random_range(0..residues.len())];
        let mut cs = Vec::new();
        for (j, &nu) in sig.cone_orders().iter().enumerate() {
            let mut ks: Vec<u32> = (0..n - 1).map(|_| rng.random_range(0..nu)).collect();
            let partial: u32 = ks.iter().sum::<u32>() % nu;
            ks.push((tuple[j] + nu - partial) % nu);
            let eig: Vec<C64> = ks
                .iter()
                .map(|&k| C64::from_polar(1.0, phi / nu as f64 + 2.0 * PI * k as f64 / nu as f64))
                .collect();
            let p = random_conditioned(n, &mut rng);
            cs.push(&p * linalg::diag(&eig) * inverse(&p).unwrap());
        }
        let mut a = vec![identity(n); g];
        let mut b = vec![identity(n); g];
        for i in 1..g {
            a[i] = random_conditioned(n, &mut rng);
            b[i] = random_conditioned(n, &mut rng);
        }
        let mut rest = identity(n);
        for i in 1..g {
            rest *= commutator(&a[i], &b[i]).unwrap();
        }
        for cj in &cs {
            rest *= cj;
        }
        let target = scalar(n, lambda.powi(sig.relator_t_power() as i32)) * inverse(&rest).unwrap();
        let Some((a1, b1)) = shoda_pair(&target, &mut rng) else { continue };
        a[0] = a1;
        b[0] = b1;
        let rep = Representation { n, a, b, c: cs, lambda };
        if validate(&rep, sig, DEFAULT_TOL)?.passed {
            return Ok(rep);
        }
    }
    Err(Error::IllConditioned("random_rep exhausted its retries".into()))
}

/// (A, B) with [A, B] = M for det M = 1 and M diagonalisable, or `None` if the eigenvector
/// basis is too ill-conditioned.
pub fn shoda_pair(m: &CMat, rng: &mut ChaCha8Rng) -> Option<(CMat, CMat)> {
    let n = m.nrows();
    if n == 1 {
        return Some((CMat::from_element(1, 1, random_unit_scalar(rng)), CMat::from_element(1, 1, random_unit_scalar(rng))));
    }
    let (v, mu) = eigendecomposition(m)?;
    if linalg::condition_number(&v) > 1e6 {
        return None;
    }
    // d_1 = 1, d_{i+1} = d_i μ_i, Π_{i, i+1} = 1 (cyclically): [Π, D] = diag(μ).
    let mut d = vec![ONE; n];
    for i in 1..n {
        d[i] = d[i - 1] * mu[i - 1];
    }
    let mut perm = CMat::zeros(n, n);
    for i in 0..n {
        perm[(i, (i + 1) % n)] = ONE;
    }
    let vinv = inverse(&v)?;
    let a = &v * perm * &vinv;
    let b = &v * linalg::diag(&d) * &vinv;
    let shift = C64::from_polar(2.0, 2.0 * PI * rng.random::<f64>());
    let b = b * (&a + scalar(n, shift));
    Some((a, b))
}

/// V and eigenvalues μ with M = V diag(μ) V⁻¹; eigenvalues clustered at 1e−8.
pub fn eigendecomposition(m: &CMat) -> Option<(CMat, Vec<C64>)> {
    let n = m.nrows();
    let eig = linalg::eigenvalues(m);
    let mut clusters: Vec<C64> = Vec::new();
    for z in eig {
        if !clusters.iter().any(|c| (c - z).norm() < CLUSTER_TOL * z.norm().max(1.0)) {
            clusters.push(z);
        }
    }
    let scale = linalg::singular_values(m)[0].max(1.0);
    let mut cols = Vec::new();
    let mut mu = Vec::new();
    for z in clusters {
        let k = linalg::null_space(&(m - scalar(n, z)), CLUSTER_TOL * scale * 10.0);
        for col in 0..k.ncols() {
            cols.push(k.column(col).into_owned());
            mu.push(z);
        }
    }
    if cols.len() != n {
        return None;
    }
    Some((CMat::from_columns(&cols), mu))
}

// ---------------------------------------------------------------------------------------------
// Catalog

pub fn catalog_rep(preset: &str) -> Result<(Representation, OrbifoldSignature)> {
    if let Some(label) = preset.strip_prefix("trivial-") {
        let sig = parse_signature_label(label).map_err(|_| Error::UnknownPreset(preset.to_string()))?;
        return Ok((Representation::trivial(&sig, 1), sig));
    }
    if let Some(group) = preset.strip_suffix("-sl2") {
        if group != "genus2-octagon" && parse_triangle(group).is_none() {
            return Err(Error::UnknownPreset(preset.to_string()));
        }
        let grp = standard_group(group)?;
        let g = grp.signature.genus() as usize;
        let mats: Vec<CMat> = grp
            .generators
            .iter()
            .map(|l| CMat::from_fn(2, 2, |i, j| c(l.matrix[(i, j)], 0.0)))
            .collect();
        let rep = Representation {
            n: 2,
            a: (0..g).map(|i| mats[2 * i].clone()).collect(),
            b: (0..g).map(|i| mats[2 * i + 1].clone()).collect(),
            c: mats[2 * g..].to_vec(),
            lambda: c(-1.0, 0.0),
        };
        return Ok((rep, grp.signature));
    }
    Err(Error::UnknownPreset(preset.to_string()))
}

/// Admissible λ ≠ 1 for `random_rep` with dimension `n`, sorted by argument.
pub fn admissible_lambdas(sig: &OrbifoldSignature, n: usize) -> Vec<C64> {
    let e = sig.lambda_root_exponent(n).unsigned_abs();
    (1..e)
        .map(|k| C64::from_polar(1.0, 2.0 * PI * k as f64 / e as f64))
        .filter(|&l| !feasible_residues(sig, n, l).is_empty())
        .collect()
}

/// det of the commutator product, which is 1 for any matrices.
pub fn commutator_det(rep: &Representation) -> Option<C64> {
    commutator_product(rep).map(|m| det(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::new_signature;
    use proptest::prelude::*;

    #[test]
    fn weights() {
        assert_eq!(weight_m(ONE).unwrap(), 0.0);
        assert_eq!(weight_m(c(-1.0, 0.0)).unwrap(), 1.0);
        assert!((weight_m(lambda_from_m(1.0 / 3.0)).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(weight_m(c(2.0, 0.0)), Err(Error::NonUnitModulusLambda(_))));
    }

    #[test]
    fn validation_examples() {
        let sig = new_signature(1, &[2, 3]).unwrap();
        let rep = Representation::trivial(&sig, 3);
        let rep_report = validate(&rep, &sig, DEFAULT_TOL).unwrap();
        assert!(rep_report.passed && rep_report.r2_residual == 0.0);
        assert!(rep_report.r1_residuals.iter().all(|&r| r == 0.0));

        let sig2 = new_signature(2, &[]).unwrap();
        let scal = |z: C64| CMat::from_element(1, 1, z);
        let rep = Representation {
            n: 1,
            a: vec![scal(c(2.0, 1.0)), scal(c(0.3, 0.0))],
            b: vec![scal(c(-1.5, 0.0)), scal(c(0.0, 4.0))],
            c: vec![],
            lambda: c(-1.0, 0.0),
        };
        let r = validate(&rep, &sig2, DEFAULT_TOL).unwrap();
        assert!(r.passed && r.r2_residual < 1e-15);

        let sig3 = new_signature(1, &[2]).unwrap();
        let bad = Representation {
            n: 1,
            a: vec![scal(ONE)],
            b: vec![scal(ONE)],
            c: vec![scal(c(0.0, 1.0))],
            lambda: ONE,
        };
        let r = validate(&bad, &sig3, DEFAULT_TOL).unwrap();
        assert!(!r.passed);
        assert!((r.r1_residuals[0] - 2.0).abs() < 1e-15);

        let wrong = Representation { n: 1, a: vec![], b: vec![], c: vec![], lambda: ONE };
        assert!(matches!(validate(&wrong, &sig3, DEFAULT_TOL), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn random_examples() {
        let sig = new_signature(2, &[2]).unwrap();
        let rep = random_rep(&sig, 1, ONE, 7).unwrap();
        assert!((rep.c[0][(0, 0)] - ONE).norm() < 1e-12);

        let sig = new_signature(1, &[2]).unwrap();
        assert!(matches!(random_rep(&sig, 1, c(-1.0, 0.0), 0), Err(Error::InfeasibleLambda(_))));
        let tri = new_signature(0, &[2, 3, 7]).unwrap();
        assert!(matches!(random_rep(&tri, 2, c(-1.0, 0.0), 0), Err(Error::GenusZeroUnsupported)));

        let a = random_rep(&new_signature(2, &[2, 2]).unwrap(), 3, lambda_from_m(2.0 / 3.0), 11).unwrap();
        let b = random_rep(&new_signature(2, &[2, 2]).unwrap(), 3, lambda_from_m(2.0 / 3.0), 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn shoda_for_minus_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let m = scalar(2, c(-1.0, 0.0));
        let (a, b) = shoda_pair(&m, &mut rng).unwrap();
        assert!(max_norm(&(commutator(&a, &b).unwrap() - m)) < 1e-12);
    }

    #[test]
    fn catalog() {
        let (rep, sig) = catalog_rep("triangle-(2,3,7)-sl2").unwrap();
        assert_eq!((rep.n, sig.cone_orders().to_vec()), (2, vec![2, 3, 7]));
        let report = validate(&rep, &sig, DEFAULT_TOL).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(rep.weight_m().unwrap(), 1.0);
        for (j, &nu) in sig.cone_orders().iter().enumerate() {
            let mut eig = linalg::eigenvalues(&rep.c[j]);
            eig.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
            let expect = C64::from_polar(1.0, PI / nu as f64);
            assert!((eig[1] - expect).norm() < 1e-9 && (eig[0] - expect.conj()).norm() < 1e-9);
            assert_eq!(fixed_decomposition(&rep, &sig, j).unwrap().n_j, 0);
        }
        let fd = fixed_decomposition(&rep, &sig, 0).unwrap();
        assert!((fd.det_i_minus_t - c(2.0, 0.0)).norm() < 1e-12);

        let (rep, sig) = catalog_rep("genus2-octagon-sl2").unwrap();
        let report = validate(&rep, &sig, DEFAULT_TOL).unwrap();
        assert!(report.passed && report.r2_residual < 1e-9, "{report:?}");

        let (rep, sig) = catalog_rep("trivial-(1;2)").unwrap();
        assert_eq!((rep.n, rep.lambda), (1, ONE));
        assert!(validate(&rep, &sig, DEFAULT_TOL).unwrap().passed);
        let fd = fixed_decomposition(&rep, &sig, 0).unwrap();
        assert_eq!((fd.n_j, fd.det_i_minus_t), (1, ONE));
        assert!(matches!(catalog_rep("nonsense"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn scalar_fixed_part() {
        let sig = new_signature(1, &[3]).unwrap();
        let w = C64::from_polar(1.0, 2.0 * PI / 3.0);
        let rep = Representation {
            n: 1,
            a: vec![CMat::from_element(1, 1, ONE)],
            b: vec![CMat::from_element(1, 1, ONE)],
            c: vec![CMat::from_element(1, 1, w)],
            lambda: ONE,
        };
        let fd = fixed_decomposition(&rep, &sig, 0).unwrap();
        assert_eq!(fd.n_j, 0);
        assert!((fd.det_i_minus_t - (ONE - w)).norm() < 1e-14);
    }

    #[test]
    fn admissible_lambda_lists() {
        let sig = new_signature(1, &[2]).unwrap();
        assert!(admissible_lambdas(&sig, 1).is_empty());
        assert!(!admissible_lambdas(&sig, 2).is_empty());
        let sig = new_signature(2, &[]).unwrap();
        assert_eq!(admissible_lambdas(&sig, 1).len(), 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn random_reps_validate(seed in 0u64..10_000, which in 0usize..4, n in 1usize..4) {
            let sigs = [(1, vec![2]), (1, vec![3]), (2, vec![2, 2]), (2, vec![])];
            let (g, nu) = &sigs[which];
            let sig = new_signature(*g, nu).unwrap();
            let lams = admissible_lambdas(&sig, n);
            if lams.is_empty() {
                return Ok(());
            }
            let lambda = lams[seed as usize % lams.len()];
            let rep = random_rep(&sig, n, lambda, seed).unwrap();
            let report = validate(&rep, &sig, DEFAULT_TOL).unwrap();
            prop_assert!(report.passed);
            prop_assert!((commutator_det(&rep).unwrap() - ONE).norm() < 1e-9);
            for j in 0..sig.num_cones() {
                let nu = sig.cone_orders()[j];
                for a in linalg::eigenvalues(&rep.c[j]) {
                    prop_assert!((a.powu(nu) - lambda).norm() < 1e-8);
                }
            }
            let m = rep.weight_m().unwrap();
            prop_assert!((lambda_from_m(m) - lambda).norm() < 1e-12);
        }
    }
}
