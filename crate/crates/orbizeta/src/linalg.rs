//! Dense complex matrix helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn scalar(n: usize, z: C64) -> CMat {
    CMat::from_diagonal_element(n, n, z)
}

pub fn diag(entries: &[C64]) -> CMat {
    let n = entries.len();
    CMat::from_fn(n, n, |i, j| if i == j { entries[i] } else { ZERO })
}

pub fn max_norm(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn det(m: &CMat) -> C64 {
    if m.nrows() == 0 {
        return ONE;
    }
    m.clone().lu().determinant()
}

pub fn inverse(m: &CMat) -> Option<CMat> {
    if m.nrows() == 0 {
        return Some(m.clone());
    }
    m.clone().try_inverse()
}

pub fn pow(m: &CMat, k: u32) -> CMat {
    let mut result = identity(m.nrows());
    let mut base = m.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    result
}

/// ABA⁻¹B⁻¹.
pub fn commutator(a: &CMat, b: &CMat) -> Option<CMat> {
    Some(a * b * inverse(a)? * inverse(b)?)
}

pub fn singular_values(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Numerical rank with singular values below `rel_tol`·σ_max treated as zero.
pub fn rank(m: &CMat, rel_tol: f64) -> usize {
    let sv = singular_values(m);
    match sv.first() {
        None => 0,
        Some(&top) if top == 0.0 => 0,
        Some(&top) => sv.iter().filter(|&&s| s > rel_tol * top).count(),
    }
}

pub fn condition_number(m: &CMat) -> f64 {
    let sv = singular_values(m);
    match (sv.first(), sv.last()) {
        (Some(&a), Some(&b)) if b > 0.0 => a / b,
        (Some(_), Some(_)) => f64::INFINITY,
        _ => 1.0,
    }
}

/// Eigenvalues of a square complex matrix via the Schur form.
pub fn eigenvalues(m: &CMat) -> Vec<C64> {
    let n = m.nrows();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![m[(0, 0)]];
    }
    let (_, t) = m.clone().schur().unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

/// Orthonormal basis (as columns) of ker(m), with singular values below `tol` counted as zero.
pub fn null_space(m: &CMat, tol: f64) -> CMat {
    let n = m.ncols();
    // Pad to at least n rows so the SVD exposes all right singular vectors.
    let padded = if m.nrows() < n {
        let mut p = CMat::zeros(n, n);
        p.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.unwrap();
    let cols: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] <= tol)
        .collect();
    let mut out = CMat::zeros(n, cols.len());
    for (k, &i) in cols.iter().enumerate() {
        for r in 0..n {
            out[(r, k)] = v_t[(i, r)].conj();
        }
    }
    out
}

/// Greedy column selection (column-pivoted Gram–Schmidt): returns up to `k` column indices
/// whose span is numerically largest, skipping residual norms below `tol`.
pub fn pivot_columns(m: &CMat, k: usize, order: &[usize], tol: f64) -> Vec<usize> {
    let rows = m.nrows();
    let mut residual: Vec<Vec<C64>> = order.iter().map(|&j| m.column(j).iter().copied().collect()).collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used = vec![false; order.len()];
    let scale = residual
        .iter()
        .map(|v| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    while chosen.len() < k {
        let mut best = None;
        let mut best_norm = tol * scale.max(f64::MIN_POSITIVE);
        for (idx, v) in residual.iter().enumerate() {
            if used[idx] {
                continue;
            }
            let nrm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if nrm > best_norm {
                best_norm = nrm;
                best = Some(idx);
            }
        }
        let Some(p) = best else { break };
        used[p] = true;
        chosen.push(order[p]);
        let q: Vec<C64> = residual[p].iter().map(|z| z / best_norm).collect();
        for (idx, v) in residual.iter_mut().enumerate() {
            if used[idx] {
                continue;
            }
            let proj: C64 = (0..rows).map(|r| q[r].conj() * v[r]).sum();
            for r in 0..rows {
                v[r] -= proj * q[r];
            }
        }
    }
    chosen
}

pub fn submatrix(m: &CMat, rows: &[usize], cols: &[usize]) -> CMat {
    CMat::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

/// Principal branch of z^(p/q) style real powers: |z|^x e^{i x arg z}.
pub fn real_power(z: C64, x: f64) -> C64 {
    C64::from_polar(z.norm().powf(x), z.arg() * x)
}
