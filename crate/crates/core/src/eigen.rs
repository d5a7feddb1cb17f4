//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` with `p < q` in row
//! order and applies the plane rotation that annihilates `a[p][q]`. The
//! rotations are accumulated into the eigenvector matrix. Sweeps stop once
//! the off-diagonal Frobenius norm falls below
//! `tolerance * (1 + ‖A‖F)`.
//!
//! Eigenvalues come back ascending. Every eigenvector is sign-normalized so
//! that its first entry with magnitude above [`SIGN_ZERO_TOL`] is positive,
//! which makes the output reproducible across runs and platforms that share
//! IEEE semantics.

use crate::{Error, Result, SymMatrix};

/// Entries at or below this magnitude are ignored when fixing eigenvector signs.
pub const SIGN_ZERO_TOL: f64 = 1e-9;

/// Row-sum tolerance used to recognise a graph Laplacian.
pub const LAPLACIAN_ROW_SUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    pub tolerance: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self { tolerance: 1e-12, max_sweeps: 100 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
    sweeps: usize,
}

impl EigenDecomposition {
    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `vectors()[k]` is the unit eigenvector paired with `values()[k]`.
    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// Number of Jacobi sweeps performed.
    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = EigenPair> + '_ {
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&value, vector)| EigenPair { value, vector: vector.clone() })
    }
}

/// Full spectrum with default options.
pub fn eigensolve(a: &SymMatrix) -> Result<EigenDecomposition> {
    eigensolve_with(a, JacobiOptions::default())
}

pub fn eigensolve_with(a: &SymMatrix, opts: JacobiOptions) -> Result<EigenDecomposition> {
    let n = a.n();
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if let Some(pos) = a.as_slice().iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFinite { row: pos / n, col: pos % n });
    }

    let mut m = a.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let threshold = opts.tolerance * (1.0 + a.norm_frobenius());
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&m, n);
        if off <= threshold {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: equal eigenvalues keep their rotation-output order
    order.sort_by(|&i, &j| m[i * n + i].total_cmp(&m[j * n + j]));

    let values = order.iter().map(|&k| m[k * n + k]).collect();
    let vectors = order
        .iter()
        .map(|&k| {
            let mut col: Vec<f64> = (0..n).map(|i| v[i * n + k]).collect();
            normalize_sign(&mut col);
            col
        })
        .collect();

    Ok(EigenDecomposition { values, vectors, sweeps })
}

fn off_diagonal_norm(m: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += m[p * n + q] * m[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

/// Applies the rotation `J(p, q)` that zeroes `m[p][q]`: `M ← JᵀMJ`, `V ← VJ`.
fn rotate(m: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m[k * n + p];
        let akq = m[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        m[k * n + p] = new_kp;
        m[p * n + k] = new_kp;
        m[k * n + q] = new_kq;
        m[q * n + k] = new_kq;
    }
    m[p * n + p] = app - t * apq;
    m[q * n + q] = aqq + t * apq;
    m[p * n + q] = 0.0;
    m[q * n + p] = 0.0;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

/// Flips `v` so its first entry with `|vᵢ| > SIGN_ZERO_TOL` is positive.
pub fn normalize_sign(v: &mut [f64]) {
    if let Some(&lead) = v.iter().find(|x| x.abs() > SIGN_ZERO_TOL) {
        if lead < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// The `k` algebraically smallest eigenpairs, ascending.
pub fn smallest_k(a: &SymMatrix, k: usize) -> Result<Vec<EigenPair>> {
    if k == 0 || k > a.n() {
        return Err(Error::KOutOfRange { k, n: a.n() });
    }
    Ok(eigensolve(a)?.pairs().take(k).collect())
}

/// `xᵀAx / xᵀx`.
pub fn rayleigh_quotient(a: &SymMatrix, x: &[f64]) -> Result<f64> {
    let ax = a.mul_vec(x)?;
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    let xax: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
    Ok(xax / xx)
}

/// Second-smallest eigenvalue of a Laplacian and its sign-normalized eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct FiedlerPair {
    pub lambda2: f64,
    pub vector: Vec<f64>,
}

/// Fiedler pair of a graph Laplacian. Rejects matrices whose rows do not sum
/// to zero; use [`smallest_k`] for arbitrary symmetric input.
pub fn fiedler_pair(l: &SymMatrix) -> Result<FiedlerPair> {
    if l.n() < 2 {
        return Err(Error::TooSmall { n: l.n(), min: 2 });
    }
    for (row, sum) in l.row_sums().into_iter().enumerate() {
        if sum.abs() > LAPLACIAN_ROW_SUM_TOL {
            return Err(Error::NotLaplacian { row, sum });
        }
    }
    let mut pairs = smallest_k(l, 2)?;
    let EigenPair { value, mut vector } = pairs.swap_remove(1);
    normalize_sign(&mut vector);
    Ok(FiedlerPair { lambda2: value, vector })
}
