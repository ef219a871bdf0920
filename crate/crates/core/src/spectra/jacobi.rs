//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` in row order and
//! applies the plane rotation that annihilates `a_pq`. During the first
//! [`THRESHOLD_SWEEPS`] sweeps only entries above a threshold are rotated;
//! later on, entries negligible against both diagonal elements are set to
//! zero outright. Iteration stops once the off-diagonal Frobenius norm is at
//! most `tol * max(1, ||A||_F)`.
//!
//! The iteration order is fixed, so identical inputs give bitwise identical
//! results.

use crate::error::{Error, Result};

use super::matrix::SymMatrix;

/// Convergence threshold relative to the input Frobenius norm.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

const THRESHOLD_SWEEPS: usize = 3;

/// Eigenvalues in ascending order with unit eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Eigenvalues only, ascending.
pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    run(m, tol, false, MAX_SWEEPS).map(|d| d.values)
}

/// Eigenvalues and eigenvectors, ascending.
pub fn eigen_decomposition(m: &SymMatrix, tol: f64) -> Result<EigenDecomposition> {
    run(m, tol, true, MAX_SWEEPS)
}

fn run(m: &SymMatrix, tol: f64, want_vectors: bool, max_sweeps: usize) -> Result<EigenDecomposition> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.order();
    if let Some(pos) = m.data().iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { row: pos / n + 1, col: pos % n + 1 });
    }

    let mut a = m.data().to_vec();
    let mut v = if want_vectors {
        SymMatrix::identity(n).data().to_vec()
    } else {
        Vec::new()
    };
    let target = tol * m.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        let threshold = if sweeps < THRESHOLD_SWEEPS {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = 100.0 * apq.abs();
                if sweeps > THRESHOLD_SWEEPS && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                if apq.abs() <= threshold || apq == 0.0 {
                    continue;
                }
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = if want_vectors {
        order
            .iter()
            .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
            .collect()
    } else {
        Vec::new()
    };
    Ok(EigenDecomposition { values, vectors, sweeps })
}

fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] -= t * apq;
    a[q * n + q] += t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    if !v.is_empty() {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
        }
    }
}
