//! Gauss-Jacobi rules on `[0, 1]` for the weight `t^(p-1) (1-t)^(q-1)`.
//!
//! Nodes are the eigenvalues of the Jacobi matrix, polished by Newton on
//! the orthonormal recurrence. Weights are Christoffel numbers
//! `1 / sum_k p_k(t)^2`, which stay accurate for nodes close to the ends.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::series::gamma::beta;

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiRule {
    pub n: usize,
    pub p: f64,
    pub q: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl JacobiRule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).sum()
    }

    /// `B(p, q)`, the total mass of the weight.
    pub fn mass(&self) -> f64 {
        beta(self.p, self.q)
    }
}

/// Diagonal and off-diagonal of the orthonormal recurrence on `[0, 1]`.
fn recurrence(n: usize, p: f64, q: f64) -> (Vec<f64>, Vec<f64>) {
    // Classical Jacobi on [-1, 1] with weight (1-x)^a (1+x)^b, t = (1+x)/2.
    let (a, b) = (q - 1.0, p - 1.0);
    let s = a + b;
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n);
    for k in 0..n {
        let kf = k as f64;
        let alpha = if k == 0 {
            (b - a) / (s + 2.0)
        } else {
            (b * b - a * a) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0))
        };
        diag.push((1.0 + alpha) / 2.0);
        // off[k] couples p_k and p_{k+1}.
        let m = kf + 1.0;
        let beta = if k == 0 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s).powi(2) * (3.0 + s))
        } else {
            let t = 2.0 * m + s;
            4.0 * m * (m + a) * (m + b) * (m + s) / (t * t * (t + 1.0) * (t - 1.0))
        };
        off.push((beta / 4.0).sqrt());
    }
    (diag, off)
}

/// Orthonormal values `p_0..p_n` and the derivative of `p_n` at `t`.
fn orthonormal(t: f64, diag: &[f64], off: &[f64], p0: f64) -> (Vec<f64>, f64) {
    let n = diag.len();
    let mut v = vec![p0];
    let (mut prev, mut cur) = (0.0, p0);
    let (mut dprev, mut dcur) = (0.0, 0.0);
    for k in 0..n {
        let back = if k == 0 { 0.0 } else { off[k - 1] };
        let next = ((t - diag[k]) * cur - back * prev) / off[k];
        let dnext = ((t - diag[k]) * dcur + cur - back * dprev) / off[k];
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
        v.push(cur);
    }
    (v, dcur)
}

pub fn gauss_jacobi_rule(n: usize, p: f64, q: f64) -> Result<JacobiRule> {
    if n < 1 {
        return Err(Error::Param("quadrature needs at least one node".into()));
    }
    if !(p > 0.0 && q > 0.0) {
        return Err(Error::Param(format!("Jacobi exponents must be positive, got p={p}, q={q}")));
    }
    let (diag, off) = recurrence(n, p, q);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        m[(k, k)] = diag[k];
        if k + 1 < n {
            m[(k, k + 1)] = off[k];
            m[(k + 1, k)] = off[k];
        }
    }
    let mut nodes: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    nodes.sort_by(|a, b| a.total_cmp(b));
    let mass = beta(p, q);
    let p0 = 1.0 / mass.sqrt();
    let mut weights = Vec::with_capacity(n);
    for t in nodes.iter_mut() {
        for _ in 0..3 {
            let (v, d) = orthonormal(*t, &diag, &off, p0);
            if d == 0.0 {
                break;
            }
            let step = v[n] / d;
            if !step.is_finite() || step.abs() > 1e-6 {
                break;
            }
            *t -= step;
        }
        let (v, _) = orthonormal(*t, &diag, &off, p0);
        let norm: f64 = v[..n].iter().map(|x| x * x).sum();
        weights.push(1.0 / norm);
    }
    if nodes.iter().any(|&t| !(t > 0.0 && t < 1.0)) || weights.iter().any(|&w| !(w > 0.0)) {
        return Err(Error::Param(format!("degenerate Jacobi rule for n={n}, p={p}, q={q}")));
    }
    Ok(JacobiRule { n, p, q, nodes, weights })
}
