//! Euler-type triple integrals for the three-variable F_A, evaluated by
//! tensor Gauss-Jacobi quadrature.
//!
//! Each representation integrates a smooth factor against
//! `prod_l t_l^(p_l-1) (1-t_l)^(q_l-1)`; the weight is absorbed by the rule
//! on each axis and the prefactor is `prod_l 1/B(p_l, q_l)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::jacobi::{gauss_jacobi_rule, JacobiRule};
use crate::series::{eval_lauricella, in_convergence_domain, EvalOptions, Family, LauricellaParams};

/// Smallest convergence margin allowed for an inner argument at any node.
pub const NODE_MARGIN: f64 = 0.05;
pub const DEFAULT_NODES: usize = 48;

/// How the linear form inside the kernel is read. The verbatim reading
/// multiplies `y` by `t1` instead of `t2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelVariant {
    Verbatim,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InnerFunction {
    Power,
    Gauss2F1,
    AppellF2,
    LauricellaFA,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralRep {
    pub id: &'static str,
    pub variant: KernelVariant,
    pub inner: InnerFunction,
    /// Axes whose Beta kernel uses `e_l` instead of `b_l`.
    pub eps_axes: usize,
}

/// Parameters of F_A(a; b1,b2,b3; g1,g2,g3) plus the auxiliary `e_l`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralParams {
    pub a: f64,
    pub b: [f64; 3],
    pub g: [f64; 3],
    pub e: [f64; 3],
}

/// Every inner function here is an F_A with upper parameter `a`.
struct InnerCall {
    beta: Vec<f64>,
    gamma: Vec<f64>,
    args: Vec<f64>,
}

pub const IDS: [&str; 4] = ["5.1", "5.2", "5.3", "5.4"];

pub fn integral_rep(id: &str, variant: KernelVariant) -> Result<IntegralRep> {
    let (id, inner, eps_axes) = match id {
        "5.1" => ("5.1", InnerFunction::Power, 0),
        "5.2" => ("5.2", InnerFunction::Gauss2F1, 1),
        "5.3" => ("5.3", InnerFunction::AppellF2, 2),
        "5.4" => ("5.4", InnerFunction::LauricellaFA, 3),
        _ => return Err(Error::Index(format!("unknown integral representation {id}"))),
    };
    Ok(IntegralRep { id, variant, inner, eps_axes })
}

impl IntegralRep {
    /// Kernel exponents `(p_l, q_l)` per axis, checked positive.
    pub fn exponents(&self, prm: &IntegralParams) -> Result<[(f64, f64); 3]> {
        let mut out = [(0.0, 0.0); 3];
        for (l, slot) in out.iter_mut().enumerate() {
            let lower = if l < self.eps_axes { prm.e[l] } else { prm.b[l] };
            if !(prm.g[l] > lower && lower > 0.0) {
                return Err(Error::Param(format!(
                    "{} needs g{n} > {} > 0, got {} and {lower}",
                    self.id,
                    if l < self.eps_axes { "e" } else { "b" },
                    prm.g[l],
                    n = l + 1
                )));
            }
            *slot = (lower, prm.g[l] - lower);
        }
        Ok(out)
    }

    fn denominator(&self, x: &[f64; 3], t: [f64; 3]) -> f64 {
        let ty = match self.variant {
            KernelVariant::Verbatim => t[0],
            KernelVariant::Corrected => t[1],
        };
        1.0 - x[0] * t[0] - x[1] * ty - x[2] * t[2]
    }

    /// Base raised to `-a` and the inner F_A call at one node.
    fn inner_at(&self, prm: &IntegralParams, x: &[f64; 3], t: [f64; 3]) -> (f64, Option<InnerCall>) {
        match self.inner {
            InnerFunction::Power => (self.denominator(x, t), None),
            InnerFunction::Gauss2F1 => {
                let d = 1.0 - x[1] * t[1] - x[2] * t[2];
                (d, Some(InnerCall { beta: vec![prm.b[0]], gamma: vec![prm.e[0]], args: vec![x[0] * t[0] / d] }))
            }
            InnerFunction::AppellF2 | InnerFunction::LauricellaFA => {
                let k = self.eps_axes;
                let d = self.denominator(x, t);
                let beta = (0..k).map(|l| prm.b[l] - prm.e[l]).collect();
                let gamma = (0..k).map(|l| prm.g[l] - prm.e[l]).collect();
                let args = (0..k).map(|l| x[l] * (1.0 - t[l]) / d).collect();
                (d, Some(InnerCall { beta, gamma, args }))
            }
        }
    }
}

fn rules(rep: &IntegralRep, prm: &IntegralParams, n: usize) -> Result<Vec<JacobiRule>> {
    rep.exponents(prm)?.iter().map(|&(p, q)| gauss_jacobi_rule(n, p, q)).collect()
}

/// Tensor-product quadrature value of the representation at `x`.
///
/// Every node is scanned first; a point where the power base or an inner
/// argument comes within [`NODE_MARGIN`] of its boundary is rejected with a
/// domain error.
pub fn eval_integral_rep(rep: &IntegralRep, prm: &IntegralParams, x: [f64; 3], n: usize) -> Result<f64> {
    let rules = rules(rep, prm, n)?;
    let mut nodes = Vec::with_capacity(n * n * n);
    for (i, &t1) in rules[0].nodes.iter().enumerate() {
        for (j, &t2) in rules[1].nodes.iter().enumerate() {
            for (k, &t3) in rules[2].nodes.iter().enumerate() {
                let w = rules[0].weights[i] * rules[1].weights[j] * rules[2].weights[k];
                let (base, call) = rep.inner_at(prm, &x, [t1, t2, t3]);
                if !(base >= NODE_MARGIN) {
                    return Err(Error::Domain(format!("{}: kernel base {base:.3} at a node", rep.id)));
                }
                if let Some(c) = &call {
                    let (inside, m) = in_convergence_domain(Family::A, &c.args);
                    if !inside || m < NODE_MARGIN {
                        return Err(Error::Domain(format!("{}: inner argument margin {m:.3} at a node", rep.id)));
                    }
                }
                nodes.push((w, base, call));
            }
        }
    }
    let opts = EvalOptions::with_tol(1e-11);
    let mut sum = 0.0;
    for (w, base, call) in nodes {
        let mut f = base.powf(-prm.a);
        if let Some(c) = call {
            let p = LauricellaParams::fa(prm.a, c.beta, c.gamma)?;
            f *= eval_lauricella(&p, &c.args, &opts)?.value;
        }
        sum += w * f;
    }
    let norm: f64 = rules.iter().map(|r| r.mass()).product();
    Ok(sum / norm)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralCheck {
    pub id: String,
    pub variant: KernelVariant,
    pub point: [f64; 3],
    pub params: IntegralParams,
    pub nodes: usize,
    pub quadrature: f64,
    pub series: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub matches: bool,
    pub error: Option<String>,
}

/// Compares the quadrature value with the F_A series at the same point.
pub fn cross_check(rep: &IntegralRep, prm: &IntegralParams, x: [f64; 3], tol: f64, n: usize) -> IntegralCheck {
    let series = LauricellaParams::fa(prm.a, prm.b.to_vec(), prm.g.to_vec())
        .and_then(|p| eval_lauricella(&p, &x, &EvalOptions::default()))
        .map(|r| r.value);
    let quad = eval_integral_rep(rep, prm, x, n);
    let (quadrature, series, rel_err, error) = match (quad, series) {
        (Ok(q), Ok(s)) => (q, s, (q - s).abs() / s.abs().max(1e-300), None),
        (Err(e), _) | (_, Err(e)) => (f64::NAN, f64::NAN, f64::INFINITY, Some(e.to_string())),
    };
    IntegralCheck {
        id: rep.id.to_string(),
        variant: rep.variant,
        point: x,
        params: prm.clone(),
        nodes: n,
        quadrature,
        series,
        rel_err,
        tol,
        matches: rel_err <= tol,
        error,
    }
}
