//! Declarative encoding of both sides of a decomposition formula.
//!
//! A side is an [`Expression`]:
//!
//! ```text
//!   prod_p (1 - sum_{S_p} x)^(e_p)  *  sum_{n} [prod_f factor_f(n) / prod_l n_l!] * inner(n)
//! ```
//!
//! where `n` runs over `outer` non-negative indices (no sum when
//! `outer == 0`), each factor is a Pochhammer symbol, sign or power whose
//! order is a partial sum of the indices, and `inner` is a Lauricella
//! function with index-shifted parameters at possibly transformed
//! arguments.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{Affine, Binding};
use crate::scalar::factorial;
use crate::series::gamma::pochhammer;
use crate::series::multi_index::shell;
use crate::series::{eval_lauricella, in_convergence_domain, EvalOptions, Family, LauricellaParams};
use crate::Real;

/// `±x_coord / (1 - sum_{j in denom} x_j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Arg {
    pub coord: usize,
    pub denom: Vec<usize>,
    pub negate: bool,
}

impl Arg {
    pub fn plain(coord: usize) -> Self {
        Arg { coord, denom: vec![], negate: false }
    }

    pub fn over(coord: usize, denom: &[usize]) -> Self {
        Arg { coord, denom: denom.to_vec(), negate: false }
    }

    /// `x_c / (sum_{denom} x - 1)`.
    pub fn over_neg(coord: usize, denom: &[usize]) -> Self {
        Arg { coord, denom: denom.to_vec(), negate: true }
    }

    pub fn value<T: Real>(&self, x: &[T]) -> T {
        let d = self.denom.iter().fold(T::one(), |acc, &j| acc - x[j]);
        let v = x[self.coord] / d;
        if self.negate {
            -v
        } else {
            v
        }
    }
}

impl std::fmt::Display for Arg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = |j: usize| format!("x{}", j + 1);
        if self.denom.is_empty() {
            return write!(f, "{}{}", if self.negate { "-" } else { "" }, name(self.coord));
        }
        let d: Vec<String> = self.denom.iter().map(|&j| name(j)).collect();
        if self.negate {
            write!(f, "{}/({}-1)", name(self.coord), d.join("+"))
        } else {
            write!(f, "{}/(1-{})", name(self.coord), d.join("-"))
        }
    }
}

/// One multiplicative factor of an outer term. Orders are sums of the
/// listed outer indices.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Factor {
    Upper {
        #[serde(serialize_with = "ser_affine")]
        base: Affine,
        over: Vec<usize>,
    },
    Lower {
        #[serde(serialize_with = "ser_affine")]
        base: Affine,
        over: Vec<usize>,
    },
    Sign { over: Vec<usize> },
    Power { arg: Arg, over: Vec<usize> },
}

fn ser_affine<S: serde::Serializer>(a: &Affine, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&a.to_string())
}

/// `(1 - sum_{subset} x)^exponent`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prefactor {
    pub subset: Vec<usize>,
    #[serde(serialize_with = "ser_affine")]
    pub exponent: Affine,
}

/// A parameter `base + sum_{shift} n_l`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Shifted {
    #[serde(serialize_with = "ser_affine")]
    pub base: Affine,
    pub shift: Vec<usize>,
}

impl Shifted {
    pub fn fixed(base: Affine) -> Self {
        Shifted { base, shift: vec![] }
    }

    fn value<T: Real>(&self, base: T, n: &[u32]) -> T {
        base + T::from_int(self.shift.iter().map(|&l| n[l] as i64).sum())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InnerCall {
    pub family: Family,
    pub alpha: Vec<Shifted>,
    pub beta: Vec<Shifted>,
    pub gamma: Vec<Shifted>,
    pub args: Vec<Arg>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expression {
    pub outer: usize,
    pub factors: Vec<Factor>,
    pub prefactors: Vec<Prefactor>,
    pub inner: Option<InnerCall>,
}

/// Knobs for evaluating an [`Expression`].
#[derive(Debug, Clone)]
pub struct ExprOptions {
    /// Largest total outer degree.
    pub n_outer: u32,
    /// Target relative accuracy of the whole expression.
    pub rel_tol: f64,
    /// Degree cap passed to inner series.
    pub inner_degree_cap: usize,
}

impl Default for ExprOptions {
    fn default() -> Self {
        ExprOptions { n_outer: 64, rel_tol: 1e-14, inner_degree_cap: 600 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExprValue<T> {
    pub value: T,
    /// Estimated absolute error from truncating the outer and inner sums.
    pub tail: T,
    pub outer_terms: usize,
    pub converged: bool,
}

fn order(over: &[usize], n: &[u32]) -> usize {
    over.iter().map(|&l| n[l] as usize).sum()
}

fn sub_sum<T: Real>(subset: &[usize], x: &[T]) -> T {
    subset.iter().fold(T::zero(), |a, &j| a + x[j])
}

/// Factor bases evaluated once per binding and point.
struct Prepared<T> {
    bases: Vec<Option<T>>,
}

impl Expression {
    /// Every symbol referenced, unsorted with repeats.
    pub fn symbols(&self) -> Vec<String> {
        let mut v: Vec<String> = Vec::new();
        let mut add = |a: &Affine| v.extend(a.symbols().map(str::to_string));
        for f in &self.factors {
            match f {
                Factor::Upper { base, .. } | Factor::Lower { base, .. } => add(base),
                _ => {}
            }
        }
        for p in &self.prefactors {
            add(&p.exponent);
        }
        if let Some(c) = &self.inner {
            for s in c.alpha.iter().chain(&c.beta).chain(&c.gamma) {
                add(&s.base);
            }
        }
        v
    }

    /// Expressions that land in a denominator and must avoid poles.
    pub fn pole_constrained(&self) -> Vec<Affine> {
        let mut v = Vec::new();
        for f in &self.factors {
            if let Factor::Lower { base, .. } = f {
                v.push(base.clone());
            }
        }
        if let Some(c) = &self.inner {
            v.extend(c.gamma.iter().map(|s| s.base.clone()));
        }
        v
    }

    /// Every argument passed to the inner function, with its family.
    pub fn inner_args<T: Real>(&self, x: &[T]) -> Option<(Family, Vec<T>)> {
        self.inner.as_ref().map(|c| (c.family, c.args.iter().map(|a| a.value(x)).collect()))
    }

    pub fn eval<T: Real>(&self, b: &Binding<T>, x: &[T], opts: &ExprOptions) -> Result<ExprValue<T>> {
        let mut pre = T::one();
        for p in &self.prefactors {
            let base = T::one() - sub_sum(&p.subset, x);
            if !(base > T::zero()) {
                return Err(Error::Domain(format!("prefactor base {} is not positive", base.as_f64())));
            }
            pre = pre * base.powf(p.exponent.eval(b)?);
        }
        let prepared = self.prepare(b, x)?;
        let mut cache: HashMap<Vec<u64>, (T, T, f64)> = HashMap::new();
        let mut total = T::zero();
        let mut tail = T::zero();
        let mut terms = 0usize;
        let mut prev_mag: Option<T> = None;
        let mut calm = 0;
        let mut converged = false;
        let tol = T::lit(opts.rel_tol);
        for s in 0..=opts.n_outer {
            let mut shell_sum = T::zero();
            let mut shell_mag = T::zero();
            let mut inner_tail = T::zero();
            let indices = if self.outer == 0 {
                if s > 0 {
                    converged = true;
                    break;
                }
                vec![vec![]]
            } else {
                shell(self.outer, s).into_iter().map(|m| m.entries().to_vec()).collect()
            };
            for n in indices {
                let c = self.coefficient(&prepared, &n);
                if c == T::zero() {
                    continue;
                }
                terms += 1;
                let (f, ft) = match &self.inner {
                    None => (T::one(), T::zero()),
                    Some(call) => {
                        // Inner accuracy only needs to match this term's weight.
                        let scale = (total.abs() / c.abs()).as_f64();
                        let want = (opts.rel_tol * scale).clamp(opts.rel_tol, 1e-4);
                        self.eval_inner(call, b, x, &n, want, opts, &mut cache)?
                    }
                };
                let t = c * f;
                shell_sum = shell_sum + t;
                shell_mag = shell_mag + t.abs();
                inner_tail = inner_tail + c.abs() * ft;
            }
            total = total + shell_sum;
            tail = tail + inner_tail;
            if self.outer == 0 {
                continue;
            }
            if shell_mag == T::zero() {
                converged = true;
                break;
            }
            let est = match prev_mag {
                Some(p) if p > T::zero() => {
                    let q = shell_mag / p;
                    if q < T::lit(0.95) {
                        shell_mag * q / (T::one() - q)
                    } else {
                        T::infinity()
                    }
                }
                _ => T::infinity(),
            };
            prev_mag = Some(shell_mag);
            if est <= tol * total.abs().max(T::min_positive_value()) {
                calm += 1;
                if calm >= 2 {
                    converged = true;
                    tail = tail + est;
                    break;
                }
            } else {
                calm = 0;
            }
            if s == opts.n_outer {
                // Out of shells: accept only a geometric tail estimate.
                converged = est.is_finite();
                tail = tail + est;
            }
        }
        Ok(ExprValue { value: pre * total, tail: pre.abs() * tail, outer_terms: terms, converged })
    }

    fn prepare<T: Real>(&self, b: &Binding<T>, x: &[T]) -> Result<Prepared<T>> {
        let mut bases = Vec::new();
        for f in &self.factors {
            bases.push(match f {
                Factor::Upper { base, .. } | Factor::Lower { base, .. } => Some(base.eval(b)?),
                Factor::Power { arg, .. } => Some(arg.value(x)),
                Factor::Sign { .. } => None,
            });
        }
        Ok(Prepared { bases })
    }

    fn coefficient<T: Real>(&self, p: &Prepared<T>, n: &[u32]) -> T {
        let mut c = T::one();
        for (f, &v) in self.factors.iter().zip(&p.bases) {
            c = match (f, v) {
                (Factor::Upper { over, .. }, Some(a)) => c * pochhammer(a, order(over, n)),
                (Factor::Lower { over, .. }, Some(a)) => c / pochhammer(a, order(over, n)),
                (Factor::Power { over, .. }, Some(a)) => c * a.powi(order(over, n) as i32),
                (Factor::Sign { over }, _) => {
                    if order(over, n) % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                }
                _ => c,
            };
        }
        for &k in n {
            c = c / factorial::<T>(k as usize);
        }
        c
    }

    #[allow(clippy::too_many_arguments)]
    fn eval_inner<T: Real>(
        &self,
        call: &InnerCall,
        b: &Binding<T>,
        x: &[T],
        n: &[u32],
        want: f64,
        opts: &ExprOptions,
        cache: &mut HashMap<Vec<u64>, (T, T, f64)>,
    ) -> Result<(T, T)> {
        let ev = |v: &[Shifted]| v.iter().map(|s| Ok(s.value(s.base.eval(b)?, n))).collect::<Result<Vec<T>>>();
        let (alpha, beta, gamma) = (ev(&call.alpha)?, ev(&call.beta)?, ev(&call.gamma)?);
        let key: Vec<u64> = alpha.iter().chain(&beta).chain(&gamma).map(|v| v.as_f64().to_bits()).collect();
        if let Some(&(v, t, tol)) = cache.get(&key) {
            if tol <= want {
                return Ok((v, t));
            }
        }
        let params = LauricellaParams::new(call.family, alpha, beta, gamma)?;
        let args: Vec<T> = call.args.iter().map(|a| a.value(x)).collect();
        let eo = EvalOptions { degree_cap: opts.inner_degree_cap, rel_tol: T::lit(want), ..EvalOptions::default() };
        let r = eval_lauricella(&params, &args, &eo)?;
        let t = r.tail_estimate.abs() + r.value.abs() * T::epsilon() * T::lit(4.0);
        cache.insert(key, (r.value, t, want));
        Ok((r.value, t))
    }
}

/// Convergence margin of the inner arguments at `x`, or `None` without an
/// inner call.
pub fn inner_margin(e: &Expression, x: &[f64]) -> Option<f64> {
    e.inner_args(x).map(|(fam, args)| {
        let (inside, m) = in_convergence_domain(fam, &args);
        if inside {
            m
        } else {
            0.0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::ex;

    fn bind(pairs: &[(&str, f64)]) -> Binding<f64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn geometric_series_by_outer_sum() {
        // sum_n (1)_n x^n / n! = 1/(1-x)
        let e = Expression {
            outer: 1,
            factors: vec![Factor::Upper { base: ex("1"), over: vec![0] }, Factor::Power { arg: Arg::plain(0), over: vec![0] }],
            prefactors: vec![],
            inner: None,
        };
        let v = e.eval(&Binding::<f64>::new(), &[0.25], &ExprOptions { n_outer: 60, ..Default::default() }).unwrap();
        assert!((v.value - 4.0 / 3.0).abs() < 1e-13, "{v:?}");
        assert!(v.converged);
    }

    #[test]
    fn prefactor_and_inner_call() {
        // (1-x)^(-a) 2F1(a, b; b; x) at x = 0.3 equals (1-x)^(-2a)
        let e = Expression {
            outer: 0,
            factors: vec![],
            prefactors: vec![Prefactor { subset: vec![0], exponent: ex("-a") }],
            inner: Some(InnerCall {
                family: Family::A,
                alpha: vec![Shifted::fixed(ex("a"))],
                beta: vec![Shifted::fixed(ex("b"))],
                gamma: vec![Shifted::fixed(ex("b"))],
                args: vec![Arg::plain(0)],
            }),
        };
        let v = e.eval(&bind(&[("a", 0.7), ("b", 1.3)]), &[0.3], &ExprOptions::default()).unwrap();
        assert!((v.value - 0.7f64.powf(-1.4)).abs() < 1e-13);
    }

    #[test]
    fn args_display_and_value() {
        let a = Arg::over_neg(0, &[0, 1]);
        assert_eq!(a.to_string(), "x1/(x1+x2-1)");
        assert!((a.value(&[0.2f64, 0.3]) - 0.2 / (0.5 - 1.0)).abs() < 1e-15);
        assert_eq!(Arg::over(1, &[0]).to_string(), "x2/(1-x1)");
    }
}
