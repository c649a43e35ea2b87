//! Numerical verification of catalog entries at seeded random points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{Affine, Binding};
use crate::operators::derivation::assembled_value;
use crate::registry::catalog::{lookup, Formula};
use crate::registry::dsl::{inner_margin, Expression, ExprOptions, ExprValue};
use crate::sampling::{rng_for, sample_binding, sample_point};
use crate::series::{eval_lauricella, EvalOptions, LauricellaParams};

/// Closest a lower parameter may come to a gamma pole.
const POLE_GAP: f64 = 0.1;
const TINY: f64 = 1e-300;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub points: usize,
    /// Distance of sampled points from the boundary of the LHS region.
    pub margin: f64,
    pub tol: f64,
    /// A reading failing this loose tolerance at every point is quarantined.
    pub quarantine_tol: f64,
    pub expr: ExprOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, points: 20, margin: 0.7, tol: 1e-8, quarantine_tol: 1e-4, expr: ExprOptions::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub point: Vec<f64>,
    pub binding: Binding<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointCheck {
    pub index: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    /// Tolerance actually applied: `tol` plus the relative tail estimates.
    pub allowance: f64,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Quarantined,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReadingReport {
    pub reading: &'static str,
    pub verdict: Verdict,
    pub passed_points: usize,
    pub max_rel_err: f64,
    pub checks: Vec<PointCheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaReport {
    pub id: String,
    pub arity: usize,
    pub seed: u64,
    pub samples: Vec<Sample>,
    pub printed: ReadingReport,
    pub corrected: Option<ReadingReport>,
}

impl FormulaReport {
    pub fn quarantined(&self) -> bool {
        self.printed.verdict == Verdict::Quarantined
    }

    /// True when the preferred reading passes at every point.
    pub fn passed(&self) -> bool {
        self.corrected.as_ref().unwrap_or(&self.printed).verdict == Verdict::Pass
    }
}

fn all_exprs(f: &Formula) -> Vec<&Expression> {
    let mut v = vec![&f.lhs, &f.rhs];
    v.extend(f.corrected.as_ref());
    v
}

fn lower_constraints(f: &Formula) -> Vec<Affine> {
    all_exprs(f).into_iter().flat_map(|e| e.pole_constrained()).collect()
}

fn point_ok(f: &Formula, x: &[f64], margin: f64) -> bool {
    all_exprs(f).into_iter().all(|e| {
        let inner = inner_margin(e, x).is_none_or(|m| m >= margin / 2.0);
        let pre = e.prefactors.iter().all(|p| 1.0 - p.subset.iter().map(|&j| x[j]).sum::<f64>() > 0.0);
        inner && pre
    })
}

/// Seeded bindings and points for `f`. Points keep every inner argument at
/// least `margin/2` away from its own boundary.
pub fn sample_points(f: &Formula, seed: u64, count: usize, margin: f64) -> Result<Vec<Sample>> {
    let mut rng = rng_for(seed, &format!("{}@{}", f.id, f.arity));
    let symbols = f.symbols();
    let lower = lower_constraints(f);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let binding = sample_binding(&mut rng, &symbols, &lower, POLE_GAP)?;
        let mut point = None;
        for _ in 0..1000 {
            let x = sample_point(&mut rng, f.family, f.arity, margin);
            if point_ok(f, &x, margin) {
                point = Some(x);
                break;
            }
        }
        let point = point.ok_or_else(|| Error::Sampling(format!("no admissible point for {}", f.id)))?;
        out.push(Sample { point, binding });
    }
    Ok(out)
}

fn compare(
    lhs: &Result<ExprValue<f64>>,
    rhs: &Result<ExprValue<f64>>,
    tol: f64,
) -> (f64, f64, f64, f64, bool, Option<String>) {
    // The truncation allowance may not exceed the tolerance itself.
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let scale = l.value.abs().max(TINY);
            let rel = (l.value - r.value).abs() / scale;
            let extra = (l.tail + r.tail) / scale;
            let allowance = tol + extra;
            let mut note = None;
            if !l.converged || !r.converged {
                note = Some("outer sum did not converge".to_string());
            } else if !(extra <= tol) {
                note = Some(format!("tail allowance {extra:.3e} too large"));
            }
            let ok = note.is_none() && rel <= allowance;
            (l.value, r.value, rel, allowance, ok, note)
        }
        (Err(e), _) | (_, Err(e)) => (f64::NAN, f64::NAN, f64::INFINITY, tol, false, Some(e.to_string())),
    }
}

fn reading(
    name: &'static str,
    lhs: &[Result<ExprValue<f64>>],
    rhs: &Expression,
    samples: &[Sample],
    cfg: &VerifyConfig,
) -> ReadingReport {
    let mut checks = Vec::new();
    for (i, (s, l)) in samples.iter().zip(lhs).enumerate() {
        let r = rhs.eval(&s.binding, &s.point, &cfg.expr);
        let (lv, rv, rel, allowance, passed, error) = compare(l, &r, cfg.tol);
        checks.push(PointCheck { index: i, lhs: lv, rhs: rv, rel_err: rel, allowance, passed, error });
    }
    let passed_points = checks.iter().filter(|c| c.passed).count();
    let max_rel_err = checks.iter().fold(0.0f64, |m, c| m.max(c.rel_err));
    let verdict = if passed_points == checks.len() {
        Verdict::Pass
    } else if checks.iter().all(|c| !(c.rel_err <= cfg.quarantine_tol)) {
        Verdict::Quarantined
    } else {
        Verdict::Fail
    };
    ReadingReport { reading: name, verdict, passed_points, max_rel_err, checks }
}

/// Checks both readings of `f` at `cfg.points` seeded points.
pub fn verify_formula(f: &Formula, cfg: &VerifyConfig) -> Result<FormulaReport> {
    let samples = sample_points(f, cfg.seed, cfg.points, cfg.margin)?;
    let lhs: Vec<_> = samples.iter().map(|s| f.lhs.eval(&s.binding, &s.point, &cfg.expr)).collect();
    let printed = reading("printed", &lhs, &f.rhs, &samples, cfg);
    let corrected = f.corrected.as_ref().map(|c| reading("corrected", &lhs, c, &samples, cfg));
    Ok(FormulaReport { id: f.id.clone(), arity: f.arity, seed: cfg.seed, samples, printed, corrected })
}

/// Ids whose printed reading is quarantined, in report order.
pub fn quarantine_list(reports: &[FormulaReport]) -> Vec<String> {
    let mut v: Vec<String> = reports.iter().filter(|r| r.quarantined()).map(|r| r.id.clone()).collect();
    v.dedup();
    v
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalarCheck {
    pub name: String,
    pub points: usize,
    pub max_rel_err: f64,
    pub tol: f64,
    pub passed: bool,
}

impl ScalarCheck {
    fn new(name: &str, errs: &[f64], tol: f64) -> Self {
        let max_rel_err = errs.iter().fold(0.0f64, |m, e| if e.is_nan() { f64::INFINITY } else { m.max(*e) });
        ScalarCheck { name: name.to_string(), points: errs.len(), max_rel_err, tol, passed: max_rel_err <= tol }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(TINY)
}

/// The F_D Pfaff transformation applied twice returns the original
/// function. The second application runs at the transformed point with
/// `a` replaced by `g - a`.
pub fn pfaff_involution(r: usize, cfg: &VerifyConfig) -> Result<ScalarCheck> {
    let f = lookup(r, "2.25").ok_or_else(|| Error::Index("2.25 missing".into()))?;
    let samples = sample_points(&f, cfg.seed, cfg.points, cfg.margin)?;
    let mut errs = Vec::new();
    for s in &samples {
        let direct = f.lhs.eval(&s.binding, &s.point, &cfg.expr)?.value;
        let u: Vec<f64> = s.point.iter().map(|x| x / (x - 1.0)).collect();
        let mut swapped = s.binding.clone();
        swapped.insert("a".into(), s.binding["g"] - s.binding["a"]);
        let second = f.rhs.eval(&swapped, &u, &cfg.expr)?.value;
        let pre = (0..r).fold(1.0, |p, j| p * (1.0 - s.point[j]).powf(-s.binding[&format!("b{}", j + 1)]));
        errs.push(rel(pre * second, direct));
    }
    Ok(ScalarCheck::new("pfaff-involution", &errs, 1e-12))
}

/// Numerically reassembles F_D from the operator chain behind 3.54 and
/// compares against both the direct series and the catalog form.
pub fn loop_closure(cfg: &VerifyConfig, tol: f64) -> Result<(ScalarCheck, ScalarCheck)> {
    let f = lookup(3, "3.54").ok_or_else(|| Error::Index("3.54 missing".into()))?;
    let samples = sample_points(&f, cfg.seed, cfg.points, cfg.margin)?;
    let opts = EvalOptions::default();
    let (mut vs_series, mut vs_catalog) = (Vec::new(), Vec::new());
    for s in &samples {
        let v = |k: &str| s.binding[k];
        let b = [v("b1"), v("b2"), v("b3")];
        let e = [v("e1"), v("e2"), v("e3")];
        let (assembled, _) = assembled_value(v("a"), &b, &e, v("g"), &s.point, cfg.expr.n_outer, &opts)?;
        let direct = eval_lauricella(&LauricellaParams::fd(v("a"), b.to_vec(), v("g"))?, &s.point, &opts)?.value;
        let catalog = f.rhs.eval(&s.binding, &s.point, &cfg.expr)?.value;
        vs_series.push(rel(assembled, direct));
        vs_catalog.push(rel(assembled, catalog));
    }
    Ok((ScalarCheck::new("3.54-reassembly-vs-series", &vs_series, tol), ScalarCheck::new("3.54-reassembly-vs-catalog", &vs_catalog, tol)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyConfig {
        VerifyConfig { points: 4, ..VerifyConfig::default() }
    }

    #[test]
    fn sampling_is_reproducible() {
        let f = lookup(2, "2.15").unwrap();
        assert_eq!(sample_points(&f, 5, 3, 0.7).unwrap(), sample_points(&f, 5, 3, 0.7).unwrap());
        assert_ne!(sample_points(&f, 5, 3, 0.7).unwrap(), sample_points(&f, 6, 3, 0.7).unwrap());
    }

    #[test]
    fn a_correct_entry_passes() {
        let rep = verify_formula(&lookup(2, "2.23").unwrap(), &quick()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.printed.max_rel_err < 1e-12);
    }

    #[test]
    fn misprint_is_quarantined() {
        let rep = verify_formula(&lookup(2, "2.21").unwrap(), &quick()).unwrap();
        assert!(rep.quarantined(), "{:?}", rep.printed);
        assert!(rep.passed(), "{:?}", rep.corrected);
    }

    #[test]
    fn involution_holds() {
        let c = pfaff_involution(3, &quick()).unwrap();
        assert!(c.passed, "{c:?}");
    }
}
