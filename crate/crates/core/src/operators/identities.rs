//! Catalog of operational representations and their coefficient-level
//! verification.
//!
//! Each entry states `lhs = chain(inner)` where the chain is a product of
//! `H` and `H̄` operators. Both sides are expanded to a degree cap from
//! their own series definitions and compared coefficient by coefficient.
//! Entries whose inner or outer function has a composite argument such as
//! `y/(1-x)` are marked delegated and are checked numerically by the
//! registry instead.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{ex, Affine, Binding};
use crate::operators::ops::{apply_h, apply_hbar};
use crate::operators::truncated::TruncatedSeries;
use crate::sampling::{rng_for, sample_binding};
use crate::scalar::Scalar;
use crate::series::{Family, HyperTerm};
use crate::template::{ser_affines, FamilyTemplate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OpKind {
    H,
    Hbar,
}

/// One operator `H_vars(alpha, beta)` or `H̄_vars(alpha, beta)`; `vars`
/// are zero-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OpStep {
    pub kind: OpKind,
    pub vars: Vec<usize>,
    #[serde(serialize_with = "ser_affine")]
    pub alpha: Affine,
    #[serde(serialize_with = "ser_affine")]
    pub beta: Affine,
}

fn ser_affine<S: serde::Serializer>(a: &Affine, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&a.to_string())
}

/// A function appearing on either side of an identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SideSpec {
    Lauricella(FamilyTemplate),
    /// `prod_j (1 - x_j)^(-beta_j)`.
    BinomialProduct {
        #[serde(serialize_with = "ser_affines")]
        beta: Vec<Affine>,
    },
    /// `(1 - x_1 - ... - x_r)^(-alpha)`.
    PowerOfSum {
        #[serde(serialize_with = "ser_affine")]
        alpha: Affine,
        arity: usize,
    },
    /// A function of transformed arguments, described in words.
    Composite { description: String },
}

impl SideSpec {
    fn symbols(&self, out: &mut BTreeSet<String>) {
        let mut add = |a: &Affine| out.extend(a.symbols().map(str::to_string));
        match self {
            SideSpec::Lauricella(t) => t.slots().for_each(&mut add),
            SideSpec::BinomialProduct { beta } => beta.iter().for_each(add),
            SideSpec::PowerOfSum { alpha, .. } => add(alpha),
            SideSpec::Composite { .. } => {}
        }
    }

    fn lower(&self) -> Vec<Affine> {
        match self {
            SideSpec::Lauricella(t) => t.lower().to_vec(),
            _ => vec![],
        }
    }

    /// Taylor coefficients up to total degree `cap`.
    pub fn series<T: Scalar>(&self, b: &Binding<T>, cap: u32) -> Result<TruncatedSeries<T>> {
        let term = match self {
            SideSpec::Lauricella(t) => t.instantiate(b)?.term(),
            SideSpec::BinomialProduct { beta } => {
                HyperTerm::binomial_product(beta.iter().map(|a| a.eval(b)).collect::<Result<_>>()?)
            }
            SideSpec::PowerOfSum { alpha, arity } => HyperTerm::power_of_sum(alpha.eval(b)?, *arity),
            SideSpec::Composite { description } => {
                return Err(Error::Param(format!("no coefficient expansion for composite {description}")))
            }
        };
        TruncatedSeries::from_term(&term, cap)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorIdentity {
    pub id: String,
    pub family: Family,
    pub arity: usize,
    /// True for the entries stated for every number of variables.
    pub general_arity: bool,
    pub slots: Vec<String>,
    pub lhs: SideSpec,
    /// Written left to right; all operators here are diagonal, so the
    /// order of application does not matter.
    pub chain: Vec<OpStep>,
    pub inner: SideSpec,
    /// Checked numerically by the registry under the same id.
    pub delegated: bool,
}

/// Result of one coefficient-level comparison.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub cap: u32,
    pub coefficients: usize,
    pub max_abs_err: f64,
    pub max_abs_coeff: f64,
}

impl OperatorIdentity {
    /// Free symbols of both sides and of the chain, sorted.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = BTreeSet::new();
        self.lhs.symbols(&mut out);
        self.inner.symbols(&mut out);
        for op in &self.chain {
            out.extend(op.alpha.symbols().chain(op.beta.symbols()).map(str::to_string));
        }
        out.into_iter().collect()
    }

    /// Expressions that must avoid gamma poles: lower parameters of both
    /// sides and every operator parameter.
    pub fn pole_constrained(&self) -> Vec<Affine> {
        let mut v = self.lhs.lower();
        v.extend(self.inner.lower());
        for op in &self.chain {
            v.push(op.alpha.clone());
            v.push(op.beta.clone());
        }
        v
    }

    /// Structural checks: declared slots cover the chain, variable subsets
    /// are in range and duplicate-free.
    pub fn validate(&self) -> Result<()> {
        for op in &self.chain {
            for s in op.alpha.symbols().chain(op.beta.symbols()) {
                if s.starts_with('e') && !self.slots.iter().any(|d| d == s) {
                    return Err(Error::Param(format!("{}: undeclared slot {s}", self.id)));
                }
            }
            let mut seen = BTreeSet::new();
            if op.vars.is_empty() || !op.vars.iter().all(|&j| j < self.arity && seen.insert(j)) {
                return Err(Error::Index(format!("{}: bad variable subset {:?}", self.id, op.vars)));
            }
        }
        Ok(())
    }
}

/// Checks `lhs = chain(inner)` coefficientwise up to `cap`.
pub fn verify_operational_identity<T: Scalar>(
    desc: &OperatorIdentity,
    binding: &Binding<T>,
    cap: u32,
) -> Result<VerifyReport> {
    desc.validate()?;
    if desc.delegated {
        return Err(Error::Param(format!("{} is checked numerically by the registry", desc.id)));
    }
    let lhs = desc.lhs.series(binding, cap)?;
    let mut rhs = desc.inner.series(binding, cap)?;
    for op in desc.chain.iter().rev() {
        let (a, b) = (op.alpha.eval(binding)?, op.beta.eval(binding)?);
        rhs = match op.kind {
            OpKind::H => apply_h(&rhs, &op.vars, &a, &b)?,
            OpKind::Hbar => apply_hbar(&rhs, &op.vars, &a, &b)?,
        };
    }
    Ok(VerifyReport {
        id: desc.id.clone(),
        cap,
        coefficients: lhs.len().max(rhs.len()),
        max_abs_err: lhs.max_abs_diff(&rhs)?,
        max_abs_coeff: lhs.max_abs(),
    })
}

/// Verifies one identity on `bindings` seeded random bindings in double
/// precision and returns the reports.
pub fn verify_random(desc: &OperatorIdentity, seed: u64, bindings: usize, cap: u32) -> Result<Vec<VerifyReport>> {
    let mut rng = rng_for(seed, &format!("op:{}", desc.id));
    let syms = desc.symbols();
    let lower = desc.pole_constrained();
    (0..bindings)
        .map(|_| {
            let b = sample_binding(&mut rng, &syms, &lower, 0.1)?;
            verify_operational_identity(desc, &b, cap)
        })
        .collect()
}

/// Draws one admissible binding for `desc`.
pub fn random_binding(desc: &OperatorIdentity, rng: &mut impl Rng) -> Result<Binding<f64>> {
    sample_binding(rng, &desc.symbols(), &desc.pole_constrained(), 0.1)
}

fn op(kind: OpKind, vars: &[usize], alpha: &str, beta: &str) -> OpStep {
    OpStep { kind, vars: vars.to_vec(), alpha: ex(alpha), beta: ex(beta) }
}

fn lau(family: Family, r: usize, subs: &[(&str, &str)]) -> SideSpec {
    SideSpec::Lauricella(FamilyTemplate::standard(family, r).with(subs))
}

/// The 39 operational representations. General-arity entries are
/// instantiated at `r` variables; the rest are three-variable.
pub fn operator_catalog(r: usize) -> Vec<OperatorIdentity> {
    use Family::*;
    use OpKind::*;
    let all: Vec<usize> = (0..r).collect();
    let mut out = Vec::new();
    let mut push = |id: &str, family, arity, general, lhs, chain: Vec<OpStep>, inner, delegated| {
        let mut slots = BTreeSet::new();
        for s in chain.iter().flat_map(|o: &OpStep| o.alpha.symbols().chain(o.beta.symbols())) {
            if s.starts_with('e') {
                slots.insert(s.to_string());
            }
        }
        out.push(OperatorIdentity {
            id: id.to_string(),
            family,
            arity,
            general_arity: general,
            slots: slots.into_iter().collect(),
            lhs,
            chain,
            inner,
            delegated,
        });
    };

    let std = |f| lau(f, r, &[]);
    push("2.1", A, r, true, std(A), vec![op(H, &all, "a", "e")], lau(A, r, &[("a", "e")]), false);
    push("2.2", A, r, true, std(A), vec![op(Hbar, &all, "e", "a")], lau(A, r, &[("a", "e")]), false);
    push("2.3", B, r, true, std(B), vec![op(Hbar, &all, "g", "e")], lau(B, r, &[("g", "e")]), false);
    push("2.4", C, r, true, std(C), vec![op(H, &all, "a", "e")], lau(C, r, &[("a", "e")]), false);
    push("2.5", C, r, true, std(C), vec![op(Hbar, &all, "e", "a")], lau(C, r, &[("a", "e")]), false);
    let c12 = lau(C, r, &[("a", "e1"), ("b", "e2")]);
    push("2.6", C, r, true, std(C), vec![op(H, &all, "a", "e1"), op(H, &all, "b", "e2")], c12.clone(), false);
    push("2.7", C, r, true, std(C), vec![op(Hbar, &all, "e1", "a"), op(Hbar, &all, "e2", "b")], c12, false);
    push("2.8", D, r, true, std(D), vec![op(H, &all, "a", "e")], lau(D, r, &[("a", "e")]), false);
    push("2.9", D, r, true, std(D), vec![op(Hbar, &all, "e", "a")], lau(D, r, &[("a", "e")]), false);
    push("2.10", D, r, true, std(D), vec![op(H, &all, "e", "g")], lau(D, r, &[("g", "e")]), false);
    let prod = |r: usize| SideSpec::BinomialProduct { beta: (1..=r).map(|j| ex(&format!("b{j}"))).collect() };
    push("2.11", D, r, true, std(D), vec![op(H, &all, "a", "g")], prod(r), false);
    push("2.12", D, r, true, prod(r), vec![op(Hbar, &all, "a", "g")], std(D), false);

    // Three-variable entries: one, two or three coordinate parameters
    // replaced by slots, with H and H̄ forms.
    let xyz = [0usize, 1, 2];
    let std3 = |f| lau(f, 3, &[]);
    let slot_block = |fam: Family, stem: &str, ids: [&str; 6]| {
        let mut v = Vec::new();
        for (n, pair) in [1usize, 2, 3].iter().zip(ids.chunks(2)) {
            let subs: Vec<(String, String)> = (1..=*n).map(|j| (format!("{stem}{j}"), format!("e{j}"))).collect();
            let subs_ref: Vec<(&str, &str)> = subs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let inner = lau(fam, 3, &subs_ref);
            let hs = (0..*n).map(|j| op(H, &[xyz[j]], &subs[j].0, &subs[j].1)).collect::<Vec<_>>();
            let hbars = (0..*n).map(|j| op(Hbar, &[xyz[j]], &subs[j].1, &subs[j].0)).collect::<Vec<_>>();
            v.push((pair[0].to_string(), hs, inner.clone()));
            v.push((pair[1].to_string(), hbars, inner));
        }
        v
    };
    for (id, chain, inner) in slot_block(A, "b", ["3.1", "3.2", "3.3", "3.4", "3.5", "3.6"]) {
        push(&id, A, 3, false, std3(A), chain, inner, false);
    }
    let f2x = SideSpec::Composite { description: "(1-x)^(-a) F2(a; b2, b3; g2, g3; y/(1-x), z/(1-x))".into() };
    let g_xy = SideSpec::Composite { description: "(1-x-y)^(-a) 2F1(a, b3; g3; z/(1-x-y))".into() };
    push("3.7", A, 3, false, std3(A), vec![op(H, &[0], "b1", "g1")], f2x.clone(), true);
    push("3.8", A, 3, false, f2x, vec![op(Hbar, &[0], "b1", "g1")], std3(A), true);
    push("3.9", A, 3, false, std3(A), vec![op(H, &[0], "b1", "g1"), op(H, &[1], "b2", "g2")], g_xy.clone(), true);
    push("3.10", A, 3, false, g_xy, vec![op(Hbar, &[0], "b1", "g1"), op(Hbar, &[1], "b2", "g2")], std3(A), true);
    let pos = SideSpec::PowerOfSum { alpha: ex("a"), arity: 3 };
    let bg = |k| (1..=3).map(|j| op(k, &[j - 1], &format!("b{j}"), &format!("g{j}"))).collect::<Vec<_>>();
    push("3.11", A, 3, false, std3(A), bg(H), pos.clone(), false);
    push("3.12", A, 3, false, pos, bg(Hbar), std3(A), false);
    for (id, chain, inner) in slot_block(B, "a", ["3.13", "3.14", "3.15", "3.16", "3.17", "3.18"]) {
        push(&id, B, 3, false, std3(B), chain, inner, false);
    }
    for n in 1..=3usize {
        let subs: Vec<(String, String)> = (1..=n).map(|j| (format!("g{j}"), format!("e{j}"))).collect();
        let subs_ref: Vec<(&str, &str)> = subs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let chain = (0..n).map(|j| op(H, &[j], &subs[j].1, &subs[j].0)).collect();
        push(&format!("3.{}", 18 + n), C, 3, false, std3(C), chain, lau(C, 3, &subs_ref), false);
    }
    for (id, chain, inner) in slot_block(D, "b", ["3.22", "3.23", "3.24", "3.25", "3.26", "3.27"]) {
        push(&id, D, 3, false, std3(D), chain, inner, false);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigRational;

    #[test]
    fn catalog_shape() {
        let cat = operator_catalog(2);
        assert_eq!(cat.len(), 39);
        assert_eq!(cat.iter().filter(|d| d.delegated).count(), 4);
        let ids: BTreeSet<_> = cat.iter().map(|d| d.id.clone()).collect();
        assert_eq!(ids.len(), 39);
        for d in &cat {
            d.validate().unwrap();
        }
        let d = cat.iter().find(|d| d.id == "3.25").unwrap();
        assert_eq!(d.slots, vec!["e1", "e2"]);
        assert_eq!(d.chain[1].kind, OpKind::Hbar);
        assert_eq!(d.chain[1].alpha, ex("e2"));
        assert_eq!(d.chain[1].beta, ex("b2"));
    }

    #[test]
    fn exact_over_rationals() {
        for d in operator_catalog(2).iter().filter(|d| !d.delegated) {
            let mut rng = rng_for(11, &d.id);
            let b = random_binding(d, &mut rng).unwrap();
            let q: Binding<BigRational> = b.iter().map(|(k, v)| (k.clone(), BigRational::from_lit(*v))).collect();
            let rep = verify_operational_identity(d, &q, 5).unwrap();
            assert_eq!(rep.max_abs_err, 0.0, "{}", d.id);
        }
    }

    #[test]
    fn wrong_chain_is_detected() {
        let mut d = operator_catalog(2).into_iter().find(|d| d.id == "2.1").unwrap();
        d.chain[0].kind = OpKind::Hbar;
        let rep = verify_random(&d, 1, 1, 6).unwrap();
        assert!(rep[0].max_abs_err > 1e-6);
    }

    #[test]
    fn degenerate_slot_gives_zero_error() {
        let d = operator_catalog(3).into_iter().find(|d| d.id == "2.8").unwrap();
        let mut b = Binding::new();
        for (k, v) in [("a", 0.7), ("e", 0.7), ("b1", 1.1), ("b2", 0.4), ("b3", 1.9), ("g", 2.3)] {
            b.insert(k.to_string(), v);
        }
        assert_eq!(verify_operational_identity(&d, &b, 8).unwrap().max_abs_err, 0.0);
    }

    #[test]
    fn bad_subset_rejected() {
        let mut d = operator_catalog(2).into_iter().find(|d| d.id == "3.1").unwrap();
        d.chain[0].vars = vec![5];
        assert!(matches!(d.validate(), Err(Error::Index(_))));
    }
}
