//! The decomposition formula table.
//!
//! General-arity entries are built for a requested number of variables;
//! the three-variable entries are fixed. Outer index `l` of an `r`-index
//! sum pairs with coordinate `l`; the double sums use indices `0..r` for
//! `k` and `r..2r` for `l`.

use serde::Serialize;

use crate::expr::{ex, Affine};
use crate::registry::dsl::{Arg, Expression, Factor, InnerCall, Prefactor, Shifted};
use crate::series::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RhsKind {
    OuterSum,
    ClosedTransformation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LhsKind {
    Lauricella,
    /// An elementary product such as `(1-x-y-z)^(-a)`.
    ProductForm,
    /// A prefactor times a function of transformed arguments.
    Composite,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Formula {
    pub id: String,
    pub family: Family,
    pub arity: usize,
    pub general_arity: bool,
    pub slots: Vec<String>,
    pub lhs_kind: LhsKind,
    pub rhs_kind: RhsKind,
    pub lhs: Expression,
    /// The right side exactly as printed.
    pub rhs: Expression,
    /// A corrected reading of the right side, present only for entries
    /// suspected to be misprinted.
    pub corrected: Option<Expression>,
    pub note: String,
}

impl Formula {
    pub fn outer_sum_arity(&self) -> usize {
        self.rhs.outer
    }

    /// Right side under the preferred reading.
    pub fn preferred_rhs(&self) -> &Expression {
        self.corrected.as_ref().unwrap_or(&self.rhs)
    }

    /// LHS and both readings of the RHS.
    pub fn symbols(&self) -> Vec<String> {
        let mut v = self.lhs.symbols();
        v.extend(self.rhs.symbols());
        if let Some(c) = &self.corrected {
            v.extend(c.symbols());
        }
        v.sort();
        v.dedup();
        v
    }
}

// Small constructors keep the table readable.

fn up(base: &str, over: &[usize]) -> Factor {
    Factor::Upper { base: ex(base), over: over.to_vec() }
}

fn low(base: &str, over: &[usize]) -> Factor {
    Factor::Lower { base: ex(base), over: over.to_vec() }
}

fn sign(over: &[usize]) -> Factor {
    Factor::Sign { over: over.to_vec() }
}

fn pow(arg: Arg, over: &[usize]) -> Factor {
    Factor::Power { arg, over: over.to_vec() }
}

fn sh(base: &str, shift: &[usize]) -> Shifted {
    Shifted { base: ex(base), shift: shift.to_vec() }
}

fn opt(shift: bool, j: usize) -> Vec<usize> {
    if shift { vec![j] } else { vec![] }
}

fn fixed(base: &str) -> Shifted {
    Shifted::fixed(ex(base))
}

fn plain_args(r: usize) -> Vec<Arg> {
    (0..r).map(Arg::plain).collect()
}

fn call(family: Family, alpha: Vec<Shifted>, beta: Vec<Shifted>, gamma: Vec<Shifted>, args: Vec<Arg>) -> InnerCall {
    InnerCall { family, alpha, beta, gamma, args }
}

fn sum(outer: usize, factors: Vec<Factor>, inner: InnerCall) -> Expression {
    Expression { outer, factors, prefactors: vec![], inner: Some(inner) }
}

/// A plain Lauricella function with the standard symbol names.
fn standard(family: Family, r: usize) -> InnerCall {
    let t = crate::template::FamilyTemplate::standard(family, r);
    let f = |v: &[Affine]| v.iter().cloned().map(Shifted::fixed).collect();
    call(family, f(&t.alpha), f(&t.beta), f(&t.gamma), plain_args(r))
}

fn lauricella(family: Family, r: usize) -> Expression {
    Expression { outer: 0, factors: vec![], prefactors: vec![], inner: Some(standard(family, r)) }
}

fn num(stem: &str, j: usize) -> String {
    format!("{stem}{}", j + 1)
}

/// `prod_j (1 - x_j)^(-b_j)`.
fn binomial_prefactors(r: usize) -> Vec<Prefactor> {
    (0..r).map(|j| Prefactor { subset: vec![j], exponent: ex(&format!("-{}", num("b", j))) }).collect()
}

fn power_prefactor(subset: &[usize]) -> Vec<Prefactor> {
    vec![Prefactor { subset: subset.to_vec(), exponent: ex("-a") }]
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &str,
    family: Family,
    arity: usize,
    general: bool,
    lhs_kind: LhsKind,
    lhs: Expression,
    rhs: Expression,
    corrected: Option<Expression>,
    note: &str,
) -> Formula {
    let mut slots: Vec<String> = rhs.symbols().into_iter().filter(|s| s.starts_with('e')).collect();
    slots.sort();
    slots.dedup();
    let rhs_kind = if rhs.outer == 0 { RhsKind::ClosedTransformation } else { RhsKind::OuterSum };
    Formula {
        id: id.to_string(),
        family,
        arity,
        general_arity: general,
        slots,
        lhs_kind,
        rhs_kind,
        lhs,
        rhs,
        corrected,
        note: note.to_string(),
    }
}

/// The twelve general-arity formulas at `r` variables.
pub fn general_formulas(r: usize) -> Vec<Formula> {
    use Family::*;
    let all: Vec<usize> = (0..r).collect();
    let mut out = Vec::new();
    let lau = LhsKind::Lauricella;
    let per = |f: &dyn Fn(usize) -> Vec<Factor>| (0..r).flat_map(f).collect::<Vec<_>>();
    let xs = |j: usize| pow(Arg::plain(j), &[j]);
    let bs = |shift: bool| (0..r).map(|j| sh(&num("b", j), &opt(shift, j))).collect::<Vec<_>>();
    let gs = |shift: bool| (0..r).map(|j| sh(&num("g", j), &opt(shift, j))).collect::<Vec<_>>();

    // F_A
    let mut f = vec![sign(&all), up("e-a", &all)];
    f.extend(per(&|j| vec![up(&num("b", j), &[j]), low(&num("g", j), &[j]), xs(j)]));
    let inner = call(A, vec![sh("e", &all)], bs(true), gs(true), plain_args(r));
    out.push(entry("2.15", A, r, true, lau, lauricella(A, r), sum(r, f, inner), None, ""));

    let mut f = vec![up("a-e", &all)];
    f.extend(per(&|j| vec![up(&num("b", j), &[j]), low(&num("g", j), &[j]), xs(j)]));
    let inner = call(A, vec![fixed("e")], bs(true), gs(true), plain_args(r));
    out.push(entry("2.16", A, r, true, lau, lauricella(A, r), sum(r, f, inner), None, ""));

    // F_B
    let mut f = vec![sign(&all), up("g-e", &all), low("g", &all), low("e", &all)];
    f.extend(per(&|j| vec![up(&num("a", j), &[j]), up(&num("b", j), &[j]), xs(j)]));
    let a_sh = (0..r).map(|j| sh(&num("a", j), &[j])).collect();
    let inner = call(B, a_sh, bs(true), vec![sh("e", &all)], plain_args(r));
    out.push(entry("2.17", B, r, true, lau, lauricella(B, r), sum(r, f, inner), None, ""));

    // F_C
    let mut f = vec![sign(&all), up("e-a", &all), up("b", &all)];
    f.extend(per(&|j| vec![low(&num("g", j), &[j]), xs(j)]));
    let inner = call(C, vec![sh("e", &all)], vec![sh("b", &all)], gs(true), plain_args(r));
    out.push(entry("2.18", C, r, true, lau, lauricella(C, r), sum(r, f, inner), None, ""));

    let mut f = vec![up("a-e", &all), up("b", &all)];
    f.extend(per(&|j| vec![low(&num("g", j), &[j]), xs(j)]));
    let inner = call(C, vec![fixed("e")], vec![sh("b", &all)], gs(true), plain_args(r));
    out.push(entry("2.19", C, r, true, lau, lauricella(C, r), sum(r, f, inner), None, ""));

    // Double sums: k = 0..r, l = r..2r.
    let ks: Vec<usize> = (0..r).collect();
    let ls: Vec<usize> = (r..2 * r).collect();
    let kl: Vec<usize> = (0..2 * r).collect();
    let pair = |j: usize| vec![j, r + j];
    let g_kl: Vec<Shifted> = (0..r).map(|j| sh(&num("g", j), &pair(j))).collect();
    let mut f = vec![sign(&kl), up("e1-a", &ks), low("e1", &ks), up("e2-b", &ls), up("b", &ks), up("e1", &kl)];
    f.extend(per(&|j| vec![low(&num("g", j), &pair(j)), pow(Arg::plain(j), &pair(j))]));
    let inner = call(C, vec![sh("e1", &kl)], vec![sh("e2", &kl)], g_kl.clone(), plain_args(r));
    out.push(entry("2.20", C, r, true, lau, lauricella(C, r), sum(2 * r, f, inner), None, ""));

    let tail = per(&|j| vec![low(&num("g", j), &pair(j)), pow(Arg::plain(j), &pair(j))]);
    let mut f = vec![sign(&ls), up("a-e1", &ks), up("b-e2", &kl), up("b", &ks), low("b-e2", &ks)];
    f.extend(tail.clone());
    let printed = sum(2 * r, f, call(C, vec![sh("e1", &ls)], vec![sh("e2", &ls)], g_kl.clone(), plain_args(r)));
    let mut f = vec![up("a-e1", &ks), up("b-e2", &kl), up("b", &ks), low("b-e2", &ks), up("e1", &ls)];
    f.extend(tail);
    let fixed_reading = sum(2 * r, f, call(C, vec![sh("e1", &ls)], vec![fixed("e2")], g_kl, plain_args(r)));
    out.push(entry(
        "2.21",
        C,
        r,
        true,
        lau,
        lauricella(C, r),
        printed,
        Some(fixed_reading),
        "corrected reading drops the (-1)^L sign, adds (e1)_L to the numerator and leaves e2 unshifted",
    ));

    // F_D
    let mut f = vec![sign(&all), up("e-a", &all), low("g", &all)];
    f.extend(per(&|j| vec![up(&num("b", j), &[j]), xs(j)]));
    let inner = call(D, vec![sh("e", &all)], bs(true), vec![sh("g", &all)], plain_args(r));
    out.push(entry("2.22", D, r, true, lau, lauricella(D, r), sum(r, f, inner), None, ""));

    let mut f = vec![up("a-e", &all), low("g", &all)];
    f.extend(per(&|j| vec![up(&num("b", j), &[j]), xs(j)]));
    let inner = call(D, vec![fixed("e")], bs(true), vec![sh("g", &all)], plain_args(r));
    out.push(entry("2.23", D, r, true, lau, lauricella(D, r), sum(r, f, inner), None, ""));

    let mut f = vec![sign(&all), up("g-e", &all), up("a", &all), low("g", &all), low("e", &all)];
    f.extend(per(&|j| vec![up(&num("b", j), &[j]), xs(j)]));
    let inner = call(D, vec![sh("a", &all)], bs(true), vec![sh("e", &all)], plain_args(r));
    out.push(entry("2.24", D, r, true, lau, lauricella(D, r), sum(r, f, inner), None, ""));

    let pfaff = Expression {
        outer: 0,
        factors: vec![],
        prefactors: binomial_prefactors(r),
        inner: Some(call(D, vec![fixed("g-a")], bs(false), vec![fixed("g")], (0..r).map(|j| Arg::over_neg(j, &[j])).collect())),
    };
    out.push(entry("2.25", D, r, true, lau, lauricella(D, r), pfaff, None, ""));

    let product = Expression { outer: 0, factors: vec![], prefactors: binomial_prefactors(r), inner: None };
    let mut f = vec![up("g-a", &all), low("g", &all)];
    f.extend(per(&|j| vec![up(&num("b", j), &[j]), xs(j)]));
    let inner = call(D, vec![fixed("a")], bs(true), vec![sh("g", &all)], plain_args(r));
    out.push(entry("2.26", D, r, true, LhsKind::ProductForm, product, sum(r, f, inner), None, ""));
    out
}

/// The 27 three-variable formulas.
pub fn three_variable_formulas() -> Vec<Formula> {
    use Family::*;
    let lau = LhsKind::Lauricella;
    let mut out = Vec::new();
    let xs = |j: usize| pow(Arg::plain(j), &[j]);
    let idx = |n: usize| (0..n).collect::<Vec<usize>>();
    let ids = |start: usize| (start..start + 6).map(|k| format!("3.{k}")).collect::<Vec<_>>();

    // F_A with one, two or three beta slots.
    let a_ids = ids(29);
    for n in 1..=3usize {
        let big = idx(n);
        let beta_sh = |shift: bool| {
            (0..3)
                .map(|j| if j < n { sh(&num("e", j), &opt(shift, j)) } else { fixed(&num("b", j)) })
                .collect::<Vec<_>>()
        };
        let gamma_sh: Vec<Shifted> =
            (0..3).map(|j| if j < n { sh(&num("g", j), &[j]) } else { fixed(&num("g", j)) }).collect();
        let mut f = vec![sign(&big), up("a", &big)];
        for j in 0..n {
            f.extend([up(&format!("{}-{}", num("e", j), num("b", j)), &[j]), low(&num("g", j), &[j]), xs(j)]);
        }
        let inner = call(A, vec![sh("a", &big)], beta_sh(true), gamma_sh.clone(), plain_args(3));
        out.push(entry(&a_ids[2 * n - 2], A, 3, false, lau, lauricella(A, 3), sum(n, f, inner), None, ""));
        let mut f = vec![up("a", &big)];
        for j in 0..n {
            f.extend([up(&format!("{}-{}", num("b", j), num("e", j)), &[j]), low(&num("g", j), &[j]), xs(j)]);
        }
        let inner = call(A, vec![sh("a", &big)], beta_sh(false), gamma_sh, plain_args(3));
        out.push(entry(&a_ids[2 * n - 1], A, 3, false, lau, lauricella(A, 3), sum(n, f, inner), None, ""));
    }

    // F_A against F_2 and 2F1 of transformed arguments.
    let f2_of = |alpha: Shifted, args: Vec<Arg>| {
        call(A, vec![alpha], vec![fixed("b2"), fixed("b3")], vec![fixed("g2"), fixed("g3")], args)
    };
    let f1_of = |alpha: Shifted, args: Vec<Arg>| call(A, vec![alpha], vec![fixed("b3")], vec![fixed("g3")], args);
    let yz_over_x = vec![Arg::over(1, &[0]), Arg::over(2, &[0])];
    let z_over_xy = vec![Arg::over(2, &[0, 1])];
    let g_gs = |n: usize| (0..3).map(|j| if j < n { sh(&num("g", j), &[j]) } else { fixed(&num("g", j)) }).collect();
    let b_fixed = || (0..3).map(|j| fixed(&num("b", j))).collect::<Vec<_>>();

    let rhs = Expression {
        outer: 1,
        factors: vec![up("a", &[0]), up("g1-b1", &[0]), low("g1", &[0]), pow(Arg::over_neg(0, &[0]), &[0])],
        prefactors: power_prefactor(&[0]),
        inner: Some(f2_of(sh("a", &[0]), yz_over_x.clone())),
    };
    out.push(entry("3.35", A, 3, false, lau, lauricella(A, 3), rhs, None, ""));

    let lhs = Expression {
        outer: 0,
        factors: vec![],
        prefactors: power_prefactor(&[0]),
        inner: Some(f2_of(fixed("a"), yz_over_x.clone())),
    };
    let rhs = sum(
        1,
        vec![up("a", &[0]), up("g1-b1", &[0]), low("g1", &[0]), xs(0)],
        call(A, vec![sh("a", &[0])], b_fixed(), g_gs(1), plain_args(3)),
    );
    out.push(entry("3.36", A, 3, false, LhsKind::Composite, lhs, rhs, None, ""));

    let rhs = Expression {
        outer: 2,
        factors: vec![
            sign(&[0, 1]),
            up("a", &[0, 1]),
            up("g1-b1", &[0]),
            up("g2-b2", &[1]),
            low("g1", &[0]),
            low("g2", &[1]),
            pow(Arg::over(0, &[0, 1]), &[0]),
            pow(Arg::over(1, &[0, 1]), &[1]),
        ],
        prefactors: power_prefactor(&[0, 1]),
        inner: Some(f1_of(sh("a", &[0, 1]), z_over_xy.clone())),
    };
    out.push(entry("3.37", A, 3, false, lau, lauricella(A, 3), rhs, None, ""));

    let lhs = Expression {
        outer: 0,
        factors: vec![],
        prefactors: power_prefactor(&[0, 1]),
        inner: Some(f1_of(fixed("a"), z_over_xy.clone())),
    };
    let rhs = sum(
        2,
        vec![up("a", &[0, 1]), up("g1-b1", &[0]), up("g2-b2", &[1]), low("g1", &[0]), low("g2", &[1]), xs(0), xs(1)],
        call(A, vec![sh("a", &[0, 1])], b_fixed(), g_gs(2), plain_args(3)),
    );
    out.push(entry("3.38", A, 3, false, LhsKind::Composite, lhs, rhs, None, ""));

    let xyz = [0usize, 1, 2];
    let rhs = Expression {
        outer: 0,
        factors: vec![],
        prefactors: power_prefactor(&xyz),
        inner: Some(call(
            A,
            vec![fixed("a")],
            (0..3).map(|j| fixed(&format!("{}-{}", num("g", j), num("b", j)))).collect(),
            (0..3).map(|j| fixed(&num("g", j))).collect(),
            (0..3).map(|j| Arg::over_neg(j, &xyz)).collect(),
        )),
    };
    out.push(entry("3.39", A, 3, false, lau, lauricella(A, 3), rhs, None, ""));

    let lhs = Expression { outer: 0, factors: vec![], prefactors: power_prefactor(&xyz), inner: None };
    let mut f = vec![up("a", &xyz)];
    for j in 0..3 {
        f.extend([up(&format!("{}-{}", num("g", j), num("b", j)), &[j]), low(&num("g", j), &[j]), xs(j)]);
    }
    let rhs = sum(3, f, call(A, vec![sh("a", &xyz)], b_fixed(), g_gs(3), plain_args(3)));
    out.push(entry("3.40", A, 3, false, LhsKind::ProductForm, lhs, rhs, None, ""));

    // F_B with one, two or three alpha slots.
    let b_ids = ids(41);
    for n in 1..=3usize {
        let big = idx(n);
        let alpha_sh = |shift: bool| {
            (0..3)
                .map(|j| if j < n { sh(&num("e", j), &opt(shift, j)) } else { fixed(&num("a", j)) })
                .collect::<Vec<_>>()
        };
        let beta_sh: Vec<Shifted> =
            (0..3).map(|j| if j < n { sh(&num("b", j), &[j]) } else { fixed(&num("b", j)) }).collect();
        let mut f = vec![sign(&big), low("g", &big)];
        for j in 0..n {
            f.extend([up(&format!("{}-{}", num("e", j), num("a", j)), &[j]), up(&num("b", j), &[j]), xs(j)]);
        }
        let inner = call(B, alpha_sh(true), beta_sh.clone(), vec![sh("g", &big)], plain_args(3));
        out.push(entry(&b_ids[2 * n - 2], B, 3, false, lau, lauricella(B, 3), sum(n, f, inner), None, ""));

        let build = |second_over: usize| {
            let mut f = vec![low("g", &big)];
            for j in 0..n {
                let over = if j == 1 { second_over } else { j };
                f.extend([up(&format!("{}-{}", num("a", j), num("e", j)), &[over]), up(&num("b", j), &[j]), xs(j)]);
            }
            sum(n, f, call(B, alpha_sh(false), beta_sh.clone(), vec![sh("g", &big)], plain_args(3)))
        };
        let id = &b_ids[2 * n - 1];
        let (rhs, corrected, note) = if n == 1 {
            (build(1), None, "the printed (gamma_1)_i denominator is read as (g)_i")
        } else {
            (
                build(0),
                Some(build(1)),
                "printed (a2-e2) carries index i; corrected reading uses j; (gamma_1) in the denominator is read as g",
            )
        };
        out.push(entry(id, B, 3, false, lau, lauricella(B, 3), rhs, corrected, note));
    }

    // F_C with one, two or three gamma slots.
    for n in 1..=3usize {
        let big = idx(n);
        let mut f = vec![sign(&big), up("a", &big), up("b", &big)];
        for j in 0..n {
            f.extend([
                up(&format!("{}-{}", num("g", j), num("e", j)), &[j]),
                low(&num("g", j), &[j]),
                low(&num("e", j), &[j]),
                xs(j),
            ]);
        }
        let gamma_sh = (0..3).map(|j| if j < n { sh(&num("e", j), &[j]) } else { fixed(&num("g", j)) }).collect();
        let inner = call(C, vec![sh("a", &big)], vec![sh("b", &big)], gamma_sh, plain_args(3));
        out.push(entry(&format!("3.{}", 46 + n), C, 3, false, lau, lauricella(C, 3), sum(n, f, inner), None, ""));
    }

    // F_D with one, two or three beta slots.
    let d_ids = ids(50);
    for n in 1..=3usize {
        let big = idx(n);
        let beta_sh = |shift: bool| {
            (0..3)
                .map(|j| if j < n { sh(&num("e", j), &opt(shift, j)) } else { fixed(&num("b", j)) })
                .collect::<Vec<_>>()
        };
        let mut f = vec![sign(&big), up("a", &big), low("g", &big)];
        for j in 0..n {
            f.extend([up(&format!("{}-{}", num("e", j), num("b", j)), &[j]), xs(j)]);
        }
        let inner = call(D, vec![sh("a", &big)], beta_sh(true), vec![sh("g", &big)], plain_args(3));
        out.push(entry(&d_ids[2 * n - 2], D, 3, false, lau, lauricella(D, 3), sum(n, f, inner), None, ""));
        let mut f = vec![up("a", &big), low("g", &big)];
        for j in 0..n {
            f.extend([up(&format!("{}-{}", num("b", j), num("e", j)), &[j]), xs(j)]);
        }
        let inner = call(D, vec![sh("a", &big)], beta_sh(false), vec![sh("g", &big)], plain_args(3));
        out.push(entry(&d_ids[2 * n - 1], D, 3, false, lau, lauricella(D, 3), sum(n, f, inner), None, ""));
    }
    out
}

/// Full catalog: general-arity formulas at `r` variables followed by the
/// three-variable ones.
pub fn list_formulas(r: usize) -> Vec<Formula> {
    let mut v = general_formulas(r);
    v.extend(three_variable_formulas());
    v
}

pub fn lookup(r: usize, id: &str) -> Option<Formula> {
    list_formulas(r).into_iter().chain(delegated_checks()).find(|f| f.id == id)
}

/// Numeric stand-ins for the operational representations whose functions
/// have composite arguments. Each right side is the operator chain applied
/// through its `(-δ)` expansion, in closed form.
pub fn delegated_checks() -> Vec<Formula> {
    use Family::A;
    let f2_of = |alpha: Shifted, args: Vec<Arg>| {
        call(A, vec![alpha], vec![fixed("b2"), fixed("b3")], vec![fixed("g2"), fixed("g3")], args)
    };
    let f1_of = |alpha: Shifted, args: Vec<Arg>| call(A, vec![alpha], vec![fixed("b3")], vec![fixed("g3")], args);
    let yz_over_x = vec![Arg::over(1, &[0]), Arg::over(2, &[0])];
    let z_over_xy = vec![Arg::over(2, &[0, 1])];
    let mut out = Vec::new();
    let note = "operational representation checked pointwise";

    let rhs = Expression {
        outer: 1,
        factors: vec![sign(&[0]), up("g1-b1", &[0]), up("a", &[0]), low("g1", &[0]), pow(Arg::over(0, &[0]), &[0])],
        prefactors: power_prefactor(&[0]),
        inner: Some(f2_of(sh("a", &[0]), yz_over_x.clone())),
    };
    out.push(entry("3.7", A, 3, false, LhsKind::Lauricella, lauricella(A, 3), rhs, None, note));

    let lhs = Expression {
        outer: 0,
        factors: vec![],
        prefactors: power_prefactor(&[0]),
        inner: Some(f2_of(fixed("a"), yz_over_x)),
    };
    let rhs = sum(1, vec![up("a", &[0]), pow(Arg::plain(0), &[0])], f2_of(sh("a", &[0]), vec![Arg::plain(1), Arg::plain(2)]));
    out.push(entry("3.8", A, 3, false, LhsKind::Composite, lhs, rhs, None, note));

    let rhs = Expression {
        outer: 2,
        factors: vec![
            sign(&[0, 1]),
            up("a", &[0, 1]),
            up("g1-b1", &[0]),
            up("g2-b2", &[1]),
            low("g1", &[0]),
            low("g2", &[1]),
            pow(Arg::over(0, &[0, 1]), &[0]),
            pow(Arg::over(1, &[0, 1]), &[1]),
        ],
        prefactors: power_prefactor(&[0, 1]),
        inner: Some(f1_of(sh("a", &[0, 1]), z_over_xy.clone())),
    };
    out.push(entry("3.9", A, 3, false, LhsKind::Lauricella, lauricella(A, 3), rhs, None, note));

    let lhs = Expression {
        outer: 0,
        factors: vec![],
        prefactors: power_prefactor(&[0, 1]),
        inner: Some(f1_of(fixed("a"), z_over_xy)),
    };
    let rhs = sum(
        2,
        vec![up("a", &[0, 1]), pow(Arg::plain(0), &[0]), pow(Arg::plain(1), &[1])],
        f1_of(sh("a", &[0, 1]), vec![Arg::plain(2)]),
    );
    out.push(entry("3.10", A, 3, false, LhsKind::Composite, lhs, rhs, None, note));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn counts_and_unique_ids() {
        for r in [1, 2, 3, 4] {
            let cat = list_formulas(r);
            assert_eq!(cat.len(), 39);
            assert_eq!(cat.iter().filter(|f| f.general_arity).count(), 12);
            let ids: BTreeSet<_> = cat.iter().map(|f| &f.id).collect();
            assert_eq!(ids.len(), 39);
        }
        assert_eq!(lookup(2, "3.54").unwrap().arity, 3);
        assert_eq!(delegated_checks().len(), 4);
    }

    #[test]
    fn closed_forms_have_no_outer_sum() {
        for f in list_formulas(3) {
            assert_eq!(f.rhs_kind == RhsKind::ClosedTransformation, f.outer_sum_arity() == 0, "{}", f.id);
        }
        let closed: Vec<_> =
            list_formulas(3).into_iter().filter(|f| f.rhs_kind == RhsKind::ClosedTransformation).map(|f| f.id).collect();
        assert_eq!(closed, ["2.25", "3.39"]);
    }

    #[test]
    fn suspected_entries() {
        let s: Vec<_> = list_formulas(2).into_iter().filter(|f| f.corrected.is_some()).map(|f| f.id).collect();
        assert_eq!(s, ["2.21", "3.44", "3.46"]);
    }

    #[test]
    fn slots_are_declared() {
        let f = lookup(3, "3.54").unwrap();
        assert_eq!(f.slots, ["e1", "e2", "e3"]);
        assert!(lookup(3, "3.39").unwrap().slots.is_empty());
    }
}
