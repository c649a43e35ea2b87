//! The three-variable F_D derivation chain.
//!
//! Starting from `F_D = H_x(b1,e1) H_y(b2,e2) H_z(b3,e3) F_D(a; e; g)`, each
//! `H` is expanded as a sum of `(-δ)_n` operators, and the action of
//! `(-δ_3)_k (-δ_2)_j (-δ_1)_i` on `F_D(a; e; g)` has a closed form as a
//! shifted-parameter F_D times a monomial. Substituting that action back
//! into the expansion yields a decomposition formula. This module checks
//! each link: the closed-form action against repeated `(-δ)_n`, and the
//! reassembled sum against `F_D(a; b; g)` both coefficientwise and at points.

use crate::error::{Error, Result};
use crate::operators::ops::pochhammer_neg_delta;
use crate::operators::truncated::{build_series, TruncatedSeries};
use crate::scalar::{factorial, rising, Real, Scalar};
use crate::series::{eval_lauricella, EvalOptions, Family, LauricellaParams, MultiIndex};

fn require_fd3<T>(p: &LauricellaParams<T>) -> Result<()> {
    if p.family != Family::D || p.arity != 3 {
        return Err(Error::Param("the derivation chain is stated for three-variable F_D".into()));
    }
    Ok(())
}

fn sign<T: Scalar>(n: u32) -> T {
    if n.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Prefactor `(-1)^n (a)_n (e1)_i (e2)_j (e3)_k / (g)_n`, `n = i+j+k`,
/// and the shifted parameters `F_D(a+n; e1+i, e2+j, e3+k; g+n)`.
fn closed_action<T: Scalar>(p: &LauricellaParams<T>, idx: [u32; 3]) -> Result<(T, LauricellaParams<T>)> {
    let n: u32 = idx.iter().sum();
    let mut c = sign::<T>(n) * rising(&p.alpha[0], n as usize);
    for (e, &d) in p.beta.iter().zip(&idx) {
        c = c * rising(e, d as usize);
    }
    let low = rising(&p.gamma[0], n as usize);
    if low.is_zero() {
        return Err(Error::SingularParam("(g)_n vanishes".into()));
    }
    c = c / low;
    let shift = |v: &T, d: u32| v.clone() + T::from_int(d as i64);
    let shifted = LauricellaParams::fd(
        shift(&p.alpha[0], n),
        p.beta.iter().zip(&idx).map(|(e, &d)| shift(e, d)).collect(),
        shift(&p.gamma[0], n),
    )?;
    Ok((c, shifted))
}

/// Both sides of the `(-δ)` action on `F_D(a; e1, e2, e3; g)` (the
/// parameters as given), truncated at `cap`: repeated single-variable
/// `(-δ_j)_n` on the series, and the closed form.
pub fn neg_delta_action_on_fd<T: Scalar>(
    i: u32,
    j: u32,
    k: u32,
    params: &LauricellaParams<T>,
    cap: u32,
) -> Result<(TruncatedSeries<T>, TruncatedSeries<T>)> {
    require_fd3(params)?;
    let base = build_series(params, cap)?;
    let mut lhs = pochhammer_neg_delta(&base, 0, i as usize)?;
    lhs = pochhammer_neg_delta(&lhs, 1, j as usize)?;
    lhs = pochhammer_neg_delta(&lhs, 2, k as usize)?;
    let (c, shifted) = closed_action(params, [i, j, k])?;
    let n = i + j + k;
    let rhs = if n > cap {
        TruncatedSeries::zero(3, cap)
    } else {
        let inner = build_series(&shifted, cap)?;
        inner.shifted(&MultiIndex::new(vec![i, j, k]))?.scale(&c)
    };
    Ok((lhs, rhs))
}

/// Weight of `(-δ_1)_i (-δ_2)_j (-δ_3)_k` in the expanded chain of `H`
/// operators: `prod_l (e_l - b_l)_{n_l} / ((e_l)_{n_l} n_l!)`.
fn chain_weight<T: Scalar>(b: &[T], e: &[T], idx: [u32; 3]) -> Result<T> {
    let mut w = T::one();
    for l in 0..3 {
        let d = idx[l] as usize;
        let den = rising(&e[l], d) * factorial::<T>(d);
        if den.is_zero() {
            return Err(Error::SingularParam(format!("(e{})_n vanishes", l + 1)));
        }
        w = w * rising(&(e[l].clone() - b[l].clone()), d) / den;
    }
    Ok(w)
}

/// The reassembled chain as a truncated series: the weighted sum of the
/// closed-form actions. Should equal the series of `F_D(a; b; g)`.
pub fn assembled_series<T: Scalar>(a: &T, b: &[T], e: &[T], g: &T, cap: u32) -> Result<TruncatedSeries<T>> {
    let inner = LauricellaParams::fd(a.clone(), e.to_vec(), g.clone())?;
    let mut acc = TruncatedSeries::zero(3, cap);
    for m in crate::series::multi_index::up_to(3, cap) {
        let idx = [m.get(0), m.get(1), m.get(2)];
        let w = chain_weight(b, e, idx)?;
        let (_, action) = neg_delta_action_on_fd(idx[0], idx[1], idx[2], &inner, cap)?;
        acc = acc.add(&action.scale(&w))?;
    }
    Ok(acc)
}

/// Pointwise value of the reassembled chain, summing outer indices up to
/// total `n_outer`. Returns the sum and the magnitude of the last outer
/// shell.
pub fn assembled_value<T: Real>(
    a: T,
    b: &[T],
    e: &[T],
    g: T,
    point: &[T],
    n_outer: u32,
    opts: &EvalOptions<T>,
) -> Result<(T, T)> {
    let inner = LauricellaParams::fd(a, e.to_vec(), g)?;
    let mut total = T::zero();
    let mut last = T::zero();
    for s in 0..=n_outer {
        let mut shell = T::zero();
        for m in crate::series::multi_index::shell(3, s) {
            let idx = [m.get(0), m.get(1), m.get(2)];
            let w = chain_weight(b, e, idx)?;
            let (c, shifted) = closed_action(&inner, idx)?;
            let mono = (0..3).fold(T::one(), |acc, l| acc * point[l].powi(idx[l] as i32));
            let f = eval_lauricella(&shifted, point, opts)?.value;
            shell = shell + w * c * mono * f;
        }
        total = total + shell;
        last = shell.abs();
    }
    Ok((total, last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn fd_params() -> LauricellaParams<BigRational> {
        LauricellaParams::fd(q(3, 7), vec![q(5, 4), q(2, 3), q(9, 5)], q(11, 6)).unwrap()
    }

    #[test]
    fn zero_order_action_is_identity() {
        let (l, r) = neg_delta_action_on_fd(0, 0, 0, &fd_params(), 6).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, build_series(&fd_params(), 6).unwrap());
    }

    #[test]
    fn closed_form_actions_are_exact() {
        for idx in [[1, 0, 0], [1, 1, 0], [1, 1, 1], [2, 0, 3], [0, 2, 1]] {
            let (l, r) = neg_delta_action_on_fd(idx[0], idx[1], idx[2], &fd_params(), 6).unwrap();
            assert_eq!(l.max_abs_diff(&r).unwrap(), 0.0, "{idx:?}");
        }
    }

    #[test]
    fn chain_reassembles_fd() {
        let (a, g) = (q(3, 7), q(11, 6));
        let b = [q(5, 4), q(2, 3), q(9, 5)];
        let e = [q(1, 2), q(7, 3), q(4, 5)];
        let got = assembled_series(&a, &b, &e, &g, 5).unwrap();
        let want = build_series(&LauricellaParams::fd(a, b.to_vec(), g).unwrap(), 5).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn wrong_family_rejected() {
        let p = LauricellaParams::fa(q(1, 2), vec![q(1, 3); 3], vec![q(2, 1); 3]).unwrap();
        assert!(neg_delta_action_on_fd(1, 0, 0, &p, 3).is_err());
    }
}
