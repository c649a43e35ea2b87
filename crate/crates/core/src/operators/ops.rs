//! Diagonal actions of the symbolic operators.
//!
//! Every operator here is a function of the Euler operators
//! `δ_j = x_j ∂/∂x_j`, so it maps `x^m` to a multiple of itself. The
//! multiplier is read off the gamma-ratio form and expressed through
//! Pochhammer symbols, which keeps it exact over rationals.

use crate::error::{Error, Result};
use crate::operators::truncated::TruncatedSeries;
use crate::scalar::{rising, Scalar};
use crate::series::multi_index::MultiIndex;

fn check_var<T: Scalar>(s: &TruncatedSeries<T>, j: usize) -> Result<()> {
    if j >= s.arity() {
        return Err(Error::Index(format!("variable {} out of range for arity {}", j + 1, s.arity())));
    }
    Ok(())
}

fn check_vars<T: Scalar>(s: &TruncatedSeries<T>, vars: &[usize]) -> Result<()> {
    for (k, &j) in vars.iter().enumerate() {
        check_var(s, j)?;
        if vars[..k].contains(&j) {
            return Err(Error::Index(format!("variable {} listed twice", j + 1)));
        }
    }
    Ok(())
}

fn check_param<T: Scalar>(name: &str, v: &T) -> Result<()> {
    if v.is_nonpositive_integer() {
        return Err(Error::Param(format!("{name} = {} is a non-positive integer", v.as_f64())));
    }
    Ok(())
}

fn require_two<T: Scalar>(s: &TruncatedSeries<T>) -> Result<()> {
    if s.arity() != 2 {
        return Err(Error::Index(format!("operator needs two variables, series has {}", s.arity())));
    }
    Ok(())
}

/// `δ_j`: multiplies the coefficient of `x^m` by `m_j`.
pub fn euler_delta<T: Scalar>(s: &TruncatedSeries<T>, j: usize) -> Result<TruncatedSeries<T>> {
    check_var(s, j)?;
    s.map_diagonal(|m| Ok(T::from_int(m.get(j) as i64)))
}

/// `(δ_j + α)_n`: multiplier `(m_j + α)_n`.
pub fn pochhammer_shifted_delta<T: Scalar>(
    s: &TruncatedSeries<T>,
    j: usize,
    alpha: &T,
    n: usize,
) -> Result<TruncatedSeries<T>> {
    check_var(s, j)?;
    s.map_diagonal(|m| Ok(rising(&(T::from_int(m.get(j) as i64) + alpha.clone()), n)))
}

/// `(-δ_j)_n`: multiplier `(-m_j)_n`, which vanishes for `n > m_j`.
pub fn pochhammer_neg_delta<T: Scalar>(s: &TruncatedSeries<T>, j: usize, n: usize) -> Result<TruncatedSeries<T>> {
    check_var(s, j)?;
    s.map_diagonal(|m| Ok(rising(&T::from_int(-(m.get(j) as i64)), n)))
}

/// Multiplier of `H_vars(α, β)` on `x^m`: `(α)_s / (β)_s`, `s = Σ_{j∈vars} m_j`.
pub fn h_factor<T: Scalar>(m: &MultiIndex, vars: &[usize], alpha: &T, beta: &T) -> T {
    let s = m.partial_total(vars) as usize;
    rising(alpha, s) / rising(beta, s)
}

/// `H_vars(α, β)`.
pub fn apply_h<T: Scalar>(s: &TruncatedSeries<T>, vars: &[usize], alpha: &T, beta: &T) -> Result<TruncatedSeries<T>> {
    check_vars(s, vars)?;
    check_param("alpha", alpha)?;
    check_param("beta", beta)?;
    s.map_diagonal(|m| Ok(h_factor(m, vars, alpha, beta)))
}

/// `H̄_vars(α, β)`, the inverse of `H_vars(α, β)`: multiplier `(β)_s / (α)_s`.
pub fn apply_hbar<T: Scalar>(s: &TruncatedSeries<T>, vars: &[usize], alpha: &T, beta: &T) -> Result<TruncatedSeries<T>> {
    check_vars(s, vars)?;
    check_param("alpha", alpha)?;
    check_param("beta", beta)?;
    s.map_diagonal(|m| Ok(h_factor(m, vars, beta, alpha)))
}

/// Multiplier of `∇_xy(h)` on `x^i y^j`: `(h)_{i+j} / ((h)_i (h)_j)`.
pub fn nabla_factor<T: Scalar>(i: u32, j: u32, h: &T) -> T {
    rising(h, (i + j) as usize) / (rising(h, i as usize) * rising(h, j as usize))
}

/// `∇_xy(h)` on a two-variable series.
pub fn apply_nabla<T: Scalar>(s: &TruncatedSeries<T>, h: &T) -> Result<TruncatedSeries<T>> {
    require_two(s)?;
    check_param("h", h)?;
    s.map_diagonal(|m| Ok(nabla_factor(m.get(0), m.get(1), h)))
}

/// `Δ_xy(h)`, the inverse of `∇_xy(h)`.
pub fn apply_delta_bc<T: Scalar>(s: &TruncatedSeries<T>, h: &T) -> Result<TruncatedSeries<T>> {
    require_two(s)?;
    check_param("h", h)?;
    s.map_diagonal(|m| Ok(T::one() / nabla_factor(m.get(0), m.get(1), h)))
}

/// `∇_xy(h) Δ_xy(g)`.
pub fn apply_nabla_delta<T: Scalar>(s: &TruncatedSeries<T>, h: &T, g: &T) -> Result<TruncatedSeries<T>> {
    apply_nabla(&apply_delta_bc(s, g)?, h)
}

/// `H(α, ε1) H(β, ε2)` on all variables: multiplier `(α)_s (β)_s / ((ε1)_s (ε2)_s)`.
pub fn apply_h_superposition<T: Scalar>(
    s: &TruncatedSeries<T>,
    alpha: &T,
    eps1: &T,
    beta: &T,
    eps2: &T,
) -> Result<TruncatedSeries<T>> {
    let all: Vec<usize> = (0..s.arity()).collect();
    apply_h(&apply_h(s, &all, beta, eps2)?, &all, alpha, eps1)
}

/// `H̄(ε1, α) H̄(ε2, β)` on all variables; same multiplier as
/// [`apply_h_superposition`]`(α, ε1, β, ε2)`.
pub fn apply_hbar_superposition<T: Scalar>(
    s: &TruncatedSeries<T>,
    eps1: &T,
    alpha: &T,
    eps2: &T,
    beta: &T,
) -> Result<TruncatedSeries<T>> {
    let all: Vec<usize> = (0..s.arity()).collect();
    apply_hbar(&apply_hbar(s, &all, eps2, beta)?, &all, eps1, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mono(e: &[u32], cap: u32) -> TruncatedSeries<BigRational> {
        TruncatedSeries::monomial(MultiIndex::new(e.to_vec()), cap, q(1, 1)).unwrap()
    }

    fn coeff(s: &TruncatedSeries<BigRational>, e: &[u32]) -> BigRational {
        s.get(&MultiIndex::new(e.to_vec()))
    }

    #[test]
    fn euler_delta_examples() {
        let one = mono(&[0, 0], 4);
        assert_eq!(coeff(&euler_delta(&one, 0).unwrap(), &[0, 0]), q(0, 1));
        let x2y = mono(&[2, 1], 4);
        assert_eq!(coeff(&euler_delta(&x2y, 0).unwrap(), &[2, 1]), q(2, 1));
        let twice = euler_delta(&euler_delta(&x2y, 1).unwrap(), 1).unwrap();
        assert_eq!(coeff(&twice, &[2, 1]), q(1, 1));
        assert!(matches!(euler_delta(&x2y, 2), Err(Error::Index(_))));
    }

    #[test]
    fn shifted_and_negative_delta_examples() {
        let x2 = mono(&[2], 5);
        assert_eq!(pochhammer_shifted_delta(&x2, 0, &q(1, 1), 0).unwrap(), x2);
        assert_eq!(coeff(&pochhammer_shifted_delta(&x2, 0, &q(1, 1), 1).unwrap(), &[2]), q(3, 1));
        let x3 = mono(&[3], 5);
        assert_eq!(coeff(&pochhammer_shifted_delta(&x3, 0, &q(1, 2), 2).unwrap(), &[3]), q(7, 2) * q(9, 2));
        assert_eq!(coeff(&pochhammer_neg_delta(&x3, 0, 2).unwrap(), &[3]), q(6, 1));
        assert_eq!(coeff(&pochhammer_neg_delta(&mono(&[1], 5), 0, 1).unwrap(), &[1]), q(-1, 1));
        assert_eq!(pochhammer_neg_delta(&x3, 0, 6).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn h_and_hbar_examples() {
        let x = mono(&[1], 3);
        assert_eq!(coeff(&apply_h(&x, &[0], &q(2, 1), &q(3, 1)).unwrap(), &[1]), q(2, 3));
        assert_eq!(coeff(&apply_hbar(&x, &[0], &q(2, 1), &q(3, 1)).unwrap(), &[1]), q(3, 2));
        assert_eq!(apply_h(&x, &[0], &q(5, 7), &q(5, 7)).unwrap(), x);
        assert!(matches!(apply_h(&x, &[0], &q(0, 1), &q(3, 1)), Err(Error::Param(_))));
        assert!(matches!(apply_h(&x, &[0, 0], &q(1, 1), &q(3, 1)), Err(Error::Index(_))));
    }

    #[test]
    fn nabla_and_delta_examples() {
        let xy = mono(&[1, 1], 3);
        let h = q(2, 1);
        assert_eq!(coeff(&apply_nabla(&xy, &h).unwrap(), &[1, 1]), q(3, 2));
        assert_eq!(coeff(&apply_delta_bc(&xy, &h).unwrap(), &[1, 1]), q(2, 3));
        let x = mono(&[1, 0], 3);
        assert_eq!(apply_nabla(&x, &h).unwrap(), x);
        assert_eq!(apply_delta_bc(&x, &h).unwrap(), x);
        let c = mono(&[0, 0], 3);
        assert_eq!(apply_nabla_delta(&c, &q(3, 1), &h).unwrap(), c);
        // ∇(3) gives 4/3 on xy and Δ(2) gives 2/3.
        assert_eq!(coeff(&apply_nabla_delta(&xy, &q(3, 1), &h).unwrap(), &[1, 1]), q(8, 9));
        assert_eq!(apply_nabla_delta(&xy, &h, &h).unwrap(), xy);
        assert!(apply_nabla(&mono(&[1], 3), &h).is_err());
    }

    #[test]
    fn superposition_degenerates_to_identity() {
        let s = mono(&[2, 1], 4);
        let (a, b) = (q(1, 3), q(5, 4));
        assert_eq!(apply_h_superposition(&s, &a, &a, &b, &b).unwrap(), s);
        assert_eq!(apply_hbar_superposition(&s, &a, &a, &b, &b).unwrap(), s);
    }
}
