//! Coefficient structure shared by every series in the crate.
//!
//! All four Lauricella families, and the elementary closed forms
//! `prod (1 - x_j)^(-b_j)` and `(1 - x_1 - ... - x_r)^(-a)`, have Taylor
//! coefficients of the form
//!
//! ```text
//!   prod_u (u)_M  prod_j prod_c (c_j)_{m_j}
//!   ---------------------------------------      M = m_1 + ... + m_r
//!   prod_l (l)_M  prod_j prod_d (d_j)_{m_j} m_j!
//! ```
//!
//! which [`HyperTerm`] records.

use crate::error::{Error, Result};
use crate::scalar::{factorial, rising, Scalar};
use crate::series::multi_index::MultiIndex;

#[derive(Debug, Clone, PartialEq)]
pub struct HyperTerm<T> {
    /// Upper parameters indexed by the total degree.
    pub total_upper: Vec<T>,
    /// Lower parameters indexed by the total degree.
    pub total_lower: Vec<T>,
    /// Per-coordinate upper parameters indexed by `m_j`.
    pub coord_upper: Vec<Vec<T>>,
    /// Per-coordinate lower parameters indexed by `m_j`.
    pub coord_lower: Vec<Vec<T>>,
}

impl<T: Scalar> HyperTerm<T> {
    /// `prod_j (1 - x_j)^(-b_j)`.
    pub fn binomial_product(beta: Vec<T>) -> Self {
        let r = beta.len();
        HyperTerm {
            total_upper: vec![],
            total_lower: vec![],
            coord_upper: beta.into_iter().map(|b| vec![b]).collect(),
            coord_lower: vec![vec![]; r],
        }
    }

    /// `(1 - x_1 - ... - x_r)^(-a)`.
    pub fn power_of_sum(alpha: T, arity: usize) -> Self {
        HyperTerm {
            total_upper: vec![alpha],
            total_lower: vec![],
            coord_upper: vec![vec![]; arity],
            coord_lower: vec![vec![]; arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.coord_upper.len()
    }

    /// Rejects lower parameters at poles of the gamma function.
    pub fn check_lower(&self) -> Result<()> {
        let bad = self
            .total_lower
            .iter()
            .chain(self.coord_lower.iter().flatten())
            .find(|v| v.is_nonpositive_integer());
        match bad {
            Some(v) => Err(Error::Param(format!("lower parameter {} is a non-positive integer", v.as_f64()))),
            None => Ok(()),
        }
    }

    /// Exact coefficient of `x^m`, computed from scratch.
    pub fn coefficient(&self, m: &MultiIndex) -> T {
        let big_m = m.total() as usize;
        let mut num = T::one();
        let mut den = T::one();
        for u in &self.total_upper {
            num = num * rising(u, big_m);
        }
        for l in &self.total_lower {
            den = den * rising(l, big_m);
        }
        for j in 0..self.arity() {
            let mj = m.get(j) as usize;
            for c in &self.coord_upper[j] {
                num = num * rising(c, mj);
            }
            for d in &self.coord_lower[j] {
                den = den * rising(d, mj);
            }
            den = den * factorial::<T>(mj);
        }
        num / den
    }

    /// `coeff(m + e_j) / coeff(m)` given `m_j` and the total `M` of `m`.
    pub fn ratio(&self, j: usize, mj: u32, total: u32) -> T {
        let big_m = T::from_int(total as i64);
        let mj_t = T::from_int(mj as i64);
        let mut num = T::one();
        let mut den = mj_t.clone() + T::one();
        for u in &self.total_upper {
            num = num * (u.clone() + big_m.clone());
        }
        for l in &self.total_lower {
            den = den * (l.clone() + big_m.clone());
        }
        for c in &self.coord_upper[j] {
            num = num * (c.clone() + mj_t.clone());
        }
        for d in &self.coord_lower[j] {
            den = den * (d.clone() + mj_t.clone());
        }
        num / den
    }

    /// Restriction to the coordinates in `keep`, i.e. the series with the
    /// other variables set to zero.
    pub fn restricted(&self, keep: &[usize]) -> Self {
        HyperTerm {
            total_upper: self.total_upper.clone(),
            total_lower: self.total_lower.clone(),
            coord_upper: keep.iter().map(|&j| self.coord_upper[j].clone()).collect(),
            coord_lower: keep.iter().map(|&j| self.coord_lower[j].clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::multi_index::up_to;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ratio_matches_quotient_of_coefficients() {
        let t = HyperTerm {
            total_upper: vec![q(1, 2)],
            total_lower: vec![q(7, 3)],
            coord_upper: vec![vec![q(1, 3)], vec![q(-2, 1)]],
            coord_lower: vec![vec![q(5, 4)], vec![]],
        };
        for m in up_to(2, 5) {
            for j in 0..2 {
                let c0 = t.coefficient(&m);
                let c1 = t.coefficient(&m.bumped(j));
                assert_eq!(c1, c0 * t.ratio(j, m.get(j), m.total()));
            }
        }
    }

    #[test]
    fn power_of_sum_is_multinomial() {
        let t = HyperTerm::power_of_sum(q(1, 1), 3);
        for m in up_to(3, 4) {
            // (1 - x - y - z)^(-1) has multinomial coefficients M!/(m1! m2! m3!).
            let big: i64 = (1..=m.total() as i64).product();
            let small: i64 = m.entries().iter().map(|&v| (1..=v as i64).product::<i64>()).product();
            assert_eq!(t.coefficient(&m), q(big / small, 1));
        }
    }
}
