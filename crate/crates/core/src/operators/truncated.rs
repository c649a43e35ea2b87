use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::multi_index::{up_to, MultiIndex};
use crate::series::params::LauricellaParams;
use crate::series::term::HyperTerm;

/// Multivariate Taylor polynomial truncated at a total-degree cap.
///
/// Coefficients are stored sparsely. Absent keys mean zero, and no key
/// exceeds the cap.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    arity: usize,
    cap: u32,
    coeffs: BTreeMap<MultiIndex, T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn zero(arity: usize, cap: u32) -> Self {
        TruncatedSeries { arity, cap, coeffs: BTreeMap::new() }
    }

    pub fn monomial(m: MultiIndex, cap: u32, c: T) -> Result<Self> {
        let mut s = Self::zero(m.arity(), cap);
        s.insert(m, c)?;
        Ok(s)
    }

    /// Series whose coefficients come from `term`, up to `cap`.
    pub fn from_term(term: &HyperTerm<T>, cap: u32) -> Result<Self> {
        term.check_lower()?;
        let r = term.arity();
        let mut s = Self::zero(r, cap);
        for m in up_to(r, cap) {
            let c = term.coefficient(&m);
            s.coeffs.insert(m, c);
        }
        Ok(s)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn insert(&mut self, m: MultiIndex, c: T) -> Result<()> {
        if m.arity() != self.arity {
            return Err(Error::Index(format!("index of arity {} in a series of arity {}", m.arity(), self.arity)));
        }
        if m.total() > self.cap {
            return Err(Error::Index(format!("degree {} exceeds the cap {}", m.total(), self.cap)));
        }
        self.coeffs.insert(m, c);
        Ok(())
    }

    pub fn get(&self, m: &MultiIndex) -> T {
        self.coeffs.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.coeffs.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &MultiIndex> {
        self.coeffs.keys()
    }

    /// Multiplies each coefficient by `f(m)`, keeping every key.
    pub fn map_diagonal<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&MultiIndex) -> Result<T>,
    {
        let mut out = Self::zero(self.arity, self.cap);
        for (m, c) in &self.coeffs {
            let k = f(m)?;
            out.coeffs.insert(m.clone(), c.clone() * k);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|(m, c)| (m.clone(), c.clone() * k.clone())).collect();
        TruncatedSeries { arity: self.arity, cap: self.cap, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            let v = out.get(m) + c.clone();
            out.coeffs.insert(m.clone(), v);
        }
        Ok(out)
    }

    /// Multiplies by the monomial `x^shift`, dropping what exceeds the cap.
    pub fn shifted(&self, shift: &MultiIndex) -> Result<Self> {
        if shift.arity() != self.arity {
            return Err(Error::Index("shift arity mismatch".into()));
        }
        let mut out = Self::zero(self.arity, self.cap);
        for (m, c) in &self.coeffs {
            let e: Vec<u32> = m.entries().iter().zip(shift.entries()).map(|(a, b)| a + b).collect();
            let n = MultiIndex::new(e);
            if n.total() <= self.cap {
                out.coeffs.insert(n, c.clone());
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            arity: self.arity,
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }

    /// Largest `|a_m - b_m|` over both key sets, in double precision.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_compatible(other)?;
        let mut worst = 0.0f64;
        for m in self.coeffs.keys().chain(other.coeffs.keys()) {
            let d = (self.get(m) - other.get(m)).as_f64().abs();
            if d.is_nan() {
                return Ok(f64::NAN);
            }
            worst = worst.max(d);
        }
        Ok(worst)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.as_f64().abs()).fold(0.0, f64::max)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity || self.cap != other.cap {
            return Err(Error::Index(format!(
                "series shapes differ: (arity {}, cap {}) vs (arity {}, cap {})",
                self.arity, self.cap, other.arity, other.cap
            )));
        }
        Ok(())
    }
}

/// Taylor coefficients of a Lauricella function up to total degree `cap`.
pub fn build_series<T: Scalar>(params: &LauricellaParams<T>, cap: u32) -> Result<TruncatedSeries<T>> {
    TruncatedSeries::from_term(&params.term(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn build_series_examples() {
        let p = LauricellaParams::fd(q(1, 2), vec![q(1, 3)], q(5, 2)).unwrap();
        let s = build_series(&p, 0).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.get(&MultiIndex::zero(1)), q(1, 1));

        let (a, b1, b2, g1, g2) = (q(1, 2), q(1, 3), q(2, 5), q(6, 5), q(17, 10));
        let p = LauricellaParams::fa(a.clone(), vec![b1.clone(), b2.clone()], vec![g1.clone(), g2.clone()]).unwrap();
        let s = build_series(&p, 4).unwrap();
        let want = a.clone() * (a + q(1, 1)) * b1 * b2 / (g1 * g2);
        assert_eq!(s.get(&MultiIndex::new(vec![1, 1])), want);
        assert_eq!(s.len(), 15);
    }

    #[test]
    fn insert_respects_the_cap() {
        let mut s = TruncatedSeries::<f64>::zero(2, 3);
        assert!(s.insert(MultiIndex::new(vec![2, 2]), 1.0).is_err());
        assert!(s.insert(MultiIndex::new(vec![1]), 1.0).is_err());
        assert!(s.insert(MultiIndex::new(vec![1, 2]), 1.0).is_ok());
        let t = s.shifted(&MultiIndex::new(vec![1, 0])).unwrap();
        assert!(t.is_empty());
    }
}
