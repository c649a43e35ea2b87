use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::term::HyperTerm;

/// The four Lauricella families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::Param(format!("unknown family {other:?}"))),
        }
    }

    /// Expected `(alpha, beta, gamma)` lengths at arity `r`.
    pub fn signature(self, r: usize) -> (usize, usize, usize) {
        match self {
            Family::A => (1, r, r),
            Family::B => (r, r, 1),
            Family::C => (1, 1, r),
            Family::D => (1, r, 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// Family tag, arity and parameter vectors of one Lauricella function.
#[derive(Debug, Clone, PartialEq)]
pub struct LauricellaParams<T> {
    pub family: Family,
    pub arity: usize,
    pub alpha: Vec<T>,
    pub beta: Vec<T>,
    pub gamma: Vec<T>,
}

impl<T: Scalar> LauricellaParams<T> {
    /// Checks list lengths and that no lower parameter is a pole.
    pub fn new(family: Family, alpha: Vec<T>, beta: Vec<T>, gamma: Vec<T>) -> Result<Self> {
        let arity = match family {
            Family::A | Family::D => beta.len(),
            Family::B => alpha.len(),
            Family::C => gamma.len(),
        };
        if arity == 0 {
            return Err(Error::Param("arity must be at least 1".into()));
        }
        let want = family.signature(arity);
        let got = (alpha.len(), beta.len(), gamma.len());
        if want != got {
            return Err(Error::Param(format!(
                "family {family} at r = {arity} needs (alpha, beta, gamma) lengths {want:?}, got {got:?}"
            )));
        }
        for (j, g) in gamma.iter().enumerate() {
            if g.is_nonpositive_integer() {
                let name = if gamma.len() == 1 { "gamma".to_string() } else { format!("gamma_{}", j + 1) };
                return Err(Error::Param(format!("{name} = {} is a non-positive integer", g.as_f64())));
            }
        }
        Ok(LauricellaParams { family, arity, alpha, beta, gamma })
    }

    pub fn fa(alpha: T, beta: Vec<T>, gamma: Vec<T>) -> Result<Self> {
        Self::new(Family::A, vec![alpha], beta, gamma)
    }

    pub fn fb(alpha: Vec<T>, beta: Vec<T>, gamma: T) -> Result<Self> {
        Self::new(Family::B, alpha, beta, vec![gamma])
    }

    pub fn fc(alpha: T, beta: T, gamma: Vec<T>) -> Result<Self> {
        Self::new(Family::C, vec![alpha], vec![beta], gamma)
    }

    pub fn fd(alpha: T, beta: Vec<T>, gamma: T) -> Result<Self> {
        Self::new(Family::D, vec![alpha], beta, vec![gamma])
    }

    /// The Gauss function 2F1(a, b; c; .) as the one-variable F_A.
    pub fn gauss(a: T, b: T, c: T) -> Result<Self> {
        Self::fa(a, vec![b], vec![c])
    }

    /// Coefficient structure of the series.
    pub fn term(&self) -> HyperTerm<T> {
        let r = self.arity;
        let each = |v: &Vec<T>| v.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>();
        match self.family {
            Family::A => HyperTerm {
                total_upper: self.alpha.clone(),
                total_lower: vec![],
                coord_upper: each(&self.beta),
                coord_lower: each(&self.gamma),
            },
            Family::B => HyperTerm {
                total_upper: vec![],
                total_lower: self.gamma.clone(),
                coord_upper: (0..r).map(|j| vec![self.alpha[j].clone(), self.beta[j].clone()]).collect(),
                coord_lower: vec![vec![]; r],
            },
            Family::C => HyperTerm {
                total_upper: vec![self.alpha[0].clone(), self.beta[0].clone()],
                total_lower: vec![],
                coord_upper: vec![vec![]; r],
                coord_lower: each(&self.gamma),
            },
            Family::D => HyperTerm {
                total_upper: self.alpha.clone(),
                total_lower: self.gamma.clone(),
                coord_upper: each(&self.beta),
                coord_lower: vec![vec![]; r],
            },
        }
    }

    /// Relabels coordinates: coordinate `j` of the result is coordinate
    /// `perm[j]` of `self`, with its attached parameters.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let pick = |v: &Vec<T>| {
            if v.len() == self.arity && self.arity > 1 {
                perm.iter().map(|&p| v[p].clone()).collect()
            } else {
                v.clone()
            }
        };
        LauricellaParams {
            family: self.family,
            arity: self.arity,
            alpha: pick(&self.alpha),
            beta: pick(&self.beta),
            gamma: pick(&self.gamma),
        }
    }

    pub fn to_f64(&self) -> LauricellaParams<f64> {
        let conv = |v: &Vec<T>| v.iter().map(|x| x.as_f64()).collect();
        LauricellaParams {
            family: self.family,
            arity: self.arity,
            alpha: conv(&self.alpha),
            beta: conv(&self.beta),
            gamma: conv(&self.gamma),
        }
    }
}
