//! Lauricella parameter lists written in terms of named symbols.

use serde::Serialize;

use crate::error::Result;
use crate::expr::{ex, Affine, Binding};
use crate::scalar::Scalar;
use crate::series::{Family, LauricellaParams};

/// A Lauricella function whose parameters are affine in named symbols.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyTemplate {
    pub family: Family,
    #[serde(serialize_with = "ser_affines")]
    pub alpha: Vec<Affine>,
    #[serde(serialize_with = "ser_affines")]
    pub beta: Vec<Affine>,
    #[serde(serialize_with = "ser_affines")]
    pub gamma: Vec<Affine>,
}

pub(crate) fn ser_affines<S: serde::Serializer>(v: &[Affine], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|a| a.to_string()))
}

fn numbered(stem: &str, r: usize) -> Vec<Affine> {
    (1..=r).map(|j| Affine::symbol(&format!("{stem}{j}"))).collect()
}

impl FamilyTemplate {
    /// The conventional symbol names: `F_A(a; b1..br; g1..gr)`,
    /// `F_B(a1..ar; b1..br; g)`, `F_C(a, b; g1..gr)`, `F_D(a; b1..br; g)`.
    pub fn standard(family: Family, r: usize) -> Self {
        let one = |s: &str| vec![Affine::symbol(s)];
        let (alpha, beta, gamma) = match family {
            Family::A => (one("a"), numbered("b", r), numbered("g", r)),
            Family::B => (numbered("a", r), numbered("b", r), one("g")),
            Family::C => (one("a"), one("b"), numbered("g", r)),
            Family::D => (one("a"), numbered("b", r), one("g")),
        };
        FamilyTemplate { family, alpha, beta, gamma }
    }

    /// Replaces whole parameters: `("b1", "e1+i")` swaps the slot currently
    /// holding exactly `b1`.
    pub fn with(mut self, subs: &[(&str, &str)]) -> Self {
        for (from, to) in subs {
            let from = ex(from);
            let to = ex(to);
            for slot in self.alpha.iter_mut().chain(self.beta.iter_mut()).chain(self.gamma.iter_mut()) {
                if *slot == from {
                    *slot = to.clone();
                }
            }
        }
        self
    }

    pub fn arity(&self) -> usize {
        match self.family {
            Family::A | Family::D => self.beta.len(),
            Family::B => self.alpha.len(),
            Family::C => self.gamma.len(),
        }
    }

    pub fn slots(&self) -> impl Iterator<Item = &Affine> {
        self.alpha.iter().chain(&self.beta).chain(&self.gamma)
    }

    /// Lower parameters, which must avoid the gamma poles. In every family
    /// these are exactly the gamma slots.
    pub fn lower(&self) -> &[Affine] {
        &self.gamma
    }

    pub fn instantiate<T: Scalar>(&self, b: &Binding<T>) -> Result<LauricellaParams<T>> {
        let ev = |v: &[Affine]| v.iter().map(|a| a.eval(b)).collect::<Result<Vec<T>>>();
        LauricellaParams::new(self.family, ev(&self.alpha)?, ev(&self.beta)?, ev(&self.gamma)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_and_instantiation() {
        let t = FamilyTemplate::standard(Family::D, 3).with(&[("b1", "e1"), ("g", "g+1")]);
        assert_eq!(t.beta[0], ex("e1"));
        assert_eq!(t.gamma[0], ex("g+1"));
        let mut b = Binding::new();
        for (k, v) in [("a", 0.5), ("e1", 1.5), ("b2", 2.0), ("b3", 0.25), ("g", 3.0)] {
            b.insert(k.to_string(), v);
        }
        let p = t.instantiate(&b).unwrap();
        assert_eq!(p.beta, vec![1.5, 2.0, 0.25]);
        assert_eq!(p.gamma, vec![4.0]);
        assert_eq!(t.arity(), 3);
        assert!(FamilyTemplate::standard(Family::A, 2).instantiate(&b).is_err());
    }
}
