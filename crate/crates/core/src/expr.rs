//! Affine parameter expressions such as `e1-b1` or `a+1`.
//!
//! Formula tables refer to parameters by name. An [`Affine`] is an integer
//! combination of named symbols plus an integer constant, evaluated against a
//! [`Binding`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Named parameter values.
pub type Binding<T> = BTreeMap<String, T>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    terms: Vec<(String, i64)>,
    constant: i64,
}

impl Affine {
    pub fn constant(c: i64) -> Self {
        Affine { terms: Vec::new(), constant: c }
    }

    pub fn symbol(name: &str) -> Self {
        Affine { terms: vec![(name.to_string(), 1)], constant: 0 }
    }

    /// Parses `a`, `e1-b1`, `1-a`, `2*a+b-3` and similar.
    pub fn parse(src: &str) -> Result<Self> {
        let s: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Param(format!("empty expression {src:?}")));
        }
        let mut out = Affine::constant(0);
        let mut i = 0;
        while i < s.len() {
            let mut sign = 1i64;
            if s[i] == '+' || s[i] == '-' {
                if s[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(Error::Param(format!("bad expression {src:?}")));
            }
            let start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<i64> = if i > start {
                Some(s[start..i].iter().collect::<String>().parse().unwrap())
            } else {
                None
            };
            if i < s.len() && s[i] == '*' {
                i += 1;
            }
            let id_start = i;
            if i < s.len() && (s[i].is_ascii_alphabetic() || s[i] == '_') {
                while i < s.len() && (s[i].is_ascii_alphanumeric() || s[i] == '_') {
                    i += 1;
                }
            }
            let name: String = s[id_start..i].iter().collect();
            match (coeff, name.is_empty()) {
                (Some(c), true) => out.constant += sign * c,
                (c, false) => out.add_term(&name, sign * c.unwrap_or(1)),
                (None, true) => return Err(Error::Param(format!("bad expression {src:?}"))),
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, name: &str, c: i64) {
        if let Some(t) = self.terms.iter_mut().find(|t| t.0 == name) {
            t.1 += c;
        } else {
            self.terms.push((name.to_string(), c));
        }
        self.terms.retain(|t| t.1 != 0);
        self.terms.sort();
    }

    pub fn plus(mut self, other: &Affine) -> Self {
        for (n, c) in &other.terms {
            self.add_term(n, *c);
        }
        self.constant += other.constant;
        self
    }

    pub fn minus(self, other: &Affine) -> Self {
        self.plus(&other.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Affine::constant(self.constant * k);
        for (n, c) in &self.terms {
            out.add_term(n, c * k);
        }
        out
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|t| t.0.as_str())
    }

    pub fn eval<T: Scalar>(&self, b: &Binding<T>) -> Result<T> {
        let mut acc = T::from_int(self.constant);
        for (name, c) in &self.terms {
            let v = b
                .get(name)
                .ok_or_else(|| Error::Param(format!("unbound parameter {name}")))?;
            acc = acc + T::from_int(*c) * v.clone();
        }
        Ok(acc)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, c) in &self.terms {
            let mag = c.abs();
            if *c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        if self.constant != 0 || first {
            if self.constant >= 0 && !first {
                write!(f, "+")?;
            }
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

/// Shorthand used by the formula tables. Panics on malformed input, which
/// can only come from a typo in a static table.
pub fn ex(src: &str) -> Affine {
    Affine::parse(src).unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_eval() {
        let mut b = Binding::new();
        b.insert("a".to_string(), 0.5);
        b.insert("e1".to_string(), 2.0);
        assert_eq!(ex("e1-a").eval(&b).unwrap(), 1.5);
        assert_eq!(ex("1-a").eval(&b).unwrap(), 0.5);
        assert_eq!(ex("2*a+e1-3").eval(&b).unwrap(), 0.0);
        assert_eq!(ex("-a").eval(&b).unwrap(), -0.5);
        assert!(ex("zz").eval(&b).is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["e1-b1", "1-a", "-a", "0", "2*a+e1-3", "g-e"] {
            let a = ex(s);
            assert_eq!(Affine::parse(&a.to_string()).unwrap(), a, "{s}");
        }
        assert_eq!(ex("a-a").to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!(Affine::parse("").is_err());
        assert!(Affine::parse("a**b").is_err());
    }
}
