//! Monomials as exponent vectors over a fixed [`VariableSet`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::vars::VarSet;

/// A monomial over a fixed variable set. The constant monomial `1` is the
/// all-zero exponent vector; a monomial is squarefree when every exponent
/// is at most one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    vars: VarSet,
    exp: Vec<u32>,
}

impl Monomial {
    pub fn one(vars: &VarSet) -> Self {
        Monomial {
            vars: vars.clone(),
            exp: vec![0; vars.len()],
        }
    }

    pub fn variable(vars: &VarSet, i: usize) -> Self {
        let mut exp = vec![0; vars.len()];
        exp[i] = 1;
        Monomial {
            vars: vars.clone(),
            exp,
        }
    }

    pub fn from_exponents(vars: &VarSet, exp: Vec<u32>) -> Result<Self> {
        if exp.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: exp.len(),
            });
        }
        Ok(Monomial {
            vars: vars.clone(),
            exp,
        })
    }

    /// Squarefree monomial with support given by a bitmask.
    pub fn from_support(vars: &VarSet, mask: u64) -> Self {
        let exp = (0..vars.len())
            .map(|i| u32::from(mask & (1 << i) != 0))
            .collect();
        Monomial {
            vars: vars.clone(),
            exp,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exp
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exp[i]
    }

    pub fn degree(&self) -> u64 {
        self.exp.iter().map(|&e| u64::from(e)).sum()
    }

    /// Total degree restricted to the variables selected by `mask`.
    pub fn degree_on(&self, mask: u64) -> u64 {
        self.exp
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| u64::from(e))
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exp.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exp.iter().all(|&e| e <= 1)
    }

    pub fn support_mask(&self) -> u64 {
        self.exp
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub(crate) fn assert_same_vars(&self, other: &Self) {
        debug_assert!(
            self.vars.same_as(&other.vars),
            "monomials over different variable sets"
        );
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.assert_same_vars(other);
        self.exp.iter().zip(&other.exp).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let exp = self
            .exp
            .iter()
            .zip(&other.exp)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial {
            vars: self.vars.clone(),
            exp,
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.assert_same_vars(other);
        let mut exp = Vec::with_capacity(self.exp.len());
        for (&a, &b) in self.exp.iter().zip(&other.exp) {
            exp.push(
                a.checked_add(b)
                    .ok_or_else(|| Error::ExponentOverflow(format!("{self} * {other}")))?,
            );
        }
        Ok(Monomial {
            vars: self.vars.clone(),
            exp,
        })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Self> {
        let mut exp = Vec::with_capacity(self.exp.len());
        for &a in &self.exp {
            exp.push(
                a.checked_mul(e)
                    .ok_or_else(|| Error::ExponentOverflow(format!("{self}^{e}")))?,
            );
        }
        Ok(Monomial {
            vars: self.vars.clone(),
            exp,
        })
    }

    /// Canonical order: total degree first; within a degree the monomial
    /// with the larger exponent at the first differing variable sorts
    /// earlier, so `a*b` precedes `a*c` precedes `b*c`.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.assert_same_vars(other);
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                for (a, b) in self.exp.iter().zip(&other.exp) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.vars.names().cmp(other.vars.names()) {
            Ordering::Equal => self.canonical_cmp(other),
            ord => ord,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.vars.name(i))?;
            } else {
                write!(f, "{}^{}", self.vars.name(i), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VariableSet;

    #[test]
    fn display_and_degree() {
        let v = VariableSet::new(["x", "y", "z"]).unwrap();
        let m = Monomial::from_exponents(&v, vec![2, 1, 3]).unwrap();
        assert_eq!(m.to_string(), "x^2*y*z^3");
        assert_eq!(m.degree(), 6);
        assert!(!m.is_squarefree());
        assert_eq!(Monomial::one(&v).to_string(), "1");
    }

    #[test]
    fn divisibility() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let a = Monomial::from_exponents(&v, vec![1, 1]).unwrap();
        let b = Monomial::from_exponents(&v, vec![2, 1]).unwrap();
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&b).exponents(), &[2, 1]);
    }

    #[test]
    fn canonical_order_is_alphabetical_within_degree() {
        let v = VariableSet::new(["a", "b", "c"]).unwrap();
        let ab = Monomial::from_exponents(&v, vec![1, 1, 0]).unwrap();
        let ac = Monomial::from_exponents(&v, vec![1, 0, 1]).unwrap();
        let bc = Monomial::from_exponents(&v, vec![0, 1, 1]).unwrap();
        let a = Monomial::from_exponents(&v, vec![1, 0, 0]).unwrap();
        let mut all = vec![bc.clone(), ac.clone(), ab.clone(), a.clone()];
        all.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(all, vec![a, ab, ac, bc]);
    }

    #[test]
    fn overflow_is_an_error() {
        let v = VariableSet::new(["x"]).unwrap();
        let m = Monomial::from_exponents(&v, vec![u32::MAX]).unwrap();
        assert!(m.checked_mul(&m).is_err());
    }
}
