//! Monomial ideals held in canonical form: a divisibility-minimal generating
//! set sorted by total degree, then by the canonical monomial order. Two
//! ideals are equal exactly when their canonical forms agree.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::par;
use crate::vars::VarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    Delete,
    Contract,
}

/// A monomial ideal over a fixed variable set. The zero ideal has no
/// generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: VarSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(vars: &VarSet) -> Self {
        MonomialIdeal {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: &VarSet) -> Self {
        MonomialIdeal {
            vars: vars.clone(),
            gens: vec![Monomial::one(vars)],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generating set.
    pub fn new(vars: &VarSet, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if !g.vars().same_as(vars) {
                return Err(Error::MixedVariableSets(
                    vars.to_string(),
                    g.vars().to_string(),
                ));
            }
        }
        Ok(MonomialIdeal {
            vars: vars.clone(),
            gens: minimalize(gens),
        })
    }

    fn from_minimal(vars: VarSet, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { vars, gens }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_vars(&self, other: &VarSet) -> Result<()> {
        if self.vars.same_as(other) {
            Ok(())
        } else {
            Err(Error::MixedVariableSets(
                self.vars.to_string(),
                other.to_string(),
            ))
        }
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_vars(m.vars())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Containment of ideals: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_vars(&other.vars)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut a = vec![0u32; self.vars.len()];
        for g in &self.gens {
            for (ai, &e) in a.iter_mut().zip(g.exponents()) {
                *ai = (*ai).max(e);
            }
        }
        a
    }

    /// `s`-th power, with `s = 0` defined as the unit ideal. The generator
    /// set is re-minimalized after every successive product to bound
    /// intermediate blowup.
    pub fn power(&self, s: u32) -> Result<Self> {
        if s == 0 {
            return Ok(Self::unit(&self.vars));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_vars(&other.vars)?;
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::from_minimal(self.vars.clone(), minimalize(products)))
    }

    /// Intersection via the pairwise lcm table.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_vars(&other.vars)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let mut lcms = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.insert(a.lcm(b));
            }
        }
        Ok(Self::from_minimal(
            self.vars.clone(),
            minimalize(lcms.into_iter().collect()),
        ))
    }

    /// Intersection of a family, associating as a balanced tree. The empty
    /// intersection is the unit ideal.
    pub fn intersect_all(vars: &VarSet, ideals: &[MonomialIdeal]) -> Result<Self> {
        match ideals.len() {
            0 => Ok(Self::unit(vars)),
            1 => {
                ideals[0].check_vars(vars)?;
                Ok(ideals[0].clone())
            }
            n => {
                let (lo, hi) = ideals.split_at(n / 2);
                let (a, b) = par::join(
                    || Self::intersect_all(vars, lo),
                    || Self::intersect_all(vars, hi),
                );
                a?.intersect(&b?)
            }
        }
    }

    /// Deletion sets the variable to 0 (drop every generator it divides);
    /// contraction sets it to 1. Either way the result lives over the
    /// variable set with `v` removed.
    pub fn minor_step(&self, v: &str, mode: MinorMode) -> Result<Self> {
        let i = self
            .vars
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        let new_vars = self.vars.without(i);
        let project = |m: &Monomial| -> Monomial {
            let exp: Vec<u32> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .collect();
            Monomial::from_exponents(&new_vars, exp).expect("projection keeps length")
        };
        let gens: Vec<Monomial> = match mode {
            MinorMode::Delete => self
                .gens
                .iter()
                .filter(|g| g.exponent(i) == 0)
                .map(project)
                .collect(),
            MinorMode::Contract => self.gens.iter().map(project).collect(),
        };
        Ok(Self::from_minimal(new_vars, minimalize(gens)))
    }
}

/// Divisibility-minimal elements of `gens`, sorted canonically. A constant
/// generator collapses everything to the unit ideal.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    if let Some(one) = gens.iter().find(|g| g.is_one()) {
        return vec![one.clone()];
    }
    gens.sort_by(Monomial::canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    let mut kept_below = 0; // kept gens with degree strictly below the current one
    let mut current_degree = 0u64;
    for g in gens {
        let d = g.degree();
        if d != current_degree {
            kept_below = kept.len();
            current_degree = d;
        }
        // only strictly smaller degrees can divide a distinct monomial
        if !kept[..kept_below].iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal_with_vars, parse_monomial};
    use crate::vars::VariableSet;

    fn vars(names: &[&str]) -> VarSet {
        VariableSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let v = vars(&["a", "b", "c", "d"]);
        let i = parse_ideal_with_vars(&v, "(a*b, a*b*c, c*d)").unwrap();
        assert_eq!(i.to_string(), "(a*b, c*d)");
    }

    #[test]
    fn empty_generating_set_is_zero() {
        let v = vars(&["a"]);
        let i = MonomialIdeal::new(&v, vec![]).unwrap();
        assert!(i.is_zero());
        assert_eq!(i.to_string(), "(0)");
    }

    #[test]
    fn membership() {
        let v = vars(&["a", "b", "c", "d"]);
        let i = parse_ideal_with_vars(&v, "(a*b, c*d)").unwrap();
        let m = parse_monomial(&v, "a*b*d").unwrap();
        assert!(i.contains(&m).unwrap());
        let m2 = parse_monomial(&v, "a*c").unwrap();
        assert!(!i.contains(&m2).unwrap());
    }

    #[test]
    fn square_of_two_generators() {
        let v = vars(&["a", "b", "c", "d"]);
        let i = parse_ideal_with_vars(&v, "(a*b, c*d)").unwrap();
        let sq = i.power(2).unwrap();
        assert_eq!(sq.to_string(), "(a^2*b^2, a*b*c*d, c^2*d^2)");
    }

    #[test]
    fn zeroth_power_is_unit() {
        let v = vars(&["a", "b"]);
        let i = parse_ideal_with_vars(&v, "(a*b)").unwrap();
        assert!(i.power(0).unwrap().is_unit());
        assert!(MonomialIdeal::zero(&v).power(0).unwrap().is_unit());
    }

    #[test]
    fn intersect_principal_with_mixed() {
        let v = vars(&["x1", "x2"]);
        let a = parse_ideal_with_vars(&v, "(x1)").unwrap();
        let b = parse_ideal_with_vars(&v, "(x1^2, x2)").unwrap();
        // lcm table: lcm(x1, x1^2) = x1^2, lcm(x1, x2) = x1*x2
        assert_eq!(a.intersect(&b).unwrap().to_string(), "(x1^2, x1*x2)");
    }

    #[test]
    fn unit_is_intersection_identity() {
        let v = vars(&["a", "b", "c"]);
        let i = parse_ideal_with_vars(&v, "(a*b, b*c)").unwrap();
        assert_eq!(i.intersect(&MonomialIdeal::unit(&v)).unwrap(), i);
        assert!(i.intersect(&MonomialIdeal::zero(&v)).unwrap().is_zero());
    }

    #[test]
    fn minor_steps_on_a_cycle() {
        let v = vars(&["x1", "x2", "x3", "x4", "x5"]);
        let c5 = parse_ideal_with_vars(&v, "(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)").unwrap();
        let del = c5.minor_step("x1", MinorMode::Delete).unwrap();
        assert_eq!(del.to_string(), "(x2*x3, x3*x4, x4*x5)");
        let con = c5.minor_step("x1", MinorMode::Contract).unwrap();
        assert_eq!(con.to_string(), "(x2, x5, x3*x4)");
    }

    #[test]
    fn contracting_everything_reaches_the_unit_ideal() {
        let v = vars(&["a", "b"]);
        let mut i = parse_ideal_with_vars(&v, "(a*b)").unwrap();
        i = i.minor_step("a", MinorMode::Contract).unwrap();
        i = i.minor_step("b", MinorMode::Contract).unwrap();
        assert!(i.is_unit());
    }

    #[test]
    fn unknown_variable_minor_errors() {
        let v = vars(&["a"]);
        let i = parse_ideal_with_vars(&v, "(a)").unwrap();
        assert!(matches!(
            i.minor_step("z", MinorMode::Delete),
            Err(Error::UnknownVertex(_))
        ));
    }
}
