//! Alexander duality, generalized duality with respect to an exponent bound,
//! irreducible decomposition, and associated primes.
//!
//! The decomposition route is duality itself: with `a` the componentwise
//! maximum of the generator exponents, the minimal generators of the dual
//! with respect to `a` are in bijection with the irreducible components of
//! the input, and reading each generator back through the `a`-complement
//! rule recovers the component.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::VarSet;

/// A monomial prime: the ideal generated by a nonempty set of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    vars: VarSet,
    support: u64,
}

impl MonomialPrime {
    pub fn new(vars: &VarSet, support: u64) -> Result<Self> {
        if support == 0 {
            return Err(Error::InvalidArgument(
                "a monomial prime needs a nonempty support".into(),
            ));
        }
        if support & !vars.full_mask() != 0 {
            return Err(Error::InvalidArgument(
                "prime support outside the variable set".into(),
            ));
        }
        Ok(MonomialPrime {
            vars: vars.clone(),
            support,
        })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn support_mask(&self) -> u64 {
        self.support
    }

    pub fn height(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn names(&self) -> Vec<&str> {
        self.vars.mask_names(self.support)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = (0..self.vars.len())
            .filter(|i| self.support & (1 << i) != 0)
            .map(|i| Monomial::variable(&self.vars, i))
            .collect();
        MonomialIdeal::new(&self.vars, gens).expect("variables share the set")
    }

    pub fn contains_prime(&self, other: &Self) -> bool {
        self.support & other.support == other.support
    }

    /// Height first, then the support read as a sorted index list.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match self.height().cmp(&other.height()) {
            Ordering::Equal => cmp_masks_lex(self.support, other.support),
            ord => ord,
        }
    }
}

/// Compare vertex subsets as sorted index lists, so `{a,d}` precedes `{b,c}`.
pub(crate) fn cmp_masks_lex(a: u64, b: u64) -> Ordering {
    let mut x = a;
    let mut y = b;
    loop {
        match (x, y) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {
                let i = x.trailing_zeros();
                let j = y.trailing_zeros();
                match i.cmp(&j) {
                    Ordering::Equal => {
                        x &= x - 1;
                        y &= y - 1;
                    }
                    ord => return ord,
                }
            }
        }
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.vars.names().cmp(other.vars.names()) {
            Ordering::Equal => self.canonical_cmp(other),
            ord => ord,
        }
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(", "))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An irreducible ideal `(x_i^{e_i} : e_i finite)`. A bound of 0 encodes the
/// exponent infinity, i.e. the variable is absent; at least one variable is
/// present, and the radical is the monomial prime on the present variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    vars: VarSet,
    bounds: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(vars: &VarSet, bounds: Vec<u32>) -> Result<Self> {
        if bounds.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: bounds.len(),
            });
        }
        if bounds.iter().all(|&b| b == 0) {
            return Err(Error::InvalidArgument(
                "an irreducible component needs at least one finite exponent".into(),
            ));
        }
        Ok(IrreducibleComponent {
            vars: vars.clone(),
            bounds,
        })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Finite exponents, with 0 standing for an absent variable.
    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn radical(&self) -> MonomialPrime {
        let mask = self
            .bounds
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i));
        MonomialPrime::new(&self.vars, mask).expect("components have nonempty support")
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .bounds
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b > 0)
            .map(|(i, &b)| {
                Monomial::variable(&self.vars, i)
                    .checked_pow(b)
                    .expect("component bounds are small")
            })
            .collect();
        MonomialIdeal::new(&self.vars, gens).expect("variables share the set")
    }

    /// Radical support as an index list, then the bound vector.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match cmp_masks_lex(self.radical().support_mask(), other.radical().support_mask()) {
            Ordering::Equal => self.bounds.cmp(&other.bounds),
            ord => ord,
        }
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Alexander dual of a squarefree ideal: the intersection of the variable
/// primes of its generators. The zero and unit ideals are swapped.
pub fn squarefree_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let vars = ideal.vars();
    for g in ideal.gens() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
    }
    if ideal.is_zero() {
        return Ok(MonomialIdeal::unit(vars));
    }
    if ideal.is_unit() {
        return Ok(MonomialIdeal::zero(vars));
    }
    let primes: Vec<MonomialIdeal> = ideal
        .gens()
        .iter()
        .map(|g| {
            MonomialPrime::new(vars, g.support_mask())
                .expect("proper squarefree generators are nonconstant")
                .to_ideal()
        })
        .collect();
    MonomialIdeal::intersect_all(vars, &primes)
}

/// Dual with respect to an exponent bound `a`: intersect, over the
/// generators `x^b`, the irreducible ideals with exponents `a_i + 1 - b_i`
/// at the variables where `b_i >= 1`. Every generator must divide `x^a`.
pub fn generalized_dual(ideal: &MonomialIdeal, a: &[u32]) -> Result<MonomialIdeal> {
    let vars = ideal.vars();
    if a.len() != vars.len() {
        return Err(Error::DimensionMismatch {
            expected: vars.len(),
            got: a.len(),
        });
    }
    let mut factors = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let mut gens = Vec::new();
        for (i, &b) in g.exponents().iter().enumerate() {
            if b == 0 {
                continue;
            }
            if b > a[i] {
                return Err(Error::DualBoundViolated { gen: g.to_string() });
            }
            gens.push(
                Monomial::variable(vars, i)
                    .checked_pow(a[i] + 1 - b)
                    .expect("bounded by a"),
            );
        }
        // the unit generator yields the zero ideal, which zeroes the dual
        factors.push(MonomialIdeal::new(vars, gens)?);
    }
    MonomialIdeal::intersect_all(vars, &factors)
}

/// The unique irredundant irreducible decomposition. Canonical output order:
/// radical support, then bound vector.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_zero() {
        return Err(Error::ZeroOrUnit {
            op: "irreducible decomposition",
            kind: "zero",
        });
    }
    if ideal.is_unit() {
        return Err(Error::ZeroOrUnit {
            op: "irreducible decomposition",
            kind: "unit",
        });
    }
    let vars = ideal.vars();
    let a = ideal.max_exponents();
    let dual = generalized_dual(ideal, &a)?;
    let mut components = Vec::with_capacity(dual.num_gens());
    for c in dual.gens() {
        let bounds: Vec<u32> = c
            .exponents()
            .iter()
            .enumerate()
            .map(|(i, &ci)| if ci >= 1 { a[i] + 1 - ci } else { 0 })
            .collect();
        components.push(IrreducibleComponent::new(vars, bounds)?);
    }
    components.sort_by(IrreducibleComponent::canonical_cmp);
    make_irredundant(vars, components)
}

/// Drop components that contain the intersection of the others, repeating
/// until the decomposition is irredundant. The intersection is preserved by
/// every removal, and irredundant irreducible decompositions of a monomial
/// ideal are unique, so the result does not depend on the removal order.
pub(crate) fn make_irredundant(
    vars: &VarSet,
    mut components: Vec<IrreducibleComponent>,
) -> Result<Vec<IrreducibleComponent>> {
    components.dedup();
    loop {
        if components.len() <= 1 {
            return Ok(components);
        }
        let ideals: Vec<MonomialIdeal> = components.iter().map(|c| c.to_ideal()).collect();
        // prefix[i] = intersection of ideals[..i], suffix[i] = of ideals[i..]
        let mut prefix = Vec::with_capacity(ideals.len() + 1);
        prefix.push(MonomialIdeal::unit(vars));
        for ideal in &ideals {
            prefix.push(prefix.last().unwrap().intersect(ideal)?);
        }
        let mut suffix = vec![MonomialIdeal::unit(vars); ideals.len() + 1];
        for i in (0..ideals.len()).rev() {
            suffix[i] = suffix[i + 1].intersect(&ideals[i])?;
        }
        let mut removed = None;
        for j in 0..ideals.len() {
            let rest = prefix[j].intersect(&suffix[j + 1])?;
            if ideals[j].contains_ideal(&rest)? {
                removed = Some(j);
                break;
            }
        }
        match removed {
            Some(j) => {
                components.remove(j);
            }
            None => return Ok(components),
        }
    }
}

/// Associated primes: the distinct radicals of the irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let components = irreducible_decomposition(ideal)?;
    let mut primes: Vec<MonomialPrime> = components.iter().map(|c| c.radical()).collect();
    primes.sort_by(MonomialPrime::canonical_cmp);
    primes.dedup();
    Ok(primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_with_vars;
    use crate::vars::VariableSet;

    fn vars(names: &[&str]) -> VarSet {
        VariableSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn dual_of_a_single_edge() {
        let v = vars(&["x1", "x2"]);
        let i = parse_ideal_with_vars(&v, "(x1*x2)").unwrap();
        assert_eq!(squarefree_dual(&i).unwrap().to_string(), "(x1, x2)");
    }

    #[test]
    fn dual_swaps_zero_and_unit() {
        let v = vars(&["a"]);
        assert!(squarefree_dual(&MonomialIdeal::zero(&v)).unwrap().is_unit());
        assert!(squarefree_dual(&MonomialIdeal::unit(&v)).unwrap().is_zero());
    }

    #[test]
    fn dual_rejects_non_squarefree() {
        let v = vars(&["a", "b"]);
        let i = parse_ideal_with_vars(&v, "(a^2, b)").unwrap();
        match squarefree_dual(&i) {
            Err(Error::NotSquarefree(g)) => assert_eq!(g, "a^2"),
            other => panic!("expected a squarefree error, got {other:?}"),
        }
    }

    #[test]
    fn generalized_dual_example() {
        let v = vars(&["x1", "x2"]);
        let i = parse_ideal_with_vars(&v, "(x1^2, x1*x2)").unwrap();
        let d = generalized_dual(&i, &[2, 2]).unwrap();
        assert_eq!(d.to_string(), "(x1^2, x1*x2^2)");
        let dd = generalized_dual(&d, &[2, 2]).unwrap();
        assert_eq!(dd, i);
    }

    #[test]
    fn generalized_dual_at_ones_matches_squarefree_dual() {
        let v = vars(&["a", "b", "c"]);
        let i = parse_ideal_with_vars(&v, "(a*b, b*c)").unwrap();
        let ones = vec![1, 1, 1];
        assert_eq!(
            generalized_dual(&i, &ones).unwrap(),
            squarefree_dual(&i).unwrap()
        );
    }

    #[test]
    fn generalized_dual_checks_the_bound() {
        let v = vars(&["a"]);
        let i = parse_ideal_with_vars(&v, "(a^3)").unwrap();
        assert!(matches!(
            generalized_dual(&i, &[2]),
            Err(Error::DualBoundViolated { .. })
        ));
    }

    #[test]
    fn decomposition_of_a_mixed_ideal() {
        let v = vars(&["x1", "x2"]);
        let i = parse_ideal_with_vars(&v, "(x1^2, x1*x2)").unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        let rendered: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, vec!["(x1)", "(x1^2, x2)"]);
        // the intersection recovers the input
        let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.to_ideal()).collect();
        assert_eq!(MonomialIdeal::intersect_all(&v, &ideals).unwrap(), i);
        let primes = associated_primes(&i).unwrap();
        let rendered: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["(x1)", "(x1, x2)"]);
    }

    #[test]
    fn decomposition_rejects_zero_and_unit() {
        let v = vars(&["a"]);
        assert!(irreducible_decomposition(&MonomialIdeal::zero(&v)).is_err());
        assert!(irreducible_decomposition(&MonomialIdeal::unit(&v)).is_err());
    }

    #[test]
    fn principal_power_decomposes_into_variable_powers() {
        let v = vars(&["x", "y"]);
        let i = parse_ideal_with_vars(&v, "(x^2*y)").unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        let rendered: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, vec!["(x^2)", "(y)"]);
    }
}
