//! Ordered variable sets shared by monomials, ideals, and hypergraphs.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the variable count; vertex subsets are stored as 64-bit masks.
pub const MAX_VARIABLES: usize = 64;

/// An ordered list of distinct variable names, fixed for the lifetime of a
/// computation. Monomials, ideals, and hypergraphs each hold an [`Arc`] to
/// one of these; two sets are interchangeable when their name lists agree.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

pub type VarSet = Arc<VariableSet>;

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<VarSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                count: names.len(),
                cap: MAX_VARIABLES,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(Error::InvalidVariableName(n.clone()));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VariableSet { names }))
    }

    /// The standard set `x1, ..., xn` used by enumeration and scans.
    pub fn numbered(n: usize) -> Result<VarSet> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same names in the same order.
    pub fn same_as(&self, other: &VariableSet) -> bool {
        self.names == other.names
    }

    /// A new set with variable `i` removed, for minors.
    pub fn without(&self, i: usize) -> VarSet {
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, n)| n.clone())
            .collect();
        Arc::new(VariableSet { names })
    }

    /// Mask with one bit per variable.
    pub fn full_mask(&self) -> u64 {
        if self.names.len() == MAX_VARIABLES {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    /// Names selected by `mask`, in variable order.
    pub fn mask_names(&self, mask: u64) -> Vec<&str> {
        (0..self.names.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| self.names[i].as_str())
            .collect()
    }

    /// `{a,b,c}` rendering of a vertex subset.
    pub fn mask_braces(&self, mask: u64) -> String {
        format!("{{{}}}", self.mask_names(mask).join(","))
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(
            VariableSet::new(["a", "b", "a"]),
            Err(Error::DuplicateVariable(_))
        ));
    }

    #[test]
    fn numbered_names() {
        let v = VariableSet::numbered(3).unwrap();
        assert_eq!(v.names(), &["x1", "x2", "x3"]);
        assert_eq!(v.full_mask(), 0b111);
    }

    #[test]
    fn without_drops_one() {
        let v = VariableSet::new(["a", "b", "c"]).unwrap();
        let w = v.without(1);
        assert_eq!(w.names(), &["a", "c"]);
    }
}
