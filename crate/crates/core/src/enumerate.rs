//! Exhaustive generation of small labeled graphs and simple hypergraphs over
//! the standard vertex set `x1..xn`, plus a few named families.

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::vars::{VarSet, VariableSet};

/// All labeled graphs on `n` vertices: one hypergraph per subset of the
/// possible 2-element edges, in a fixed order.
pub fn all_graphs(n: usize) -> Result<Vec<Hypergraph>> {
    let vars = VariableSet::numbered(n)?;
    let pairs = edge_candidates(n, 2, 2);
    Ok(edge_subsets(&vars, &pairs))
}

/// All simple hypergraphs on `n` vertices whose edge sizes lie in
/// `min_size..=max_size`: every antichain of candidate edges.
pub fn simple_hypergraphs(n: usize, min_size: usize, max_size: usize) -> Result<Vec<Hypergraph>> {
    let vars = VariableSet::numbered(n)?;
    let candidates = edge_candidates(n, min_size, max_size);
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    fn recurse(
        vars: &VarSet,
        candidates: &[u64],
        start: usize,
        chosen: &mut Vec<u64>,
        out: &mut Vec<Hypergraph>,
    ) {
        out.push(
            Hypergraph::from_edge_masks(vars, chosen.clone()).expect("antichain by construction"),
        );
        for i in start..candidates.len() {
            let c = candidates[i];
            // candidates are ordered by size, so only containment of an
            // earlier choice in c is possible
            if chosen.iter().any(|&e| e & c == e) {
                continue;
            }
            chosen.push(c);
            recurse(vars, candidates, i + 1, chosen, out);
            chosen.pop();
        }
    }
    recurse(&vars, &candidates, 0, &mut chosen, &mut out);
    Ok(out)
}

fn edge_candidates(n: usize, min_size: usize, max_size: usize) -> Vec<u64> {
    let mut candidates: Vec<u64> = (1u64..(1 << n))
        .filter(|m| {
            let c = m.count_ones() as usize;
            c >= min_size.max(1) && c <= max_size
        })
        .collect();
    candidates.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    candidates
}

fn edge_subsets(vars: &VarSet, candidates: &[u64]) -> Vec<Hypergraph> {
    let mut out = Vec::with_capacity(1 << candidates.len());
    for pick in 0u64..(1 << candidates.len()) {
        let masks: Vec<u64> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| pick & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        out.push(Hypergraph::from_edge_masks(vars, masks).expect("distinct pairs form antichains"));
    }
    out
}

/// The cycle `x1 - x2 - ... - xn - x1`.
pub fn cycle(n: usize) -> Result<Hypergraph> {
    let vars = VariableSet::numbered(n)?;
    let edges: Vec<Vec<String>> = (0..n)
        .map(|i| vec![format!("x{}", i + 1), format!("x{}", (i + 1) % n + 1)])
        .collect();
    Hypergraph::new(&vars, &edges)
}

/// The path `x1 - x2 - ... - xn`.
pub fn path(n: usize) -> Result<Hypergraph> {
    let vars = VariableSet::numbered(n)?;
    let edges: Vec<Vec<String>> = (1..n)
        .map(|i| vec![format!("x{i}"), format!("x{}", i + 1)])
        .collect();
    Hypergraph::new(&vars, &edges)
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Hypergraph> {
    let vars = VariableSet::numbered(n)?;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push(vec![format!("x{i}"), format!("x{j}")]);
        }
    }
    Hypergraph::new(&vars, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_small_graphs() {
        assert_eq!(all_graphs(3).unwrap().len(), 8);
        assert_eq!(all_graphs(4).unwrap().len(), 64);
    }

    #[test]
    fn hypergraph_enumeration_yields_antichains() {
        let hs = simple_hypergraphs(3, 1, 3).unwrap();
        // antichains of the 7 nonempty subsets of a 3-set
        assert_eq!(hs.len(), 20);
        assert!(hs.iter().all(|h| {
            let e = h.edge_masks();
            e.iter()
                .enumerate()
                .all(|(i, &a)| e[i + 1..].iter().all(|&b| a & b != a && a & b != b))
        }));
    }

    #[test]
    fn graphs_only_enumeration_matches_pair_subsets() {
        let hs = simple_hypergraphs(4, 2, 2).unwrap();
        assert_eq!(hs.len(), all_graphs(4).unwrap().len());
    }

    #[test]
    fn named_families() {
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(path(4).unwrap().edge_count(), 3);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert!(cycle(4).unwrap().is_connected());
    }
}
