//! Simple hypergraphs: ordered vertices plus an antichain of nonempty edges,
//! stored as bitmasks. This carries the two ideal correspondences (edges and
//! covers), induced subhypergraphs, minors, the König numbers, and the
//! flavored expansion with its depolarization map.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::duality::{cmp_masks_lex, squarefree_dual};
use crate::error::{Error, Result};
use crate::ideal::{MinorMode, MonomialIdeal};
use crate::monomial::Monomial;
use crate::subsets::Combinations;
use crate::vars::{VarSet, VariableSet};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vars: VarSet,
    edges: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KonigData {
    pub alpha0: usize,
    pub beta1: usize,
    pub is_konig: bool,
}

fn edge_cmp(a: u64, b: u64) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal => cmp_masks_lex(a, b),
        ord => ord,
    }
}

impl Hypergraph {
    pub fn edgeless(vars: &VarSet) -> Self {
        Hypergraph {
            vars: vars.clone(),
            edges: Vec::new(),
        }
    }

    /// Build from vertex-name edges, rejecting empty or nested edges.
    pub fn new<S: AsRef<str>>(vars: &VarSet, edges: &[Vec<S>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut mask = 0u64;
            for name in edge {
                let i = vars
                    .index_of(name.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(name.as_ref().to_string()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Self::from_edge_masks(vars, masks)
    }

    /// Build from masks, rejecting empty edges and proper nesting. Exact
    /// duplicates collapse, since edges form a set.
    pub fn from_edge_masks(vars: &VarSet, mut masks: Vec<u64>) -> Result<Self> {
        masks.sort_by(|&a, &b| edge_cmp(a, b));
        masks.dedup();
        for &m in &masks {
            if m == 0 {
                return Err(Error::EmptyEdge);
            }
            if m & !vars.full_mask() != 0 {
                return Err(Error::Internal("edge outside the vertex set".into()));
            }
        }
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                if a & b == a {
                    return Err(Error::NotSimple {
                        smaller: vars.mask_names(a).join(","),
                        larger: vars.mask_names(b).join(","),
                    });
                }
            }
        }
        Ok(Hypergraph {
            vars: vars.clone(),
            edges: masks,
        })
    }

    /// Build from arbitrary masks by dropping empty edges and keeping the
    /// inclusion-minimal ones. Used where constructions can produce nested
    /// or empty edges (contraction, expansion).
    pub(crate) fn from_masks_minimal(vars: &VarSet, mut masks: Vec<u64>) -> Self {
        masks.retain(|&m| m != 0);
        masks.sort_by(|&a, &b| edge_cmp(a, b));
        masks.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for m in masks {
            if !kept.iter().any(|&k| k & m == k) {
                kept.push(m);
            }
        }
        Hypergraph {
            vars: vars.clone(),
            edges: kept,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn vertex_count(&self) -> usize {
        self.vars.len()
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() == 2)
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|e| e.count_ones() == 1)
    }

    pub fn loop_edge(&self) -> Option<u64> {
        self.edges.iter().copied().find(|e| e.count_ones() == 1)
    }

    pub fn edge_names(&self) -> Vec<Vec<&str>> {
        self.edges.iter().map(|&e| self.vars.mask_names(e)).collect()
    }

    /// The squarefree ideal generated by the edges.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges
            .iter()
            .map(|&e| Monomial::from_support(&self.vars, e))
            .collect();
        MonomialIdeal::new(&self.vars, gens).expect("edges share the vertex set")
    }

    /// The Alexander dual of the edge ideal; its generators are the minimal
    /// vertex covers. Edgeless hypergraphs get the unit ideal.
    pub fn cover_ideal(&self) -> MonomialIdeal {
        squarefree_dual(&self.edge_ideal()).expect("edge ideals are squarefree")
    }

    /// Minimal vertex covers as masks, in canonical order. Edgeless input
    /// has the empty cover.
    pub fn minimal_covers(&self) -> Vec<u64> {
        self.cover_ideal()
            .gens()
            .iter()
            .map(Monomial::support_mask)
            .collect()
    }

    /// The hypergraph whose edges are the minimal vertex covers.
    pub fn dual(&self) -> Result<Hypergraph> {
        if self.is_edgeless() {
            return Err(Error::EdgelessDual);
        }
        Ok(Hypergraph {
            vars: self.vars.clone(),
            edges: {
                let mut covers = self.minimal_covers();
                covers.sort_by(|&a, &b| edge_cmp(a, b));
                covers
            },
        })
    }

    /// Induced subhypergraph on the vertices in `mask`: keeps exactly the
    /// edges contained in `mask`, over the restricted vertex set.
    pub fn induced_mask(&self, mask: u64) -> Hypergraph {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| mask & (1 << i) != 0)
            .collect();
        let vars = VariableSet::new(keep.iter().map(|&i| self.vars.name(i).to_string()))
            .expect("restriction keeps names distinct");
        let remap = |e: u64| -> u64 {
            keep.iter()
                .enumerate()
                .filter(|&(_, &old)| e & (1 << old) != 0)
                .fold(0u64, |m, (new, _)| m | (1 << new))
        };
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & !mask == 0)
            .map(|&e| remap(e))
            .collect();
        Hypergraph { vars, edges }
    }

    pub fn induced<S: AsRef<str>>(&self, w: &[S]) -> Result<Hypergraph> {
        Ok(self.induced_mask(self.names_mask(w)?))
    }

    pub fn names_mask<S: AsRef<str>>(&self, names: &[S]) -> Result<u64> {
        let mut mask = 0u64;
        for n in names {
            let i = self
                .vars
                .index_of(n.as_ref())
                .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    fn is_cover(&self, mask: u64) -> bool {
        self.edges.iter().all(|&e| e & mask != 0)
    }

    /// Minimum vertex cover size, maximum matching size, and whether the two
    /// agree. Edgeless hypergraphs are König with (0, 0).
    pub fn konig(&self) -> KonigData {
        let alpha0 = self.min_cover_size();
        let beta1 = self.max_matching_size();
        KonigData {
            alpha0,
            beta1,
            is_konig: alpha0 == beta1,
        }
    }

    fn min_cover_size(&self) -> usize {
        if self.is_edgeless() {
            return 0;
        }
        let positions: Vec<usize> = (0..self.vars.len()).collect();
        for k in 1..=positions.len() {
            if Combinations::new(&positions, k).any(|mask| self.is_cover(mask)) {
                return k;
            }
        }
        unreachable!("the full vertex set covers every nonempty edge")
    }

    fn max_matching_size(&self) -> usize {
        fn search(edges: &[u64], i: usize, used: u64, count: usize, best: &mut usize) {
            if count > *best {
                *best = count;
            }
            if i == edges.len() || count + (edges.len() - i) <= *best {
                return;
            }
            if edges[i] & used == 0 {
                search(edges, i + 1, used | edges[i], count + 1, best);
            }
            search(edges, i + 1, used, count, best);
        }
        let mut best = 0;
        search(&self.edges, 0, 0, 0, &mut best);
        best
    }

    /// Deletion removes the vertex and every edge through it; contraction
    /// removes the vertex from every edge, drops edges that become empty,
    /// and keeps the minimal ones.
    pub fn minor(&self, v: &str, mode: MinorMode) -> Result<Hypergraph> {
        let i = self
            .vars
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        Ok(self.minor_at(i, mode))
    }

    fn minor_at(&self, i: usize, mode: MinorMode) -> Hypergraph {
        let vars = self.vars.without(i);
        let bit = 1u64 << i;
        let drop_bit = |e: u64| -> u64 { (e & (bit - 1)) | ((e >> 1) & !(bit - 1)) };
        let masks: Vec<u64> = match mode {
            MinorMode::Delete => self
                .edges
                .iter()
                .filter(|&&e| e & bit == 0)
                .map(|&e| drop_bit(e))
                .collect(),
            MinorMode::Contract => self.edges.iter().map(|&e| drop_bit(e & !bit)).collect(),
        };
        Hypergraph::from_masks_minimal(&vars, masks)
    }

    /// All minors reachable by deletions and contractions, including the
    /// hypergraph itself, deduplicated by labeled form. Deletions and
    /// contractions at distinct vertices commute, so each minor is indexed
    /// by a disjoint pair of vertex subsets.
    pub fn all_minors(&self, max_vertices: usize) -> Result<Vec<Hypergraph>> {
        let n = self.vars.len();
        if n > max_vertices {
            return Err(Error::BoundExceeded {
                what: "minor enumeration vertex",
                value: n,
                limit: max_vertices,
                raise: "--minor-bound (or run the bounded scan)",
            });
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.for_each_minor(|g| {
            if seen.insert(g.clone()) {
                out.push(g);
            }
            true
        });
        out.sort();
        Ok(out)
    }

    /// Visit every (delete-set, contract-set) minor in a fixed order; the
    /// callback returns false to stop early. Minors may repeat.
    pub(crate) fn for_each_minor(&self, mut f: impl FnMut(Hypergraph) -> bool) {
        let n = self.vars.len();
        let mut assignment = vec![0u8; n]; // 0 keep, 1 delete, 2 contract
        loop {
            let mut g = self.clone();
            // apply highest index first so positions stay valid
            for i in (0..n).rev() {
                match assignment[i] {
                    1 => g = g.minor_at(i, MinorMode::Delete),
                    2 => g = g.minor_at(i, MinorMode::Contract),
                    _ => {}
                }
            }
            if !f(g) {
                return;
            }
            // next ternary assignment
            let mut i = 0;
            loop {
                if i == n {
                    return;
                }
                assignment[i] += 1;
                if assignment[i] == 3 {
                    assignment[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// The s-th expansion: s flavored copies of every vertex, edges joining
    /// the flavors of each vertex, and every flavor assignment of every base
    /// edge.
    pub fn expansion(&self, s: u32) -> Result<ExpandedHypergraph> {
        if s == 0 {
            return Err(Error::InvalidArgument("expansion needs s >= 1".into()));
        }
        let s_us = s as usize;
        let n = self.vars.len();
        let total = n
            .checked_mul(s_us)
            .filter(|&t| t <= crate::vars::MAX_VARIABLES)
            .ok_or(Error::TooManyVariables {
                count: n.saturating_mul(s_us),
                cap: crate::vars::MAX_VARIABLES,
            })?;
        let mut names = Vec::with_capacity(total);
        let mut base_of = Vec::with_capacity(total);
        for i in 0..n {
            for j in 1..=s_us {
                names.push(format!("{}.{}", self.vars.name(i), j));
                base_of.push(i);
            }
        }
        let vars = VariableSet::new(names)?;
        let flavor = |i: usize, j: usize| -> u64 { 1u64 << (i * s_us + j) };
        let mut masks = Vec::new();
        for i in 0..n {
            for j in 0..s_us {
                for k in j + 1..s_us {
                    masks.push(flavor(i, j) | flavor(i, k));
                }
            }
        }
        for &e in &self.edges {
            let members: Vec<usize> = (0..n).filter(|&i| e & (1 << i) != 0).collect();
            let mut choice = vec![0usize; members.len()];
            loop {
                let mask = members
                    .iter()
                    .zip(&choice)
                    .fold(0u64, |m, (&i, &j)| m | flavor(i, j));
                masks.push(mask);
                let mut p = 0;
                loop {
                    if p == members.len() {
                        break;
                    }
                    choice[p] += 1;
                    if choice[p] == s_us {
                        choice[p] = 0;
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p == members.len() {
                    break;
                }
            }
        }
        let graph = Hypergraph::from_masks_minimal(&vars, masks);
        Ok(ExpandedHypergraph {
            base: self.clone(),
            s,
            graph,
            base_of,
        })
    }

    /// Expansion at a vertex subset of a graph: every vertex of `w` splits
    /// into two adjacent copies and the incident edges duplicate.
    pub fn expansion_at<S: AsRef<str>>(&self, w: &[S]) -> Result<Hypergraph> {
        if let Some(e) = self.edges.iter().find(|e| e.count_ones() != 2) {
            return Err(Error::NotAGraph(self.vars.mask_names(*e).join(",")));
        }
        let w_mask = self.names_mask(w)?;
        if w_mask == 0 {
            return Ok(self.clone());
        }
        let n = self.vars.len();
        let mut names = Vec::new();
        let mut images: Vec<Vec<usize>> = Vec::with_capacity(n);
        for i in 0..n {
            if w_mask & (1 << i) != 0 {
                images.push(vec![names.len(), names.len() + 1]);
                names.push(format!("{}.1", self.vars.name(i)));
                names.push(format!("{}.2", self.vars.name(i)));
            } else {
                images.push(vec![names.len()]);
                names.push(self.vars.name(i).to_string());
            }
        }
        let vars = VariableSet::new(names)?;
        let mut masks = Vec::new();
        for i in 0..n {
            if w_mask & (1 << i) != 0 {
                masks.push((1u64 << images[i][0]) | (1u64 << images[i][1]));
            }
        }
        for &e in &self.edges {
            let ends: Vec<usize> = (0..n).filter(|&i| e & (1 << i) != 0).collect();
            for &a in &images[ends[0]] {
                for &b in &images[ends[1]] {
                    masks.push((1u64 << a) | (1u64 << b));
                }
            }
        }
        Hypergraph::from_edge_masks(&vars, masks)
    }

    /// Complement graph on the same vertices.
    pub fn complement(&self) -> Result<Hypergraph> {
        if let Some(e) = self.edges.iter().find(|e| e.count_ones() != 2) {
            return Err(Error::NotAGraph(self.vars.mask_names(*e).join(",")));
        }
        let n = self.vars.len();
        let mut masks = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = (1u64 << i) | (1u64 << j);
                if !self.edges.contains(&m) {
                    masks.push(m);
                }
            }
        }
        Hypergraph::from_edge_masks(&self.vars, masks)
    }

    /// All vertex subsets of size >= 2 inducing complete subgraphs.
    pub fn cliques(&self) -> Result<Vec<u64>> {
        if let Some(e) = self.edges.iter().find(|e| e.count_ones() != 2) {
            return Err(Error::NotAGraph(self.vars.mask_names(*e).join(",")));
        }
        let n = self.vars.len();
        let mut adj = vec![0u64; n];
        for &e in &self.edges {
            let mut bits = e;
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let j = bits.trailing_zeros() as usize;
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let mut out = Vec::new();
        for mask in 1..(1u64 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let mut ok = true;
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if (mask & !(1 << v)) & !adj[v] != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(mask);
            }
        }
        out.sort_by(|&a, &b| edge_cmp(a, b));
        Ok(out)
    }

    /// Every vertex reachable from every other through shared edges.
    pub fn is_connected(&self) -> bool {
        let n = self.vars.len();
        if n <= 1 {
            return true;
        }
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            for &e in &self.edges {
                if e & reached != 0 {
                    next |= e;
                }
            }
            if next == reached {
                break;
            }
            reached = next;
        }
        reached == self.vars.full_mask()
    }

    /// Stable text key for scan records and deduplication: the vertex list
    /// plus each edge as a dotted index list.
    pub fn canonical_key(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&e| {
                (0..self.vars.len())
                    .filter(|&i| e & (1 << i) != 0)
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        format!("v={};e={}", self.vars.names().join(","), edges.join("|"))
    }
}

impl PartialOrd for Hypergraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hypergraph {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.vars.names().cmp(other.vars.names()) {
            Ordering::Equal => self.edges.cmp(&other.edges),
            ord => ord,
        }
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vars)?;
        for &e in &self.edges {
            writeln!(f, "{}", self.vars.mask_names(e).join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_key())
    }
}

/// The s-th expansion of a hypergraph, with the map from flavored vertices
/// back to their base vertex.
#[derive(Clone)]
pub struct ExpandedHypergraph {
    base: Hypergraph,
    s: u32,
    graph: Hypergraph,
    base_of: Vec<usize>,
}

impl ExpandedHypergraph {
    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// The expansion as an ordinary hypergraph over the flavored vertices.
    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    /// Sum the exponents of all flavors of each vertex.
    pub fn depolarize(&self, m: &Monomial) -> Result<Monomial> {
        if !m.vars().same_as(self.graph.vars()) {
            return Err(Error::MixedVariableSets(
                self.graph.vars().to_string(),
                m.vars().to_string(),
            ));
        }
        let mut exp = vec![0u32; self.base.vars().len()];
        for (i, &e) in m.exponents().iter().enumerate() {
            let b = self.base_of[i];
            exp[b] = exp[b]
                .checked_add(e)
                .ok_or_else(|| Error::ExponentOverflow(format!("depolarization of {m}")))?;
        }
        Monomial::from_exponents(self.base.vars(), exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::cycle;
    use crate::parse::parse_hypergraph;

    fn running_example() -> Hypergraph {
        parse_hypergraph(
            "vertices: a b c d e f g\na b\nb c\nc d\nd e\na e\ne f\nf g\nd g\n",
        )
        .unwrap()
    }

    #[test]
    fn edge_ideal_of_the_glued_pentagon() {
        let g = running_example();
        assert_eq!(
            g.edge_ideal().to_string(),
            "(a*b, a*e, b*c, c*d, d*e, d*g, e*f, f*g)"
        );
    }

    #[test]
    fn cover_ideal_of_the_glued_pentagon() {
        let g = running_example();
        assert_eq!(
            g.cover_ideal().to_string(),
            "(a*b*d*f, a*c*d*f, a*c*e*g, b*c*e*g, b*d*e*f, b*d*e*g)"
        );
    }

    #[test]
    fn edgeless_cover_ideal_is_unit() {
        let vars = VariableSet::new(["a", "b"]).unwrap();
        let g = Hypergraph::edgeless(&vars);
        assert!(g.edge_ideal().is_zero());
        assert!(g.cover_ideal().is_unit());
        assert!(matches!(g.dual(), Err(Error::EdgelessDual)));
    }

    #[test]
    fn cycle_cover_ideal_is_the_rotations() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            c5.cover_ideal().to_string(),
            "(x1*x2*x4, x1*x3*x4, x1*x3*x5, x2*x3*x5, x2*x4*x5)"
        );
    }

    #[test]
    fn single_edge_dual_is_two_loops() {
        let vars = VariableSet::new(["x1", "x2"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x1", "x2"]]).unwrap();
        let d = g.dual().unwrap();
        assert_eq!(d.edge_masks(), &[0b01, 0b10]);
        assert_eq!(d.dual().unwrap(), g);
    }

    #[test]
    fn double_dual_is_identity() {
        let g = running_example();
        assert_eq!(g.dual().unwrap().dual().unwrap(), g);
    }

    #[test]
    fn induced_subhypergraphs_of_the_running_example() {
        let g = running_example();
        let pentagon = g.induced(&["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(pentagon.edge_count(), 5);
        assert!(pentagon.is_connected());
        let square = g.induced(&["d", "e", "f", "g"]).unwrap();
        assert_eq!(square.edge_count(), 4);
        let all = g.induced(&["a", "b", "c", "d", "e", "f", "g"]).unwrap();
        assert_eq!(all, g);
    }

    #[test]
    fn konig_numbers() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            c5.konig(),
            KonigData {
                alpha0: 3,
                beta1: 2,
                is_konig: false
            }
        );
        let vars = VariableSet::new(["x", "y"]).unwrap();
        let edge = Hypergraph::new(&vars, &[vec!["x", "y"]]).unwrap();
        assert_eq!(
            edge.konig(),
            KonigData {
                alpha0: 1,
                beta1: 1,
                is_konig: true
            }
        );
        assert_eq!(Hypergraph::edgeless(&vars).konig().alpha0, 0);
        assert!(Hypergraph::edgeless(&vars).konig().is_konig);
    }

    #[test]
    fn deletion_of_a_cycle_vertex_leaves_a_path() {
        let c5 = cycle(5).unwrap();
        let p = c5.minor("x1", MinorMode::Delete).unwrap();
        assert_eq!(p.vars().names(), &["x2", "x3", "x4", "x5"]);
        assert_eq!(p.edge_names().len(), 3);
        assert_eq!(p.edge_ideal().to_string(), "(x2*x3, x3*x4, x4*x5)");
    }

    #[test]
    fn contraction_can_create_loops() {
        let vars = VariableSet::new(["x", "y"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x", "y"]]).unwrap();
        let c = g.minor("x", MinorMode::Contract).unwrap();
        assert_eq!(c.edge_masks(), &[1u64]);
        assert!(c.has_loop());
    }

    #[test]
    fn contracting_a_loop_vertex_keeps_the_other_edges() {
        // antichains forbid a loop vertex from lying on other edges, so
        // contracting it only removes the loop
        let vars = VariableSet::new(["x", "y", "z"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x"], vec!["y", "z"]]).unwrap();
        let c = g.minor("x", MinorMode::Contract).unwrap();
        assert_eq!(c.vars().names(), &["y", "z"]);
        assert_eq!(c.edge_count(), 1);
    }

    #[test]
    fn minors_of_a_single_edge() {
        let vars = VariableSet::new(["x", "y"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x", "y"]]).unwrap();
        let minors = g.all_minors(10).unwrap();
        // itself, two loops, two one-vertex edgeless graphs, and the empty one
        assert_eq!(minors.len(), 6);
        assert!(minors.iter().any(|m| m == &g));
        assert_eq!(
            minors
                .iter()
                .filter(|m| m.vertex_count() == 1 && m.has_loop())
                .count(),
            2
        );
        assert_eq!(
            minors
                .iter()
                .filter(|m| m.vertex_count() == 1 && m.is_edgeless())
                .count(),
            2
        );
        assert!(minors.iter().any(|m| m.vertex_count() == 0));
    }

    #[test]
    fn cycle_minors_contain_no_other_long_odd_cycle() {
        let c5 = cycle(5).unwrap();
        let minors = c5.all_minors(10).unwrap();
        let long_odd = |g: &Hypergraph| {
            g.is_graph()
                && g.vertex_count() >= 5
                && g.vertex_count() % 2 == 1
                && g.is_connected()
                && g.edge_count() == g.vertex_count()
        };
        let found: Vec<&Hypergraph> = minors.iter().filter(|g| long_odd(g)).collect();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0], &c5);
    }

    #[test]
    fn minor_bound_is_enforced() {
        let g = cycle(5).unwrap();
        assert!(matches!(
            g.all_minors(4),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn expansion_of_the_pentagon() {
        let c5 = cycle(5).unwrap();
        let ex = c5.expansion(2).unwrap();
        assert_eq!(ex.graph().vertex_count(), 10);
        // five flavor edges plus four flavorings of each of the five edges
        assert_eq!(ex.graph().edge_count(), 25);
        let e1 = c5.expansion(1).unwrap();
        assert_eq!(e1.graph().edge_count(), 5);
        let renamed: Vec<String> = c5
            .vars()
            .names()
            .iter()
            .map(|n| format!("{n}.1"))
            .collect();
        assert_eq!(e1.graph().vars().names(), &renamed[..]);
    }

    #[test]
    fn expansion_of_one_edge() {
        let vars = VariableSet::new(["x", "y"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x", "y"]]).unwrap();
        let ex = g.expansion(2).unwrap();
        assert_eq!(ex.graph().edge_count(), 6); // K4 on the four flavors
    }

    #[test]
    fn expansion_at_a_single_vertex_makes_a_triangle() {
        let vars = VariableSet::new(["x", "y"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x", "y"]]).unwrap();
        let t = g.expansion_at(&["x"]).unwrap();
        assert_eq!(t.vars().names(), &["x.1", "x.2", "y"]);
        assert_eq!(t.edge_count(), 3);
        let nothing = g.expansion_at::<&str>(&[]).unwrap();
        assert_eq!(nothing, g);
    }

    #[test]
    fn full_expansion_at_matches_second_expansion() {
        let c5 = cycle(5).unwrap();
        let names: Vec<&str> = c5.vars().names().iter().map(String::as_str).collect();
        let at_all = c5.expansion_at(&names).unwrap();
        let ex2 = c5.expansion(2).unwrap();
        // same edges after aligning the vertex orders
        let lhs: BTreeSet<Vec<String>> = at_all
            .edge_names()
            .into_iter()
            .map(|e| e.into_iter().map(str::to_string).collect())
            .collect();
        let rhs: BTreeSet<Vec<String>> = ex2
            .graph()
            .edge_names()
            .into_iter()
            .map(|e| e.into_iter().map(str::to_string).collect())
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn depolarization_sums_flavors() {
        let vars = VariableSet::new(["x1", "x2"]).unwrap();
        let g = Hypergraph::new(&vars, &[vec!["x1", "x2"]]).unwrap();
        let ex = g.expansion(2).unwrap();
        let m = crate::parse::parse_monomial(ex.graph().vars(), "x1.1*x1.2").unwrap();
        assert_eq!(ex.depolarize(&m).unwrap().to_string(), "x1^2");
        let one = Monomial::one(ex.graph().vars());
        assert!(ex.depolarize(&one).unwrap().is_one());
    }

    #[test]
    fn depolarized_expansion_edges_are_base_edges_or_squares() {
        let c5 = cycle(5).unwrap();
        let ex = c5.expansion(3).unwrap();
        let base_edges: BTreeSet<u64> = c5.edge_masks().iter().copied().collect();
        for &e in ex.graph().edge_masks() {
            let m = Monomial::from_support(ex.graph().vars(), e);
            let d = ex.depolarize(&m).unwrap();
            let is_square = d.degree() == 2 && d.support_mask().count_ones() == 1;
            assert!(is_square || base_edges.contains(&d.support_mask()));
        }
    }
}
