//! Exact combinatorial algebra for squarefree monomial ideals viewed as the
//! edge and cover ideals of simple hypergraphs.
//!
//! Everything is computed over exponent vectors with checked integer
//! arithmetic; there are no coefficient fields and no floating point. The
//! crate is built around a few small immutable value types ([`Monomial`],
//! [`MonomialIdeal`], [`Hypergraph`]) plus free functions for the heavier
//! constructions: Alexander duality and irreducible decomposition, colorings
//! and secant powers, symbolic powers, and the packing / max-flow-min-cut
//! checks driven by exact integer programs.
//!
//! All operations are pure; with the `parallel` feature enabled, independent
//! subproblems fan out over rayon and the merged results are bit-identical
//! to sequential evaluation.

pub mod coloring;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod hypergraph;
pub mod ideal;
pub mod json;
pub mod monomial;
pub mod packing;
pub mod par;
pub mod parse;
pub mod symbolic;
pub mod vars;

pub use error::{Error, Result};
pub use hypergraph::{ExpandedHypergraph, Hypergraph, KonigData};
pub use ideal::{MinorMode, MonomialIdeal};
pub use monomial::Monomial;
pub use vars::{VarSet, VariableSet, MAX_VARIABLES};

pub use duality::{
    associated_primes, generalized_dual, irreducible_decomposition, squarefree_dual,
    IrreducibleComponent, MonomialPrime,
};
