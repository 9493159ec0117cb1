//! Strong subgraph k-connectivity of digraphs.
//!
//! For a digraph `D` and an anchor set `S` of `k >= 2` vertices, `κ_S(D)` is
//! the largest number of strong subgraphs containing `S` that pairwise share
//! exactly the vertices of `S` and no arcs; `κ_k(D)` is the minimum of
//! `κ_S(D)` over all `k`-subsets.
//!
//! * [`packing`]: exact exponential-time oracle for both parameters.
//! * [`semicomplete`] and [`symmetric`]: the special-case decision
//!   procedures, each validated against the oracle.
//! * [`extremal`]: closed forms for complete biorientations, Hamiltonian
//!   decompositions and the sharp bounds.
//! * [`gadgets`]: reduction constructions used as hard-instance generators.

pub mod combinatorics;
pub mod digraph;
pub mod error;
pub mod extremal;
pub mod gadgets;
pub mod generate;
pub mod io;
pub mod linkage;
pub mod packing;
pub mod semicomplete;
pub mod symmetric;

pub use digraph::{
    biorient, induced_subdigraph, is_strong, min_degrees, strong_components, subdivide_arc,
    underlying_graph, Arc, Digraph, DigraphBuilder, Edge, Subdigraph, UndirectedGraph, Vertex,
    VertexSet,
};
pub use error::{Error, Result};
pub use linkage::{directed_linkage, undirected_linkage, Linkage, TerminalSequence};
pub use packing::{
    check_packing, decide_kappa_s_at_least, kappa_k, kappa_s, verify_packing, KappaResult,
    OracleConfig, Packing, PackingViolation,
};
