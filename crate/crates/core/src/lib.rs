//! Chromatic lower bounds and clique-minor certificates on small graphs.
//!
//! The crate computes the zigzag number `zig(G)` and the 2-colorability
//! defect `cd(H)` exactly, and builds verifiable certificates for the clique
//! minors these bounds force:
//!
//! * an odd `K_{floor(t/2)+1}` expansion in any graph with `zig(G) >= t`
//!   ([`constructions::odd_hadwiger_witness`]),
//! * a `K_t` minor in `KG(H)` whenever `cd(H) >= t`
//!   ([`constructions::extract_minor_from_kneser_rep`]),
//! * an odd `K_{n-2k+2}` expansion in every Schrijver graph `S(n,k)`
//!   ([`constructions::schrijver_expansion`]).
//!
//! Every certificate kind has an independent verifier in [`certificates`]
//! and a brute-force oracle for tiny graphs.

pub mod bounds;
pub mod certificates;
pub mod cli;
pub mod constructions;
pub mod decompose;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod limits;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{Bipartition, Coloring, Edge, Graph, Hypergraph, Vertex};
pub use limits::Limits;
pub use report::{Check, ValidationReport, Violation};
