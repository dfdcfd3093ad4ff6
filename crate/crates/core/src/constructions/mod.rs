//! Constructive extraction of clique-minor and odd-clique-minor certificates.
//!
//! * [`odd_hadwiger_witness`]: an odd `K_{floor(l/2)+1}` expansion from a
//!   zigzag of length `l` in the coloring induced by a bipartite-connected
//!   partition.
//! * [`extract_minor_from_kneser_rep`]: a `K_t` minor in `KG(h)` with
//!   `t = cd(h)`.
//! * [`schrijver_expansion`]: an odd `K_{n-2k+2}` expansion in `S(n,k)`.
//!
//! Every construction runs the matching verifier before returning; a failed
//! verification surfaces as [`crate::Error::Internal`].

mod kneser_minor;
mod odd_hadwiger;
mod schrijver;

pub use kneser_minor::extract_minor_from_kneser_rep;
pub use odd_hadwiger::{extract_odd_expansion, find_monochromatic_edge, odd_hadwiger_witness};
pub use schrijver::{schrijver_expansion, schrijver_minor_model};
