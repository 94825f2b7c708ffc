//! Depth of multimatrix algebra inclusions.
//!
//! The crate computes the depth of an inclusion three ways and insists the
//! routes agree: an exact matrix oracle on induction-restriction matrices
//! (`intmatrix`), a graph-distance route on the associated bipartite diagram
//! (`bratteli`), and a character-theoretic pipeline for pairs of permutation
//! groups (`perm`, `chartab`). Closed-form combinatorics for the symmetric
//! and alternating families live in `young`. `analysis` ties the routes
//! together into one report and `checks` replays the full table of known
//! values.

pub mod analysis;
pub mod bitmat;
pub mod bratteli;
pub mod chartab;
pub mod checks;
pub mod intmatrix;
pub mod perm;
pub mod young;
