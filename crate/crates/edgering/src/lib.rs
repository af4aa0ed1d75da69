//! Exact-computation toolkit for a family of bipartite shift graphs on an
//! m-by-n grid: edge ideals and their powers, minimal free resolutions,
//! Groebner bases of the associated binomial ideals, and edge-cone
//! a-invariant certificates. All arithmetic is exact; no floating point.

pub mod cone;
pub mod family;
pub mod graph;
pub mod monomial;
pub mod par;
pub mod poly;
pub mod registry;
pub mod resolution;
