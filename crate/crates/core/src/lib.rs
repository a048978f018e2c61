//! Quasi-kernel toolkit for directed graphs.
//!
//! A quasi-kernel of a digraph is an independent set `Q` such that every
//! vertex reaches `Q` by a directed path of length at most two. This crate
//! bundles the verification predicates, a linear-time constructor, exact
//! minimum solvers (general branch-and-bound and a tree specialization),
//! hardness-instance generators with witness mappings, text formats for the
//! instance families involved, and a seeded search harness for the open
//! conjectures around small and disjoint quasi-kernels.

pub mod conjecture;
pub mod digraph;
pub mod formats;
pub mod reductions;
pub mod solvers;
pub mod tree_dp;

pub use digraph::{Digraph, DigraphProfile, GraphError, VertexSet};
pub use solvers::{ApproxCertificate, SolveError};
