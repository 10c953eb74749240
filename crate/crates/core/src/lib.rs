//! Ramsey numbers of trails.
//!
//! `R(T_k, T_k)` is the least `n` such that every graph on `n` vertices or
//! its complement contains a trail with `k` vertices (counted with
//! multiplicity). This crate provides
//!
//! * [`graph`], [`graph6`], [`trail`], [`euler`]: small-graph plumbing,
//! * [`solver`]: exact longest-trail search and `t(G)`,
//! * [`canon`], [`enumerate`]: isomorph-free enumeration and the exhaustive
//!   `value(n)` table,
//! * [`lower_bound`]: witness graphs showing `R(T_k, T_k) > n`,
//! * [`prover`]: an algorithm that finds a `k`-vertex trail in any graph on
//!   `k` vertices or in its complement.

pub mod canon;
pub mod enumerate;
pub mod euler;
pub mod graph;
pub mod graph6;
pub mod lower_bound;
pub mod prover;
pub mod solver;
pub mod trail;

pub use enumerate::{enumerate_graphs, ramsey_table, value, RamseyTable};
pub use euler::eulerian_trail;
pub use graph::{EulerClass, EulerKind, Graph};
pub use lower_bound::{check_certificate, lb_formula, witness, Evidence, WitnessCertificate};
pub use prover::{find_trail, validate_trace, ProofTrace, Side};
pub use solver::{has_trail_with_k, longest_trail, t_value, TrailResult};
pub use trail::Trail;
