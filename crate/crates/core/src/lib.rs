//! Exact chromatic-threshold classification at desk scale.
//!
//! The crate determines, for any input graph `H` with `chi(H) = r >= 3`,
//! which of the three possible chromatic thresholds
//! `(r-3)/(r-2)`, `(2r-5)/(2r-3)`, `(r-2)/(r-1)` applies (bipartite `H`
//! has threshold 0), and produces independently re-checkable witnesses.
//! It also generates the extremal families that realize the lower bounds
//! (Zykov, Kneser, Hajnal, Borsuk-Hajnal, high-girth constructions) and
//! ships exact verification tools: subgraph containment, forest embedding,
//! odd-cycle oracles, and a from-scratch witness checker.

pub mod bitset;
pub mod budget;
pub mod chromatic;
pub mod classify;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod sphere;
pub mod verify;

pub use bitset::VertexSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{ForestDecomposition, Graph, TreeComponent, MAX_VERTICES};
pub use rational::Rational;
