//! Labeled plane trees, increasing plane trees and the improper-edge
//! involution that relates them.
//!
//! * [`tree`]: arena-backed plane trees with persistent edge ids, subtree
//!   minima and proper/improper edge classification.
//! * [`text`]: the `5(1(7),3(8,2,6,4))` text format, with optional
//!   `:x` / `:y` / `:t` edge tags.
//! * [`involution`]: the edge-local involution and the bijection onto
//!   tagged increasing trees together with its inverse.
//! * [`enumerate`]: counting formulas, exhaustive iterators and uniform
//!   samplers.
//! * [`polynomials`]: exact polynomials and truncated series, the
//!   enumerated tree polynomials and their closed-form checks.
//! * [`stirling`]: Stirling permutations, blocks and the depth-first walk.

pub mod enumerate;
pub mod error;
pub mod involution;
pub mod polynomials;
pub mod stirling;
pub mod text;
pub mod tree;

pub use error::{Error, Result};
pub use involution::{big_phi, big_psi, decompose, phi, Decomposition, TagMode};
pub use text::{parse_tree, render_tree};
pub use tree::{EdgeRef, EdgeStatus, EdgeTag, Label, NodeId, PlaneTree, TreeStats};
