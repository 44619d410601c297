use thiserror::Error;

use crate::tree::{EdgeRef, Label, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("duplicate label {label} at byte {pos}")]
    DuplicateLabel { label: u32, pos: usize },

    #[error("the root vertex cannot carry an edge tag (byte {pos})")]
    TagOnRoot { pos: usize },

    #[error("edge tags must be given on every edge or on none")]
    PartialTagging,

    #[error("node {0:?} does not belong to this tree")]
    NoSuchNode(NodeId),

    #[error("edge {0:?} does not belong to this tree")]
    NoSuchEdge(EdgeRef),

    #[error("({parent},{child}) is not an edge of the tree")]
    NotAnEdge { parent: u32, child: u32 },

    #[error("labels are not exactly 1..={expected_max}")]
    NotStandardLabels { expected_max: usize },

    #[error("root label is {0}, expected 1")]
    RootNotOne(Label),

    #[error("tree is not increasing")]
    NotIncreasing,

    #[error("tree is already tagged")]
    AlreadyTagged,

    #[error("tree is not tagged")]
    Untagged,

    #[error("invalid Stirling permutation: {0}")]
    InvalidStirling(String),

    #[error("n = {n} exceeds the enumeration bound {bound}; pass force to override")]
    BoundExceeded { n: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
