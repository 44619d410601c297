//! The edge-local involution and the bijection it induces between labeled
//! plane trees and edge-tagged increasing plane trees.
//!
//! For an edge `e = (i, j)` the subtree at `i` splits into three ordered
//! forests: `left` (subtrees of `j`'s left siblings), `below` (subtrees of
//! `j`'s children) and `right` (subtrees of `j`'s right siblings). The
//! involution swaps `{i, right}` with `{j, below}`: `j` takes `i`'s slot and
//! gets children `left ++ [i] ++ below`, while `i` keeps only `right`.
//!
//! Edge ids are rewired rather than recreated. The edge above `i` and the
//! `left` edges move over to `j`; `e` itself turns around and now runs from
//! `j` down to `i`. Applying the map twice at the same edge restores the
//! input exactly, ids and tags included.

use crate::error::{Error, Result};
use crate::tree::{EdgeRef, EdgeTag, NodeId, PlaneTree};

/// The three forests around an edge, each given by its roots in
/// left-to-right order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Parent endpoint `i`.
    pub parent: NodeId,
    /// Child endpoint `j`.
    pub child: NodeId,
    pub left: Vec<NodeId>,
    pub below: Vec<NodeId>,
    pub right: Vec<NodeId>,
}

pub fn decompose(tree: &PlaneTree, edge: EdgeRef) -> Result<Decomposition> {
    if !tree.contains_edge(edge) {
        return Err(Error::NoSuchEdge(edge));
    }
    let (parent, child) = tree.endpoints(edge);
    let siblings = tree.child_edges(parent);
    let at = siblings
        .iter()
        .position(|&s| s == edge)
        .expect("edge listed at parent");
    let roots = |edges: &[EdgeRef]| edges.iter().map(|&s| tree.endpoints(s).1).collect();
    Ok(Decomposition {
        parent,
        child,
        left: roots(&siblings[..at]),
        below: tree.children(child).collect(),
        right: roots(&siblings[at + 1..]),
    })
}

/// Applies the involution at `edge`, returning a new tree.
pub fn phi(tree: &PlaneTree, edge: EdgeRef) -> Result<PlaneTree> {
    let mut out = tree.clone();
    phi_in_place(&mut out, edge)?;
    Ok(out)
}

pub fn phi_in_place(tree: &mut PlaneTree, edge: EdgeRef) -> Result<()> {
    if !tree.contains_edge(edge) {
        return Err(Error::NoSuchEdge(edge));
    }
    let (i, j) = tree.endpoints(edge);
    let mut siblings = std::mem::take(&mut tree.nodes[i.index()].children);
    let at = siblings
        .iter()
        .position(|&s| s == edge)
        .expect("edge listed at parent");
    let right = siblings.split_off(at + 1);
    siblings.pop();
    let left = siblings;
    let below = std::mem::take(&mut tree.nodes[j.index()].children);

    match tree.nodes[i.index()].up {
        Some(above) => {
            tree.edges[above.index()].child = j;
            tree.nodes[j.index()].up = Some(above);
        }
        None => {
            tree.root = j;
            tree.nodes[j.index()].up = None;
        }
    }
    for &a in &left {
        tree.edges[a.index()].parent = j;
    }
    tree.edges[edge.index()].parent = j;
    tree.edges[edge.index()].child = i;
    tree.nodes[i.index()].up = Some(edge);

    let mut j_children = left;
    j_children.push(edge);
    j_children.extend(below);
    tree.nodes[j.index()].children = j_children;
    tree.nodes[i.index()].children = right;
    Ok(())
}

/// How the forward bijection tags the edges of its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TagMode {
    /// Improper edges become `x`, all others `y`.
    #[default]
    Plain,
    /// As `Plain`, but edges at the vertex labeled 1 become `t`. Requires
    /// the root to be labeled 1.
    Rooted,
}

/// Maps a labeled plane tree with labels `1..=n+1` to an increasing plane
/// tree whose `x`-tagged edges are exactly the improper edges of the input.
pub fn big_phi(tree: &PlaneTree, mode: TagMode) -> Result<PlaneTree> {
    if tree.is_tagged() {
        return Err(Error::AlreadyTagged);
    }
    if !tree.has_standard_labels() {
        return Err(Error::NotStandardLabels {
            expected_max: tree.node_count(),
        });
    }
    if mode == TagMode::Rooted && tree.root_label().get() != 1 {
        return Err(Error::RootNotOne(tree.root_label()));
    }

    let improper = tree.improper_edges();
    let mut out = tree.clone();
    for &e in &improper {
        phi_in_place(&mut out, e)?;
    }
    debug_assert!(out.is_increasing());

    for e in out.edge_refs().collect::<Vec<_>>() {
        out.set_tag(e, Some(EdgeTag::Y));
    }
    for &e in &improper {
        out.set_tag(e, Some(EdgeTag::X));
    }
    if mode == TagMode::Rooted {
        let root = out.root();
        for e in out.child_edges(root).to_vec() {
            // the vertex labeled 1 is the global minimum, so its edges are proper
            assert_eq!(
                out.tag(e),
                Some(EdgeTag::Y),
                "edge at vertex 1 tagged improper"
            );
            out.set_tag(e, Some(EdgeTag::TRoot));
        }
    }
    Ok(out)
}

/// Inverse of [`big_phi`]: applies the involution at every `x`-tagged edge
/// of an increasing tree and drops the tags. `t` tags count as `y`. A
/// single vertex counts as fully tagged.
pub fn big_psi(tagged: &PlaneTree) -> Result<PlaneTree> {
    if tagged.edge_count() > 0 && !tagged.is_tagged() {
        return Err(Error::Untagged);
    }
    if !tagged.is_fully_tagged() {
        return Err(Error::PartialTagging);
    }
    if !tagged.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    let marked: Vec<EdgeRef> = tagged
        .edges_first_descent()
        .into_iter()
        .filter(|&e| tagged.tag(e) == Some(EdgeTag::X))
        .collect();
    let mut out = tagged.clone();
    for e in marked {
        phi_in_place(&mut out, e)?;
    }
    out.clear_tags();
    Ok(out)
}
