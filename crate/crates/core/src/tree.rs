//! Labeled plane trees stored in an arena.
//!
//! Nodes and edges live in flat vectors. An [`EdgeRef`] indexes the edge
//! arena and keeps naming the same edge when the involution rewires the
//! tree, even though the edge's endpoints may change.

use std::fmt;

use crate::error::{Error, Result};

/// A vertex label, always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(u32);

impl Label {
    pub fn new(value: u32) -> Option<Label> {
        (value >= 1).then_some(Label(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Index of a node in a tree's arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub(crate) u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Persistent identity of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(pub(crate) u32);

impl EdgeRef {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Weight tag carried by an edge of a tagged tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeTag {
    X,
    Y,
    /// Edge incident to the vertex labeled 1 in rooted mode.
    TRoot,
}

impl EdgeTag {
    pub fn as_char(self) -> char {
        match self {
            EdgeTag::X => 'x',
            EdgeTag::Y => 'y',
            EdgeTag::TRoot => 't',
        }
    }

    pub fn from_char(c: char) -> Option<EdgeTag> {
        match c {
            'x' => Some(EdgeTag::X),
            'y' => Some(EdgeTag::Y),
            't' => Some(EdgeTag::TRoot),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStatus {
    Proper,
    Improper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStats {
    pub impr: usize,
    pub prop: usize,
    pub root_label: Label,
    /// Number of children of the vertex labeled 1, or 0 if there is none.
    pub deg_one: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub(crate) label: Label,
    pub(crate) up: Option<EdgeRef>,
    pub(crate) children: Vec<EdgeRef>,
}

#[derive(Debug, Clone)]
pub(crate) struct Edge {
    pub(crate) parent: NodeId,
    pub(crate) child: NodeId,
    pub(crate) tag: Option<EdgeTag>,
}

/// A rooted tree with ordered children and distinct positive labels.
///
/// Equality is structural and includes edge identities and tags. Use
/// [`PlaneTree::same_labeled_shape`] to compare while ignoring edge ids.
#[derive(Debug, Clone)]
pub struct PlaneTree {
    pub(crate) nodes: Vec<Node>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) root: NodeId,
}

impl PlaneTree {
    pub fn single(label: Label) -> PlaneTree {
        PlaneTree {
            nodes: vec![Node {
                label,
                up: None,
                children: Vec::new(),
            }],
            edges: Vec::new(),
            root: NodeId(0),
        }
    }

    /// Builds a tree from a Dyck word (`true` = step down to a new child,
    /// `false` = step back up) and the labels of its vertices in preorder.
    ///
    /// Edge ids follow first-descent order. Panics if `word` is not
    /// balanced or `labels.len() != word.len() / 2 + 1`.
    pub fn from_dyck(word: &[bool], labels: &[Label]) -> PlaneTree {
        assert_eq!(labels.len(), word.len() / 2 + 1, "label count mismatch");
        let mut tree = PlaneTree::single(labels[0]);
        tree.nodes.reserve(labels.len() - 1);
        tree.edges.reserve(labels.len() - 1);
        let mut current = tree.root;
        let mut next_label = 1;
        for &down in word {
            if down {
                let (_, child) = tree.push_child(current, labels[next_label]);
                next_label += 1;
                current = child;
            } else {
                let up = tree.nodes[current.index()]
                    .up
                    .expect("unbalanced Dyck word");
                current = tree.edges[up.index()].parent;
            }
        }
        assert_eq!(current, tree.root, "unbalanced Dyck word");
        tree
    }

    /// Appends a new rightmost child.
    pub(crate) fn push_child(&mut self, parent: NodeId, label: Label) -> (EdgeRef, NodeId) {
        let position = self.nodes[parent.index()].children.len();
        self.insert_child(parent, position, label)
    }

    /// Inserts a new leaf as the `position`-th child of `parent`.
    pub(crate) fn insert_child(
        &mut self,
        parent: NodeId,
        position: usize,
        label: Label,
    ) -> (EdgeRef, NodeId) {
        let node = NodeId(self.nodes.len() as u32);
        let edge = EdgeRef(self.edges.len() as u32);
        self.nodes.push(Node {
            label,
            up: Some(edge),
            children: Vec::new(),
        });
        self.edges.push(Edge {
            parent,
            child: node,
            tag: None,
        });
        self.nodes[parent.index()].children.insert(position, edge);
        (edge, node)
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, node: NodeId) -> Label {
        self.nodes[node.index()].label
    }

    pub fn root_label(&self) -> Label {
        self.label(self.root)
    }

    pub fn contains_node(&self, node: NodeId) -> bool {
        node.index() < self.nodes.len()
    }

    pub fn contains_edge(&self, edge: EdgeRef) -> bool {
        edge.index() < self.edges.len()
    }

    fn check_node(&self, node: NodeId) -> Result<()> {
        if self.contains_node(node) {
            Ok(())
        } else {
            Err(Error::NoSuchNode(node))
        }
    }

    fn check_edge(&self, edge: EdgeRef) -> Result<()> {
        if self.contains_edge(edge) {
            Ok(())
        } else {
            Err(Error::NoSuchEdge(edge))
        }
    }

    /// Child edges of `node`, left to right.
    pub fn child_edges(&self, node: NodeId) -> &[EdgeRef] {
        &self.nodes[node.index()].children
    }

    /// Child nodes of `node`, left to right.
    pub fn children(&self, node: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.child_edges(node)
            .iter()
            .map(move |e| self.edges[e.index()].child)
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.nodes[node.index()].children.len()
    }

    pub fn parent_edge(&self, node: NodeId) -> Option<EdgeRef> {
        self.nodes[node.index()].up
    }

    pub fn parent(&self, node: NodeId) -> Option<NodeId> {
        self.parent_edge(node).map(|e| self.edges[e.index()].parent)
    }

    /// `(parent, child)` endpoints of an edge.
    pub fn endpoints(&self, edge: EdgeRef) -> (NodeId, NodeId) {
        let e = &self.edges[edge.index()];
        (e.parent, e.child)
    }

    /// Endpoint labels of an edge as `(parent, child)`.
    pub fn edge_labels(&self, edge: EdgeRef) -> (Label, Label) {
        let (p, c) = self.endpoints(edge);
        (self.label(p), self.label(c))
    }

    pub fn tag(&self, edge: EdgeRef) -> Option<EdgeTag> {
        self.edges[edge.index()].tag
    }

    pub fn set_tag(&mut self, edge: EdgeRef, tag: Option<EdgeTag>) {
        self.edges[edge.index()].tag = tag;
    }

    pub fn is_tagged(&self) -> bool {
        self.edges.iter().any(|e| e.tag.is_some())
    }

    pub fn is_fully_tagged(&self) -> bool {
        self.edges.iter().all(|e| e.tag.is_some())
    }

    pub fn clear_tags(&mut self) {
        for e in &mut self.edges {
            e.tag = None;
        }
    }

    pub fn count_tag(&self, tag: EdgeTag) -> usize {
        self.edges.iter().filter(|e| e.tag == Some(tag)).count()
    }

    /// All edge ids, in arena order.
    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        (0..self.edges.len() as u32).map(EdgeRef)
    }

    pub fn node_by_label(&self, label: Label) -> Option<NodeId> {
        self.nodes
            .iter()
            .position(|n| n.label == label)
            .map(|i| NodeId(i as u32))
    }

    /// Finds the edge whose endpoints carry the given labels.
    pub fn edge_between(&self, parent: Label, child: Label) -> Option<EdgeRef> {
        let c = self.node_by_label(child)?;
        let up = self.parent_edge(c)?;
        (self.label(self.edges[up.index()].parent) == parent).then_some(up)
    }

    /// Nodes in preorder (the order the depth-first walk first reaches them).
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(node) = stack.pop() {
            order.push(node);
            stack.extend(self.children(node).collect::<Vec<_>>().into_iter().rev());
        }
        order
    }

    /// Edges in the order the depth-first walk descends along them.
    pub fn edges_first_descent(&self) -> Vec<EdgeRef> {
        self.preorder()
            .into_iter()
            .filter_map(|v| self.parent_edge(v))
            .collect()
    }

    /// Labels of all vertices in the subtree rooted at `node`.
    pub fn subtree_labels(&self, node: NodeId) -> Vec<Label> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(v) = stack.pop() {
            out.push(self.label(v));
            stack.extend(self.children(v));
        }
        out
    }

    /// Subtree minima for every node, indexed by `NodeId::index`.
    pub fn subtree_minima(&self) -> Vec<Label> {
        let mut minima: Vec<Label> = self.nodes.iter().map(|n| n.label).collect();
        for v in self.preorder().into_iter().rev() {
            if let Some(p) = self.parent(v) {
                if minima[v.index()] < minima[p.index()] {
                    minima[p.index()] = minima[v.index()];
                }
            }
        }
        minima
    }

    /// Smallest label in the subtree rooted at `node`.
    pub fn beta(&self, node: NodeId) -> Result<Label> {
        self.check_node(node)?;
        let mut min = self.label(node);
        let mut stack = vec![node];
        while let Some(v) = stack.pop() {
            min = min.min(self.label(v));
            stack.extend(self.children(v));
        }
        Ok(min)
    }

    /// Status of every edge, indexed by `EdgeRef::index`.
    ///
    /// An edge from `j` to its child `j_i` is improper when the subtree
    /// minimum below `j_i` is smaller than both `j` and every subtree
    /// minimum of the siblings to the right of `j_i`.
    pub fn classify_all(&self) -> Vec<EdgeStatus> {
        let minima = self.subtree_minima();
        let mut status = vec![EdgeStatus::Proper; self.edges.len()];
        for node in &self.nodes {
            let mut bound = node.label;
            for &e in node.children.iter().rev() {
                let child_min = minima[self.edges[e.index()].child.index()];
                if child_min < bound {
                    status[e.index()] = EdgeStatus::Improper;
                    bound = child_min;
                }
            }
        }
        status
    }

    pub fn classify_edge(&self, edge: EdgeRef) -> Result<EdgeStatus> {
        self.check_edge(edge)?;
        let (j, child) = self.endpoints(edge);
        let siblings = self.child_edges(j);
        let at = siblings
            .iter()
            .position(|&s| s == edge)
            .expect("edge listed at parent");
        let mut bound = self.label(j);
        for &s in &siblings[at + 1..] {
            bound = bound.min(self.beta(self.edges[s.index()].child)?);
        }
        let status = if self.beta(child)? < bound {
            EdgeStatus::Improper
        } else {
            EdgeStatus::Proper
        };
        debug_assert_eq!(Ok(status), self.classify_edge_by_min_sets(edge));
        Ok(status)
    }

    /// Classifies by comparing the minimum of the vertex set hanging below
    /// the edge (child endpoint plus its descendants) with the minimum of
    /// the parent endpoint together with the right-sibling subtrees.
    pub fn classify_edge_by_min_sets(&self, edge: EdgeRef) -> Result<EdgeStatus> {
        self.check_edge(edge)?;
        let (parent, child) = self.endpoints(edge);
        let below = self.subtree_labels(child);

        let siblings = self.child_edges(parent);
        let at = siblings
            .iter()
            .position(|&s| s == edge)
            .expect("edge listed at parent");
        let mut beside = vec![self.label(parent)];
        for &s in &siblings[at + 1..] {
            beside.extend(self.subtree_labels(self.edges[s.index()].child));
        }

        let min_below = below.into_iter().min().expect("nonempty");
        let min_beside = beside.into_iter().min().expect("nonempty");
        Ok(if min_below > min_beside {
            EdgeStatus::Proper
        } else {
            EdgeStatus::Improper
        })
    }

    /// Improper edges in first-descent depth-first order.
    pub fn improper_edges(&self) -> Vec<EdgeRef> {
        let status = self.classify_all();
        self.edges_first_descent()
            .into_iter()
            .filter(|e| status[e.index()] == EdgeStatus::Improper)
            .collect()
    }

    pub fn stats(&self) -> TreeStats {
        let impr = self
            .classify_all()
            .into_iter()
            .filter(|&s| s == EdgeStatus::Improper)
            .count();
        let deg_one = Label::new(1)
            .and_then(|one| self.node_by_label(one))
            .map_or(0, |v| self.degree(v));
        TreeStats {
            impr,
            prop: self.edge_count() - impr,
            root_label: self.root_label(),
            deg_one,
        }
    }

    pub fn is_increasing(&self) -> bool {
        self.edges
            .iter()
            .all(|e| self.label(e.parent) < self.label(e.child))
    }

    /// True iff the labels are exactly `1..=node_count`.
    pub fn has_standard_labels(&self) -> bool {
        let n = self.nodes.len();
        let mut seen = vec![false; n + 1];
        for node in &self.nodes {
            let l = node.label.get() as usize;
            if l > n || seen[l] {
                return false;
            }
            seen[l] = true;
        }
        true
    }

    /// Equality of labels, shape and tags, ignoring edge identities.
    pub fn same_labeled_shape(&self, other: &PlaneTree) -> bool {
        self.structural_eq(other, false)
    }

    fn structural_eq(&self, other: &PlaneTree, with_ids: bool) -> bool {
        if self.nodes.len() != other.nodes.len() {
            return false;
        }
        let mut stack = vec![(self.root, other.root)];
        while let Some((a, b)) = stack.pop() {
            if self.label(a) != other.label(b) {
                return false;
            }
            let (ca, cb) = (self.child_edges(a), other.child_edges(b));
            if ca.len() != cb.len() {
                return false;
            }
            for (&ea, &eb) in ca.iter().zip(cb) {
                if with_ids && ea != eb {
                    return false;
                }
                let (xa, xb) = (&self.edges[ea.index()], &other.edges[eb.index()]);
                if xa.tag != xb.tag {
                    return false;
                }
                stack.push((xa.child, xb.child));
            }
        }
        true
    }
}

impl PartialEq for PlaneTree {
    fn eq(&self, other: &PlaneTree) -> bool {
        self.structural_eq(other, true)
    }
}

impl Eq for PlaneTree {}
