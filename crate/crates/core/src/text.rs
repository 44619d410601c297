//! Parenthesized text format for plane trees.
//!
//! ```text
//! Tree := Label [":" Tag] [ "(" Tree ("," Tree)* ")" ]
//! ```
//!
//! `Label` is a decimal integer >= 1 and `Tag` is one of `x`, `y`, `t`.
//! A tag annotates the edge from the parent to the node it follows, so the
//! root never carries one. Whitespace between tokens is ignored.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::{EdgeTag, Label, NodeId, PlaneTree};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    seen: HashSet<u32>,
    tagged: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn label(&mut self) -> Result<Label> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.syntax("expected a label");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value = match digits.parse::<u32>() {
            Ok(v) => v,
            Err(_) => {
                self.pos = start;
                return self.syntax("label out of range");
            }
        };
        let Some(label) = Label::new(value) else {
            self.pos = start;
            return self.syntax("labels must be at least 1");
        };
        if !self.seen.insert(value) {
            return Err(Error::DuplicateLabel {
                label: value,
                pos: start,
            });
        }
        Ok(label)
    }

    fn tag(&mut self) -> Result<Option<(EdgeTag, usize)>> {
        if self.peek() != Some(b':') {
            return Ok(None);
        }
        let at = self.pos;
        self.pos += 1;
        match self.peek().and_then(|c| EdgeTag::from_char(c as char)) {
            Some(tag) => {
                self.pos += 1;
                Ok(Some((tag, at)))
            }
            None => self.syntax("expected edge tag x, y or t"),
        }
    }

    /// Reads one `Label [":" Tag]` and attaches it below `parent`.
    fn node(&mut self, tree: &mut Option<PlaneTree>, parent: Option<NodeId>) -> Result<NodeId> {
        let label = self.label()?;
        let tag = self.tag()?;
        match (tree.as_mut(), parent) {
            (None, _) => {
                if let Some((_, at)) = tag {
                    return Err(Error::TagOnRoot { pos: at });
                }
                let t = PlaneTree::single(label);
                let root = t.root();
                *tree = Some(t);
                Ok(root)
            }
            (Some(t), Some(p)) => {
                let (edge, node) = t.push_child(p, label);
                if let Some((tag, _)) = tag {
                    t.set_tag(edge, Some(tag));
                    self.tagged += 1;
                }
                Ok(node)
            }
            (Some(_), None) => unreachable!("only the first node lacks a parent"),
        }
    }

    fn tree(mut self) -> Result<PlaneTree> {
        let mut tree = None;
        let mut current = self.node(&mut tree, None)?;
        let mut open: Vec<NodeId> = Vec::new();
        'outer: loop {
            if self.peek() == Some(b'(') {
                self.pos += 1;
                open.push(current);
                current = self.node(&mut tree, Some(current))?;
                continue;
            }
            loop {
                let Some(&parent) = open.last() else {
                    if self.peek().is_some() {
                        return self.syntax("unexpected trailing input");
                    }
                    break 'outer;
                };
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        current = self.node(&mut tree, Some(parent))?;
                        continue 'outer;
                    }
                    Some(b')') => {
                        self.pos += 1;
                        open.pop();
                    }
                    Some(_) => return self.syntax("expected ',' or ')'"),
                    None => return self.syntax("unexpected end of input"),
                }
            }
        }
        let tree = tree.expect("root parsed");
        if self.tagged != 0 && self.tagged != tree.edge_count() {
            return Err(Error::PartialTagging);
        }
        Ok(tree)
    }
}

/// Parses the text format. Edge ids are assigned in first-descent order.
pub fn parse_tree(text: &str) -> Result<PlaneTree> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        seen: HashSet::new(),
        tagged: 0,
    }
    .tree()
}

pub fn render_tree(tree: &PlaneTree) -> String {
    tree.to_string()
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<PlaneTree> {
        parse_tree(s)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_node = |f: &mut fmt::Formatter<'_>, node: NodeId| -> fmt::Result {
            write!(f, "{}", self.label(node))?;
            if let Some(tag) = self.parent_edge(node).and_then(|e| self.tag(e)) {
                write!(f, ":{}", tag.as_char())?;
            }
            Ok(())
        };
        write_node(f, self.root())?;
        let mut stack = vec![(self.root(), 0usize)];
        while let Some((node, next)) = stack.last_mut() {
            let children = self.child_edges(*node);
            if *next == children.len() {
                if !children.is_empty() {
                    f.write_str(")")?;
                }
                stack.pop();
                continue;
            }
            f.write_str(if *next == 0 { "(" } else { "," })?;
            let (_, child) = self.endpoints(children[*next]);
            *next += 1;
            write_node(f, child)?;
            stack.push((child, 0));
        }
        Ok(())
    }
}
