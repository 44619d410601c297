//! Stirling permutations of the multiset `{1, 1, 2, 2, ..., n, n}` and the
//! depth-first walk that matches them with increasing plane trees.
//!
//! Walking an increasing tree, every edge into a child labeled `c` writes the
//! value `c - 1` once on the way down and once on the way back up. Blocks
//! of the permutation correspond to children of the root.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::tree::{Label, PlaneTree};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StirlingPerm(Vec<u32>);

/// True iff `seq` uses each of `1..=n` exactly twice and every entry
/// strictly between the two copies of `i` is larger than `i`.
pub fn is_stirling(seq: &[u32]) -> bool {
    validate(seq).is_ok()
}

fn validate(seq: &[u32]) -> Result<()> {
    let invalid = |msg: String| Err(Error::InvalidStirling(msg));
    if !seq.len().is_multiple_of(2) {
        return invalid(format!("odd length {}", seq.len()));
    }
    let n = seq.len() / 2;
    let mut count = vec![0u8; n + 1];
    for &v in seq {
        if v == 0 || v as usize > n {
            return invalid(format!("value {v} outside 1..={n}"));
        }
        count[v as usize] += 1;
        if count[v as usize] > 2 {
            return invalid(format!("value {v} occurs more than twice"));
        }
    }
    // Each value is opened by its first copy and closed by its second; the
    // property holds iff everything opened after v is closed before v is,
    // and nothing smaller is opened in between.
    let mut open: Vec<u32> = Vec::new();
    let mut seen = vec![false; n + 1];
    for &v in seq {
        if !seen[v as usize] {
            if open.last().is_some_and(|&top| top > v) {
                return invalid(format!(
                    "{v} appears inside a pair of {}",
                    open.last().unwrap()
                ));
            }
            seen[v as usize] = true;
            open.push(v);
        } else if open.last() == Some(&v) {
            open.pop();
        } else {
            let top = open.last().expect("v is still open");
            return invalid(format!("the copies of {top} enclose the smaller value {v}"));
        }
    }
    Ok(())
}

impl StirlingPerm {
    pub fn new(seq: Vec<u32>) -> Result<StirlingPerm> {
        validate(&seq)?;
        Ok(StirlingPerm(seq))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `n` for a permutation of `[n]_2`.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    /// Maximal blocks as index ranges. A block ends wherever every value
    /// seen so far has appeared twice.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut blocks = Vec::new();
        let mut seen = vec![false; self.n() + 1];
        let mut unmatched = 0usize;
        let mut start = 0;
        for (i, &v) in self.0.iter().enumerate() {
            if seen[v as usize] {
                unmatched -= 1;
            } else {
                seen[v as usize] = true;
                unmatched += 1;
            }
            if unmatched == 0 {
                blocks.push(start..i + 1);
                start = i + 1;
            }
        }
        blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks().len()
    }

    /// Renders the blocks as `[a b ...][c ...]`.
    pub fn block_string(&self) -> String {
        self.blocks()
            .into_iter()
            .map(|r| format!("[{}]", join(&self.0[r])))
            .collect()
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for StirlingPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for StirlingPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<StirlingPerm> {
        let seq = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::InvalidStirling(format!("not a number: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        StirlingPerm::new(seq)
    }
}

/// Depth-first walk of an increasing tree labeled `1..=n+1`.
pub fn tree_to_stirling(tree: &PlaneTree) -> Result<StirlingPerm> {
    if !tree.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    if !tree.has_standard_labels() {
        return Err(Error::NotStandardLabels {
            expected_max: tree.node_count(),
        });
    }
    let mut seq = Vec::with_capacity(2 * tree.edge_count());
    let mut stack = vec![(tree.root(), 0usize)];
    while let Some((node, next)) = stack.last_mut() {
        let node = *node;
        match tree.children(node).nth(*next) {
            Some(child) => {
                *next += 1;
                seq.push(tree.label(child).get() - 1);
                stack.push((child, 0));
            }
            None => {
                stack.pop();
                if stack.is_empty() {
                    break;
                }
                seq.push(tree.label(node).get() - 1);
            }
        }
    }
    debug_assert!(is_stirling(&seq));
    Ok(StirlingPerm(seq))
}

/// Inverse of [`tree_to_stirling`]: the first copy of `v` opens a child
/// labeled `v + 1` under the current vertex, the second copy returns.
pub fn stirling_to_tree(perm: &StirlingPerm) -> PlaneTree {
    let label = |v: u32| Label::new(v).expect("nonzero");
    let mut tree = PlaneTree::single(label(1));
    let mut path = vec![tree.root()];
    let mut seen = vec![false; perm.n() + 1];
    for &v in perm.as_slice() {
        if seen[v as usize] {
            path.pop();
        } else {
            seen[v as usize] = true;
            let parent = *path.last().expect("walk stays below the root");
            let (_, child) = tree.push_child(parent, label(v + 1));
            path.push(child);
        }
    }
    tree
}

/// Every Stirling permutation of `[n]_2`, `(2n-1)!!` in total: the
/// permutation for code `c` inserts the pair `m m` into gap `c[m-1]` of the
/// one built so far.
pub struct StirlingPerms {
    code: Vec<usize>,
    done: bool,
}

pub fn enum_stirling(n: usize) -> StirlingPerms {
    StirlingPerms {
        code: vec![0; n],
        done: false,
    }
}

pub fn stirling_from_insertion_code(code: &[usize]) -> StirlingPerm {
    let mut seq = Vec::with_capacity(2 * code.len());
    for (m, &gap) in code.iter().enumerate() {
        let v = m as u32 + 1;
        seq.splice(gap..gap, [v, v]);
    }
    StirlingPerm(seq)
}

impl Iterator for StirlingPerms {
    type Item = StirlingPerm;

    fn next(&mut self) -> Option<StirlingPerm> {
        if self.done {
            return None;
        }
        let perm = stirling_from_insertion_code(&self.code);
        self.done = !crate::enumerate::advance_odometer(&mut self.code);
        Some(perm)
    }
}

/// Number of Stirling permutations of `[n]_2` with each block count.
pub fn block_table(n: usize) -> BTreeMap<usize, BigUint> {
    let mut table = BTreeMap::new();
    for perm in enum_stirling(n) {
        *table
            .entry(perm.block_count())
            .or_insert_with(BigUint::default) += 1u32;
    }
    table
}
