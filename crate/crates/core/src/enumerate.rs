//! Counting formulas, exhaustive iterators and uniform samplers for the
//! families of labeled plane trees (any root, root 1) and increasing plane
//! trees.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tree::{Label, NodeId, PlaneTree};

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

pub fn catalan(n: usize) -> BigUint {
    num_integer::binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1)
}

/// `(2n-1)!! = 1 * 3 * ... * (2n-1)`, which is 1 for `n = 0`.
pub fn double_factorial_odd(n: usize) -> BigUint {
    (1..=n as u64).map(|k| BigUint::from(2 * k - 1)).product()
}

/// Family sizes for trees with `n` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCount {
    pub n: usize,
    /// Labeled plane trees, `(n+1)! C_n`.
    pub p_count: BigUint,
    /// Labeled plane trees with root 1, `n! C_n`.
    pub o_count: BigUint,
    /// Increasing plane trees, `(2n-1)!!`.
    pub i_count: BigUint,
    pub catalan: BigUint,
}

impl FamilyCount {
    pub fn new(n: usize) -> FamilyCount {
        let c = catalan(n);
        FamilyCount {
            n,
            p_count: factorial(n + 1) * &c,
            o_count: factorial(n) * &c,
            i_count: double_factorial_odd(n),
            catalan: c,
        }
    }
}

/// Number of increasing plane trees with `n` edges whose root has degree
/// `r`, for `r = 0..=n`.
///
/// Computed from the insertion construction. A tree with `m` edges and root
/// degree `r` has `2m + 1` slots; the `r + 1` slots under the root raise the
/// root degree and the others keep it.
pub fn root_degree_counts(n: usize) -> Vec<BigUint> {
    let mut counts = vec![BigUint::one()];
    for m in 0..n {
        let mut next = vec![BigUint::default(); m + 2];
        for (r, c) in counts.iter().enumerate() {
            next[r + 1] += c * BigUint::from(r + 1);
            next[r] += c * BigUint::from(2 * m - r);
        }
        counts = next;
    }
    counts
}

/// An unlabeled plane tree as a Dyck word: `true` descends to a new
/// child, `false` returns to the parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape(pub Vec<bool>);

impl Shape {
    pub fn edge_count(&self) -> usize {
        self.0.len() / 2
    }

    pub fn with_labels(&self, labels: &[Label]) -> PlaneTree {
        PlaneTree::from_dyck(&self.0, labels)
    }
}

/// Streams the `C_n` plane tree shapes with `n` edges.
///
/// A shape is its first child's subtree (with `k` edges) followed by the
/// remaining tree (with `n - 1 - k` edges); `k` runs from `n - 1` down to 0,
/// so the path comes first.
pub struct PlaneShapes {
    n: usize,
    k: usize,
    first: Option<Box<PlaneShapes>>,
    first_word: Option<Vec<bool>>,
    rest: Option<Box<PlaneShapes>>,
    done: bool,
}

pub fn plane_shapes(n: usize) -> PlaneShapes {
    PlaneShapes {
        n,
        k: n.saturating_sub(1),
        first: None,
        first_word: None,
        rest: None,
        done: false,
    }
}

impl Iterator for PlaneShapes {
    type Item = Shape;

    fn next(&mut self) -> Option<Shape> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Shape(Vec::new()));
        }
        loop {
            if self.first_word.is_none() {
                let mut first = Box::new(plane_shapes(self.k));
                self.first_word = first.next().map(|s| s.0);
                self.first = Some(first);
                self.rest = Some(Box::new(plane_shapes(self.n - 1 - self.k)));
            }
            let first_word = self.first_word.as_ref().expect("set above");
            if let Some(rest) = self.rest.as_mut().and_then(|r| r.next()) {
                let mut word = Vec::with_capacity(2 * self.n);
                word.push(true);
                word.extend_from_slice(first_word);
                word.push(false);
                word.extend(rest.0);
                return Some(Shape(word));
            }
            self.first_word = self.first.as_mut().and_then(|f| f.next()).map(|s| s.0);
            if self.first_word.is_some() {
                self.rest = Some(Box::new(plane_shapes(self.n - 1 - self.k)));
                continue;
            }
            if self.k == 0 {
                self.done = true;
                return None;
            }
            self.k -= 1;
        }
    }
}

fn labels(values: impl IntoIterator<Item = usize>) -> Vec<Label> {
    values
        .into_iter()
        .map(|v| Label::new(v as u32).expect("labels start at 1"))
        .collect()
}

/// All bijective labelings of `shape` by `1..=n+1` in lexicographic order of
/// the preorder label sequence. With `root_one` the root is pinned to 1.
pub fn labelings(shape: Shape, root_one: bool) -> impl Iterator<Item = PlaneTree> {
    let n = shape.edge_count();
    let perms: Box<dyn Iterator<Item = Vec<usize>>> = if root_one {
        Box::new((2..=n + 1).permutations(n).map(|mut p| {
            p.insert(0, 1);
            p
        }))
    } else {
        Box::new((1..=n + 1).permutations(n + 1))
    };
    perms.map(move |p| shape.with_labels(&labels(p)))
}

/// Every labeled plane tree with `n` edges, `(n+1)! C_n` in total.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = PlaneTree> {
    plane_shapes(n).flat_map(|s| labelings(s, false))
}

/// Every labeled plane tree with `n` edges and root 1, `n! C_n` in total.
pub fn rooted_labeled_trees(n: usize) -> impl Iterator<Item = PlaneTree> {
    plane_shapes(n).flat_map(|s| labelings(s, true))
}

/// Places where a new leaf can be attached: `(vertex, child position)`.
///
/// A vertex with `d` children offers `d + 1` positions, so a tree with `m`
/// edges has `2m + 1` slots. Vertices are listed in reverse preorder and
/// positions from right to left.
pub fn insertion_slots(tree: &PlaneTree) -> Vec<(NodeId, usize)> {
    let mut slots = Vec::with_capacity(2 * tree.edge_count() + 1);
    for v in tree.preorder().into_iter().rev() {
        for p in (0..=tree.degree(v)).rev() {
            slots.push((v, p));
        }
    }
    slots
}

/// Builds the increasing tree whose `m`-th insertion (of label `m + 1`)
/// used slot `code[m - 1]`.
pub fn tree_from_insertion_code(code: &[usize]) -> PlaneTree {
    let mut tree = PlaneTree::single(Label::new(1).expect("nonzero"));
    for (m, &slot) in code.iter().enumerate() {
        let slots = insertion_slots(&tree);
        let (v, p) = slots[slot];
        tree.insert_child(v, p, Label::new(m as u32 + 2).expect("nonzero"));
    }
    tree
}

/// Streams the `(2n-1)!!` increasing plane trees with `n` edges via the
/// insertion construction.
pub struct IncreasingTrees {
    code: Vec<usize>,
    done: bool,
}

pub fn increasing_trees(n: usize) -> IncreasingTrees {
    IncreasingTrees {
        code: vec![0; n],
        done: false,
    }
}

impl Iterator for IncreasingTrees {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        if self.done {
            return None;
        }
        let tree = tree_from_insertion_code(&self.code);
        self.done = !advance_odometer(&mut self.code);
        Some(tree)
    }
}

/// Advances a mixed-radix counter where digit `m` (0-based) runs over
/// `0..2m+1`. Returns false once it wraps around.
pub(crate) fn advance_odometer(code: &mut [usize]) -> bool {
    for m in (0..code.len()).rev() {
        code[m] += 1;
        if code[m] < 2 * m + 1 {
            return true;
        }
        code[m] = 0;
    }
    false
}

/// Uniform random plane tree shape: a shuffled sequence of `n` up- and
/// `n + 1` down-steps rotated by the cycle lemma.
pub fn sample_shape<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Shape {
    let mut steps = vec![true; n];
    steps.extend(std::iter::repeat_n(false, n + 1));
    steps.shuffle(rng);

    let (mut height, mut lowest, mut at) = (0i64, 0i64, 0usize);
    for (i, &up) in steps.iter().enumerate() {
        height += if up { 1 } else { -1 };
        if height < lowest {
            lowest = height;
            at = i;
        }
    }
    steps.rotate_left(at + 1);
    let last = steps.pop();
    debug_assert_eq!(last, Some(false));
    Shape(steps)
}

pub fn sample_labeled_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PlaneTree {
    let shape = sample_shape(n, rng);
    let mut values: Vec<usize> = (1..=n + 1).collect();
    values.shuffle(rng);
    shape.with_labels(&labels(values))
}

pub fn sample_increasing_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PlaneTree {
    let mut tree = PlaneTree::single(Label::new(1).expect("nonzero"));
    for m in 0..n {
        let slots = insertion_slots(&tree);
        let (v, p) = slots[rng.gen_range(0..slots.len())];
        tree.insert_child(v, p, Label::new(m as u32 + 2).expect("nonzero"));
    }
    tree
}

/// Uniform sample from the labeled plane trees with `n` edges.
pub fn sample_labeled(n: usize, seed: u64) -> PlaneTree {
    sample_labeled_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Uniform sample from the increasing plane trees with `n` edges.
pub fn sample_increasing(n: usize, seed: u64) -> PlaneTree {
    sample_increasing_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}
