use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use plane_trees::enumerate::*;

fn count(it: impl Iterator) -> BigUint {
    BigUint::from(it.count())
}

#[test]
fn cardinalities() {
    for n in 0..=6 {
        let f = FamilyCount::new(n);
        assert_eq!(count(labeled_trees(n)), f.p_count, "P_{n}");
        assert_eq!(f.p_count, (BigUint::from(1u32) << n) * &f.i_count);
        assert_eq!(count(rooted_labeled_trees(n)), f.o_count, "O_{n}");
    }
    for n in 0..=7 {
        assert_eq!(count(increasing_trees(n)), double_factorial_odd(n), "I_{n}");
    }
}

#[test]
fn families_as_sets() {
    for n in 0..=5 {
        let all: Vec<String> = labeled_trees(n).map(|t| t.to_string()).collect();
        let p: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(p.len(), all.len(), "duplicates in P_{n}");

        let by_filter: BTreeSet<_> = labeled_trees(n)
            .filter(|t| t.is_increasing())
            .map(|t| t.to_string())
            .collect();
        let inc: Vec<_> = increasing_trees(n).map(|t| t.to_string()).collect();
        assert_eq!(inc.iter().cloned().collect::<BTreeSet<_>>(), by_filter);
        assert_eq!(by_filter.len(), inc.len(), "duplicates in I_{n}");

        let rooted_filter: BTreeSet<_> = labeled_trees(n)
            .filter(|t| t.root_label().get() == 1)
            .map(|t| t.to_string())
            .collect();
        let rooted: Vec<_> = rooted_labeled_trees(n).map(|t| t.to_string()).collect();
        assert_eq!(
            rooted.iter().cloned().collect::<BTreeSet<_>>(),
            rooted_filter
        );
        assert_eq!(rooted_filter.len(), rooted.len(), "duplicates in O_{n}");
    }
}

#[test]
fn every_increasing_tree_has_the_right_slot_count() {
    for m in 0..=5 {
        for t in increasing_trees(m) {
            assert_eq!(insertion_slots(&t).len(), 2 * m + 1);
        }
    }
}

#[test]
fn root_degree_counts_match_enumeration() {
    for n in 0..=6 {
        let mut hist = vec![0u64; n + 1];
        for t in increasing_trees(n) {
            hist[t.degree(t.root())] += 1;
        }
        let expected: Vec<BigUint> = hist.into_iter().map(BigUint::from).collect();
        assert_eq!(root_degree_counts(n), expected);
    }
}

fn frequencies(samples: impl Iterator<Item = String>) -> (usize, HashMap<String, usize>) {
    let mut hist = HashMap::new();
    let mut total = 0;
    for s in samples {
        *hist.entry(s).or_default() += 1;
        total += 1;
    }
    (total, hist)
}

#[test]
fn increasing_sampler_is_uniform() {
    let (total, hist) = frequencies((0..100_000u64).map(|s| sample_increasing(2, s).to_string()));
    assert_eq!(hist.len(), 3);
    for (tree, c) in hist {
        let f = c as f64 / total as f64;
        assert!((f - 1.0 / 3.0).abs() <= 0.01, "{tree}: {f}");
    }
}

#[test]
fn labeled_sampler_is_uniform() {
    let (total, hist) = frequencies((0..100_000u64).map(|s| sample_labeled(1, s).to_string()));
    assert_eq!(hist.len(), 2);
    for (tree, c) in &hist {
        let f = *c as f64 / total as f64;
        assert!((f - 0.5).abs() <= 0.01, "{tree}: {f}");
    }

    // all 12 trees of P_2 and all 5 shapes of size 3 show up evenly
    let (total, hist) = frequencies((0..120_000u64).map(|s| sample_labeled(2, s).to_string()));
    assert_eq!(hist.len(), 12);
    for (tree, c) in &hist {
        let f = *c as f64 / total as f64;
        assert!((f - 1.0 / 12.0).abs() <= 0.01, "{tree}: {f}");
    }
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
    let (total, hist) =
        frequencies((0..50_000).map(|_| format!("{:?}", sample_shape(3, &mut rng))));
    assert_eq!(hist.len(), 5);
    for (shape, c) in &hist {
        let f = *c as f64 / total as f64;
        assert!((f - 0.2).abs() <= 0.01, "{shape}: {f}");
    }
}
