//! Free tree counts against labelled brute force and Otter's formula.

mod common;

use std::collections::HashSet;

use common::{otter, prufer_count, shape, Rooted};
use minbraid::analysis::{free_trees, tree_counts, FreeTree};

#[test]
fn totals_match_prufer_enumeration() {
    let counts = tree_counts(8);
    for n in 1..=8 {
        assert_eq!(counts.total[n - 1], prufer_count(n), "n={n}");
    }
}

#[test]
fn totals_match_otter() {
    let expected = otter(12);
    for n in 1..=12 {
        assert_eq!(free_trees(n).len() as u64, expected[n - 1], "n={n}");
    }
}

#[test]
fn trees_are_pairwise_distinct() {
    for n in 1..=10 {
        let trees = free_trees(n);
        let shapes: HashSet<Rooted> = trees.iter().map(|t| shape(t.vertices(), t.edges())).collect();
        assert_eq!(shapes.len(), trees.len(), "n={n}");
        assert!(trees.iter().all(|t: &FreeTree| t.edges().len() + 1 == n));
    }
}
