//! Studies built on top of the catalog.

mod columns;
mod rrp;
mod sums;
mod trees;
mod unknot;

pub use columns::{
    build_column, column_pair, column_rows, column_type, hr_residual, prepend_a, Cell, Column, ColumnError,
    ColumnRows, HrRow, LinkNames, Minimality, Star, StarKind,
};
pub use rrp::{french_horn, is_rrp, rrp_search};
pub use sums::{stirling1, stirling2, weighted_sum};
pub use trees::{free_trees, tree_counts, tree_is_alternating, tree_link_braid, FreeTree, MAX_TREE_VERTICES, TreeCounts, TreeError};
pub use unknot::{unknotting_number, Unknotting};

use crate::braid::{BraidWord, Generator};

/// Cancels adjacent inverse pairs, cyclically when `cyclic` is set.
pub(crate) fn free_reduce(gens: &[Generator], cyclic: bool) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(gens.len());
    for &g in gens {
        if out.last() == Some(&g.inverse()) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    if cyclic {
        let mut lo = 0;
        while out.len() - lo >= 2 && out[lo] == out[out.len() - 1].inverse() {
            out.pop();
            lo += 1;
        }
        out.drain(..lo);
    }
    out
}

/// Words reachable by cyclic rotation and far commutation, in sorted order.
pub(crate) fn cyclic_class(word: &BraidWord) -> Vec<Vec<Generator>> {
    use std::collections::BTreeSet;
    let start = word.gens().to_vec();
    let mut seen = BTreeSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(w) = queue.pop() {
        let n = w.len();
        let mut next = Vec::new();
        if n > 1 {
            let mut r = w.clone();
            r.rotate_left(1);
            next.push(r);
        }
        for k in 0..n.saturating_sub(1) {
            if w[k].index.abs_diff(w[k + 1].index) >= 2 {
                let mut s = w.clone();
                s.swap(k, k + 1);
                next.push(s);
            }
        }
        for v in next {
            if seen.insert(v.clone()) {
                queue.push(v);
            }
        }
    }
    seen.into_iter().collect()
}
