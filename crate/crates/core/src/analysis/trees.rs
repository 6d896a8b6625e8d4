use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::braid::{compare_minimum, BraidWord, Generator, Sign};

pub const MAX_TREE_VERTICES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree on {n} vertices needs {} edges, got {edges}", n - 1)]
    EdgeCount { n: usize, edges: usize },
    #[error("edge ({0}, {1}) is out of range or a loop")]
    BadEdge(usize, usize),
    #[error("edges do not connect all vertices")]
    Disconnected,
    #[error("trees need at least one vertex")]
    Empty,
}

/// A free tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeTree {
    n: usize,
    edges: Vec<(usize, usize)>,
    canonical: String,
}

impl FreeTree {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<FreeTree, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount { n, edges: edges.len() });
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &edges {
            if a >= n || b >= n || a == b {
                return Err(TreeError::BadEdge(a, b));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(TreeError::Disconnected);
            }
            parent[ra] = rb;
        }
        let mut t = FreeTree { n, edges, canonical: String::new() };
        t.canonical = canonical_form(&t.adjacency());
        Ok(t)
    }

    pub fn path(n: usize) -> FreeTree {
        FreeTree::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path")
    }

    pub fn star(n: usize) -> FreeTree {
        FreeTree::new(n, (1..n).map(|i| (0, i)).collect()).expect("star")
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Center-rooted parenthesized encoding; equal exactly for isomorphic
    /// trees.
    pub fn canonical(&self) -> &str {
        &self.canonical
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| encode(adj, u, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
}

fn canonical_form(adj: &[Vec<usize>]) -> String {
    centers(adj).into_iter().map(|c| encode(adj, c, usize::MAX)).min().expect("a center")
}

/// One tree per isomorphism class, sorted by canonical form.
pub fn free_trees(n: usize) -> Vec<FreeTree> {
    assert!((1..=MAX_TREE_VERTICES).contains(&n), "tree size out of range");
    let mut level: BTreeMap<String, FreeTree> = BTreeMap::new();
    let one = FreeTree::new(1, Vec::new()).expect("single vertex");
    level.insert(one.canonical.clone(), one);
    for m in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..m {
                let mut edges = t.edges.clone();
                edges.push((v, m));
                let grown = FreeTree::new(m + 1, edges).expect("leaf added");
                next.entry(grown.canonical.clone()).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// False when some vertex has three or more branches containing a path of
/// two edges from it; such trees have nonalternating minimum braids.
pub fn tree_is_alternating(tree: &FreeTree) -> bool {
    let adj = tree.adjacency();
    adj.iter().all(|nb| nb.iter().filter(|&&u| adj[u].len() >= 2).count() < 3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCounts {
    pub total: Vec<usize>,
    pub alternating: Vec<usize>,
    pub nonalternating: Vec<usize>,
}

/// Counts for `n = 1..=max_n`.
pub fn tree_counts(max_n: usize) -> TreeCounts {
    let mut c = TreeCounts { total: Vec::new(), alternating: Vec::new(), nonalternating: Vec::new() };
    for n in 1..=max_n {
        let trees = free_trees(n);
        let alt = trees.iter().filter(|t| tree_is_alternating(t)).count();
        c.total.push(trees.len());
        c.alternating.push(alt);
        c.nonalternating.push(trees.len() - alt);
    }
    c
}

fn alternating_sign(index: usize) -> Sign {
    if index % 2 == 1 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

struct Layout<'a> {
    adj: &'a [Vec<usize>],
    size: Vec<usize>,
    gens: Vec<Generator>,
}

impl Layout<'_> {
    fn sizes(&mut self, v: usize, parent: usize) -> usize {
        let s = 1 + self.adj[v].iter().filter(|&&u| u != parent).map(|&u| self.sizes(u, v)).sum::<usize>();
        self.size[v] = s;
        s
    }

    fn children(&self, v: usize, parent: usize) -> Vec<usize> {
        let mut kids: Vec<usize> = self.adj[v].iter().copied().filter(|&u| u != parent).collect();
        kids.sort_by_key(|&u| (self.size[u], u));
        kids
    }

    fn push(&mut self, index: usize, sign: Sign) {
        self.gens.push(Generator { index: index as u8, sign });
    }

    /// `v` sits at 1-based position `p`; its descendants fill the positions
    /// after it in child order. Emits a pure braid clasping `v` to each child.
    fn emit(&mut self, v: usize, parent: usize, p: usize) {
        let kids = self.children(v, parent);
        let Some((&last, rest)) = kids.split_last() else {
            return;
        };
        let mut cur = p;
        let mut back: Vec<(usize, Sign)> = Vec::new();
        for &c in rest {
            self.emit(c, v, cur + 1);
            // pass over the child (first half of the clasp) ...
            let s = alternating_sign(cur);
            self.push(cur, s);
            back.push((cur, s));
            // ... and over its descendants, to be undone on the way back
            for k in 1..self.size[c] {
                let s = alternating_sign(cur + k);
                self.push(cur + k, s);
                back.push((cur + k, s.flip()));
            }
            cur += self.size[c];
        }
        let s = alternating_sign(cur);
        self.push(cur, s);
        self.push(cur, s);
        self.emit(last, v, cur + 1);
        for (i, s) in back.into_iter().rev() {
            self.push(i, s);
        }
    }
}

/// A braid whose closure is the tree link: one unknotted component per
/// vertex, clasped to its neighbours. Every leaf is tried as the root and the
/// least word in the minimum-braid order is returned.
pub fn tree_link_braid(tree: &FreeTree) -> BraidWord {
    let n = tree.vertices();
    if n == 1 {
        return BraidWord::unknot();
    }
    let adj = tree.adjacency();
    (0..n)
        .filter(|&v| adj[v].len() == 1)
        .map(|root| {
            let mut l = Layout { adj: &adj, size: vec![0; n], gens: Vec::new() };
            l.sizes(root, usize::MAX);
            l.emit(root, usize::MAX, 1);
            BraidWord::new(n, l.gens).expect("indices below n")
        })
        .min_by(compare_minimum)
        .expect("trees with two vertices have leaves")
}
