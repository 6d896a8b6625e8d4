//! Braid universes and sign assignments in the canonical global order.
//!
//! Words are produced ordered by crossings, strands, universe and binary
//! code, so the first word met for a link is its minimum braid.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::braid::{min_orientation, BraidUniverse, BraidWord, Generator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompositeHint {
    Composite,
    Noncomposite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseClass {
    pub universe: BraidUniverse,
    pub components: usize,
    pub composite_hint: CompositeHint,
}

/// Filter bookkeeping for one `(s, c)` slice.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterStats {
    /// `(s-1)^c`, every index sequence.
    pub raw: u128,
    /// Sequences starting with 1.
    pub after_first: u128,
    /// Sequences passing the strand-usage and orientation filters.
    pub after_orientation: u64,
    /// Final survivors after the commutation filter.
    pub survivors: u64,
}

/// Crossing usage check; `counts[i]` is the number of crossings with index
/// `i + 1`. An index used once is a nugatory crossing, so every index must
/// occur at least twice.
fn strand_usage_ok(counts: &[usize]) -> bool {
    counts.iter().all(|&n| n >= 2)
}

/// Whether some orientation variant starting inside the prefix is already
/// smaller than the prefix on their known overlap.
fn prefix_dominated(p: &[u8], s: u8) -> bool {
    let n = p.len();
    for r in 0..n {
        for kind in 0..4 {
            if kind == 0 && r == 0 {
                continue;
            }
            let backward = kind & 1 == 1;
            let flip = kind >= 2;
            let known = if backward { r + 1 } else { n - r };
            for k in 0..known {
                let src = if backward { p[r - k] } else { p[r + k] };
                let v = if flip { s - src } else { src };
                if v != p[k] {
                    if v < p[k] {
                        return true;
                    }
                    break;
                }
            }
        }
    }
    false
}

/// The commutation filter: no sequence reachable by swapping cyclically
/// adjacent far-apart indices has a smaller minimum orientation.
fn commutation_minimal(u: &[u8], strands: usize) -> bool {
    let c = u.len();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
    seen.insert(u.to_vec());
    queue.push_back(u.to_vec());
    while let Some(v) = queue.pop_front() {
        for p in 0..c {
            let q = (p + 1) % c;
            if p == q || v[p].abs_diff(v[q]) <= 1 {
                continue;
            }
            let mut next = v.clone();
            next.swap(p, q);
            let canon = min_orientation(strands, &next);
            if canon.as_slice() < u {
                return false;
            }
            if seen.insert(canon.clone()) {
                queue.push_back(canon);
            }
        }
    }
    true
}

struct UniverseSearch {
    s: usize,
    c: usize,
    prefix: Vec<u8>,
    counts: Vec<usize>,
    out: Vec<BraidUniverse>,
    after_orientation: u64,
}

impl UniverseSearch {
    fn feasible(&self) -> bool {
        let remaining = self.c - self.prefix.len();
        let m = self.s - 1;
        let need: usize = self.counts[..m].iter().map(|&n| 2usize.saturating_sub(n)).sum();
        need <= remaining
    }

    fn dfs(&mut self) {
        if !self.feasible() || prefix_dominated(&self.prefix, self.s as u8) {
            return;
        }
        if self.prefix.len() == self.c {
            if !strand_usage_ok(&self.counts) || min_orientation(self.s, &self.prefix) != self.prefix {
                return;
            }
            self.after_orientation += 1;
            if commutation_minimal(&self.prefix, self.s) {
                self.out.push(BraidUniverse::from_parts_unchecked(self.s, self.prefix.clone()));
            }
            return;
        }
        for i in 1..self.s as u8 {
            self.prefix.push(i);
            self.counts[i as usize - 1] += 1;
            self.dfs();
            self.counts[i as usize - 1] -= 1;
            self.prefix.pop();
        }
    }
}

/// Filtered universes on `s` strands with `c` crossings, in lexicographic order.
pub fn universes(s: usize, c: usize) -> Vec<BraidUniverse> {
    universes_with_stats(s, c).0
}

pub fn universes_with_stats(s: usize, c: usize) -> (Vec<BraidUniverse>, FilterStats) {
    assert!(s >= 2 && c >= 1);
    let raw = ((s - 1) as u128).pow(c as u32);
    let after_first = ((s - 1) as u128).pow(c as u32 - 1);
    let mut search = UniverseSearch {
        s,
        c,
        prefix: vec![1],
        counts: vec![0; s - 1],
        out: Vec::new(),
        after_orientation: 0,
    };
    search.counts[0] = 1;
    search.dfs();
    let stats = FilterStats {
        raw,
        after_first,
        after_orientation: search.after_orientation,
        survivors: search.out.len() as u64,
    };
    (search.out, stats)
}

/// Component count and the connected-sum hint: composite when some cyclic
/// rotation splits as a block on indices below `k` followed by a block on
/// indices `k` and above.
pub fn classify(u: &BraidUniverse) -> UniverseClass {
    let idx = u.indices();
    let c = idx.len();
    let mut composite = false;
    'outer: for k in 2..u.strands() as u8 {
        for r in 0..c {
            let rot: Vec<u8> = (0..c).map(|j| idx[(r + j) % c]).collect();
            let split = rot.iter().position(|&i| i >= k).unwrap_or(c);
            if split > 0 && split < c && rot[split..].iter().all(|&i| i >= k) {
                composite = true;
                break 'outer;
            }
        }
    }
    UniverseClass {
        universe: u.clone(),
        components: u.components(),
        composite_hint: if composite { CompositeHint::Composite } else { CompositeHint::Noncomposite },
    }
}

/// Maximal runs of equal indices, with the first and last runs merged when
/// they share an index. Returns the run id of every crossing.
fn cyclic_runs(idx: &[u8]) -> (Vec<usize>, usize) {
    let c = idx.len();
    let mut run = vec![0usize; c];
    let mut id = 0;
    for k in 1..c {
        if idx[k] != idx[k - 1] {
            id += 1;
        }
        run[k] = id;
    }
    let mut count = id + 1;
    if count > 1 && idx[0] == idx[c - 1] {
        let last = id;
        for r in run.iter_mut() {
            if *r == last {
                *r = 0;
            }
        }
        count -= 1;
    }
    (run, count)
}

/// A Reidemeister II reduction is available: two letters of the same index
/// and opposite sign become cyclically adjacent once far letters are
/// commuted out of the way.
pub fn has_cancelling_pair(word: &BraidWord) -> bool {
    let gens = word.gens();
    let c = gens.len();
    if c < 2 {
        return false;
    }
    let max = gens.iter().map(|g| g.index).max().unwrap();
    for i in 1..=max {
        let proj: Vec<Generator> = gens.iter().copied().filter(|g| g.index.abs_diff(i) <= 1).collect();
        let n = proj.len();
        if n < 2 {
            continue;
        }
        for k in 0..n {
            let (a, b) = (proj[k], proj[(k + 1) % n]);
            if a.index == i && b.index == i && a.sign != b.sign {
                return true;
            }
        }
    }
    false
}

/// Position map of orientation variant `(r, kind)`: letter `k` of the
/// variant comes from letter `source(k)` of the original.
fn variant_source(c: usize, r: usize, kind: u8, k: usize) -> usize {
    if kind & 1 == 0 {
        (r + k) % c
    } else {
        (r + c - k) % c
    }
}

/// Orientation variants mapping the universe onto itself.
fn automorphisms(u: &BraidUniverse) -> Vec<(usize, u8)> {
    let idx = u.indices();
    let c = idx.len();
    let s = u.strands() as u8;
    let mut out = Vec::new();
    for r in 0..c {
        for kind in 0..4u8 {
            if r == 0 && kind == 0 {
                continue;
            }
            let same = (0..c).all(|k| {
                let v = idx[variant_source(c, r, kind, k)];
                let v = if kind >= 2 { s - v } else { v };
                v == idx[k]
            });
            if same {
                out.push((r, kind));
            }
        }
    }
    out
}

/// Code bits of a word after applying a universe automorphism, optionally
/// mirrored.
fn transformed_code(word: &BraidWord, r: usize, kind: u8, mirror: bool) -> Vec<bool> {
    let gens = word.gens();
    let c = gens.len();
    let s = word.strands() as u8;
    (0..c)
        .map(|k| {
            let g = gens[variant_source(c, r, kind, k)];
            let index = if kind >= 2 { s - g.index } else { g.index };
            let sign = if mirror { g.sign.flip() } else { g.sign };
            !Generator { index, sign }.is_alternating()
        })
        .collect()
}

/// Sign assignments of a universe in ascending binary-code order.
///
/// Only run-uniform words with a positive first crossing are produced, words
/// with a Reidemeister II reduction are dropped, and so is any word that a
/// symmetry of the universe (possibly combined with mirroring) maps to a
/// smaller code; such a word is never the first of its link.
pub fn sign_assignments(u: &BraidUniverse) -> Vec<BraidWord> {
    sign_assignments_with(u, true)
}

/// As [`sign_assignments`]; `prune_symmetric` toggles the symmetry prune.
pub fn sign_assignments_with(u: &BraidUniverse, prune_symmetric: bool) -> Vec<BraidWord> {
    let idx = u.indices();
    let c = idx.len();
    let (run, runs) = cyclic_runs(idx);
    let autos = if prune_symmetric { automorphisms(u) } else { Vec::new() };
    let mut out: Vec<(Vec<bool>, BraidWord)> = Vec::new();
    // run 0 holds the first crossing and stays alternating (index 1, positive)
    for mask in 0u64..(1u64 << (runs - 1)) {
        let bit = |r: usize| r > 0 && (mask >> (r - 1)) & 1 == 1;
        let code: Vec<bool> = (0..c).map(|k| bit(run[k])).collect();
        let word = u.sign_with(&code);
        if has_cancelling_pair(&word) {
            continue;
        }
        let dominated = autos.iter().any(|&(r, kind)| {
            transformed_code(&word, r, kind, false) < code || transformed_code(&word, r, kind, true) < code
        });
        if dominated {
            continue;
        }
        out.push((code, word));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, w)| w).collect()
}

/// All words of one `(s, c)` slice in canonical order.
pub fn words(s: usize, c: usize) -> Vec<BraidWord> {
    universes(s, c).iter().flat_map(sign_assignments).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{compare_minimum, orientation_variants, parse_braid};
    use std::cmp::Ordering;

    fn bw(s: &str) -> BraidWord {
        parse_braid(s, None).unwrap()
    }

    fn naive_universes(s: usize, c: usize) -> Vec<Vec<u8>> {
        let m = (s - 1) as u64;
        let mut out = Vec::new();
        for code in 0..m.pow(c as u32) {
            let mut v = Vec::with_capacity(c);
            let mut x = code;
            for _ in 0..c {
                v.push((x % m) as u8 + 1);
                x /= m;
            }
            v.reverse();
            if v[0] != 1 {
                continue;
            }
            let mut counts = vec![0; s - 1];
            for &i in &v {
                counts[i as usize - 1] += 1;
            }
            if !strand_usage_ok(&counts) || min_orientation(s, &v) != v {
                continue;
            }
            if commutation_minimal(&v, s) {
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn two_strands_single_universe() {
        for c in 2..9 {
            let us = universes(2, c);
            assert_eq!(us.len(), 1);
            assert!(us[0].indices().iter().all(|&i| i == 1));
        }
        assert!(universes(2, 1).is_empty());
    }

    #[test]
    fn pruned_search_matches_plain_filtering() {
        for s in 2..=5 {
            for c in 1..=8 {
                if (s as u64 - 1).pow(c as u32) > 70_000 {
                    continue;
                }
                let fast: Vec<Vec<u8>> = universes(s, c).iter().map(|u| u.indices().to_vec()).collect();
                assert_eq!(fast, naive_universes(s, c), "s={s} c={c}");
            }
        }
    }

    #[test]
    fn small_slices() {
        let u34: Vec<Vec<u8>> = universes(3, 4).iter().map(|u| u.indices().to_vec()).collect();
        assert!(u34.contains(&vec![1, 1, 2, 2]));
        assert!(u34.contains(&vec![1, 2, 1, 2]));
        let u36: Vec<Vec<u8>> = universes(3, 6).iter().map(|u| u.indices().to_vec()).collect();
        assert!(u36.contains(&vec![1, 1, 2, 1, 2, 2]));
        assert!(u36.contains(&vec![1, 1, 1, 2, 1, 2]));
    }

    #[test]
    fn emitted_universes_satisfy_filters() {
        for (s, c) in [(3, 7), (4, 7), (4, 8), (5, 8)] {
            let us = universes(s, c);
            for w in us.windows(2) {
                assert!(w[0].indices() < w[1].indices());
            }
            for u in &us {
                assert_eq!(u.indices()[0], 1);
                assert_eq!(u.min_orientation(), u.indices());
                assert!(orientation_variants(s, u.indices()).len() <= 4 * c);
                let cls = classify(u);
                assert_eq!(cls.components % 2 == 1, (s + c) % 2 == 1);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let u = BraidUniverse::of(&bw("AAAbCbC")).unwrap();
        assert_eq!(classify(&u).composite_hint, CompositeHint::Composite);
        let u = BraidUniverse::of(&bw("AAA")).unwrap();
        assert_eq!(classify(&u).composite_hint, CompositeHint::Noncomposite);
        let u = BraidUniverse::of(&bw("AbAb")).unwrap();
        assert_eq!(classify(&u).composite_hint, CompositeHint::Noncomposite);
        let u = BraidUniverse::of(&bw("AAAbbb")).unwrap();
        assert_eq!(classify(&u).composite_hint, CompositeHint::Composite);
    }

    #[test]
    fn sign_assignment_examples() {
        let u = BraidUniverse::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(sign_assignments(&u), vec![bw("AAA")]);
        let u = BraidUniverse::new(3, vec![1, 1, 2, 1, 2, 2]).unwrap();
        let ws = sign_assignments(&u);
        assert_eq!(ws[0], bw("AAbAbb"));
        let u = BraidUniverse::new(3, vec![1, 1, 1, 2, 1, 2]).unwrap();
        let ws = sign_assignments_with(&u, false);
        let a = ws.iter().position(|w| *w == bw("AAAbAb")).unwrap();
        let b = ws.iter().position(|w| *w == bw("AAABaB")).unwrap();
        assert!(a < b);
        for w in ws.windows(2) {
            assert_eq!(compare_minimum(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn cancelling_pairs() {
        assert!(has_cancelling_pair(&bw("AAbAa")));
        assert!(has_cancelling_pair(&bw("AbCBa")));
        assert!(has_cancelling_pair(&bw("aAAB")));
        assert!(!has_cancelling_pair(&bw("AbAb")));
        assert!(!has_cancelling_pair(&bw("AAABaB")));
        assert!(has_cancelling_pair(&bw("ACac")));
        assert!(!has_cancelling_pair(&bw("ABaB")));
    }

    #[test]
    fn runs_wrap() {
        assert_eq!(cyclic_runs(&[1, 1, 2, 1]), (vec![0, 0, 1, 0], 2));
        assert_eq!(cyclic_runs(&[1, 1, 1]), (vec![0, 0, 0], 1));
        assert_eq!(cyclic_runs(&[1, 2, 1, 2]).1, 4);
    }
}
