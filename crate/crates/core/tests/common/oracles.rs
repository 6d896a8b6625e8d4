//! Independent computations the library is checked against.

use std::collections::{HashMap, HashSet};

use minbraid::braid::{compare_minimum, BraidWord, Generator, Sign};
use minbraid::catalog::Catalog;
use minbraid::fixture::{Fixture, Table};
use minbraid::invariants::{link_key, IdentityKey};
use rayon::prelude::*;

/// Every index sequence over `1..s`, as base `s - 1` digits.
pub fn sequences(s: usize, c: usize) -> impl Iterator<Item = Vec<u8>> {
    let base = (s - 1) as u64;
    (0..base.pow(c as u32)).map(move |mut n| {
        (0..c)
            .map(|_| {
                let d = (n % base) as u8 + 1;
                n /= base;
                d
            })
            .collect()
    })
}

pub fn all_signings(s: usize, idx: &[u8]) -> Vec<BraidWord> {
    (0u32..1 << idx.len())
        .map(|mask| {
            let gens = idx
                .iter()
                .enumerate()
                .map(|(k, &i)| Generator { index: i, sign: if mask >> k & 1 == 0 { Sign::Pos } else { Sign::Neg } })
                .collect();
            BraidWord::new(s, gens).unwrap()
        })
        .collect()
}

/// Free reduction, cyclically, leaves some index unused: the closure is a
/// split link, and split links are outside the tables.
pub fn visibly_split(w: &BraidWord) -> bool {
    let mut g: Vec<Generator> = Vec::new();
    for &x in w.gens() {
        if g.last() == Some(&x.inverse()) {
            g.pop();
        } else {
            g.push(x);
        }
    }
    while g.len() >= 2 && g[0] == g[g.len() - 1].inverse() {
        g.pop();
        g.remove(0);
    }
    (1..w.strands() as u8).any(|i| g.iter().all(|x| x.index != i))
}

/// Compares `cat`, built for at most `max_s` strands and `max_c` crossings,
/// with the least word of every nonsplit link among all words in range.
/// Returns the number of links compared and of split entries skipped.
pub fn brute_force_check(cat: &Catalog, max_s: usize, max_c: usize) -> Result<(usize, usize), String> {
    let mut words = vec![BraidWord::unknot()];
    for s in 2..=max_s {
        for c in 1..=max_c {
            for idx in sequences(s, c) {
                // a missing index splits the closure
                if (1..s as u8).all(|i| idx.contains(&i)) {
                    words.extend(all_signings(s, &idx));
                }
            }
        }
    }
    let keyed: Vec<(IdentityKey, BraidWord, bool)> =
        words.into_par_iter().map(|w| (link_key(&w).unwrap(), w.clone(), visibly_split(&w))).collect();
    let split: HashSet<IdentityKey> = keyed.iter().filter(|t| t.2).map(|t| t.0.clone()).collect();
    let mut brute: HashMap<IdentityKey, BraidWord> = HashMap::new();
    for (k, w, _) in keyed.into_iter().filter(|t| !split.contains(&t.0)) {
        match brute.get(&k) {
            Some(best) if compare_minimum(best, &w).is_le() => {}
            _ => {
                brute.insert(k, w);
            }
        }
    }
    let kept: Vec<_> = cat.entries().iter().filter(|e| !split.contains(&e.key)).collect();
    if kept.len() != brute.len() {
        return Err(format!("catalog has {} nonsplit links, brute force {}", kept.len(), brute.len()));
    }
    for e in &kept {
        if brute.get(&e.key) != Some(&e.word) {
            return Err(format!("catalog entry {} is not the least word of its link", e.word));
        }
    }
    Ok((kept.len(), cat.len() - kept.len()))
}

fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rooted(Vec<Rooted>);

fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Rooted {
    let mut kids: Vec<Rooted> = adj[v].iter().filter(|&&u| u != parent).map(|&u| rooted(adj, u, v)).collect();
    kids.sort();
    Rooted(kids)
}

/// Least rooted form over all roots: complete for isomorphism, if slow.
pub fn shape(n: usize, edges: &[(usize, usize)]) -> Rooted {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n).map(|r| rooted(&adj, r, usize::MAX)).min().unwrap()
}

/// Unlabelled trees on `n` vertices, by decoding every Prüfer sequence.
pub fn prufer_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let total = n.pow(n as u32 - 2);
    let shapes: HashSet<Rooted> = (0..total)
        .into_par_iter()
        .fold(HashSet::new, |mut acc, mut k| {
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            acc.insert(shape(n, &prufer_edges(&seq, n)));
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    shapes.len()
}

/// Rooted tree counts, then Otter's dissimilarity formula.
pub fn otter(max_n: usize) -> Vec<u64> {
    let mut r = vec![0u64; max_n + 1];
    r[1] = 1;
    for n in 2..=max_n {
        let mut s = 0;
        for k in 1..n {
            let d: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * r[d]).sum();
            s += d * r[n - k];
        }
        r[n] = s / (n as u64 - 1);
    }
    (1..=max_n)
        .map(|n| {
            let pairs: u64 = (1..n).map(|i| r[i] * r[n - i]).sum();
            let middle = if n % 2 == 0 { r[n / 2] } else { 0 };
            r[n] - (pairs - middle) / 2
        })
        .collect()
}

/// Alexander value of a factor named in the composite table; `Kc.m` is the
/// knot tagged `c:1-0m`.
pub fn factor_ap10(fixture: &Fixture, name: &str) -> u64 {
    let row = match name {
        "Square" | "Granny" => return factor_ap10(fixture, "K3").pow(2),
        "L4a" => fixture.by_tag("4:2-01a"),
        "L4b" => fixture.by_tag("4:2-01b"),
        _ => {
            let body = name.strip_prefix('K').unwrap_or_else(|| panic!("factor {name}"));
            let (c, m) = body.split_once('.').unwrap_or((body, "1"));
            fixture.by_tag(&format!("{c}:1-{:02}", m.parse::<u32>().unwrap()))
        }
    };
    row.unwrap_or_else(|| panic!("factor {name}")).ap10
}

/// Composite rows whose printed value is the product of their factors';
/// the first failure is returned as an error. Rows with a usable braid must
/// also reproduce the product.
pub fn composite_check(fixture: &Fixture) -> Result<usize, String> {
    let mut checked = 0;
    for r in fixture.rows_in(Table::Trivial).filter(|r| r.tag.contains('c') && !r.exempt("ext_name")) {
        let product: u64 = r.ext_name.split('#').map(|n| factor_ap10(fixture, n)).product();
        if r.ap10 != product {
            return Err(format!("{} {}: printed {} != {product}", r.tag, r.ext_name, r.ap10));
        }
        if let (true, Some(w)) = (r.braid_usable(), &r.braid) {
            let v = minbraid::invariants::alexander(w).ap10;
            if v != product {
                return Err(format!("{} {w}: computed {v} != {product}", r.tag));
            }
        }
        checked += 1;
    }
    Ok(checked)
}
