//! Polynomial invariants of braid closures.
//!
//! The Alexander polynomial comes from the reduced Burau matrix. HOMFLYPT is
//! computed in the Hecke algebra of the braid group followed by the Ocneanu
//! trace, normalized so that `y P(L+) + x P(L-) = P(L0)` and the unknot is 1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidWord, Generator, Sign};
use crate::poly::{BiPoly, UniPoly};

/// Largest strand count the HOMFLYPT routine accepts; the trace tables
/// grow with `n!`.
pub const MAX_HECKE_STRANDS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("HOMFLYPT limited to {max} strands, braid has {strands}")]
    TooManyStrands { strands: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlexanderRecord {
    pub poly: UniPoly,
    pub ap10: u64,
    pub z: i32,
    pub digital: u8,
}

/// Casting out nines, with the table convention `digital(0) = 9`.
pub fn digital(n: u64) -> u8 {
    if n == 0 {
        9
    } else {
        (1 + (n - 1) % 9) as u8
    }
}

// ---------------------------------------------------------------- Burau

pub type PolyMatrix = Vec<Vec<UniPoly>>;

fn identity_matrix(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { UniPoly::one() } else { UniPoly::zero() }).collect())
        .collect()
}

/// 3x3 block of the reduced Burau image of a generator, anchored so that
/// its centre sits on the diagonal at `index - 1` (0-based).
fn burau_block(sign: Sign) -> [[UniPoly; 3]; 3] {
    let z = UniPoly::zero;
    let one = UniPoly::one;
    match sign {
        Sign::Pos => [
            [one(), UniPoly::t(), z()],
            [z(), UniPoly::monomial(-1, 1), z()],
            [z(), one(), one()],
        ],
        Sign::Neg => [
            [one(), one(), z()],
            [z(), UniPoly::monomial(-1, -1), z()],
            [z(), UniPoly::monomial(1, -1), one()],
        ],
    }
}

fn right_multiply_generator(m: &mut PolyMatrix, g: Generator) {
    let n = m.len();
    let centre = g.index as isize - 1;
    let block = burau_block(g.sign);
    let cols: Vec<(usize, usize)> = (0..3)
        .filter_map(|b| {
            let c = centre - 1 + b as isize;
            (c >= 0 && (c as usize) < n).then_some((b, c as usize))
        })
        .collect();
    for row in m.iter_mut() {
        let mut fresh = Vec::with_capacity(cols.len());
        for &(bj, cj) in &cols {
            let mut acc = UniPoly::zero();
            for &(bk, ck) in &cols {
                let e = &block[bk][bj];
                if !e.is_zero() && !row[ck].is_zero() {
                    acc = &acc + &(&row[ck] * e);
                }
            }
            fresh.push((cj, acc));
        }
        for (cj, v) in fresh {
            row[cj] = v;
        }
    }
}

/// Reduced Burau matrix of the word, `(s-1) x (s-1)`.
pub fn reduced_burau(word: &BraidWord) -> PolyMatrix {
    let n = word.strands().saturating_sub(1);
    let mut m = identity_matrix(n);
    for &g in word.gens() {
        right_multiply_generator(&mut m, g);
    }
    m
}

/// Determinant by fraction-free elimination; every division is exact.
pub fn determinant(m: &PolyMatrix) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut a = m.clone();
    let mut sign = 1i64;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return UniPoly::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
        }
        prev = a[k][k].clone();
        for i in k + 1..n {
            a[i][k] = UniPoly::zero();
        }
    }
    a[n - 1][n - 1].scale(sign)
}

/// `det(I - B) (1 - t) / (1 - t^s)` before any unit normalization.
pub fn raw_alexander(word: &BraidWord) -> UniPoly {
    let s = word.strands();
    if s <= 1 {
        return UniPoly::one();
    }
    let mut m = reduced_burau(word);
    for (i, row) in m.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let id = if i == j { UniPoly::one() } else { UniPoly::zero() };
            *e = &id - e;
        }
    }
    let det = determinant(&m);
    // (1 - t) / (1 - t^s) = 1 / (1 + t + ... + t^(s-1))
    let geometric = UniPoly::from_dense(0, vec![1; s]);
    det.div_exact(&geometric)
        .expect("1 + t + ... + t^(s-1) must divide det(I - B)")
}

/// Alexander polynomial normalized to a nonzero constant term and a positive
/// value at 10, with its AP(10), `z` and digital.
///
/// `z` is the lowest power of `t` in the raw polynomial plus the number of
/// negative crossings, which equals `(c - s + 1 - span) / 2`. This reading of
/// the factored-out power reproduces the tabulated `z` column.
pub fn alexander(word: &BraidWord) -> AlexanderRecord {
    let raw = raw_alexander(word);
    let components = word.components();
    let Some(lo) = raw.low_degree() else {
        return AlexanderRecord { poly: UniPoly::zero(), ap10: 0, z: 0, digital: digital(0) };
    };
    let mut poly = raw.shift(-lo);
    if poly.eval(10) < 0 {
        poly = -&poly;
    }
    let ap10 = u64::try_from(poly.eval(10)).expect("AP(10) exceeds u64");
    let z = lo + word.negative_count() as i32;
    let reduced = ap10 / 9u64.pow(components.saturating_sub(1) as u32);
    AlexanderRecord { poly, ap10, z, digital: digital(reduced) }
}

// ------------------------------------------------------------- HOMFLYPT

struct SymTables {
    n: usize,
    perms: Vec<Vec<u8>>,
    /// `right[r * (n-1) + i]`: rank of `perm_r * s_i`.
    right: Vec<u32>,
    /// Whether `perm_r * s_i` is longer than `perm_r`.
    ascent: Vec<bool>,
    trace: Vec<BiPoly>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of a permutation of `0..n`.
fn perm_rank(p: &[u8]) -> u32 {
    let n = p.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&v| v < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank as u32
}

fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut p: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Sparse Hecke algebra element: permutation rank to coefficient.
type Hecke = BTreeMap<u32, BiPoly>;

fn hecke_add(h: &mut Hecke, w: u32, c: &BiPoly, coeff: i64, i: i32, j: i32) {
    let e = h.entry(w).or_default();
    e.add_scaled(c, coeff, i, j);
    if e.is_zero() {
        h.remove(&w);
    }
}

impl SymTables {
    fn build(n: usize, lower: Option<&SymTables>) -> SymTables {
        let perms = all_perms(n);
        let m = n.saturating_sub(1);
        let mut right = vec![0u32; perms.len() * m];
        let mut ascent = vec![false; perms.len() * m];
        for (r, p) in perms.iter().enumerate() {
            for i in 0..m {
                let mut q = p.clone();
                q.swap(i, i + 1);
                right[r * m + i] = perm_rank(&q);
                ascent[r * m + i] = p[i] < p[i + 1];
            }
        }
        let mut t = SymTables { n, perms, right, ascent, trace: Vec::new() };
        t.trace = match lower {
            None => vec![BiPoly::one()],
            Some(low) => t.perms.iter().map(|p| low.trace_lift(p)).collect(),
        };
        t
    }

    /// Trace of `g_w` for `w` in `S_{n+1}`, from the traces on `S_n` (self).
    fn trace_lift(&self, w: &[u8]) -> BiPoly {
        let n1 = w.len();
        let top = (n1 - 1) as u8;
        if w[n1 - 1] == top {
            let sub = perm_rank(&w[..n1 - 1]) as usize;
            let delta = &BiPoly::x() + &BiPoly::y();
            return &self.trace[sub] * &delta;
        }
        let k = w.iter().position(|&v| v == top).unwrap();
        let mut w1 = w.to_vec();
        for p in k..n1 - 1 {
            w1.swap(p, p + 1);
        }
        // g_w = g_{w1} g_{n-1} g_{n-2} ... g_k with the top generator traced out
        let mut h: Hecke = BTreeMap::new();
        h.insert(perm_rank(&w1[..n1 - 1]), BiPoly::one());
        for i in (k..n1.saturating_sub(2)).rev() {
            h = self.mul_gen(&h, Generator::pos(i as u8 + 1));
        }
        self.trace_of(&h)
    }

    fn mul_gen(&self, h: &Hecke, g: Generator) -> Hecke {
        let m = self.n - 1;
        let i = g.index as usize - 1;
        let mut out: Hecke = BTreeMap::new();
        for (&w, c) in h {
            let ws = self.right[w as usize * m + i];
            let up = self.ascent[w as usize * m + i];
            match (g.sign, up) {
                (Sign::Pos, true) => hecke_add(&mut out, ws, c, 1, 0, 0),
                (Sign::Pos, false) => {
                    hecke_add(&mut out, w, c, 1, 0, -1);
                    hecke_add(&mut out, ws, c, -1, 1, -1);
                }
                (Sign::Neg, true) => {
                    hecke_add(&mut out, w, c, 1, -1, 0);
                    hecke_add(&mut out, ws, c, -1, -1, 1);
                }
                (Sign::Neg, false) => hecke_add(&mut out, ws, c, 1, 0, 0),
            }
        }
        out
    }

    fn trace_of(&self, h: &Hecke) -> BiPoly {
        let mut acc = BiPoly::zero();
        for (&w, c) in h {
            acc = &acc + &(c * &self.trace[w as usize]);
        }
        acc
    }
}

fn tables(n: usize) -> &'static SymTables {
    static TABLES: [OnceLock<SymTables>; MAX_HECKE_STRANDS + 1] = [const { OnceLock::new() }; MAX_HECKE_STRANDS + 1];
    assert!((1..=MAX_HECKE_STRANDS).contains(&n));
    TABLES[n].get_or_init(|| {
        let lower = (n > 1).then(|| tables(n - 1));
        SymTables::build(n, lower)
    })
}

/// HOMFLYPT polynomial of the closure.
pub fn homfly(word: &BraidWord) -> Result<BiPoly, InvariantError> {
    let n = word.strands();
    if n > MAX_HECKE_STRANDS {
        return Err(InvariantError::TooManyStrands { strands: n, max: MAX_HECKE_STRANDS });
    }
    let t = tables(n);
    let mut h: Hecke = BTreeMap::new();
    h.insert(0, BiPoly::one());
    for &g in word.gens() {
        h = t.mul_gen(&h, g);
    }
    Ok(t.trace_of(&h))
}

pub fn homfly_at_ones(word: &BraidWord) -> Result<i64, InvariantError> {
    Ok(homfly(word)?.eval_units(1, 1))
}

/// HOMFLYPT of the `k`-component unlink, `(x + y)^(k-1)`.
pub fn unlink_homfly(k: usize) -> BiPoly {
    let delta = &BiPoly::x() + &BiPoly::y();
    (1..k).fold(BiPoly::one(), |acc, _| &acc * &delta)
}

/// Certificate that the closure is an unlink: its HOMFLYPT equals that of
/// the unlink with as many components. Not a proof in general.
pub fn is_unlink(word: &BraidWord) -> Result<bool, InvariantError> {
    Ok(homfly(word)? == unlink_homfly(word.components()))
}

// ----------------------------------------------------------- sub-braids

/// The braid obtained by deleting every strand outside `keep` (a set of
/// top positions closed under the permutation).
pub fn sub_braid(word: &BraidWord, keep: &[bool]) -> BraidWord {
    let s = word.strands();
    let kept = keep.iter().filter(|&&k| k).count();
    let mut at: Vec<usize> = (0..s).collect();
    let mut gens = Vec::new();
    for &g in word.gens() {
        let i = g.index as usize - 1;
        let (a, b) = (at[i], at[i + 1]);
        if keep[a] && keep[b] {
            let below = (0..i).filter(|&p| keep[at[p]]).count();
            gens.push(Generator { index: below as u8 + 1, sign: g.sign });
        }
        at.swap(i, i + 1);
    }
    BraidWord::from_parts_unchecked(kept.max(1), gens)
}

/// Pairwise linking numbers, indexed by component labels.
pub fn linking_matrix(word: &BraidWord) -> Vec<Vec<i64>> {
    let labels = word.component_labels();
    let k = word.components();
    let mut twice = vec![vec![0i64; k]; k];
    let mut at: Vec<usize> = (0..word.strands()).collect();
    for &g in word.gens() {
        let i = g.index as usize - 1;
        let (a, b) = (labels[at[i]], labels[at[i + 1]]);
        if a != b {
            twice[a][b] += g.sign.value();
            twice[b][a] += g.sign.value();
        }
        at.swap(i, i + 1);
    }
    twice.iter().map(|r| r.iter().map(|v| v / 2).collect()).collect()
}

// ---------------------------------------------------------------- keys

/// Chirality-sensitive identity of an oriented link: component count and
/// HOMFLYPT, refined by the HOMFLYPT of each component and the linking
/// numbers. Orientation reversal of every component leaves it unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentityKey {
    pub components: usize,
    pub homfly: BiPoly,
    pub component_homfly: Vec<BiPoly>,
    pub linking: Vec<i64>,
}

impl IdentityKey {
    /// Key of the mirror image.
    pub fn mirror(&self) -> IdentityKey {
        let mut parts: Vec<BiPoly> = self.component_homfly.iter().map(|p| p.swap_xy()).collect();
        parts.sort();
        let mut linking: Vec<i64> = self.linking.iter().map(|l| -l).collect();
        linking.sort();
        IdentityKey {
            components: self.components,
            homfly: self.homfly.swap_xy(),
            component_homfly: parts,
            linking,
        }
    }

    /// Identity up to mirror image, the equivalence used for tabulation.
    pub fn unoriented_chirality(&self) -> IdentityKey {
        let m = self.mirror();
        match self.cmp(&m) {
            Ordering::Greater => m,
            _ => self.clone(),
        }
    }

    pub fn is_amphicheiral(&self) -> bool {
        *self == self.mirror()
    }
}

pub fn identity_key(word: &BraidWord) -> Result<IdentityKey, InvariantError> {
    let homfly = homfly(word)?;
    let k = word.components();
    let labels = word.component_labels();
    let mut parts = Vec::with_capacity(k);
    if k > 1 {
        for c in 0..k {
            let keep: Vec<bool> = labels.iter().map(|&l| l == c).collect();
            parts.push(self::homfly(&sub_braid(word, &keep))?);
        }
    }
    parts.sort();
    let lk = linking_matrix(word);
    let mut linking = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            linking.push(lk[a][b]);
        }
    }
    linking.sort();
    Ok(IdentityKey { components: k, homfly, component_homfly: parts, linking })
}

/// Key used to deduplicate the tabulation: mirror images coincide.
pub fn link_key(word: &BraidWord) -> Result<IdentityKey, InvariantError> {
    Ok(identity_key(word)?.unoriented_chirality())
}

// ------------------------------------------------------------ Jones bound

/// Jones polynomial in `u = t^(1/2)`, read off the HOMFLYPT polynomial.
pub fn jones_in_sqrt_t(p: &BiPoly) -> UniPoly {
    // x = -u^3 / (u^2 - 1), y = u^-1 / (u^2 - 1)
    let Some(d) = p.terms().iter().map(|&((i, j), _)| i + j).max() else {
        return UniPoly::zero();
    };
    let u2m1 = UniPoly::from_terms([(0, -1), (2, 1)]);
    let mut num = UniPoly::zero();
    for &((i, j), c) in p.terms() {
        let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
        let mut term = UniPoly::monomial(c * sign, 3 * i - j);
        for _ in 0..(d - i - j) {
            term = &term * &u2m1;
        }
        num = &num + &term;
    }
    let mut den = UniPoly::one();
    for _ in 0..d.max(0) {
        den = &den * &u2m1;
    }
    if d < 0 {
        for _ in 0..(-d) {
            num = &num * &u2m1;
        }
    }
    num.div_exact(&den).expect("Jones substitution must be a Laurent polynomial")
}

/// Lower bound on the crossing number of the closure: the span of its Jones
/// polynomial in `t`.
pub fn crossing_lower_bound(word: &BraidWord) -> Result<u32, InvariantError> {
    let v = jones_in_sqrt_t(&homfly(word)?);
    Ok((v.span() / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        parse_braid(s, None).unwrap()
    }

    fn bp(terms: &[((i32, i32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn burau_examples() {
        let m = reduced_burau(&w("AAA"));
        assert_eq!(m, vec![vec![UniPoly::monomial(-1, 3)]]);
        let e = parse_braid("", Some(3)).unwrap();
        assert_eq!(reduced_burau(&e), identity_matrix(2));
        let x = w("AbCaBBc");
        let both = x.concat(&x.inverse());
        assert_eq!(reduced_burau(&both), identity_matrix(3));
    }

    #[test]
    fn alexander_examples() {
        let a = alexander(&w("AAA"));
        assert_eq!(a.poly, UniPoly::from_terms([(0, 1), (1, -1), (2, 1)]));
        assert_eq!((a.ap10, a.z, a.digital), (91, 0, 1));
        let a = alexander(&w("AbAb"));
        assert_eq!((a.ap10, a.z, a.digital), (71, 0, 8));
        let a = alexander(&w("AA"));
        assert_eq!((a.ap10, a.z, a.digital), (9, 0, 1));
        let a = alexander(&w("AAABaB"));
        assert_eq!((a.ap10, a.z), (172, 1));
        let a = alexander(&w("AAbAbb"));
        assert_eq!((a.ap10, a.digital), (7471, 1));
        let a = alexander(&w("AAAbAb"));
        assert_eq!((a.ap10, a.digital), (7271, 8));
        let u = alexander(&BraidWord::unknot());
        assert_eq!((u.ap10, u.z, u.digital), (1, 0, 1));
    }

    #[test]
    fn digital_rule() {
        assert_eq!(digital(7471), 1);
        assert_eq!(digital(7271), 8);
        assert_eq!(digital(0), 9);
        assert_eq!(digital(9), 9);
        assert_eq!(digital(1), 1);
    }

    #[test]
    fn homfly_examples() {
        assert_eq!(homfly(&BraidWord::unknot()).unwrap(), BiPoly::one());
        assert_eq!(homfly(&parse_braid("", Some(2)).unwrap()).unwrap(), &BiPoly::x() + &BiPoly::y());
        // Hopf: (1 - x^2 - xy) / y
        let hopf = bp(&[((0, -1), 1), ((2, -1), -1), ((1, 0), -1)]);
        assert_eq!(homfly(&w("AA")).unwrap(), hopf);
        assert_eq!(homfly_at_ones(&w("AA")).unwrap(), -1);
        assert_eq!(homfly_at_ones(&w("AAA")).unwrap(), -2);
        assert_eq!(homfly(&w("AAA")).unwrap().swap_xy(), homfly(&w("aaa")).unwrap());
        assert_eq!(homfly(&w("A")).unwrap(), BiPoly::one());
        assert_eq!(homfly(&w("AbAb")).unwrap(), homfly(&w("aBaB")).unwrap());
    }

    #[test]
    fn homfly_skein_relation() {
        // y P(L+) + x P(L-) = P(L0) at a crossing of AbAbC
        for (plus, minus, zero) in [("AAbAbC", "aAbAbC", "AbAbC"), ("BAbAA", "bAbAA", "AbAA")] {
            let (p, m, z) = (w(plus), w(minus), w(zero));
            let z = z.with_strands(p.strands()).unwrap();
            let lhs = &homfly(&p).unwrap().mul_monomial(1, 0, 1) + &homfly(&m).unwrap().mul_monomial(1, 1, 0);
            assert_eq!(lhs, homfly(&z).unwrap());
        }
    }

    #[test]
    fn unlink_certificates() {
        assert!(is_unlink(&w("A")).unwrap());
        assert!(is_unlink(&w("aAA")).unwrap());
        assert!(!is_unlink(&w("AA")).unwrap());
        assert!(!is_unlink(&w("AAA")).unwrap());
        assert!(is_unlink(&parse_braid("", Some(3)).unwrap()).unwrap());
    }

    #[test]
    fn keys() {
        assert_ne!(identity_key(&w("AAA")).unwrap(), identity_key(&w("aaa")).unwrap());
        assert_eq!(link_key(&w("AAA")).unwrap(), link_key(&w("aaa")).unwrap());
        assert_eq!(identity_key(&w("AAA")).unwrap(), identity_key(&w("BAAABb")).unwrap());
        assert_eq!(identity_key(&w("AAA")).unwrap(), identity_key(&w("AAAB")).unwrap());
        assert_ne!(identity_key(&w("AA")).unwrap(), identity_key(&w("AAA")).unwrap());
        assert!(identity_key(&w("AbAb")).unwrap().is_amphicheiral());
    }

    #[test]
    fn linking_and_sub_braids() {
        assert_eq!(linking_matrix(&w("AA")), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(linking_matrix(&w("AAaa")), vec![vec![0, 0], vec![0, 0]]);
        // three component chain: AAbb
        let lk = linking_matrix(&w("AAbb"));
        let mut off: Vec<i64> = vec![lk[0][1], lk[0][2], lk[1][2]];
        off.sort();
        assert_eq!(off, vec![-1, 0, 1]);
        // a trefoil component linked with an unknot
        let x = w("AAABB");
        assert_eq!(x.components(), 2);
        let labels = x.component_labels();
        let keep: Vec<bool> = labels.iter().map(|&l| l == labels[0]).collect();
        assert_eq!(sub_braid(&x, &keep), w("AAA"));
    }

    #[test]
    fn jones_bounds() {
        assert_eq!(crossing_lower_bound(&w("AAA")).unwrap(), 3);
        assert_eq!(crossing_lower_bound(&w("AbAb")).unwrap(), 4);
        assert_eq!(crossing_lower_bound(&w("AA")).unwrap(), 2);
        assert_eq!(crossing_lower_bound(&BraidWord::unknot()).unwrap(), 0);
        // trefoil Jones: -t^-4 + t^-3 + t^-1 (in the mirror convention) has span 3
        let v = jones_in_sqrt_t(&homfly(&w("AAA")).unwrap());
        assert_eq!(v.terms().count(), 3);
    }

    fn arb_word() -> impl Strategy<Value = BraidWord> {
        (2usize..5).prop_flat_map(|s| {
            prop::collection::vec((1..s as u8, any::<bool>()), 0..9).prop_map(move |gs| {
                let gens = gs
                    .into_iter()
                    .map(|(i, p)| if p { Generator::pos(i) } else { Generator::neg(i) })
                    .collect();
                BraidWord::new(s, gens).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mirror_swaps_variables(x in arb_word()) {
            prop_assert_eq!(homfly(&x.mirror()).unwrap(), homfly(&x).unwrap().swap_xy());
        }

        #[test]
        fn alexander_ap10_is_unit_invariant(x in arb_word(), k in 0usize..8) {
            let a = alexander(&x);
            let b = alexander(&x.rotated_left(k));
            prop_assert_eq!(a.poly, b.poly);
            prop_assert_eq!(a.z, b.z);
        }
    }
}
