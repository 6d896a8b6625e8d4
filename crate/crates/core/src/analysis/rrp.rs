use std::collections::{HashSet, VecDeque};

use crate::braid::{BraidWord, Generator, Sign};
use crate::invariants::{identity_key, InvariantError};

use super::free_reduce;

/// Reverse rotated palindrome: turning the braid over gives its mirror.
pub fn is_rrp(word: &BraidWord) -> bool {
    word.rotate() == word.mirror()
}

/// `A B a B C^n B A d c b^n c D c d` on five strands.
pub fn french_horn(n: usize) -> BraidWord {
    use Generator as G;
    let mut g = vec![G::pos(1), G::pos(2), G::neg(1), G::pos(2)];
    g.extend(std::iter::repeat_n(G::pos(3), n));
    g.extend([G::pos(2), G::pos(1), G::neg(4), G::neg(3)]);
    g.extend(std::iter::repeat_n(G::neg(2), n));
    g.extend([G::neg(3), G::pos(4), G::neg(3), G::neg(4)]);
    BraidWord::new(5, g).expect("five strands")
}

/// Words one move away: rotation, far commutation, the braid relation in
/// its mixed-sign forms, conjugation by a generator and one stabilization.
fn neighbours(w: &BraidWord, max_crossings: usize, max_strands: usize) -> Vec<BraidWord> {
    let g = w.gens();
    let n = g.len();
    let s = w.strands();
    let mut out: Vec<Vec<Generator>> = Vec::new();
    if n > 1 {
        let mut r = g.to_vec();
        r.rotate_left(1);
        out.push(r);
        let mut r = g.to_vec();
        r.rotate_right(1);
        out.push(r);
    }
    for k in 0..n.saturating_sub(1) {
        if g[k].index.abs_diff(g[k + 1].index) >= 2 {
            let mut v = g.to_vec();
            v.swap(k, k + 1);
            out.push(v);
        }
    }
    // x^e y^f x^-e = y^-e x^f y^e, and x^e y^e x^e = y^e x^e y^e
    for k in 0..n.saturating_sub(2) {
        let (a, b, c) = (g[k], g[k + 1], g[k + 2]);
        if a.index != c.index || a.index.abs_diff(b.index) != 1 {
            continue;
        }
        let x = |sign| Generator { index: a.index, sign };
        let y = |sign| Generator { index: b.index, sign };
        let repl = if c.sign == a.sign && b.sign == a.sign {
            Some([y(a.sign), x(a.sign), y(a.sign)])
        } else if c.sign == a.sign.flip() {
            Some([y(a.sign.flip()), x(b.sign), y(a.sign)])
        } else {
            None
        };
        if let Some(r) = repl {
            let mut v = g.to_vec();
            v[k..k + 3].copy_from_slice(&r);
            out.push(v);
        }
    }
    if n + 2 <= max_crossings {
        for i in 1..s as u8 {
            for sign in [Sign::Pos, Sign::Neg] {
                let h = Generator { index: i, sign };
                let mut v = vec![h];
                v.extend_from_slice(g);
                v.push(h.inverse());
                out.push(free_reduce(&v, false));
            }
        }
    }
    let mut words: Vec<BraidWord> =
        out.into_iter().map(|v| BraidWord::new(s, v).expect("indices kept")).collect();
    if s < max_strands && n < max_crossings {
        for sign in [Sign::Pos, Sign::Neg] {
            let mut v = g.to_vec();
            v.push(Generator { index: s as u8, sign });
            words.push(BraidWord::new(s + 1, v).expect("new strand"));
        }
    }
    words
}

/// Breadth-first search, at most `moves_budget` moves deep, for a reverse
/// rotated palindrome presenting the same link. Conjugations may add two
/// crossings and a single stabilization one strand. `None` is inconclusive.
pub fn rrp_search(word: &BraidWord, moves_budget: usize) -> Result<Option<BraidWord>, InvariantError> {
    let key = identity_key(word)?;
    let max_crossings = word.crossings() + 2;
    let max_strands = word.strands() + 1;
    let mut seen: HashSet<BraidWord> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back((word.clone(), 0));
    while let Some((w, d)) = queue.pop_front() {
        if is_rrp(&w) && identity_key(&w)? == key {
            return Ok(Some(w));
        }
        if d == moves_budget {
            continue;
        }
        for v in neighbours(&w, max_crossings, max_strands) {
            if seen.insert(v.clone()) {
                queue.push_back((v, d + 1));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::invariants::homfly;

    fn w(s: &str) -> BraidWord {
        parse_braid(s, None).unwrap()
    }

    #[test]
    fn rrp_examples() {
        assert!(is_rrp(&w("AbAb")));
        assert!(is_rrp(&w("AAbAbb")));
        assert!(!is_rrp(&w("AAA")));
    }

    #[test]
    fn french_horn_family() {
        let f = french_horn(2);
        assert_eq!(f.to_text(false), "ABaBCCBAdcbbcDcd");
        assert_eq!((f.crossings(), f.strands(), f.components()), (16, 5, 1));
        for n in 1..=10 {
            assert!(is_rrp(&french_horn(n)));
            assert_eq!(french_horn(n).crossings(), 12 + 2 * n);
        }
    }

    #[test]
    fn moves_preserve_the_link() {
        let start = w("AAbAbbAAbb");
        let h = homfly(&start).unwrap();
        for v in neighbours(&start, 12, 4) {
            assert_eq!(homfly(&v).unwrap(), h, "{v}");
        }
    }

    #[test]
    fn witnesses() {
        assert_eq!(rrp_search(&w("AAbAbbAb"), 4).unwrap().map(|v| is_rrp(&v)), Some(true));
        let found = rrp_search(&w("AAbAbbAAbb"), 6).unwrap().expect("witness");
        assert!(is_rrp(&found));
        assert_eq!(rrp_search(&w("AAA"), 3).unwrap(), None);
    }
}
