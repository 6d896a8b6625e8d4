//! Braid words, braid universes and their elementary transforms.
//!
//! Letters follow the tabulation convention: the `i`-th capital letter is a
//! positive crossing of strands `i` and `i + 1` (strand `i` passes over when
//! read top to bottom), the lower case letter is the negative crossing.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest generator index expressible with the letter alphabet (`A..=Y`).
pub const MAX_INDEX: u8 = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("empty braid text needs an explicit strand count")]
    Empty,
    #[error("unexpected character {ch:?} at position {pos}")]
    BadChar { ch: char, pos: usize },
    #[error("repeat count at position {pos} has no preceding letter")]
    DigitWithoutLetter { pos: usize },
    #[error("repeat count at position {pos} must be at least 1")]
    ZeroRepeat { pos: usize },
    #[error("generator index {index} needs more than {strands} strands")]
    IndexOutOfRange { index: u8, strands: usize },
    #[error("a braid universe must contain at least one crossing")]
    EmptyUniverse,
    #[error("strand count {0} is outside the supported range")]
    BadStrands(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// One signed crossing; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub index: u8,
    pub sign: Sign,
}

impl Generator {
    pub fn pos(index: u8) -> Self {
        Generator { index, sign: Sign::Pos }
    }

    pub fn neg(index: u8) -> Self {
        Generator { index, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        Generator { index: self.index, sign: self.sign.flip() }
    }

    pub fn letter(self) -> char {
        let base = match self.sign {
            Sign::Pos => b'A',
            Sign::Neg => b'a',
        };
        (base + self.index - 1) as char
    }

    /// A crossing is alternating when it is capital on an odd letter or
    /// lower case on an even letter.
    pub fn is_alternating(self) -> bool {
        (self.index % 2 == 1) == (self.sign == Sign::Pos)
    }

    /// The generator with the given index whose alternating bit is `bit`.
    pub fn from_code_bit(index: u8, nonalternating: bool) -> Self {
        let odd = index % 2 == 1;
        let sign = if odd != nonalternating { Sign::Pos } else { Sign::Neg };
        Generator { index, sign }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    gens: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, gens: Vec<Generator>) -> Result<Self, BraidError> {
        if strands == 0 || strands > MAX_INDEX as usize + 1 {
            return Err(BraidError::BadStrands(strands));
        }
        for g in &gens {
            if g.index == 0 || g.index as usize >= strands {
                return Err(BraidError::IndexOutOfRange { index: g.index, strands });
            }
        }
        Ok(BraidWord { strands, gens })
    }

    /// The one-strand, zero-crossing unknot.
    pub fn unknot() -> Self {
        BraidWord { strands: 1, gens: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(strands: usize, gens: Vec<Generator>) -> Self {
        debug_assert!(gens.iter().all(|g| g.index >= 1 && (g.index as usize) < strands));
        BraidWord { strands, gens }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn universe(&self) -> Vec<u8> {
        self.gens.iter().map(|g| g.index).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.gens.iter().map(|g| g.sign.value()).sum()
    }

    pub fn negative_count(&self) -> usize {
        self.gens.iter().filter(|g| g.sign == Sign::Neg).count()
    }

    pub fn binary_code(&self) -> BinaryCode {
        BinaryCode { bits: self.gens.iter().map(|g| !g.is_alternating()).collect() }
    }

    pub fn is_alternating(&self) -> bool {
        self.gens.iter().all(|g| g.is_alternating())
    }

    /// Flips every crossing sign.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            gens: self.gens.iter().map(|g| g.inverse()).collect(),
        }
    }

    /// Half-turn in the plane: order reversed, index `i` becomes `s - i`,
    /// signs unchanged.
    pub fn rotate(&self) -> BraidWord {
        let s = self.strands as u8;
        BraidWord {
            strands: self.strands,
            gens: self
                .gens
                .iter()
                .rev()
                .map(|g| Generator { index: s - g.index, sign: g.sign })
                .collect(),
        }
    }

    /// Group inverse: reversed order with every sign flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            gens: self.gens.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    pub fn rotated_left(&self, k: usize) -> BraidWord {
        let mut gens = self.gens.clone();
        if !gens.is_empty() {
            let k = k % gens.len();
            gens.rotate_left(k);
        }
        BraidWord { strands: self.strands, gens }
    }

    /// Concatenation; the result has the larger strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        BraidWord { strands: self.strands.max(other.strands), gens }
    }

    pub fn with_strands(&self, strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, self.gens.clone())
    }

    /// Strand permutation of the closure: `perm[p]` is the bottom position
    /// of the strand entering at top position `p` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        permutation_of(self.strands, self.gens.iter().map(|g| g.index))
    }

    pub fn components(&self) -> usize {
        cycle_count(&self.permutation())
    }

    /// Component label (0-based, in order of first appearance) of each
    /// top position.
    pub fn component_labels(&self) -> Vec<usize> {
        cycle_labels(&self.permutation())
    }

    pub fn to_text(&self, abbreviated: bool) -> String {
        format_braid(self, abbreviated)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_braid(self, false))
    }
}

impl std::str::FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s, None)
    }
}

/// Unsigned projection of a braid word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidUniverse {
    strands: usize,
    indices: Vec<u8>,
}

impl BraidUniverse {
    pub fn new(strands: usize, indices: Vec<u8>) -> Result<Self, BraidError> {
        if strands < 2 || strands > MAX_INDEX as usize + 1 {
            return Err(BraidError::BadStrands(strands));
        }
        if indices.is_empty() {
            return Err(BraidError::EmptyUniverse);
        }
        for &i in &indices {
            if i == 0 || i as usize >= strands {
                return Err(BraidError::IndexOutOfRange { index: i, strands });
            }
        }
        Ok(BraidUniverse { strands, indices })
    }

    pub(crate) fn from_parts_unchecked(strands: usize, indices: Vec<u8>) -> Self {
        BraidUniverse { strands, indices }
    }

    pub fn of(word: &BraidWord) -> Result<Self, BraidError> {
        BraidUniverse::new(word.strands, word.universe())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn permutation(&self) -> Vec<usize> {
        permutation_of(self.strands, self.indices.iter().copied())
    }

    pub fn components(&self) -> usize {
        cycle_count(&self.permutation())
    }

    pub fn orientation_variants(&self) -> Vec<Vec<u8>> {
        orientation_variants(self.strands, &self.indices)
    }

    pub fn min_orientation(&self) -> Vec<u8> {
        min_orientation(self.strands, &self.indices)
    }

    /// Signs the universe from a code: bit `k` set means crossing `k` is
    /// non-alternating.
    pub fn sign_with(&self, nonalternating: &[bool]) -> BraidWord {
        debug_assert_eq!(nonalternating.len(), self.indices.len());
        let gens = self
            .indices
            .iter()
            .zip(nonalternating)
            .map(|(&i, &b)| Generator::from_code_bit(i, b))
            .collect();
        BraidWord { strands: self.strands, gens }
    }
}

impl fmt::Display for BraidUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]/{}", parts.join(","), self.strands)
    }
}

/// Per-crossing alternation bits; `true` marks a non-alternating crossing.
/// Compared big-endian: the first crossing is the most significant bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinaryCode {
    pub bits: Vec<bool>,
}

impl BinaryCode {
    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn complement(&self) -> BinaryCode {
        BinaryCode { bits: self.bits.iter().map(|b| !b).collect() }
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn parse_braid(text: &str, strands_override: Option<usize>) -> Result<BraidWord, BraidError> {
    let mut gens: Vec<Generator> = Vec::new();
    let mut chars = text.char_indices().peekable();
    let mut last: Option<Generator> = None;
    while let Some((pos, ch)) = chars.next() {
        if ch.is_whitespace() {
            continue;
        }
        if ch.is_ascii_digit() {
            let Some(g) = last else {
                return Err(BraidError::DigitWithoutLetter { pos });
            };
            let mut count = ch.to_digit(10).unwrap() as usize;
            while let Some(&(_, d)) = chars.peek() {
                match d.to_digit(10) {
                    Some(v) => {
                        count = count * 10 + v as usize;
                        chars.next();
                    }
                    None => break,
                }
            }
            if count == 0 {
                return Err(BraidError::ZeroRepeat { pos });
            }
            // the letter itself was already pushed once
            gens.extend(std::iter::repeat_n(g, count - 1));
            last = None;
            continue;
        }
        let g = match ch {
            'A'..='Y' => Generator::pos(ch as u8 - b'A' + 1),
            'a'..='y' => Generator::neg(ch as u8 - b'a' + 1),
            _ => return Err(BraidError::BadChar { ch, pos }),
        };
        gens.push(g);
        last = Some(g);
    }
    let needed = gens.iter().map(|g| g.index as usize + 1).max().unwrap_or(0);
    let strands = match strands_override {
        Some(s) => {
            if let Some(g) = gens.iter().find(|g| g.index as usize >= s) {
                return Err(BraidError::IndexOutOfRange { index: g.index, strands: s });
            }
            s
        }
        None if gens.is_empty() => return Err(BraidError::Empty),
        None => needed,
    };
    BraidWord::new(strands, gens)
}

pub fn format_braid(word: &BraidWord, abbreviated: bool) -> String {
    let mut out = String::with_capacity(word.gens.len());
    let gens = &word.gens;
    let mut k = 0;
    while k < gens.len() {
        let g = gens[k];
        let mut run = 1;
        while k + run < gens.len() && gens[k + run] == g {
            run += 1;
        }
        if abbreviated && run >= 3 {
            out.push(g.letter());
            out.push_str(&run.to_string());
        } else {
            for _ in 0..run {
                out.push(g.letter());
            }
        }
        k += run;
    }
    out
}

fn permutation_of(strands: usize, indices: impl Iterator<Item = u8>) -> Vec<usize> {
    // track which top strand sits at each position
    let mut at: Vec<usize> = (0..strands).collect();
    for i in indices {
        let i = i as usize - 1;
        at.swap(i, i + 1);
    }
    let mut perm = vec![0; strands];
    for (pos, &strand) in at.iter().enumerate() {
        perm[strand] = pos;
    }
    perm
}

fn cycle_labels(perm: &[usize]) -> Vec<usize> {
    let mut label = vec![usize::MAX; perm.len()];
    let mut next = 0;
    for start in 0..perm.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut p = start;
        while label[p] == usize::MAX {
            label[p] = next;
            p = perm[p];
        }
        next += 1;
    }
    label
}

fn cycle_count(perm: &[usize]) -> usize {
    cycle_labels(perm).into_iter().max().map_or(0, |m| m + 1)
}

/// All cyclic starting points, read up or down, turned over or not.
pub fn orientation_variants(strands: usize, indices: &[u8]) -> Vec<Vec<u8>> {
    let c = indices.len();
    let s = strands as u8;
    let mut out: Vec<Vec<u8>> = Vec::with_capacity(4 * c);
    for r in 0..c.max(1) {
        let mut rot: Vec<u8> = indices.to_vec();
        if c > 0 {
            rot.rotate_left(r);
        }
        let rev: Vec<u8> = rot.iter().rev().copied().collect();
        let flip: Vec<u8> = rot.iter().map(|&i| s - i).collect();
        let flip_rev: Vec<u8> = flip.iter().rev().copied().collect();
        out.push(rot);
        out.push(rev);
        out.push(flip);
        out.push(flip_rev);
    }
    out.sort();
    out.dedup();
    out
}

pub fn min_orientation(strands: usize, indices: &[u8]) -> Vec<u8> {
    let c = indices.len();
    if c == 0 {
        return Vec::new();
    }
    let s = strands as u8;
    let mut best: Vec<u8> = indices.to_vec();
    let mut cand = vec![0u8; c];
    for r in 0..c {
        for variant in 0..4 {
            for k in 0..c {
                let src = match variant {
                    0 | 2 => indices[(r + k) % c],
                    _ => indices[(r + c - k) % c],
                };
                cand[k] = if variant >= 2 { s - src } else { src };
            }
            if cand < best {
                best.copy_from_slice(&cand);
            }
        }
    }
    best
}

/// The minimum-braid total order: crossings, strands, universe, code.
pub fn compare_minimum(a: &BraidWord, b: &BraidWord) -> Ordering {
    a.crossings()
        .cmp(&b.crossings())
        .then(a.strands.cmp(&b.strands))
        .then_with(|| a.gens.iter().map(|g| g.index).cmp(b.gens.iter().map(|g| g.index)))
        .then_with(|| {
            a.gens
                .iter()
                .map(|g| !g.is_alternating())
                .cmp(b.gens.iter().map(|g| !g.is_alternating()))
        })
}
