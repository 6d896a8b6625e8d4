use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::braid::{parse_braid, BraidWord, Generator};
use crate::catalog::Catalog;
use crate::fixture::Fixture;
use crate::invariants::{alexander, homfly, link_key, AlexanderRecord, IdentityKey, InvariantError};
use crate::poly::BiPoly;

use super::{cyclic_class, free_reduce};

const LINK_CROSSINGS_TSV: &str = include_str!("../../data/link_crossings.tsv");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColumnError {
    #[error("insufficient catalog depth: seed needs {needed} crossings on {strands} strands, catalog has {have}")]
    InsufficientDepth { needed: usize, strands: usize, have: usize },
    #[error("seed {seed} is not a minimum braid; the catalog has {minimum}")]
    SeedNotMinimum { seed: String, minimum: String },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// `A` followed by `word`.
pub fn prepend_a(word: &BraidWord) -> BraidWord {
    let mut gens = vec![Generator::pos(1)];
    gens.extend_from_slice(word.gens());
    BraidWord::new(word.strands().max(2), gens).expect("index 1 fits")
}

/// Tags and link crossing numbers known for links, keyed by identity.
#[derive(Debug, Clone, Default)]
pub struct LinkNames {
    by_word: HashMap<BraidWord, (Option<String>, u32)>,
    by_key: HashMap<IdentityKey, (Option<String>, u32)>,
}

fn tag_crossings(tag: &str) -> Option<u32> {
    tag.split(':').next()?.parse().ok()
}

impl LinkNames {
    /// Fixture rows with trustworthy braids, tagged catalog entries and the
    /// embedded list of crossing numbers for a few links past the tables.
    pub fn new(fixture: &Fixture, catalog: Option<&Catalog>) -> Result<LinkNames, InvariantError> {
        let mut names = LinkNames::default();
        for r in fixture.rows.iter().filter(|r| r.braid_usable()) {
            if let (Some(w), Some(c)) = (&r.braid, r.link_crossings()) {
                names.insert(w, Some(r.tag.clone()), c)?;
            }
        }
        if let Some(cat) = catalog {
            for e in cat.entries().iter().filter(|e| !e.has_provisional_tag()) {
                if let Some(tag) = &e.tag {
                    if let Some(c) = tag_crossings(tag) {
                        names.by_word.entry(e.word.clone()).or_insert((Some(tag.clone()), c));
                        names.by_key.entry(e.key.clone()).or_insert((Some(tag.clone()), c));
                    }
                }
            }
        }
        for line in LINK_CROSSINGS_TSV.lines().skip(1).filter(|l| !l.trim().is_empty()) {
            let f: Vec<&str> = line.split('\t').collect();
            let w = parse_braid(f[0], None).expect("embedded braid");
            names.insert(&w, None, f[1].parse().expect("embedded crossing number"))?;
        }
        Ok(names)
    }

    fn insert(&mut self, w: &BraidWord, tag: Option<String>, c: u32) -> Result<(), InvariantError> {
        self.by_word.entry(w.clone()).or_insert((tag.clone(), c));
        self.by_key.entry(link_key(w)?).or_insert((tag, c));
        Ok(())
    }

    /// Tag (when tabulated) and link crossing number of the closure.
    pub fn lookup(&self, w: &BraidWord) -> Result<Option<(Option<String>, u32)>, InvariantError> {
        if let Some(v) = self.by_word.get(w) {
            return Ok(Some(v.clone()));
        }
        Ok(self.by_key.get(&link_key(w)?).cloned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Minimality {
    Minimum,
    NotMinimum { minimum: String },
    /// Past the catalog depth.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub word: BraidWord,
    pub components: usize,
    pub record: AlexanderRecord,
    pub minimality: Minimality,
    pub tag: Option<String>,
    pub link_crossings: Option<u32>,
    /// Link crossing number moved by other than one from the cell above.
    /// `None` when either number is unknown.
    pub z_star: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StarKind {
    Y,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Star {
    pub kind: StarKind,
    /// Index of the cell above the exception.
    pub cell: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Column {
    pub seed: BraidWord,
    pub cells: Vec<Cell>,
}

impl Column {
    pub fn stars(&self) -> Vec<Star> {
        let mut out = Vec::new();
        for (k, c) in self.cells.iter().enumerate().skip(1) {
            if matches!(c.minimality, Minimality::NotMinimum { .. }) {
                out.push(Star { kind: StarKind::Y, cell: k - 1 });
            }
            if c.z_star == Some(true) {
                out.push(Star { kind: StarKind::Z, cell: k - 1 });
            }
        }
        out
    }

    /// Cells past the first whose catalog or crossing status is unknown.
    pub fn unknown_cells(&self) -> usize {
        self.cells.iter().skip(1).filter(|c| c.minimality == Minimality::Unknown || c.z_star.is_none()).count()
    }
}

/// The seed and `depth` successive [`prepend_a`] images, each checked
/// against the catalog and the known crossing numbers.
pub fn build_column(
    seed: &BraidWord,
    depth: usize,
    catalog: &Catalog,
    names: &LinkNames,
) -> Result<Column, ColumnError> {
    if !catalog.covers(seed.crossings(), seed.strands()) {
        return Err(ColumnError::InsufficientDepth {
            needed: seed.crossings(),
            strands: seed.strands(),
            have: catalog.max_crossings(),
        });
    }
    match catalog.lookup(seed)? {
        Some(e) if &e.word == seed => {}
        found => {
            return Err(ColumnError::SeedNotMinimum {
                seed: seed.to_string(),
                minimum: found.map(|e| e.word.to_string()).unwrap_or_default(),
            })
        }
    }
    let mut cells: Vec<Cell> = Vec::with_capacity(depth + 1);
    let mut w = seed.clone();
    for k in 0..=depth {
        if k > 0 {
            w = prepend_a(&w);
        }
        let minimality = match catalog.lookup(&w)? {
            Some(e) if e.word == w => Minimality::Minimum,
            Some(e) => Minimality::NotMinimum { minimum: e.word.to_string() },
            None => Minimality::Unknown,
        };
        let named = names.lookup(&w)?;
        let link_crossings = named.as_ref().map(|n| n.1);
        let z_star = match (cells.last().and_then(|c| c.link_crossings), link_crossings) {
            (Some(a), Some(b)) => Some(b != a + 1),
            _ => None,
        };
        cells.push(Cell {
            components: w.components(),
            record: alexander(&w),
            minimality,
            tag: named.and_then(|n| n.0),
            link_crossings,
            z_star,
            word: w.clone(),
        });
    }
    Ok(Column { seed: seed.clone(), cells })
}

/// `sum_i i^j a_i` over the coefficients `a_1, a_2, ...` of the polynomial.
fn coefficient_moment(record: &AlexanderRecord, j: u32) -> i128 {
    record.poly.coeffs().iter().enumerate().map(|(i, &a)| (i as i128 + 1).pow(j) * a as i128).sum()
}

/// Five-part code: strands and `a`/`n` of the top cell; the sign of the
/// coefficient sum of the first knot in the column, or for columns of links
/// the sign of the first nonvanishing moment `sum i^j a_i` of the top cell
/// (`=` when all vanish up to order `k-1` for `k` components); `z` of the top
/// cell; `o`/`e` for the parity of its constant coefficient.
pub fn column_type(column: &Column) -> String {
    let top = &column.cells[0];
    let moment = |cell: &Cell, orders: u32| {
        (0..orders).map(|j| coefficient_moment(&cell.record, j)).find(|&m| m != 0)
    };
    let sign = match column.cells.iter().find(|c| c.components == 1) {
        Some(knot) => moment(knot, 1),
        None => moment(top, top.components as u32),
    }
    .map_or('=', |m| if m > 0 { '+' } else { '-' });
    let low = top.record.poly.coeffs().first().copied().unwrap_or(0);
    format!(
        "{}{}{}{}{}",
        top.word.strands(),
        if top.word.is_alternating() { 'a' } else { 'n' },
        sign,
        top.record.z,
        if low % 2 == 0 { 'e' } else { 'o' }
    )
}

/// Whether mirroring one seed and prepending `A` crossings lands, after
/// cancellation and up to rotation and far commutation, on a word of the
/// other column. A column is never paired with itself.
pub fn column_pair(a: &Column, b: &Column) -> bool {
    let overlap = a.cells.iter().any(|x| b.cells.iter().any(|y| x.word == y.word));
    !overlap && (reaches(a, b) || reaches(b, a))
}

fn reaches(from: &Column, to: &Column) -> bool {
    let strands = from.seed.strands();
    let targets: Vec<Vec<Vec<Generator>>> = to
        .cells
        .iter()
        .filter(|c| c.word.strands() == strands)
        .map(|c| cyclic_class(&c.word))
        .collect();
    let longest = to.cells.iter().map(|c| c.word.crossings()).max().unwrap_or(0);
    let mirrored = from.seed.mirror();
    for k in 1..=longest + from.seed.crossings() {
        let mut gens = vec![Generator::pos(1); k];
        gens.extend_from_slice(mirrored.gens());
        let reduced = free_reduce(&gens, true);
        if reduced.is_empty() || reduced.len() > longest {
            continue;
        }
        let w = BraidWord::new(strands, reduced).expect("indices kept");
        let first = cyclic_class(&w).into_iter().next();
        if targets.iter().any(|t| t.first() == first.as_ref()) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnRows {
    /// Change of the absolute coefficient sum between consecutive cells and
    /// its value in the top cell.
    pub al: (i64, i64),
    pub al_steps: Vec<i64>,
    /// HOMFLYPT at `x = y = 1`, cell by cell.
    pub hx: Vec<i64>,
    /// `Hx(r) - Hx(r-1) + Hx(r-2)` from the third cell on.
    pub hx_residuals: Vec<i64>,
    /// Least period dividing six, if the sequence has one.
    pub hx_period: Option<usize>,
    pub hr: HrRow,
}

/// Cell values at `x = -1, y = 1`, where the skein relation of a column
/// becomes `f(k+1) = f(k) + f(k-1)`. The sequence is run backwards to its
/// least nonnegative starting pair, up to an overall sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HrRow {
    pub sign: i64,
    pub initial: (i64, i64),
    pub top: i64,
    /// For Fibonacci columns with top value one: which of the three ones of
    /// `1, 0, 1, 1, 2, ...` the top cell is.
    pub position: Option<char>,
}

impl HrRow {
    pub fn from_top_two(f1: i64, f2: i64) -> HrRow {
        let sign = if f1 < 0 || (f1 == 0 && f2 < 0) { -1 } else { 1 };
        let (mut a, mut b) = (sign * f1, sign * f2);
        while b - a >= 0 && (a, b) != (0, 0) {
            (a, b) = (b - a, a);
        }
        let position = match ((a, b), sign * f1, sign * f2) {
            ((1, 0), 1, 0) => Some('a'),
            ((1, 0), 1, 1) => Some('b'),
            ((1, 0), 1, 2) => Some('c'),
            _ => None,
        };
        HrRow { sign, initial: (a, b), top: f1, position }
    }
}

impl std::fmt::Display for HrRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        let t = if self.sign < 0 { '-' } else { '+' };
        write!(f, "{s}{},{} {t}{}", self.initial.0, self.initial.1, self.top.abs())?;
        if let Some(p) = self.position {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub fn column_rows(column: &Column) -> Result<ColumnRows, InvariantError> {
    let sums: Vec<i64> = column.cells.iter().map(|c| c.record.poly.abs_coeff_sum()).collect();
    let al_steps: Vec<i64> = sums.windows(2).map(|p| p[1] - p[0]).collect();
    let hx: Vec<i64> =
        column.cells.iter().map(|c| homfly(&c.word).map(|h| h.eval_units(1, 1))).collect::<Result<_, _>>()?;
    let hx_residuals: Vec<i64> = hx.windows(3).map(|p| p[2] - p[1] + p[0]).collect();
    let hx_period = [1, 2, 3, 6].into_iter().find(|&p| hx.len() > p && (p..hx.len()).all(|i| hx[i] == hx[i - p]));
    let at = |w: &BraidWord| homfly(w).map(|h| h.eval_units(-1, 1));
    let hr = HrRow::from_top_two(at(&column.seed)?, at(&prepend_a(&column.seed))?);
    Ok(ColumnRows {
        al: (al_steps.first().copied().unwrap_or(0), sums[0]),
        al_steps,
        hx,
        hx_residuals,
        hx_period,
        hr,
    })
}

/// `y H(AAAZ) - H(AAZ) + x H(AZ)` for a seed `AZ`; zero by the skein
/// relation.
pub fn hr_residual(seed: &BraidWord) -> Result<BiPoly, InvariantError> {
    let h1 = homfly(seed)?;
    let w2 = prepend_a(seed);
    let h2 = homfly(&w2)?;
    let h3 = homfly(&prepend_a(&w2))?;
    let mut r = h3.mul_monomial(1, 0, 1);
    r.add_scaled(&h2, -1, 0, 0);
    r.add_scaled(&h1, 1, 1, 0);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{assign_tags, enumerate_catalog};
    use std::sync::OnceLock;

    fn w(s: &str) -> BraidWord {
        parse_braid(s, None).unwrap()
    }

    fn setup() -> &'static (Catalog, LinkNames) {
        static S: OnceLock<(Catalog, LinkNames)> = OnceLock::new();
        S.get_or_init(|| {
            let f = Fixture::embedded();
            let mut cat = enumerate_catalog(9, 6, Some(&f)).unwrap();
            assign_tags(&mut cat, &f).unwrap();
            let names = LinkNames::new(&f, Some(&cat)).unwrap();
            (cat, names)
        })
    }

    fn col(seed: &str, depth: usize) -> Column {
        let (cat, names) = setup();
        build_column(&w(seed), depth, cat, names).unwrap()
    }

    #[test]
    fn prepend() {
        assert_eq!(prepend_a(&w("AA")), w("AAA"));
        assert_eq!(prepend_a(&w("AbAb")), w("AAbAb"));
        assert_eq!(prepend_a(&w("AA")).components(), 1);
    }

    #[test]
    fn first_column() {
        let c = col("AA", 4);
        let words: Vec<String> = c.cells.iter().map(|c| c.word.to_string()).collect();
        assert_eq!(words, ["AA", "AAA", "AAAA", "AAAAA", "AAAAAA"]);
        assert!(c.stars().is_empty());
        assert_eq!(c.cells[1].tag.as_deref(), Some("3:1-01"));
        assert_eq!(column_type(&c), "2a+0o");
        let rows = column_rows(&c).unwrap();
        assert_eq!(&rows.hx[..2], &[-1, -2]);
        assert_eq!(rows.hr.to_string(), "1,0 +1c");
    }

    #[test]
    fn fourth_column() {
        let c = col("AAbAbb", 3);
        assert_eq!(column_type(&c), "3a+0o");
        let rows = column_rows(&c).unwrap();
        assert_eq!(rows.al, (5, 13));
        assert_eq!(rows.hr.to_string(), "2,1 +3");
        assert_eq!(&rows.hx[..2], &[1, 2]);
    }

    #[test]
    fn hr_labels() {
        let cases = [((1, 2), "1,0 +1c"), ((0, -1), "-1,0 -0"), ((2, 3), "1,0 +2"), ((1, 1), "1,0 +1b")];
        for ((a, b), text) in cases {
            assert_eq!(HrRow::from_top_two(a, b).to_string(), text);
        }
        assert_eq!(HrRow::from_top_two(5, 7).to_string(), "3,2 +5");
        assert_eq!(HrRow::from_top_two(-3, -4).to_string(), "-2,1 -3");
        assert_eq!(HrRow::from_top_two(1, 0).position, Some('a'));
    }

    #[test]
    fn seventh_column_type() {
        assert_eq!(column_type(&col("AABacBc", 1)), "4n-1e");
    }

    #[test]
    fn pairs() {
        let c1 = col("AA", 3);
        let c2 = col("AbAb", 3);
        let c3 = col("AABaB", 3);
        let c4 = col("AAbAbb", 2);
        let c5 = col("AAABaBB", 2);
        assert!(column_pair(&c2, &c3));
        assert!(column_pair(&c4, &c5));
        assert!(!column_pair(&c1, &c1));
        for other in [&c2, &c3, &c4, &c5] {
            assert!(!column_pair(&c1, other));
        }
    }

    #[test]
    fn seed_checks() {
        let (cat, names) = setup();
        assert!(matches!(
            build_column(&w("AAAbAAAAAAA"), 1, cat, names),
            Err(ColumnError::InsufficientDepth { .. })
        ));
        assert!(matches!(build_column(&w("AAAB"), 1, cat, names), Err(ColumnError::SeedNotMinimum { .. })));
    }

    #[test]
    fn skein_residual_vanishes() {
        for s in ["AA", "AbAb", "AABacBc", "AbaCbaCbdCd"] {
            assert!(hr_residual(&w(s)).unwrap().is_zero(), "{s}");
        }
    }

    #[test]
    fn z_star_from_known_successors() {
        let (_, names) = setup();
        for (seed, before, after) in [("AbaCbaCbdCd", 9, 11), ("AbaCbaCdCbCd", 10, 12)] {
            let s = w(seed);
            assert_eq!(names.lookup(&s).unwrap().map(|n| n.1), Some(before));
            assert_eq!(names.lookup(&prepend_a(&s)).unwrap().map(|n| n.1), Some(after));
        }
    }
}
