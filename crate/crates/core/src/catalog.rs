//! The minimum-braid catalog: every enumerated word, first occurrence of each
//! link kept, checked against the published tables.
//!
//! Words arrive in canonical order, so the first word seen for an identity
//! key is that link's minimum braid. Later words with the same key are
//! dropped, except when the fixture says they name a different link (a
//! HOMFLYPT collision); those are retained next to the first and flagged.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{parse_braid, BraidWord};
use crate::enumeration::{sign_assignments, universes};
use crate::fixture::{Fixture, FixtureRow, Table};
use crate::invariants::{alexander, link_key, AlexanderRecord, IdentityKey, InvariantError, MAX_HECKE_STRANDS};
use crate::poly::BiPoly;

pub const CSV_HEADER: [&str; 9] =
    ["tag", "components", "strands", "crossings", "braid", "ap10", "z", "digital", "unknotting"];

pub const DEFAULT_MAX_STRANDS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub word: BraidWord,
    pub components: usize,
    pub strands: usize,
    pub crossings: usize,
    pub alternating: bool,
    pub record: AlexanderRecord,
    pub key: IdentityKey,
    pub tag: Option<String>,
    pub unknotting: Option<u32>,
}

impl CatalogEntry {
    pub fn from_word(word: BraidWord) -> Result<CatalogEntry, InvariantError> {
        let key = link_key(&word)?;
        Ok(Self::with_key(word, key, None))
    }

    fn with_key(word: BraidWord, key: IdentityKey, record: Option<AlexanderRecord>) -> CatalogEntry {
        CatalogEntry {
            components: word.components(),
            strands: word.strands(),
            crossings: word.crossings(),
            alternating: word.is_alternating(),
            record: record.unwrap_or_else(|| alexander(&word)),
            key,
            word,
            tag: None,
            unknotting: None,
        }
    }

    /// Tags of the form `c?:k-n` stand in for links absent from the tables.
    pub fn has_provisional_tag(&self) -> bool {
        self.tag.as_deref().is_some_and(|t| t.starts_with("c?"))
    }

    /// Link crossing number from the tag, when the tag is not provisional.
    pub fn link_crossings(&self) -> Option<u32> {
        self.tag.as_deref()?.split(':').next()?.parse().ok()
    }
}

/// Distinct minimum-braid candidates that share one identity key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionReport {
    pub key: IdentityKey,
    pub words: Vec<BraidWord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identified {
    New(usize),
    Duplicate(usize),
    Collision(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: HashMap<IdentityKey, usize>,
    resolution: HashMap<BraidWord, String>,
    max_crossings: usize,
    max_strands: usize,
}

impl Catalog {
    /// An empty catalog that knows which fixture words name distinct links.
    pub fn new(fixture: Option<&Fixture>) -> Catalog {
        let mut resolution = HashMap::new();
        if let Some(f) = fixture {
            for r in f.rows.iter().filter(|r| r.braid_usable()) {
                if let Some(w) = &r.braid {
                    resolution.entry(w.clone()).or_insert_with(|| r.tag.clone());
                }
            }
        }
        Catalog { entries: Vec::new(), index: HashMap::new(), resolution, max_crossings: 0, max_strands: 0 }
    }

    /// Rebuilds a catalog from entries already in canonical order.
    pub fn from_entries(entries: Vec<CatalogEntry>, max_crossings: usize, max_strands: usize) -> Catalog {
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            index.entry(e.key.clone()).or_insert(i);
        }
        Catalog { entries, index, resolution: HashMap::new(), max_crossings, max_strands }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_crossings(&self) -> usize {
        self.max_crossings
    }

    pub fn max_strands(&self) -> usize {
        self.max_strands
    }

    /// Whether every braid with `crossings` crossings on at most `strands`
    /// strands has been enumerated.
    pub fn covers(&self, crossings: usize, strands: usize) -> bool {
        crossings <= self.max_crossings && strands <= self.max_strands
    }

    /// First (minimum) entry for a key.
    pub fn get(&self, key: &IdentityKey) -> Option<&CatalogEntry> {
        self.index.get(key).map(|&i| &self.entries[i])
    }

    /// Entry for the link of `word`; among colliding entries the one with
    /// this exact word wins.
    pub fn lookup(&self, word: &BraidWord) -> Result<Option<&CatalogEntry>, InvariantError> {
        let key = link_key(word)?;
        Ok(self.lookup_key(&key, word))
    }

    fn lookup_key(&self, key: &IdentityKey, word: &BraidWord) -> Option<&CatalogEntry> {
        let first = *self.index.get(key)?;
        let exact = self.entries[first..].iter().find(|e| &e.key == key && &e.word == word);
        exact.or(Some(&self.entries[first]))
    }

    /// Files `word` under its key. Returns how it was classified.
    pub fn identify(&mut self, word: BraidWord) -> Result<Identified, InvariantError> {
        let key = link_key(&word)?;
        Ok(self.identify_keyed(word, key, None))
    }

    fn identify_keyed(&mut self, word: BraidWord, key: IdentityKey, record: Option<AlexanderRecord>) -> Identified {
        if let Some(&first) = self.index.get(&key) {
            let Some(tag) = self.resolution.get(&word) else {
                return Identified::Duplicate(first);
            };
            let mut same_key = self.entries[first..].iter().filter(|e| e.key == key);
            if same_key.any(|e| self.resolution.get(&e.word) == Some(tag)) {
                return Identified::Duplicate(first);
            }
            self.push(word, key, record);
            return Identified::Collision(self.entries.len() - 1);
        }
        self.index.insert(key.clone(), self.entries.len());
        self.push(word, key, record);
        Identified::New(self.entries.len() - 1)
    }

    fn push(&mut self, word: BraidWord, key: IdentityKey, record: Option<AlexanderRecord>) {
        self.entries.push(CatalogEntry::with_key(word, key, record));
    }

    /// Keys held by more than one entry.
    pub fn collisions(&self) -> Vec<CollisionReport> {
        let mut seen: HashMap<&IdentityKey, usize> = HashMap::new();
        let mut out: Vec<CollisionReport> = Vec::new();
        for e in &self.entries {
            match seen.get(&e.key) {
                Some(&k) => out[k].words.push(e.word.clone()),
                None => {
                    seen.insert(&e.key, out.len());
                    out.push(CollisionReport { key: e.key.clone(), words: vec![e.word.clone()] });
                }
            }
        }
        out.retain(|c| c.words.len() > 1);
        out
    }

    /// Whether the entry at `i` shares its key with an earlier entry.
    pub fn is_collision(&self, i: usize) -> bool {
        self.index.get(&self.entries[i].key) != Some(&i)
    }

    pub fn entry_mut(&mut self, i: usize) -> &mut CatalogEntry {
        &mut self.entries[i]
    }
}

/// Enumerates every link with a braid of at most `max_crossings` crossings on
/// at most `max_strands` strands. The unknot is the base entry.
pub fn enumerate_catalog(
    max_crossings: usize,
    max_strands: usize,
    fixture: Option<&Fixture>,
) -> Result<Catalog, InvariantError> {
    enumerate_catalog_with_progress(max_crossings, max_strands, fixture, |_, _, _| {})
}

/// As [`enumerate_catalog`], calling `progress(c, s, entries)` after each
/// slice.
pub fn enumerate_catalog_with_progress(
    max_crossings: usize,
    max_strands: usize,
    fixture: Option<&Fixture>,
    mut progress: impl FnMut(usize, usize, usize),
) -> Result<Catalog, InvariantError> {
    if max_strands > MAX_HECKE_STRANDS {
        return Err(InvariantError::TooManyStrands { strands: max_strands, max: MAX_HECKE_STRANDS });
    }
    let mut cat = Catalog::new(fixture);
    cat.max_crossings = max_crossings;
    cat.max_strands = max_strands.max(1);
    let unknot = BraidWord::unknot();
    let key = link_key(&unknot)?;
    cat.identify_keyed(unknot, key, None);
    for c in 1..=max_crossings {
        for s in 2..=max_strands.min(c) {
            let us = universes(s, c);
            let batches: Vec<Vec<(BraidWord, IdentityKey, AlexanderRecord)>> = us
                .par_iter()
                .map(|u| {
                    sign_assignments(u)
                        .into_iter()
                        .map(|w| {
                            let k = link_key(&w)?;
                            let r = alexander(&w);
                            Ok((w, k, r))
                        })
                        .collect::<Result<Vec<_>, InvariantError>>()
                })
                .collect::<Result<_, _>>()?;
            for (w, k, r) in batches.into_iter().flatten() {
                cat.identify_keyed(w, k, Some(r));
            }
            progress(c, s, cat.entries.len());
        }
    }
    Ok(cat)
}

// ------------------------------------------------------------ verification

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub field: &'static str,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RowStatus {
    Match { entry: usize },
    /// Printed braid is flagged; the row's invariants pick out one entry.
    ExemptMatch { entry: usize, braid: String },
    Mismatch { entry: usize, discrepancies: Vec<Discrepancy> },
    Missing,
    /// Printed braid is flagged and the invariants do not single out one
    /// entry.
    Unresolved { candidates: usize },
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub tag: String,
    pub table: Table,
    pub status: RowStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub matched: usize,
    pub exempt_matched: usize,
    pub mismatched: usize,
    pub missing: usize,
    pub unresolved: usize,
    pub out_of_range: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<RowReport>,
}

impl VerifyReport {
    pub fn summary(&self) -> VerifySummary {
        let mut s = VerifySummary::default();
        for r in &self.rows {
            match r.status {
                RowStatus::Match { .. } => s.matched += 1,
                RowStatus::ExemptMatch { .. } => s.exempt_matched += 1,
                RowStatus::Mismatch { .. } => s.mismatched += 1,
                RowStatus::Missing => s.missing += 1,
                RowStatus::Unresolved { .. } => s.unresolved += 1,
                RowStatus::OutOfRange => s.out_of_range += 1,
            }
        }
        s
    }

    /// No row with a usable braid failed.
    pub fn all_match(&self) -> bool {
        let s = self.summary();
        s.mismatched == 0 && s.missing == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowReport> {
        self.rows.iter().filter(|r| matches!(r.status, RowStatus::Mismatch { .. } | RowStatus::Missing))
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matched {}, exempt-matched {}, mismatched {}, missing {}, unresolved {}, out of range {}",
            self.matched, self.exempt_matched, self.mismatched, self.missing, self.unresolved, self.out_of_range
        )
    }
}

fn check_fields(e: &CatalogEntry, row: &FixtureRow, out: &mut Vec<Discrepancy>) {
    let mut diff = |field: &'static str, expected: String, found: String| {
        if expected != found {
            out.push(Discrepancy { field, expected, found });
        }
    };
    diff("ap10", row.ap10.to_string(), e.record.ap10.to_string());
    if !row.exempt("z") {
        diff("z", row.z.to_string(), e.record.z.to_string());
    }
    diff("digital", row.digital.to_string(), link_digital(e).to_string());
    if let Some(k) = row.components() {
        diff("components", k.to_string(), e.components.to_string());
    }
}

/// Digital root as printed in the tables: for a `k`-component link the
/// Alexander value is first divided by `9^(k-1)`.
pub fn link_digital(e: &CatalogEntry) -> u8 {
    let mut v = e.record.ap10;
    for _ in 1..e.components {
        if !v.is_multiple_of(9) {
            break;
        }
        v /= 9;
    }
    crate::invariants::digital(v)
}

fn fallback(cat: &Catalog, row: &FixtureRow) -> Vec<usize> {
    let comps = row.components();
    (0..cat.entries.len())
        .filter(|&i| {
            let e = &cat.entries[i];
            comps.is_none_or(|k| k == e.components)
                && e.record.ap10 == row.ap10
                && (row.exempt("z") || e.record.z == row.z)
                && (row.exempt("s_cr") || (e.strands == row.strands && e.crossings == row.crossings))
                && (row.exempt("alternation") || e.alternating == row.alternating)
        })
        .collect()
}

pub fn verify_row(cat: &Catalog, row: &FixtureRow) -> Result<RowStatus, InvariantError> {
    if !cat.covers(row.crossings, row.strands) {
        return Ok(RowStatus::OutOfRange);
    }
    match (&row.braid, row.braid_usable()) {
        (Some(w), true) => {
            if !cat.covers(w.crossings(), w.strands()) {
                return Ok(RowStatus::OutOfRange);
            }
            let key = link_key(w)?;
            let Some(e) = cat.lookup_key(&key, w) else {
                return Ok(RowStatus::Missing);
            };
            let entry = cat.entries.iter().position(|x| std::ptr::eq(x, e)).expect("entry from this catalog");
            let mut d = Vec::new();
            if &e.word != w {
                d.push(Discrepancy { field: "braid", expected: w.to_text(false), found: e.word.to_text(false) });
            }
            check_fields(e, row, &mut d);
            Ok(if d.is_empty() { RowStatus::Match { entry } } else { RowStatus::Mismatch { entry, discrepancies: d } })
        }
        _ => {
            let c = fallback(cat, row);
            Ok(match c.as_slice() {
                &[entry] => RowStatus::ExemptMatch { entry, braid: cat.entries[entry].word.to_text(false) },
                _ => RowStatus::Unresolved { candidates: c.len() },
            })
        }
    }
}

/// Compares the catalog with the given fixture rows.
pub fn verify<'a>(
    cat: &Catalog,
    rows: impl IntoIterator<Item = &'a FixtureRow>,
) -> Result<VerifyReport, InvariantError> {
    let rows: Vec<&FixtureRow> = rows.into_iter().collect();
    let mut statuses: Vec<RowStatus> = rows.par_iter().map(|r| verify_row(cat, r)).collect::<Result<_, _>>()?;
    // an ambiguous flagged row may still be settled by entries other rows own
    let claimed: HashSet<usize> = statuses
        .iter()
        .filter_map(|s| match s {
            RowStatus::Match { entry } | RowStatus::ExemptMatch { entry, .. } => Some(*entry),
            _ => None,
        })
        .collect();
    for (r, status) in rows.iter().zip(statuses.iter_mut()) {
        if let RowStatus::Unresolved { candidates } = status {
            if *candidates < 2 {
                continue;
            }
            let free: Vec<usize> = fallback(cat, r).into_iter().filter(|i| !claimed.contains(i)).collect();
            if let &[entry] = free.as_slice() {
                *status = RowStatus::ExemptMatch { entry, braid: cat.entries[entry].word.to_text(false) };
            }
        }
    }
    Ok(VerifyReport {
        rows: rows
            .iter()
            .zip(statuses)
            .map(|(r, status)| RowReport { tag: r.tag.clone(), table: r.table, status })
            .collect(),
    })
}

/// Copies fixture tags onto matched entries and gives every other entry a
/// provisional `c?:k-n` tag, numbered per component count in catalog order.
pub fn assign_tags(cat: &mut Catalog, fixture: &Fixture) -> Result<VerifyReport, InvariantError> {
    let report = verify(cat, &fixture.rows)?;
    let mut tagged = HashSet::new();
    for r in &report.rows {
        let entry = match r.status {
            RowStatus::Match { entry } | RowStatus::ExemptMatch { entry, .. } => entry,
            _ => continue,
        };
        if tagged.insert(entry) {
            cat.entries[entry].tag = Some(r.tag.clone());
        }
    }
    let mut counters: HashMap<usize, usize> = HashMap::new();
    for (i, e) in cat.entries.iter_mut().enumerate() {
        if e.crossings == 0 {
            e.tag.get_or_insert_with(|| "0:1-01".to_string());
            continue;
        }
        if tagged.contains(&i) {
            continue;
        }
        let n = counters.entry(e.components).or_insert(0);
        *n += 1;
        e.tag = Some(format!("c?:{}-{:02}", e.components, n));
    }
    Ok(report)
}

// ------------------------------------------------------------ export/import

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Debug, Error)]
pub enum ImportError {
    #[error("row {row}: field {field}: {message}")]
    Field { row: usize, field: &'static str, message: String },
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    tag: String,
    components: usize,
    strands: usize,
    crossings: usize,
    braid: String,
    ap10: u64,
    z: i32,
    digital: u8,
    unknotting: Option<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRow {
    tag: Option<String>,
    components: usize,
    strands: usize,
    crossings: usize,
    braid: String,
    ap10: u64,
    z: i32,
    digital: u8,
    unknotting: Option<u32>,
    alternating: bool,
    homfly: String,
}

pub fn export(entries: &[CatalogEntry], format: Format, out: &mut impl Write) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            for e in entries {
                w.serialize(CsvRow {
                    tag: e.tag.clone().unwrap_or_default(),
                    components: e.components,
                    strands: e.strands,
                    crossings: e.crossings,
                    braid: e.word.to_text(false),
                    ap10: e.record.ap10,
                    z: e.record.z,
                    digital: e.record.digital,
                    unknotting: e.unknotting,
                })?;
            }
            if entries.is_empty() {
                w.write_record(CSV_HEADER)?;
            }
            w.flush()
        }
        Format::Jsonl => {
            for e in entries {
                let row = JsonRow {
                    tag: e.tag.clone(),
                    components: e.components,
                    strands: e.strands,
                    crossings: e.crossings,
                    braid: e.word.to_text(false),
                    ap10: e.record.ap10,
                    z: e.record.z,
                    digital: e.record.digital,
                    unknotting: e.unknotting,
                    alternating: e.alternating,
                    homfly: e.key.homfly.to_canonical(),
                };
                serde_json::to_writer(&mut *out, &row)?;
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

struct Imported {
    tag: Option<String>,
    strands: usize,
    braid: String,
    unknotting: Option<u32>,
    claims: [(&'static str, String); 5],
    homfly: Option<String>,
    alternating: Option<bool>,
}

fn rebuild(row: usize, r: Imported) -> Result<CatalogEntry, ImportError> {
    let field = |field: &'static str, message: String| ImportError::Field { row, field, message };
    let word = parse_braid(&r.braid, Some(r.strands)).map_err(|e| field("braid", e.to_string()))?;
    let mut e = CatalogEntry::from_word(word).map_err(|e| ImportError::Row { row, message: e.to_string() })?;
    let actual = [
        e.components.to_string(),
        e.crossings.to_string(),
        e.record.ap10.to_string(),
        e.record.z.to_string(),
        e.record.digital.to_string(),
    ];
    for ((name, claimed), actual) in r.claims.iter().zip(actual) {
        if *claimed != actual {
            return Err(field(name, format!("{claimed} does not match the braid ({actual})")));
        }
    }
    if let Some(h) = r.homfly {
        let p = BiPoly::parse_canonical(&h).map_err(|e| field("homfly", e.to_string()))?;
        if p != e.key.homfly {
            return Err(field("homfly", "does not match the braid".into()));
        }
    }
    if r.alternating.is_some_and(|a| a != e.alternating) {
        return Err(field("alternating", "does not match the braid".into()));
    }
    e.tag = r.tag.filter(|t| !t.is_empty());
    e.unknotting = r.unknotting;
    Ok(e)
}

/// Reads entries written by [`export`]. Every invariant column is recomputed
/// from the braid and must agree. Rows are numbered from 1, header excluded.
pub fn import(input: impl BufRead, format: Format) -> Result<Vec<CatalogEntry>, ImportError> {
    let mut out = Vec::new();
    match format {
        Format::Csv => {
            let mut rdr = csv::ReaderBuilder::new().from_reader(input);
            let headers = rdr.headers().map_err(|e| ImportError::Row { row: 0, message: e.to_string() })?;
            if headers.iter().ne(CSV_HEADER) {
                return Err(ImportError::Row { row: 0, message: format!("header must be {}", CSV_HEADER.join(",")) });
            }
            for (i, rec) in rdr.deserialize::<CsvRow>().enumerate() {
                let row = i + 1;
                let r = rec.map_err(|e| csv_error(row, e))?;
                out.push(rebuild(
                    row,
                    Imported {
                        tag: Some(r.tag),
                        strands: r.strands,
                        braid: r.braid,
                        unknotting: r.unknotting,
                        claims: claims(r.components, r.crossings, r.ap10, r.z, r.digital),
                        homfly: None,
                        alternating: None,
                    },
                )?);
            }
        }
        Format::Jsonl => {
            for (i, line) in input.lines().enumerate() {
                let row = i + 1;
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let r: JsonRow =
                    serde_json::from_str(&line).map_err(|e| ImportError::Row { row, message: e.to_string() })?;
                out.push(rebuild(
                    row,
                    Imported {
                        tag: r.tag,
                        strands: r.strands,
                        braid: r.braid,
                        unknotting: r.unknotting,
                        claims: claims(r.components, r.crossings, r.ap10, r.z, r.digital),
                        homfly: Some(r.homfly),
                        alternating: Some(r.alternating),
                    },
                )?);
            }
        }
    }
    Ok(out)
}

fn claims(components: usize, crossings: usize, ap10: u64, z: i32, digital: u8) -> [(&'static str, String); 5] {
    [
        ("components", components.to_string()),
        ("crossings", crossings.to_string()),
        ("ap10", ap10.to_string()),
        ("z", z.to_string()),
        ("digital", digital.to_string()),
    ]
}

fn csv_error(row: usize, e: csv::Error) -> ImportError {
    if let csv::ErrorKind::Deserialize { err, .. } = e.kind() {
        if let Some(k) = err.field() {
            let field = CSV_HEADER.get(k as usize).copied().unwrap_or("?");
            return ImportError::Field { row, field, message: err.kind().to_string() };
        }
    }
    ImportError::Row { row, message: e.to_string() }
}
