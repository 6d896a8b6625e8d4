//! Published minimum-braid tables, embedded as TSV.
//!
//! Rows are carried as printed. Rows whose own columns disagree with each
//! other carry `exempt:<what>` flags instead of being corrected; `orig=` keeps
//! a tag as printed when it had to be normalized.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{parse_braid, BraidWord};

const KNOTS_TSV: &str = include_str!("../data/table1_knots.tsv");
const LINKS_TSV: &str = include_str!("../data/table2_links.tsv");
const TRIVIAL_TSV: &str = include_str!("../data/table3_trivial.tsv");
const PALINDROMES_TSV: &str = include_str!("../data/table6_palindromes.tsv");

pub const ROW_HEADER: &str = "tag\ts_cr\tbraid\tap10\tz\td\tu\text_name\tflags";
pub const PALINDROME_HEADER: &str = "tag\tbraid\tpalindrome\tflags";

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("line {line}: field {field}: {message}")]
    Field { line: usize, field: &'static str, message: String },
    #[error("line {line}: expected {expected} tab separated fields, found {found}")]
    Width { line: usize, expected: usize, found: usize },
    #[error("missing or unexpected header")]
    Header,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Table {
    Knots,
    Links,
    Trivial,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table::Knots => "knots",
            Table::Links => "links",
            Table::Trivial => "trivial",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub table: Table,
    pub tag: String,
    pub strands: usize,
    pub alternating: bool,
    pub crossings: usize,
    pub braid_text: String,
    /// `None` when the printed braid text does not parse.
    pub braid: Option<BraidWord>,
    pub ap10: u64,
    pub z: i32,
    pub digital: u8,
    pub unknotting: Option<u32>,
    pub ext_name: String,
    pub flags: Vec<String>,
}

impl FixtureRow {
    /// Link crossing number, the digits before the colon of the tag.
    pub fn link_crossings(&self) -> Option<u32> {
        self.tag.split(':').next()?.parse().ok()
    }

    /// Component count encoded right after the colon of the tag.
    pub fn components(&self) -> Option<usize> {
        let rest = self.tag.split_once(':')?.1;
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        digits.parse().ok()
    }

    pub fn exempt(&self, what: &str) -> bool {
        self.flags.iter().any(|f| f.strip_prefix("exempt:") == Some(what))
    }

    pub fn exemptions(&self) -> impl Iterator<Item = &str> {
        self.flags.iter().filter_map(|f| f.strip_prefix("exempt:"))
    }

    /// Whether the printed braid text is trustworthy as a lookup key.
    pub fn braid_usable(&self) -> bool {
        self.braid.is_some()
            && !["s_cr", "components", "cancelling", "alternation", "braid"].iter().any(|w| self.exempt(w))
    }

    fn to_tsv(&self) -> String {
        let scr = format!("{}{}{:02}", self.strands, if self.alternating { '-' } else { 'n' }, self.crossings);
        let u = self.unknotting.map(|u| u.to_string()).unwrap_or_default();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.tag,
            scr,
            self.braid_text,
            self.ap10,
            self.z,
            self.digital,
            u,
            self.ext_name,
            self.flags.join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromeRow {
    pub tag: String,
    pub braid: BraidWord,
    pub palindrome: BraidWord,
    pub flags: Vec<String>,
}

impl PalindromeRow {
    pub fn exempt(&self, what: &str) -> bool {
        self.flags.iter().any(|f| f.strip_prefix("exempt:") == Some(what))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub rows: Vec<FixtureRow>,
    pub palindromes: Vec<PalindromeRow>,
}

fn field_err(line: usize, field: &'static str, message: impl fmt::Display) -> FixtureError {
    FixtureError::Field { line, field, message: message.to_string() }
}

fn table_of_tag(tag: &str) -> Table {
    let Some((_, rest)) = tag.split_once(':') else {
        return Table::Trivial;
    };
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    match rest[digits.len()..].chars().next() {
        Some('-') | Some('n') if digits == "1" => Table::Knots,
        Some('-') | Some('n') => Table::Links,
        _ => Table::Trivial,
    }
}

pub fn parse_rows(text: &str, table: Option<Table>) -> Result<Vec<FixtureRow>, FixtureError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == ROW_HEADER => {}
        _ => return Err(FixtureError::Header),
    }
    let mut rows = Vec::new();
    for (k, line) in lines {
        let n = k + 1;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 9 {
            return Err(FixtureError::Width { line: n, expected: 9, found: f.len() });
        }
        let scr = f[1];
        let bad_scr = || field_err(n, "s_cr", format!("{scr:?} is not <strands><-|n><crossings>"));
        let mut chars = scr.chars();
        let strands = chars.next().and_then(|c| c.to_digit(10)).ok_or_else(bad_scr)? as usize;
        let alternating = match chars.next() {
            Some('-') => true,
            Some('n') => false,
            _ => return Err(bad_scr()),
        };
        let crossings: usize = chars.as_str().parse().map_err(|_| bad_scr())?;
        let braid = parse_braid(f[2], None).ok();
        let unknotting = if f[6].is_empty() {
            None
        } else {
            Some(f[6].parse().map_err(|e| field_err(n, "u", e))?)
        };
        let flags: Vec<String> =
            f[8].split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
        rows.push(FixtureRow {
            table: table.unwrap_or_else(|| table_of_tag(f[0])),
            tag: f[0].to_string(),
            strands,
            alternating,
            crossings,
            braid_text: f[2].to_string(),
            braid,
            ap10: f[3].parse().map_err(|e| field_err(n, "ap10", e))?,
            z: f[4].parse().map_err(|e| field_err(n, "z", e))?,
            digital: f[5].parse().map_err(|e| field_err(n, "d", e))?,
            unknotting,
            ext_name: f[7].to_string(),
            flags,
        });
    }
    Ok(rows)
}

pub fn parse_palindromes(text: &str) -> Result<Vec<PalindromeRow>, FixtureError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == PALINDROME_HEADER => {}
        _ => return Err(FixtureError::Header),
    }
    let mut rows = Vec::new();
    for (k, line) in lines {
        let n = k + 1;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 4 {
            return Err(FixtureError::Width { line: n, expected: 4, found: f.len() });
        }
        rows.push(PalindromeRow {
            tag: f[0].to_string(),
            braid: parse_braid(f[1], None).map_err(|e| field_err(n, "braid", e))?,
            palindrome: parse_braid(f[2], None).map_err(|e| field_err(n, "palindrome", e))?,
            flags: f[3].split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect(),
        });
    }
    Ok(rows)
}

impl Fixture {
    /// The tables compiled into the binary.
    pub fn embedded() -> Fixture {
        let mut rows = parse_rows(KNOTS_TSV, Some(Table::Knots)).expect("embedded knot table");
        rows.extend(parse_rows(LINKS_TSV, Some(Table::Links)).expect("embedded link table"));
        rows.extend(parse_rows(TRIVIAL_TSV, Some(Table::Trivial)).expect("embedded trivial table"));
        let palindromes = parse_palindromes(PALINDROMES_TSV).expect("embedded palindrome table");
        Fixture { rows, palindromes }
    }

    /// Replaces the embedded rows with those of a TSV file in the same
    /// format; the table of each row is inferred from its tag.
    pub fn from_file(path: &Path) -> Result<Fixture, FixtureError> {
        let text = std::fs::read_to_string(path)?;
        let rows = parse_rows(&text, None)?;
        Ok(Fixture { rows, palindromes: Fixture::embedded().palindromes })
    }

    pub fn rows_in(&self, table: Table) -> impl Iterator<Item = &FixtureRow> {
        self.rows.iter().filter(move |r| r.table == table)
    }

    pub fn by_tag(&self, tag: &str) -> Option<&FixtureRow> {
        self.rows.iter().find(|r| r.tag == tag)
    }

    pub fn to_tsv(&self, table: Table) -> String {
        let mut out = String::from(ROW_HEADER);
        out.push('\n');
        for r in self.rows_in(table) {
            out.push_str(&r.to_tsv());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_load() {
        let f = Fixture::embedded();
        assert_eq!(f.rows_in(Table::Knots).count(), 249);
        assert_eq!(f.rows_in(Table::Links).count(), 247);
        assert!(f.rows_in(Table::Trivial).count() > 60);
        assert_eq!(f.palindromes.len(), 9);
        let t = f.by_tag("3:1-01").unwrap();
        assert_eq!((t.strands, t.crossings, t.ap10, t.z, t.digital), (2, 3, 91, 0, 1));
        assert_eq!(t.unknotting, Some(1));
        assert_eq!(t.link_crossings(), Some(3));
        assert_eq!(t.components(), Some(1));
        assert_eq!(f.by_tag("2:2-01").unwrap().components(), Some(2));
    }

    #[test]
    fn ocr_tags_normalized() {
        let f = Fixture::embedded();
        let r = f.by_tag("10:1n127").unwrap();
        assert!(r.flags.iter().any(|x| x == "orig=10:ln127"));
        assert!(f.by_tag("10:ln127").is_none());
    }

    #[test]
    fn round_trip() {
        let f = Fixture::embedded();
        let text = f.to_tsv(Table::Links);
        assert_eq!(parse_rows(&text, Some(Table::Links)).unwrap(), f.rows_in(Table::Links).cloned().collect::<Vec<_>>());
    }

    #[test]
    fn malformed_rows_locate_the_field() {
        let bad = format!("{ROW_HEADER}\n3:1-01\t2-03\tAAA\tninety\t0\t1\t1\t3-01\t\n");
        let err = parse_rows(&bad, None).unwrap_err();
        assert!(matches!(err, FixtureError::Field { line: 2, field: "ap10", .. }), "{err}");
        let bad = format!("{ROW_HEADER}\n3:1-01\t2-03\n");
        assert!(matches!(parse_rows(&bad, None), Err(FixtureError::Width { line: 2, .. })));
        assert!(matches!(parse_rows("nope", None), Err(FixtureError::Header)));
    }
}
