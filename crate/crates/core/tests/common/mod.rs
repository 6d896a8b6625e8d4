#![allow(dead_code, unused_imports)]

mod oracles;

pub use oracles::*;

use minbraid::analysis::LinkNames;
use minbraid::braid::{parse_braid, BraidWord};
use minbraid::catalog::{assign_tags, enumerate_catalog, Catalog, CatalogEntry, RowStatus, VerifyReport};
use minbraid::fixture::Fixture;

pub fn w(text: &str) -> BraidWord {
    parse_braid(text, None).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// A tagged catalog with the verification report that tagged it.
pub struct Tabulated {
    pub fixture: Fixture,
    pub catalog: Catalog,
    pub report: VerifyReport,
    pub names: LinkNames,
}

impl Tabulated {
    pub fn build(max_crossings: usize, max_strands: usize) -> Tabulated {
        let fixture = Fixture::embedded();
        let mut catalog = enumerate_catalog(max_crossings, max_strands, Some(&fixture)).unwrap();
        let report = assign_tags(&mut catalog, &fixture).unwrap();
        let names = LinkNames::new(&fixture, Some(&catalog)).unwrap();
        Tabulated { fixture, catalog, report, names }
    }

    /// Entry a row resolved to, directly or through its invariants.
    pub fn entry_of(&self, tag: &str) -> Option<&CatalogEntry> {
        let row = self.report.rows.iter().find(|r| r.tag == tag)?;
        match row.status {
            RowStatus::Match { entry } | RowStatus::ExemptMatch { entry, .. } => Some(&self.catalog.entries()[entry]),
            _ => None,
        }
    }
}
