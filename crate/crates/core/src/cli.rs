//! Command-line front end. [`run`] does all the work so tests can drive it
//! in-process; `main` only wires up the standard streams.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::analysis::{
    build_column, column_rows, column_type, free_trees, is_rrp, rrp_search, tree_counts, tree_is_alternating,
    tree_link_braid, unknotting_number, ColumnError, LinkNames, Minimality, StarKind, Unknotting,
    MAX_TREE_VERTICES,
};
use crate::braid::{parse_braid, BraidError, BraidWord};
use crate::catalog::{
    assign_tags, enumerate_catalog_with_progress, export, link_digital, verify, Catalog, CatalogEntry, Format,
    RowStatus, DEFAULT_MAX_STRANDS,
};
use crate::fixture::{Fixture, Table};
use crate::invariants::{alexander, homfly, InvariantError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_MAX_CROSSINGS: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "minbraid", version, about = "Minimum braids of knots and links")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest braid crossing count to enumerate.
    #[arg(long, global = true)]
    pub max_crossings: Option<usize>,
    /// Largest strand count to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STRANDS)]
    pub max_strands: usize,
    /// Keep only links with this many components.
    #[arg(long, global = true)]
    pub components: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Fixture file replacing the embedded tables.
    #[arg(long, global = true)]
    pub fixture: Option<PathBuf>,
    /// Search budget: crossing switches for `unknot`, moves for `rrp`.
    #[arg(long, global = true)]
    pub budget: Option<u32>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Alexander and HOMFLYPT data of one braid.
    Invariants { braid: String },
    /// List the catalog of minimum braids.
    Enumerate,
    /// Compare the catalog with the tabulated rows.
    Verify,
    /// Unknotting number by exhaustive crossing switches.
    Unknot { braid: String },
    /// Look for a reverse rotated palindrome presenting the same link.
    Rrp { braid: String },
    /// Free tree counts, optionally with tree link braids.
    Trees {
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        /// Also list a braid for every tree of the largest size.
        #[arg(long)]
        braids: bool,
    },
    /// Periodic column obtained by repeatedly prepending `A`.
    Column {
        braid: String,
        /// Cells below the seed.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Write the catalog as CSV, or JSON lines with `--format json`.
    Export,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot parse braid {text:?}: {source}\n  {text}\n  {caret}")]
    Braid { text: String, caret: String, source: BraidError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Braid { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Io(_) => EXIT_MISMATCH,
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Budget(e.to_string())
    }
}

impl From<ColumnError> for CliError {
    fn from(e: ColumnError) -> Self {
        match e {
            ColumnError::Invariant(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn braid_arg(text: &str) -> Result<BraidWord, CliError> {
    parse_braid(text, None).map_err(|source| {
        let pos = match source {
            BraidError::BadChar { pos, .. }
            | BraidError::DigitWithoutLetter { pos }
            | BraidError::ZeroRepeat { pos } => pos,
            _ => 0,
        };
        CliError::Braid { text: text.to_string(), caret: format!("{}^", " ".repeat(pos)), source }
    })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Data goes to `out`, diagnostics and progress to `err`.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.config.jobs.map_or(0, usize::from)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli, out, err)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Invariants { braid } => invariants(cfg, &braid_arg(braid)?, out),
        Command::Enumerate => enumerate(cfg, out, err),
        Command::Verify => verify_cmd(cfg, out, err),
        Command::Unknot { braid } => unknot(cfg, &braid_arg(braid)?, out),
        Command::Rrp { braid } => rrp(cfg, &braid_arg(braid)?, out),
        Command::Trees { max_vertices, braids } => trees(cfg, *max_vertices, *braids, out),
        Command::Column { braid, depth } => column(cfg, &braid_arg(braid)?, *depth, out, err),
        Command::Export => export_cmd(cfg, out, err),
    }
}

fn load_fixture(cfg: &RunConfig) -> Result<Fixture, CliError> {
    match &cfg.fixture {
        Some(p) => Fixture::from_file(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => Ok(Fixture::embedded()),
    }
}

fn build_catalog(
    cfg: &RunConfig,
    max_crossings: usize,
    fixture: &Fixture,
    err: &mut (dyn Write + Send),
) -> Result<Catalog, CliError> {
    let mut cat = enumerate_catalog_with_progress(max_crossings, cfg.max_strands, Some(fixture), |c, s, n| {
        let _ = writeln!(err, "enumerated c={c} s={s}: {n} links");
    })?;
    assign_tags(&mut cat, fixture)?;
    Ok(cat)
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| if f.contains([',', '"', '\n']) { format!("\"{}\"", f.replace('"', "\"\"")) } else { f.clone() })
        .collect::<Vec<_>>()
        .join(",")
}

fn invariants(cfg: &RunConfig, w: &BraidWord, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let rec = alexander(w);
    let components = w.components();
    let entry_digital = CatalogEntry { record: rec.clone(), components, ..CatalogEntry::from_word(BraidWord::unknot())? };
    let digital = link_digital(&entry_digital);
    let h = homfly(w);
    let homfly_text = h.as_ref().map(|p| p.to_canonical()).ok();
    let fields: Vec<(&str, String)> = vec![
        ("braid", w.to_text(false)),
        ("strands", w.strands().to_string()),
        ("crossings", w.crossings().to_string()),
        ("components", components.to_string()),
        ("alternating", w.is_alternating().to_string()),
        ("alexander", rec.poly.to_canonical()),
        ("ap10", rec.ap10.to_string()),
        ("z", rec.z.to_string()),
        ("digital", digital.to_string()),
        ("homfly", homfly_text.clone().unwrap_or_default()),
    ];
    match cfg.format {
        OutputFormat::Text => {
            for (k, v) in &fields {
                writeln!(out, "{k:<12}{v}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "{}", fields.iter().map(|f| f.0).collect::<Vec<_>>().join(","))?;
            writeln!(out, "{}", csv_line(&fields.iter().map(|f| f.1.clone()).collect::<Vec<_>>()))?;
        }
        OutputFormat::Json => {
            let v = json!({
                "braid": w.to_text(false),
                "strands": w.strands(),
                "crossings": w.crossings(),
                "components": components,
                "alternating": w.is_alternating(),
                "alexander": rec.poly.to_canonical(),
                "ap10": rec.ap10,
                "z": rec.z,
                "digital": digital,
                "homfly": homfly_text,
            });
            writeln!(out, "{v}")?;
        }
    }
    match h {
        Ok(_) => Ok(EXIT_OK),
        Err(e) => Err(e.into()),
    }
}

fn selected(cfg: &RunConfig, cat: &Catalog) -> Vec<CatalogEntry> {
    cat.entries().iter().filter(|e| cfg.components.is_none_or(|k| e.components == k)).cloned().collect()
}

fn enumerate(cfg: &RunConfig, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let fixture = load_fixture(cfg)?;
    let cat = build_catalog(cfg, cfg.max_crossings.unwrap_or(DEFAULT_MAX_CROSSINGS), &fixture, err)?;
    let entries = selected(cfg, &cat);
    match cfg.format {
        OutputFormat::Text => {
            for e in &entries {
                writeln!(
                    out,
                    "{:<12} {:<16} {} {:>2} {:>3} {:>10} {:>3} {}",
                    e.tag.as_deref().unwrap_or(""),
                    e.word.to_text(false),
                    if e.alternating { 'a' } else { 'n' },
                    e.components,
                    e.strands,
                    e.record.ap10,
                    e.record.z,
                    link_digital(e)
                )?;
            }
            for c in cat.collisions() {
                let words: Vec<String> = c.words.iter().map(|w| w.to_text(false)).collect();
                writeln!(err, "identity collision: {}", words.join(" "))?;
            }
        }
        OutputFormat::Csv => export(&entries, Format::Csv, &mut &mut *out)?,
        OutputFormat::Json => export(&entries, Format::Jsonl, &mut &mut *out)?,
    }
    Ok(EXIT_OK)
}

fn export_cmd(cfg: &RunConfig, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let fixture = load_fixture(cfg)?;
    let cat = build_catalog(cfg, cfg.max_crossings.unwrap_or(DEFAULT_MAX_CROSSINGS), &fixture, err)?;
    let format = if cfg.format == OutputFormat::Json { Format::Jsonl } else { Format::Csv };
    export(&selected(cfg, &cat), format, &mut &mut *out)?;
    Ok(EXIT_OK)
}

fn status_text(cat: &Catalog, s: &RowStatus) -> (&'static str, String) {
    let word = |i: usize| cat.entries()[i].word.to_text(false);
    match s {
        RowStatus::Match { entry } => ("match", word(*entry)),
        RowStatus::ExemptMatch { entry, .. } => ("exempt-match", word(*entry)),
        RowStatus::Mismatch { entry, discrepancies } => {
            let d: Vec<String> =
                discrepancies.iter().map(|d| format!("{} {} != {}", d.field, d.found, d.expected)).collect();
            ("mismatch", format!("{} {}", word(*entry), d.join("; ")))
        }
        RowStatus::Missing => ("missing", String::new()),
        RowStatus::Unresolved { candidates } => ("unresolved", format!("{candidates} candidates")),
        RowStatus::OutOfRange => ("out-of-range", String::new()),
    }
}

fn verify_cmd(cfg: &RunConfig, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let fixture = load_fixture(cfg)?;
    let cat = build_catalog(cfg, cfg.max_crossings.unwrap_or(DEFAULT_MAX_CROSSINGS), &fixture, err)?;
    let rows = fixture
        .rows
        .iter()
        .filter(|r| matches!(r.table, Table::Knots | Table::Links))
        .filter(|r| cfg.components.is_none_or(|k| r.components() == Some(k)));
    let mut report = verify(&cat, rows)?;
    report.rows.retain(|r| r.status != RowStatus::OutOfRange);
    let ok = report.all_match();
    match cfg.format {
        OutputFormat::Text => {
            for r in &report.rows {
                let (status, detail) = status_text(&cat, &r.status);
                if !matches!(r.status, RowStatus::Match { .. }) {
                    writeln!(out, "{:<12} {status} {detail}", r.tag)?;
                }
            }
            writeln!(out, "{}", report.summary())?;
            if ok {
                writeln!(out, "all rows match")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "tag,table,status,detail")?;
            for r in &report.rows {
                let (status, detail) = status_text(&cat, &r.status);
                writeln!(out, "{}", csv_line(&[r.tag.clone(), r.table.to_string(), status.into(), detail]))?;
            }
        }
        OutputFormat::Json => {
            let v = json!({ "all_match": ok, "summary": report.summary(), "rows": report.rows });
            writeln!(out, "{v}")?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn unknot(cfg: &RunConfig, w: &BraidWord, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let u = unknotting_number(w, cfg.budget.unwrap_or(4))?;
    match cfg.format {
        OutputFormat::Text => writeln!(out, "{u}")?,
        OutputFormat::Csv => writeln!(out, "braid,unknotting\n{},{u}", w.to_text(false))?,
        OutputFormat::Json => {
            let (n, exact) = match u {
                Unknotting::Exact(n) => (n, true),
                Unknotting::AtLeast(n) => (n, false),
            };
            writeln!(out, "{}", json!({ "braid": w.to_text(false), "unknotting": n, "exact": exact }))?;
        }
    }
    match u {
        Unknotting::Exact(_) => Ok(EXIT_OK),
        Unknotting::AtLeast(_) => Ok(EXIT_BUDGET),
    }
}

fn rrp(cfg: &RunConfig, w: &BraidWord, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let found = if is_rrp(w) { Some(w.clone()) } else { rrp_search(w, cfg.budget.unwrap_or(6) as usize)? };
    let witness = found.as_ref().map(|v| v.to_text(false));
    match cfg.format {
        OutputFormat::Text => writeln!(out, "{}", witness.as_deref().unwrap_or("inconclusive"))?,
        OutputFormat::Csv => writeln!(out, "braid,witness\n{},{}", w.to_text(false), witness.clone().unwrap_or_default())?,
        OutputFormat::Json => writeln!(out, "{}", json!({ "braid": w.to_text(false), "witness": witness }))?,
    }
    Ok(if found.is_some() { EXIT_OK } else { EXIT_BUDGET })
}

fn trees(cfg: &RunConfig, max_vertices: usize, braids: bool, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    if !(1..=MAX_TREE_VERTICES).contains(&max_vertices) {
        return Err(CliError::Usage(format!("--max-vertices must be between 1 and {MAX_TREE_VERTICES}")));
    }
    let counts = tree_counts(max_vertices);
    let listed: Vec<(String, bool, String)> = if braids {
        free_trees(max_vertices)
            .iter()
            .map(|t| (t.canonical().to_string(), tree_is_alternating(t), tree_link_braid(t).to_text(false)))
            .collect()
    } else {
        Vec::new()
    };
    match cfg.format {
        OutputFormat::Text => {
            writeln!(out, "n total alternating nonalternating")?;
            for n in 0..max_vertices {
                writeln!(
                    out,
                    "{} {} {} {}",
                    n + 1,
                    counts.total[n],
                    counts.alternating[n],
                    counts.nonalternating[n]
                )?;
            }
            for (canon, alt, w) in &listed {
                writeln!(out, "{canon} {} {w}", if *alt { 'a' } else { 'n' })?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,total,alternating,nonalternating")?;
            for n in 0..max_vertices {
                writeln!(out, "{},{},{},{}", n + 1, counts.total[n], counts.alternating[n], counts.nonalternating[n])?;
            }
        }
        OutputFormat::Json => {
            let trees: Vec<Value> = listed
                .iter()
                .map(|(c, a, w)| json!({ "canonical": c, "alternating": a, "braid": w }))
                .collect();
            writeln!(out, "{}", json!({ "counts": counts, "trees": trees }))?;
        }
    }
    Ok(EXIT_OK)
}

fn minimality_text(m: &Minimality) -> String {
    match m {
        Minimality::Minimum => "minimum".into(),
        Minimality::NotMinimum { minimum } => format!("not minimum ({minimum})"),
        Minimality::Unknown => "unknown".into(),
    }
}

fn column(
    cfg: &RunConfig,
    seed: &BraidWord,
    depth: usize,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, CliError> {
    let c = seed.crossings();
    let max_crossings = cfg.max_crossings.unwrap_or_else(|| (c + depth).min(10).max(c));
    let fixture = load_fixture(cfg)?;
    let cat = build_catalog(cfg, max_crossings, &fixture, err)?;
    let names = LinkNames::new(&fixture, Some(&cat))?;
    let col = build_column(seed, depth, &cat, &names)?;
    let rows = column_rows(&col)?;
    let ty = column_type(&col);
    let stars = col.stars();
    let star_of = |k: usize| -> String {
        stars
            .iter()
            .filter(|s| s.cell + 1 == k)
            .map(|s| match s.kind {
                StarKind::Y => "Y*",
                StarKind::Z => "Z*",
            })
            .collect::<Vec<_>>()
            .join(",")
    };
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    match cfg.format {
        OutputFormat::Text => {
            writeln!(out, "seed {}  type {ty}", seed.to_text(false))?;
            for (k, cell) in col.cells.iter().enumerate() {
                writeln!(
                    out,
                    "{:>2} {:<18} {:<12} {} {:>10} {:>3} {:<4} {:<3} {}",
                    k,
                    cell.word.to_text(false),
                    cell.tag.as_deref().unwrap_or("-"),
                    cell.components,
                    cell.record.ap10,
                    cell.record.z,
                    cell.link_crossings.map_or("-".to_string(), |n| n.to_string()),
                    star_of(k),
                    minimality_text(&cell.minimality)
                )?;
            }
            writeln!(out, "Al {} : {}", rows.al.0, rows.al.1)?;
            writeln!(out, "Hx {}", join(&rows.hx))?;
            match rows.hx_period {
                Some(p) => writeln!(out, "Hx period {p}")?,
                None => writeln!(out, "Hx period none")?,
            }
            writeln!(out, "Hr {}", rows.hr)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "cell,braid,tag,components,ap10,z,link_crossings,star,minimality")?;
            for (k, cell) in col.cells.iter().enumerate() {
                writeln!(
                    out,
                    "{}",
                    csv_line(&[
                        k.to_string(),
                        cell.word.to_text(false),
                        cell.tag.clone().unwrap_or_default(),
                        cell.components.to_string(),
                        cell.record.ap10.to_string(),
                        cell.record.z.to_string(),
                        cell.link_crossings.map(|n| n.to_string()).unwrap_or_default(),
                        star_of(k),
                        minimality_text(&cell.minimality),
                    ])
                )?;
            }
        }
        OutputFormat::Json => {
            let cells: Vec<Value> = col
                .cells
                .iter()
                .enumerate()
                .map(|(k, cell)| {
                    json!({
                        "braid": cell.word.to_text(false),
                        "tag": cell.tag,
                        "components": cell.components,
                        "ap10": cell.record.ap10,
                        "z": cell.record.z,
                        "link_crossings": cell.link_crossings,
                        "star": star_of(k),
                        "minimality": cell.minimality,
                    })
                })
                .collect();
            let v = json!({
                "seed": seed.to_text(false),
                "type": ty,
                "cells": cells,
                "al": [rows.al.0, rows.al.1],
                "hx": rows.hx,
                "hx_period": rows.hx_period,
                "hr": rows.hr.to_string(),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(EXIT_OK)
}
