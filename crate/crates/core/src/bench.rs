//! Corpus runs: colour every graph under every strategy, validate, and report
//! against the bound formulas.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::{exact_chromatic, greedy_cf_colouring, verify_colouring, Criterion};
use crate::error::{Error, Result};
use crate::gen::{generate, GenSpec};
use crate::graph::Graph;
use crate::io::{load_graph, GraphFormat};
use crate::ordering::Strategy;
use crate::reach::back_reach_profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `2·scol₂ − 1` as a function of `scol₂`.
    Scol2,
    /// `60k + 59` for `k`-planar graphs.
    KPlanar,
    /// `5(t−1)(t−2) − 1` for `K_t`-minor-free graphs.
    Minor,
}

/// Upper bound on the proper conflict-free chromatic number.
///
/// Domains: `Scol2` needs `x >= 1`, `KPlanar` needs `x >= 0`, `Minor` needs
/// `x >= 2`.
pub fn bound(kind: BoundKind, x: i64) -> Result<i64> {
    let (min, value) = match kind {
        BoundKind::Scol2 => (1, 2 * x - 1),
        BoundKind::KPlanar => (0, 60 * x + 59),
        BoundKind::Minor => (2, 5 * (x - 1) * (x - 2) - 1),
    };
    if x < min {
        return Err(Error::Usage(format!(
            "{kind:?} bound needs x >= {min}, got {x}"
        )));
    }
    Ok(value)
}

/// One corpus input.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusEntry {
    Gen(GenSpec),
    File(PathBuf),
}

impl CorpusEntry {
    fn load(&self) -> Result<(String, String, Graph)> {
        match self {
            CorpusEntry::Gen(spec) => {
                let g = generate(spec).map_err(|e| e.context(spec.to_string()))?;
                Ok((spec.to_string(), spec.family().to_string(), g))
            }
            CorpusEntry::File(path) => {
                let id = path.display().to_string();
                let g = (|| {
                    let text = fs::read_to_string(path)?;
                    load_graph(text.as_bytes(), GraphFormat::detect(&text))
                })()
                .map_err(|e: Error| e.context(id.clone()))?;
                Ok((id, "file".to_string(), g))
            }
        }
    }
}

/// Parses a corpus listing. Each non-comment line is either
/// `gen FAMILY PARAMS [SEED]` or `file PATH`; relative paths resolve against
/// `base_dir`.
pub fn parse_corpus(text: &str, base_dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let entry = match fields.as_slice() {
            ["gen", family, params] => GenSpec::parse(family, params, None),
            ["gen", family, params, seed] => {
                let seed = seed
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad seed '{seed}'")))?;
                GenSpec::parse(family, params, Some(seed))
            }
            ["file", _, ..] => {
                let rest = line["file".len()..].trim();
                entries.push(CorpusEntry::File(base_dir.join(rest)));
                continue;
            }
            _ => {
                return Err(Error::parse(
                    line_no,
                    "expected 'gen FAMILY PARAMS [SEED]' or 'file PATH'",
                ))
            }
        }
        .map_err(|e| e.context(format!("line {line_no}")))?;
        entries.push(CorpusEntry::Gen(entry));
    }
    Ok(entries)
}

/// One observation of colours used against the bound for one ordering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub graph_id: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub strategy: String,
    pub r2: usize,
    pub colours_used: u32,
    pub bound_thm1: i64,
    pub proper_ok: bool,
    pub odd_ok: bool,
    pub cf_ok: bool,
    pub exact_cf: Option<u32>,
    pub runtime_ms: f64,
}

impl BenchRecord {
    /// The record's own consistency conditions.
    pub fn is_consistent(&self) -> bool {
        let within = !self.cf_ok || self.m == 0 || i64::from(self.colours_used) <= self.bound_thm1;
        within && (!self.cf_ok || self.odd_ok)
    }

    /// True when every validator passed and the bound held.
    pub fn passed(&self) -> bool {
        self.proper_ok
            && self.odd_ok
            && self.cf_ok
            && (self.m == 0 || i64::from(self.colours_used) <= self.bound_thm1)
    }
}

fn run_cell(
    id: &str,
    family: &str,
    g: &Graph,
    strategy: Strategy,
    exact_cf: Option<u32>,
) -> BenchRecord {
    let start = Instant::now();
    let ord = strategy.build(g);
    let r2 = back_reach_profile(g, &ord, 2)
        .expect("radius 2 is valid")
        .max;
    let col = greedy_cf_colouring(g, &ord);
    let ok = |c| {
        verify_colouring(g, &col, c)
            .expect("colouring matches graph")
            .ok
    };
    let (proper_ok, odd_ok, cf_ok) = (
        ok(Criterion::Proper),
        ok(Criterion::Odd),
        ok(Criterion::ConflictFree),
    );
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    BenchRecord {
        graph_id: id.to_string(),
        family: family.to_string(),
        n: g.n(),
        m: g.m(),
        strategy: strategy.to_string(),
        r2,
        colours_used: col.used(),
        bound_thm1: 2 * r2 as i64 - 1,
        proper_ok,
        odd_ok,
        cf_ok,
        exact_cf,
        runtime_ms,
    }
}

/// Runs every `(graph, strategy)` cell. Records come out in corpus order, then
/// strategy order, whatever the scheduling.
pub fn run_corpus(
    entries: &[CorpusEntry],
    strategies: &[Strategy],
    exact_up_to: usize,
) -> Result<Vec<BenchRecord>> {
    if strategies.is_empty() {
        return Err(Error::Usage("at least one strategy is required".into()));
    }
    let graphs = entries
        .iter()
        .map(CorpusEntry::load)
        .collect::<Result<Vec<_>>>()?;
    let exact: Vec<Option<u32>> = graphs
        .par_iter()
        .map(|(_, _, g)| {
            (g.n() <= exact_up_to).then(|| {
                exact_chromatic(g, Criterion::ConflictFree, exact_up_to)
                    .expect("n within limit")
                    .0
            })
        })
        .collect();
    let cells: Vec<(usize, Strategy)> = (0..graphs.len())
        .flat_map(|gi| strategies.iter().map(move |&s| (gi, s)))
        .collect();
    Ok(cells
        .into_par_iter()
        .map(|(gi, strategy)| {
            let (id, family, g) = &graphs[gi];
            run_cell(id, family, g, strategy, exact[gi])
        })
        .collect())
}

/// Writes records as CSV with a header row.
pub fn write_csv<W: Write>(records: &[BenchRecord], writer: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(writer);
    w.write_record([
        "graph_id",
        "family",
        "n",
        "m",
        "strategy",
        "r2",
        "colours_used",
        "bound_thm1",
        "proper_ok",
        "odd_ok",
        "cf_ok",
        "exact_cf",
        "runtime_ms",
    ])
    .map_err(csv_err)?;
    for r in records {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

pub const CSV_HEADER: &str =
    "graph_id,family,n,m,strategy,r2,colours_used,bound_thm1,proper_ok,odd_ok,cf_ok,exact_cf,runtime_ms";
