//! Text formats for graphs, orderings and colourings. All ids are 1-based.
//!
//! - edgelist: optional `#` comment lines, a header `n m`, then `m` lines `u v`.
//! - DIMACS: `c` comment lines, one `p edge n m` line, then `m` lines `e u v`.
//! - ordering: `n` lines, one vertex per line, leftmost first.
//! - colouring: a header `n c`, then `n` lines `v colour` sorted by `v`.

use std::fmt::Write as _;
use std::io::Read;
use std::str::FromStr;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::VertexOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Edgelist,
    Dimacs,
}

impl GraphFormat {
    /// Guesses the format from the first non-blank line: DIMACS files open
    /// with a `c` or `p` line.
    pub fn detect(text: &str) -> GraphFormat {
        match text.lines().map(str::trim_start).find(|l| !l.is_empty()) {
            Some(l) if l.starts_with('c') || l.starts_with('p') => GraphFormat::Dimacs,
            _ => GraphFormat::Edgelist,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::Edgelist),
            "dimacs" => Ok(GraphFormat::Dimacs),
            _ => Err(Error::Usage(format!(
                "unknown graph format '{s}' (expected edgelist or dimacs)"
            ))),
        }
    }
}

/// Numbered, trimmed, non-blank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_fields<const K: usize>(line_no: usize, fields: &[&str]) -> Result<[usize; K]> {
    if fields.len() != K {
        return Err(Error::parse(
            line_no,
            format!("expected {K} integers, got {}", fields.len()),
        ));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(line_no, format!("'{f}' is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Reads a whole graph file from `reader`.
pub fn load_graph<R: Read>(mut reader: R, format: GraphFormat) -> Result<Graph> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_graph(&text, format)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line_no, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match format {
            GraphFormat::Edgelist => {
                if line.starts_with('#') {
                    continue;
                }
                let [a, b] = parse_fields::<2>(line_no, &fields)?;
                match header {
                    None => header = Some((a, b)),
                    Some(_) => edges.push((a, b)),
                }
            }
            GraphFormat::Dimacs => match fields[0] {
                "c" => {}
                "p" => {
                    if header.is_some() {
                        return Err(Error::parse(line_no, "second 'p' line"));
                    }
                    if fields.get(1) != Some(&"edge") {
                        return Err(Error::parse(line_no, "expected header 'p edge n m'"));
                    }
                    let [n, m] = parse_fields::<2>(line_no, &fields[2..])?;
                    header = Some((n, m));
                }
                "e" => {
                    if header.is_none() {
                        return Err(Error::parse(line_no, "edge line before 'p edge' header"));
                    }
                    let [u, v] = parse_fields::<2>(line_no, &fields[1..])?;
                    edges.push((u, v));
                }
                other => {
                    return Err(Error::parse(
                        line_no,
                        format!("unknown line prefix '{other}'"),
                    ))
                }
            },
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing header"))?;
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges)
}

/// Serialises `g` with edges `u < v` in lexicographic order.
pub fn save_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Edgelist => writeln!(out, "{} {}", g.n(), g.m()),
        GraphFormat::Dimacs => writeln!(out, "p edge {} {}", g.n(), g.m()),
    }
    .unwrap();
    let prefix = match format {
        GraphFormat::Edgelist => "",
        GraphFormat::Dimacs => "e ",
    };
    for (u, v) in g.edges() {
        writeln!(out, "{prefix}{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses an ordering file for a graph on `n` vertices.
pub fn parse_ordering(text: &str, n: usize) -> Result<VertexOrdering> {
    let mut seq = Vec::with_capacity(n);
    for (line_no, line) in content_lines(text) {
        if line.starts_with('#') {
            continue;
        }
        let [v] = parse_fields::<1>(line_no, &line.split_whitespace().collect::<Vec<_>>())?;
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        seq.push(v - 1);
    }
    if seq.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: seq.len(),
        });
    }
    VertexOrdering::from_seq(seq)
}

pub fn format_ordering(ord: &VertexOrdering) -> String {
    ord.seq().iter().map(|v| format!("{}\n", v + 1)).collect()
}

pub fn parse_colouring(text: &str) -> Result<Colouring> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing header"))?;
    let [n, c] = parse_fields::<2>(line_no, &header.split_whitespace().collect::<Vec<_>>())?;
    let mut colours = Vec::with_capacity(n);
    for (line_no, line) in lines {
        let [v, colour] = parse_fields::<2>(line_no, &line.split_whitespace().collect::<Vec<_>>())?;
        if v != colours.len() + 1 {
            return Err(Error::parse(
                line_no,
                format!("expected vertex {}, got {v}", colours.len() + 1),
            ));
        }
        let colour =
            u32::try_from(colour).map_err(|_| Error::parse(line_no, "colour too large"))?;
        colours.push(colour);
    }
    if colours.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: colours.len(),
        });
    }
    let palette = u32::try_from(c).map_err(|_| Error::parse(line_no, "palette too large"))?;
    Colouring::new(colours, palette)
}

pub fn format_colouring(col: &Colouring) -> String {
    let mut out = format!("{} {}\n", col.len(), col.palette());
    for (v, c) in col.colours().iter().enumerate() {
        writeln!(out, "{} {c}", v + 1).unwrap();
    }
    out
}
