//! Text and JSON formats for fans and polytope collections.
//!
//! Fan file:
//!
//! ```text
//! # comment
//! dim 2 rays 3 cones 3
//! 1 0
//! 0 1
//! -1 -1
//! 0 2
//! 1 2
//! 0 1
//! ```
//!
//! Polytope collection: blocks separated by blank lines, each a header
//! `id <id> dim <n> vertices <v>` (optionally followed by `side M` or
//! `side N`, default `N`) and `v` rows of `n` integers. The JSON form is an
//! array of `{"id": .., "vertices": [[..]]}` objects, or an object whose
//! `records` member is such an array.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg::LatticeVector;
use crate::polytope::{Polytope, Side};

/// Serialization of polytope collections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollectionFormat {
    Text,
    Json,
}

impl FromStr for CollectionFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(CollectionFormat::Text),
            "json" => Ok(CollectionFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Meaningful lines with their 1-based line numbers; comments are dropped and
/// blank lines kept as block separators.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
}

fn parse_row(line: usize, s: &str, len: usize) -> Result<LatticeVector> {
    let coords = s
        .split_whitespace()
        .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse { line, message: format!("not an integer: {t}") }))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != len {
        return Err(Error::Parse { line, message: format!("expected {len} entries, found {}", coords.len()) });
    }
    Ok(LatticeVector::new(coords))
}

/// Key/value pairs of a header line, checked against the expected keys.
fn parse_header<'a>(line: usize, s: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.len() != 2 * keys.len() || tokens.iter().step_by(2).zip(keys).any(|(t, k)| t != k) {
        let shape: Vec<String> = keys.iter().map(|k| format!("{k} <{k}>")).collect();
        return Err(Error::Parse { line, message: format!("expected header '{}'", shape.join(" ")) });
    }
    Ok(tokens.iter().skip(1).step_by(2).copied().collect())
}

fn parse_count(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, message: format!("not a count: {s}") })
}

/// Parse a fan file; the fan is validated but not checked for completeness.
pub fn parse_fan(text: &str) -> Result<Fan> {
    let mut it = lines(text).filter(|(_, l)| !l.is_empty());
    let (hl, header) = it.next().ok_or(Error::Parse { line: 1, message: "empty fan file".into() })?;
    let vals = parse_header(hl, header, &["dim", "rays", "cones"])?;
    let dim = parse_count(hl, vals[0])?;
    let nrays = parse_count(hl, vals[1])?;
    let ncones = parse_count(hl, vals[2])?;
    let mut rays = Vec::with_capacity(nrays);
    let mut last = hl;
    for _ in 0..nrays {
        let (ln, l) = it.next().ok_or(Error::Parse { line: last + 1, message: "missing ray line".into() })?;
        rays.push(parse_row(ln, l, dim)?);
        last = ln;
    }
    let mut cones = Vec::with_capacity(ncones);
    for _ in 0..ncones {
        let (ln, l) = it.next().ok_or(Error::Parse { line: last + 1, message: "missing cone line".into() })?;
        let cone = l
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line: ln, message: format!("not a ray index: {t}") }))
            .collect::<Result<Vec<_>>>()?;
        cones.push(cone);
        last = ln;
    }
    if let Some((ln, _)) = it.next() {
        return Err(Error::Parse { line: ln, message: "trailing content after the last cone".into() });
    }
    Fan::new(dim, rays, cones)
}

pub fn write_fan(fan: &Fan) -> String {
    let mut out = format!("dim {} rays {} cones {}\n", fan.dim(), fan.rays().len(), fan.cones().len());
    for r in fan.rays() {
        out.push_str(&join(r.iter()));
        out.push('\n');
    }
    for c in fan.cones() {
        out.push_str(&join(c.iter()));
        out.push('\n');
    }
    out
}

fn join<T: ToString>(it: impl Iterator<Item = T>) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// A block that could not be turned into a polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub line: usize,
    pub id: Option<String>,
    pub message: String,
    /// Malformed text, as opposed to a well-formed block whose points violate
    /// a precondition such as full dimension.
    pub malformed: bool,
}

/// Polytopes with their ids, in file order, plus diagnostics for skipped
/// blocks.
#[derive(Clone, Debug, Default)]
pub struct Collection {
    pub polytopes: Vec<(String, Polytope)>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn parse_collection_text(text: &str) -> Collection {
    let mut blocks: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current = Vec::new();
    for (ln, l) in lines(text) {
        if l.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
        } else {
            current.push((ln, l));
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }

    let mut out = Collection::default();
    for block in blocks {
        match parse_block(&block) {
            Ok(entry) => out.polytopes.push(entry),
            Err((id, e)) => {
                let line = match &e {
                    Error::Parse { line, .. } => *line,
                    _ => block[0].0,
                };
                let malformed = e.is_parse_error();
                let message = match e {
                    Error::Parse { message, .. } => message,
                    other => other.to_string(),
                };
                out.diagnostics.push(Diagnostic { line, id, message, malformed });
            }
        }
    }
    out
}

fn parse_block(block: &[(usize, &str)]) -> std::result::Result<(String, Polytope), (Option<String>, Error)> {
    let (hl, header) = block[0];
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let id = (tokens.first() == Some(&"id")).then(|| tokens.get(1).map(|s| s.to_string())).flatten();
    let fail = |e: Error| (id.clone(), e);
    let (core, side) = match tokens.len() {
        8 if tokens[6] == "side" => (tokens[..6].join(" "), Some(tokens[7])),
        _ => (header.to_string(), None),
    };
    let vals = parse_header(hl, &core, &["id", "dim", "vertices"]).map_err(fail)?;
    let dim = parse_count(hl, vals[1]).map_err(fail)?;
    let nv = parse_count(hl, vals[2]).map_err(fail)?;
    let side = match side {
        None | Some("N") => Side::N,
        Some("M") => Side::M,
        Some(s) => return Err(fail(Error::Parse { line: hl, message: format!("unknown side {s}") })),
    };
    if block.len() != nv + 1 {
        return Err(fail(Error::Parse {
            line: hl,
            message: format!("expected {nv} vertex rows, found {}", block.len() - 1),
        }));
    }
    let pts = block[1..].iter().map(|&(ln, l)| parse_row(ln, l, dim)).collect::<Result<Vec<_>>>().map_err(fail)?;
    if dim == 0 {
        return Err(fail(Error::Parse { line: hl, message: "dimension must be positive".into() }));
    }
    let p = Polytope::new(side, &pts).map_err(fail)?;
    Ok((vals[0].to_string(), p))
}

pub fn write_polytope_block(id: &str, p: &Polytope) -> String {
    let mut out = format!("id {id} dim {} vertices {}", p.dim(), p.vertices().len());
    if p.side() == Side::M {
        out.push_str(" side M");
    }
    out.push('\n');
    for v in p.vertices() {
        out.push_str(&join(v.iter()));
        out.push('\n');
    }
    out
}

pub fn write_collection_text<'a>(entries: impl IntoIterator<Item = (&'a str, &'a Polytope)>) -> String {
    let mut out = String::new();
    for (i, (id, p)) in entries.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&write_polytope_block(id, p));
    }
    out
}

#[derive(Deserialize)]
struct JsonEntry {
    id: serde_json::Value,
    vertices: Vec<LatticeVector>,
    #[serde(default)]
    side: Option<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonDoc {
    List(Vec<serde_json::Value>),
    Report { records: Vec<serde_json::Value> },
}

pub fn parse_collection_json(text: &str) -> Result<Collection> {
    if text.trim().is_empty() {
        return Ok(Collection::default());
    }
    let doc: JsonDoc = serde_json::from_str(text)?;
    let items = match doc {
        JsonDoc::List(v) | JsonDoc::Report { records: v } => v,
    };
    let mut out = Collection::default();
    for (i, item) in items.into_iter().enumerate() {
        let entry: JsonEntry = match serde_json::from_value(item) {
            Ok(e) => e,
            Err(e) => {
                out.diagnostics.push(Diagnostic { line: i + 1, id: None, message: e.to_string(), malformed: true });
                continue;
            }
        };
        let id = match entry.id {
            serde_json::Value::String(s) => s,
            other => other.to_string(),
        };
        let side = match entry.side.as_deref() {
            None | Some("N") => Side::N,
            Some("M") => Side::M,
            Some(s) => {
                out.diagnostics.push(Diagnostic { line: i + 1, id: Some(id), message: format!("unknown side {s}"), malformed: true });
                continue;
            }
        };
        let dim = entry.vertices.first().map_or(0, LatticeVector::dim);
        if dim == 0 {
            out.diagnostics.push(Diagnostic { line: i + 1, id: Some(id), message: "no vertices".into(), malformed: true });
            continue;
        }
        match Polytope::new(side, &entry.vertices) {
            Ok(p) => out.polytopes.push((id, p)),
            Err(e) => {
                let malformed = e.is_parse_error();
                out.diagnostics.push(Diagnostic { line: i + 1, id: Some(id), message: e.to_string(), malformed })
            }
        }
    }
    Ok(out)
}

/// Guess the collection format from the file extension or the first
/// character.
pub fn detect_format(path: &Path, text: &str) -> CollectionFormat {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        return CollectionFormat::Json;
    }
    match text.trim_start().chars().next() {
        Some('[') | Some('{') => CollectionFormat::Json,
        _ => CollectionFormat::Text,
    }
}

pub fn parse_collection(text: &str, format: CollectionFormat) -> Result<Collection> {
    match format {
        CollectionFormat::Text => Ok(parse_collection_text(text)),
        CollectionFormat::Json => parse_collection_json(text),
    }
}

/// Read a polytope collection. With `format = None` the format is detected.
pub fn ingest(path: &Path, format: Option<CollectionFormat>) -> Result<Collection> {
    let text = std::fs::read_to_string(path)?;
    let format = format.unwrap_or_else(|| detect_format(path, &text));
    parse_collection(&text, format)
}

/// What an input file describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Fan,
    Polytopes,
}

/// Fan files start with `dim`, polytope blocks with `id`, JSON with a bracket.
pub fn detect_input_kind(text: &str) -> Result<InputKind> {
    let first = lines(text).find(|(_, l)| !l.is_empty());
    match first {
        Some((_, l)) if l.starts_with("dim") => Ok(InputKind::Fan),
        Some((_, l)) if l.starts_with("id") || l.starts_with('[') || l.starts_with('{') => Ok(InputKind::Polytopes),
        Some((ln, _)) => Err(Error::Parse { line: ln, message: "expected a fan or polytope header".into() }),
        None => Err(Error::Parse { line: 1, message: "empty input".into() }),
    }
}

/// Compact multi-line rendering of a fan for humans.
pub fn describe_fan(fan: &Fan) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "fan of dimension {} with {} rays and {} maximal cones", fan.dim(), fan.rays().len(), fan.cones().len());
    for (i, r) in fan.rays().iter().enumerate() {
        let _ = writeln!(out, "  ray {i}: {r}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const P2: &str = "# projective plane\ndim 2 rays 3 cones 3\n1 0\n0 1\n-1 -1\n0 2\n1 2\n0 1\n";

    #[test]
    fn fan_round_trip() {
        let f = parse_fan(P2).unwrap();
        assert_eq!(f.rays().len(), 3);
        assert_eq!(f.cones()[0], vec![0, 2]);
        assert_eq!(parse_fan(&write_fan(&f)).unwrap(), f);
    }

    #[test]
    fn fan_parse_errors() {
        assert!(matches!(parse_fan("dim 2 rays 1 cones 0\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_fan("dims 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_fan("dim 2 rays 2 cones 1\n1 0\n0 1\n0 x\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_fan("dim 2 rays 1 cones 1\n2 0\n0\n"), Err(Error::InvalidFan(_))));
    }

    #[test]
    fn collection_with_bad_blocks() {
        let text = "# two good, two bad\nid a dim 2 vertices 3\n1 0\n0 1\n-1 -1\n\nid b dim 2 vertices 2\n1 0 0\n0 1\n\n\
                    id c dim 2 vertices 4 side M\n1 1\n1 -1\n-1 1\n-1 -1\n\nid d dim 2 vertices 3\n1 0\n2 0\n3 0\n";
        let c = parse_collection_text(text);
        let ids: Vec<&str> = c.polytopes.iter().map(|(id, _)| id.as_str()).collect();
        assert_eq!(ids, vec!["a", "c"]);
        assert_eq!(c.polytopes[1].1.side(), Side::M);
        assert_eq!(c.diagnostics.len(), 2);
        assert_eq!(c.diagnostics[0].id.as_deref(), Some("b"));
        assert_eq!(c.diagnostics[0].line, 8);
        assert_eq!(c.diagnostics[1].id.as_deref(), Some("d"));
    }

    #[test]
    fn empty_collection() {
        assert!(parse_collection_text("").polytopes.is_empty());
        assert!(parse_collection_text("# nothing\n\n").diagnostics.is_empty());
        assert!(parse_collection_json("").unwrap().polytopes.is_empty());
    }

    #[test]
    fn text_and_json_agree() {
        let text = "id 5 dim 2 vertices 3\n1 0\n0 1\n-1 -1\n";
        let json = r#"[{"id": "5", "vertices": [[1, 0], [0, 1], [-1, -1]]}]"#;
        let a = parse_collection_text(text);
        let b = parse_collection_json(json).unwrap();
        assert_eq!(a.polytopes[0].0, b.polytopes[0].0);
        assert_eq!(a.polytopes[0].1, b.polytopes[0].1);
        let report = r#"{"records": [{"id": 5, "vertices": [[1, 0], [0, 1], [-1, -1]], "degree": 9}]}"#;
        assert_eq!(parse_collection_json(report).unwrap().polytopes[0].0, "5");
        let written = write_collection_text(a.polytopes.iter().map(|(i, p)| (i.as_str(), p)));
        assert_eq!(written, "id 5 dim 2 vertices 3\n-1 -1\n0 1\n1 0\n");
    }

    #[test]
    fn input_detection() {
        assert_eq!(detect_input_kind(P2).unwrap(), InputKind::Fan);
        assert_eq!(detect_input_kind("\nid x dim 1 vertices 2\n1\n-1\n").unwrap(), InputKind::Polytopes);
        assert_eq!(detect_input_kind("[]").unwrap(), InputKind::Polytopes);
        assert!(detect_input_kind("hello").is_err());
        assert_eq!("json".parse::<CollectionFormat>().unwrap(), CollectionFormat::Json);
        assert!(matches!("xml".parse::<CollectionFormat>(), Err(Error::UnknownFormat(_))));
    }
}
