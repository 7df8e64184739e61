//! Rendering of classification records.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{compare_ids, summarize, ClassificationRecord, CountsSummary};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub format: ReportFormat,
    /// Leave out rows of non-additive varieties. Counts still cover all rows.
    pub additive_only: bool,
}

pub const CSV_HEADER: &str = "id,dim,num_vertices,num_facets,degree,b2,b4,is_additive,is_uniquely_additive";
pub const CSV_SUMMARY_HEADER: &str = "total,not_additive,additive_not_unique,uniquely_additive";

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Deterministic rendering, rows sorted by id.
pub fn emit_report(records: &[ClassificationRecord], opts: &ReportOptions) -> String {
    let mut sorted: Vec<&ClassificationRecord> = records.iter().collect();
    sorted.sort_by(|a, b| compare_ids(&a.id, &b.id));
    let (summary, by_dim) = summarize(records);
    let rows: Vec<&ClassificationRecord> = sorted
        .iter()
        .copied()
        .filter(|r| r.error.is_none() && (!opts.additive_only || r.is_additive))
        .collect();
    let errors: Vec<&ClassificationRecord> = sorted.iter().copied().filter(|r| r.error.is_some()).collect();
    match opts.format {
        ReportFormat::Csv => csv(&rows, &errors, &summary),
        ReportFormat::Table => table(&rows, &errors, &summary, &by_dim),
        ReportFormat::Json => json(&rows, &errors, &summary, &by_dim),
    }
}

fn csv(rows: &[&ClassificationRecord], errors: &[&ClassificationRecord], s: &CountsSummary) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.id,
            r.dim,
            r.num_vertices,
            r.num_facets,
            opt(r.degree),
            opt(r.b2()),
            opt(r.b4()),
            r.is_additive,
            r.is_uniquely_additive
        );
    }
    out.push('\n');
    out.push_str(CSV_SUMMARY_HEADER);
    out.push('\n');
    let _ = writeln!(out, "{},{},{},{}", s.total, s.not_additive, s.additive_not_unique, s.uniquely_additive);
    for r in errors {
        let _ = writeln!(out, "# error {}: {}", r.id, r.error.as_deref().unwrap_or_default());
    }
    out
}

fn table(
    rows: &[&ClassificationRecord],
    errors: &[&ClassificationRecord],
    s: &CountsSummary,
    by_dim: &[CountsSummary],
) -> String {
    let with_b4 = rows.iter().any(|r| r.dim >= 4);
    let mut header = vec!["ID", "Degree", "b2"];
    if with_b4 {
        header.push("b4");
    }
    header.extend(["#V", "#F", "Additive", "Uniquely additive"]);
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = vec![r.id.clone(), opt(r.degree), opt(r.b2())];
            if with_b4 {
                cells.push(opt(r.b4()));
            }
            cells.extend([
                r.num_vertices.to_string(),
                r.num_facets.to_string(),
                yes_no(r.is_additive).to_string(),
                yes_no(r.is_uniquely_additive).to_string(),
            ]);
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| body.iter().map(|row| row[c].len()).chain([header[c].len()]).max().unwrap())
        .collect();
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&line(&rule));
    for row in &body {
        out.push_str(&line(row));
    }
    out.push('\n');
    for d in by_dim {
        let _ = writeln!(
            out,
            "dim {}: {} total, {} not additive, {} additive but not uniquely additive, {} uniquely additive",
            opt(d.dim),
            d.total,
            d.not_additive,
            d.additive_not_unique,
            d.uniquely_additive
        );
    }
    if by_dim.len() != 1 {
        let _ = writeln!(
            out,
            "all: {} total, {} not additive, {} additive but not uniquely additive, {} uniquely additive",
            s.total, s.not_additive, s.additive_not_unique, s.uniquely_additive
        );
    }
    for r in errors {
        let _ = writeln!(out, "error {}: {}", r.id, r.error.as_deref().unwrap_or_default());
    }
    out
}

fn json(
    rows: &[&ClassificationRecord],
    errors: &[&ClassificationRecord],
    s: &CountsSummary,
    by_dim: &[CountsSummary],
) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        records: &'a [&'a ClassificationRecord],
        errors: &'a [&'a ClassificationRecord],
        summary: &'a CountsSummary,
        summary_by_dim: &'a [CountsSummary],
    }
    let mut out = serde_json::to_string_pretty(&Doc { records: rows, errors, summary: s, summary_by_dim: by_dim })
        .expect("records serialize");
    out.push('\n');
    out
}
