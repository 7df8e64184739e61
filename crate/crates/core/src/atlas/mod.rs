//! Batch classification of smooth Fano polytope collections.
//!
//! Each polytope `P` in `N` is classified through its face fan (rays through
//! the vertices, one maximal cone per facet), which for smooth Fano `P` is the
//! fan of `X_{P^*}`. Records are produced in parallel and sorted by id, so the
//! output does not depend on the worker count.

mod canonical;
mod enumerate;
mod report;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use canonical::{canonical_form, canonical_polytope};
pub use enumerate::enumerate_smooth_fano_dim2;
pub use report::{emit_report, ReportFormat, ReportOptions};

use crate::additivity::{additive_actions, AdditiveOptions};
use crate::error::{Error, Result};
use crate::invariants::{anticanonical_degree, betti_numbers};
use crate::linalg::LatticeVector;
use crate::polytope::{Polytope, Side};

/// Classification of one polytope. When `error` is set the remaining fields
/// are defaults and the record is left out of the counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub id: String,
    pub dim: usize,
    pub vertices: Vec<LatticeVector>,
    pub num_vertices: usize,
    pub num_facets: usize,
    pub is_additive: bool,
    pub is_uniquely_additive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_collection: Option<Vec<LatticeVector>>,
    /// `h_0, .., h_n`.
    pub betti_even: Vec<i64>,
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ClassificationRecord {
    pub fn b2(&self) -> Option<i64> {
        self.betti_even.get(1).copied()
    }

    pub fn b4(&self) -> Option<i64> {
        (self.dim >= 4).then(|| self.betti_even.get(2).copied()).flatten()
    }
}

/// `total = not_additive + additive_not_unique + uniquely_additive`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsSummary {
    /// `None` when the summary spans several dimensions.
    pub dim: Option<usize>,
    pub total: usize,
    pub not_additive: usize,
    pub additive_not_unique: usize,
    pub uniquely_additive: usize,
}

impl CountsSummary {
    fn add(&mut self, r: &ClassificationRecord) {
        self.total += 1;
        match (r.is_additive, r.is_uniquely_additive) {
            (false, _) => self.not_additive += 1,
            (true, false) => self.additive_not_unique += 1,
            (true, true) => self.uniquely_additive += 1,
        }
    }

    pub fn additive(&self) -> usize {
        self.additive_not_unique + self.uniquely_additive
    }
}

/// Counts over all records without errors, and per dimension.
pub fn summarize(records: &[ClassificationRecord]) -> (CountsSummary, Vec<CountsSummary>) {
    let mut all = CountsSummary::default();
    let mut by_dim: Vec<CountsSummary> = Vec::new();
    for r in records.iter().filter(|r| r.error.is_none()) {
        all.add(r);
        let pos = match by_dim.binary_search_by_key(&Some(r.dim), |s| s.dim) {
            Ok(i) => i,
            Err(i) => {
                by_dim.insert(i, CountsSummary { dim: Some(r.dim), ..Default::default() });
                i
            }
        };
        by_dim[pos].add(r);
    }
    if by_dim.len() == 1 {
        all.dim = by_dim[0].dim;
    }
    (all, by_dim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    pub complete_collection: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { jobs: 0, complete_collection: true }
    }
}

/// Digit-only ids sort numerically and before all other ids.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    let key = |s: &str| {
        if !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit()) {
            (0, s.parse::<BigInt>().ok())
        } else {
            (1, None)
        }
    };
    key(a).cmp(&key(b)).then_with(|| a.cmp(b))
}

fn classify_one(id: &str, p: &Polytope, opts: &ClassifyOptions) -> ClassificationRecord {
    let mut rec = ClassificationRecord {
        id: id.to_string(),
        dim: p.dim(),
        vertices: p.vertices().to_vec(),
        num_vertices: p.vertices().len(),
        num_facets: p.facets().len(),
        is_additive: false,
        is_uniquely_additive: false,
        complete_collection: None,
        betti_even: Vec::new(),
        degree: None,
        error: None,
    };
    if let Err(e) = fill(&mut rec, p, opts) {
        rec.error = Some(e.to_string());
    }
    rec
}

fn fill(rec: &mut ClassificationRecord, p: &Polytope, opts: &ClassifyOptions) -> Result<()> {
    if p.side() != Side::N {
        return Err(Error::WrongSide { expected: "N", found: p.side().name() });
    }
    if !p.is_smooth_fano()? {
        return Err(Error::NotSmoothFano);
    }
    let fan = p.face_fan()?.with_known_smooth(true);
    let report = additive_actions(
        &fan,
        &AdditiveOptions {
            complete_collection: opts.complete_collection,
            check_unique: true,
            assume_complete: true,
            assume_smooth: true,
        },
    )?;
    let betti = betti_numbers(p)?;
    let degree = anticanonical_degree(p)?;
    rec.is_additive = report.is_additive;
    rec.is_uniquely_additive = report.is_uniquely_additive == Some(true);
    rec.complete_collection = report.complete_collection.filter(|_| report.is_additive);
    rec.betti_even = betti;
    rec.degree = Some(degree.to_i64().ok_or_else(|| Error::InvalidParameters("degree out of range".into()))?);
    Ok(())
}

/// Classify every polytope; records come back sorted by id.
pub fn classify_collection(
    polytopes: &[(String, Polytope)],
    opts: &ClassifyOptions,
) -> Result<(Vec<ClassificationRecord>, CountsSummary)> {
    let run = || -> Vec<ClassificationRecord> {
        polytopes.par_iter().map(|(id, p)| classify_one(id, p, opts)).collect()
    };
    let mut records = if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?
            .install(run)
    };
    records.sort_by(|a, b| compare_ids(&a.id, &b.id));
    let (summary, _) = summarize(&records);
    Ok((records, summary))
}

/// The smooth Fano polygons labelled with their ids in the graded ring
/// database: 1 = blow-up of the plane in two points, 2 = hexagon, 3 = blow-up
/// in one point, 4 = product of lines, 5 = the plane.
pub fn dim2_fixture() -> Vec<(String, Polytope)> {
    let mut out: Vec<(String, Polytope)> = enumerate_smooth_fano_dim2()
        .into_iter()
        .map(|p| {
            let symmetric = p.vertices().iter().all(|v| p.vertex_index(&-v).is_some());
            let id = match (p.vertices().len(), symmetric) {
                (5, _) => "1",
                (6, _) => "2",
                (4, false) => "3",
                (4, true) => "4",
                _ => "5",
            };
            (id.to_string(), p)
        })
        .collect();
    out.sort_by(|a, b| compare_ids(&a.0, &b.0));
    out
}
