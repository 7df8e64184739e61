//! Additivity and unique additivity of complete toric varieties.
//!
//! A complete fan is additive iff some maximal cone is spanned by a lattice
//! basis `B` such that every other ray lies in the negative octant of `B`. The
//! normalized action then corresponds to the complete collection `-B^*`, and it
//! is the only additive action iff each basis ray has `-b_i^*` as its sole
//! Demazure root.

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fan::Fan;
use crate::linalg::{dual_basis, is_lattice_basis, LatticeVector};
use crate::polytope::{Polytope, Side};
use crate::roots::ray_roots;

/// Options mirroring the usual additivity query.
///
/// `assume_complete` and `assume_smooth` skip verification; a wrong assumption
/// gives an unspecified answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveOptions {
    pub complete_collection: bool,
    pub check_unique: bool,
    pub assume_complete: bool,
    pub assume_smooth: bool,
}

impl Default for AdditiveOptions {
    fn default() -> Self {
        AdditiveOptions { complete_collection: true, check_unique: true, assume_complete: false, assume_smooth: false }
    }
}

/// Outcome of an additivity query.
///
/// When additive and a collection was requested, `witness_cone`, `basis` and
/// `complete_collection` are all present and
/// `<ray(basis[j]), complete_collection[i]> = -delta_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditivityReport {
    pub is_additive: bool,
    pub witness_cone: Option<usize>,
    /// Ray indices of the witness cone in ascending order.
    pub basis: Option<Vec<usize>>,
    pub complete_collection: Option<Vec<LatticeVector>>,
    /// Present iff uniqueness was requested.
    pub is_uniquely_additive: Option<bool>,
    /// Polytope route only: the vertex at which the polytope is inscribed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_vertex: Option<LatticeVector>,
}

impl AdditivityReport {
    fn not_additive(check_unique: bool) -> AdditivityReport {
        AdditivityReport {
            is_additive: false,
            witness_cone: None,
            basis: None,
            complete_collection: None,
            is_uniquely_additive: check_unique.then_some(false),
            witness_vertex: None,
        }
    }
}

/// A maximal cone whose rays form a basis with every other ray in its negative
/// octant.
#[derive(Clone, Debug)]
struct Witness {
    cone: usize,
    basis: Vec<usize>,
    collection: Vec<LatticeVector>,
}

fn qualifying_cone(fan: &Fan, cone: usize) -> Option<Witness> {
    let n = fan.dim();
    let basis = &fan.cones()[cone];
    if basis.len() != n {
        return None;
    }
    let gens = fan.cone_generators(cone);
    let dual = dual_basis(&gens).ok()?;
    let inside = (0..fan.rays().len())
        .filter(|r| !basis.contains(r))
        .all(|r| dual.iter().all(|d| !fan.ray(r).dot(d).is_positive()));
    inside.then(|| Witness { cone, basis: basis.clone(), collection: dual.iter().map(|d| -d).collect() })
}

/// Unique additivity at a witness: every basis ray has exactly one root.
fn unique_at(fan: &Fan, w: &Witness, cache: &mut [Option<Vec<LatticeVector>>]) -> Result<bool> {
    for (i, &ray) in w.basis.iter().enumerate() {
        if cache[ray].is_none() {
            cache[ray] = Some(ray_roots(fan.rays(), ray)?);
        }
        let roots = cache[ray].as_ref().unwrap();
        if roots.len() != 1 || roots[0] != w.collection[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n = 2` and the rays are `{b1, b2, -b1, -b2}` for a lattice basis `b1, b2`.
pub fn is_p1_times_p1(fan: &Fan) -> bool {
    if fan.dim() != 2 || fan.rays().len() != 4 {
        return false;
    }
    let b1 = fan.ray(0);
    let Some(b2) = fan.rays()[1..].iter().find(|r| **r != -b1) else {
        return false;
    };
    let mut expected = vec![b1.clone(), b2.clone(), -b1, -b2];
    expected.sort();
    let mut rays = fan.rays().to_vec();
    rays.sort();
    rays == expected && is_lattice_basis(&[b1.clone(), b2.clone()], 2).unwrap_or(false)
}

/// Smooth complete fans of Picard rank two are additive. Returns `None` when
/// the rule does not apply: wrong ray count, or the fan is not smooth and
/// complete.
pub fn picard2_additive_fast_path(fan: &Fan) -> Option<bool> {
    let applies = fan.dim() >= 2 && fan.rays().len() == fan.dim() + 2;
    if !applies || !fan.is_smooth() || !fan.is_complete().unwrap_or(false) {
        return None;
    }
    Some(true)
}

/// Decide additivity of a complete fan.
///
/// Maximal cones are tried in index order; the first qualifying cone is the
/// reported witness. Unique additivity is true iff some qualifying cone has
/// singleton root sets on all its rays.
pub fn additive_actions(fan: &Fan, opts: &AdditiveOptions) -> Result<AdditivityReport> {
    if !opts.assume_complete {
        fan.ensure_complete()?;
    }

    if !opts.complete_collection {
        let smooth = opts.assume_smooth || fan.is_smooth();
        let picard2 = smooth && fan.dim() >= 2 && fan.rays().len() == fan.dim() + 2;
        if picard2 {
            if !opts.check_unique {
                return Ok(AdditivityReport {
                    is_additive: true,
                    witness_cone: None,
                    basis: None,
                    complete_collection: None,
                    is_uniquely_additive: None,
                    witness_vertex: None,
                });
            }
            if is_p1_times_p1(fan) {
                if let Some(w) = first_witness(fan) {
                    return Ok(report(w, Some(true), false));
                }
            }
        }
    }

    if !opts.check_unique {
        return Ok(match first_witness(fan) {
            Some(w) => report(w, None, opts.complete_collection),
            None => AdditivityReport::not_additive(false),
        });
    }

    let witnesses: Vec<Witness> =
        (0..fan.cones().len()).into_par_iter().filter_map(|c| qualifying_cone(fan, c)).collect();
    let Some(first) = witnesses.first() else {
        return Ok(AdditivityReport::not_additive(true));
    };
    let mut cache = vec![None; fan.rays().len()];
    let mut unique = false;
    for w in &witnesses {
        if unique_at(fan, w, &mut cache)? {
            unique = true;
            break;
        }
    }
    Ok(report(first.clone(), Some(unique), opts.complete_collection))
}

fn first_witness(fan: &Fan) -> Option<Witness> {
    (0..fan.cones().len()).into_par_iter().find_map_first(|c| qualifying_cone(fan, c))
}

fn report(w: Witness, unique: Option<bool>, with_collection: bool) -> AdditivityReport {
    AdditivityReport {
        is_additive: true,
        witness_cone: Some(w.cone),
        basis: Some(w.basis),
        complete_collection: with_collection.then_some(w.collection),
        is_uniquely_additive: unique,
        witness_vertex: None,
    }
}

/// Whether `P` is inscribed in a rectangle at vertex `i`: the primitive edge
/// directions there form a lattice basis and pair non-positively with the
/// normal of every facet not containing the vertex.
pub fn inscribed_at_vertex(p: &Polytope, i: usize) -> bool {
    let dirs = p.edge_directions(i);
    if dirs.len() != p.dim() || !is_lattice_basis(&dirs, p.dim()).unwrap_or(false) {
        return false;
    }
    p.facets()
        .iter()
        .filter(|f| !f.vertices.contains(&i))
        .all(|f| dirs.iter().all(|e| !f.normal.dot(e).is_positive()))
}

/// Polytope-side additivity test for `P` in `M`.
///
/// The witness vertex `v` is reported together with its cone in
/// [`Polytope::normal_fan`] (cone index = vertex index, rays = facets through
/// `v`). Uniqueness is not decided here; see [`classify_polytope`].
pub fn inscribed_in_rectangle(p: &Polytope) -> AdditivityReport {
    match (0..p.vertices().len()).find(|&i| inscribed_at_vertex(p, i)) {
        Some(i) => {
            let basis: Vec<usize> =
                (0..p.facets().len()).filter(|&f| p.facets()[f].vertices.contains(&i)).collect();
            let normals: Vec<LatticeVector> = basis.iter().map(|&f| p.facets()[f].normal.clone()).collect();
            let collection = dual_basis(&normals)
                .expect("a smooth vertex has unimodular facet normals")
                .iter()
                .map(|d| -d)
                .collect();
            AdditivityReport {
                is_additive: true,
                witness_cone: Some(i),
                basis: Some(basis),
                complete_collection: Some(collection),
                is_uniquely_additive: None,
                witness_vertex: Some(p.vertices()[i].clone()),
            }
        }
        None => AdditivityReport::not_additive(false),
    }
}

/// The fan of the toric variety a polytope stands for: the normal fan for an
/// `M`-side polytope, the face fan for an `N`-side one.
pub fn variety_fan(p: &Polytope) -> Result<Fan> {
    match p.side() {
        Side::M => Ok(p.normal_fan()),
        Side::N => p.face_fan(),
    }
}

/// Additivity of the variety of a polytope, routed by its side.
///
/// `M`-side polytopes use [`inscribed_in_rectangle`] with uniqueness checked
/// on the normal fan; `N`-side polytopes run [`additive_actions`] on the face
/// fan.
pub fn classify_polytope(p: &Polytope, opts: &AdditiveOptions) -> Result<AdditivityReport> {
    match p.side() {
        Side::M => {
            let mut r = inscribed_in_rectangle(p);
            if !opts.complete_collection {
                r.complete_collection = None;
            }
            if opts.check_unique {
                r.is_uniquely_additive = Some(if r.is_additive {
                    let fan = p.normal_fan();
                    let o = AdditiveOptions { complete_collection: true, assume_complete: true, ..*opts };
                    additive_actions(&fan, &o)?.is_uniquely_additive == Some(true)
                } else {
                    false
                });
            }
            Ok(r)
        }
        Side::N => {
            let fan = p.face_fan()?;
            additive_actions(&fan, &AdditiveOptions { assume_complete: true, ..*opts })
        }
    }
}

/// Re-derive a report's claims from the definitions: basis pairing and root
/// membership of every collection element.
pub fn verify_witness(fan: &Fan, report: &AdditivityReport) -> Result<bool> {
    let (Some(basis), Some(collection)) = (&report.basis, &report.complete_collection) else {
        return Ok(!report.is_additive);
    };
    if basis.len() != fan.dim() || collection.len() != fan.dim() {
        return Ok(false);
    }
    for (i, m) in collection.iter().enumerate() {
        for (j, &b) in basis.iter().enumerate() {
            let expected = if i == j { -num_bigint::BigInt::one() } else { num_bigint::BigInt::from(0) };
            if fan.ray(b).dot(m) != expected {
                return Ok(false);
            }
        }
        if !ray_roots(fan.rays(), basis[i])?.contains(m) {
            return Ok(false);
        }
    }
    Ok(true)
}
