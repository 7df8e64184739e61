//! Normal forms of smooth Fano polytopes under unimodular maps.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{dual_basis, LatticeVector};
use crate::polytope::Polytope;

/// Smallest sorted vertex list obtainable by sending the vertices of some
/// facet, in some order, to the standard basis.
///
/// Two smooth Fano polytopes are unimodularly equivalent iff their forms are
/// equal. Cost is `#facets * n!` sorts.
pub fn canonical_form(p: &Polytope) -> Result<Vec<LatticeVector>> {
    if !p.is_smooth_fano()? {
        return Err(Error::NotSmoothFano);
    }
    let n = p.dim();
    let mut best: Option<Vec<Vec<num_bigint::BigInt>>> = None;
    for f in p.facets() {
        let basis: Vec<LatticeVector> = f.vertices.iter().map(|&i| p.vertices()[i].clone()).collect();
        let dual = dual_basis(&basis)?;
        let coords: Vec<Vec<num_bigint::BigInt>> =
            p.vertices().iter().map(|v| dual.iter().map(|d| v.dot(d)).collect()).collect();
        for perm in (0..n).permutations(n) {
            let mut rows: Vec<Vec<num_bigint::BigInt>> =
                coords.iter().map(|c| perm.iter().map(|&j| c[j].clone()).collect()).collect();
            rows.sort();
            if best.as_ref().is_none_or(|b| rows < *b) {
                best = Some(rows);
            }
        }
    }
    Ok(best.expect("a polytope has facets").into_iter().map(LatticeVector::new).collect())
}

/// The polytope spanned by the canonical form, on the same side.
pub fn canonical_polytope(p: &Polytope) -> Result<Polytope> {
    Polytope::new(p.side(), &canonical_form(p)?)
}
