//! Brute-force enumeration of smooth Fano polygons.

use std::collections::BTreeSet;

use crate::linalg::LatticeVector;
use crate::polytope::{Polytope, Side};

use super::canonical::canonical_form;

/// Every smooth Fano polygon up to unimodular equivalence, in canonical form,
/// sorted by canonical vertex list.
///
/// Every smooth Fano polygon is equivalent to one with vertices among the
/// nonzero points of `[-1, 1]^2`, so scanning all subsets of those eight
/// points is exhaustive.
pub fn enumerate_smooth_fano_dim2() -> Vec<Polytope> {
    let points: Vec<LatticeVector> = (-1..=1i64)
        .flat_map(|x| (-1..=1i64).map(move |y| LatticeVector::from([x, y])))
        .filter(|p| !p.is_zero())
        .collect();
    let mut forms: BTreeSet<Vec<LatticeVector>> = BTreeSet::new();
    for mask in 1u32..(1 << points.len()) {
        if mask.count_ones() < 3 {
            continue;
        }
        let chosen: Vec<LatticeVector> =
            (0..points.len()).filter(|&i| mask & (1 << i) != 0).map(|i| points[i].clone()).collect();
        let Ok(p) = Polytope::new(Side::N, &chosen) else {
            continue;
        };
        if !p.discarded_points().is_empty() || !p.contains_origin_in_interior() {
            continue;
        }
        if p.is_smooth_fano().unwrap_or(false) {
            forms.insert(canonical_form(&p).expect("smooth Fano"));
        }
    }
    forms
        .into_iter()
        .map(|f| Polytope::new(Side::N, &f).expect("canonical form spans the plane"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_classes() {
        let all = enumerate_smooth_fano_dim2();
        let mut sizes: Vec<usize> = all.iter().map(|p| p.vertices().len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4, 4, 5, 6]);
    }
}
