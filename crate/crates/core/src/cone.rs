//! Polyhedral cones via the double description method.
//!
//! [`cone_from_inequalities`] converts `{x : <a_k, x> >= 0}` into a lineality
//! basis plus extreme rays. Everything else in the crate that needs facets or
//! vertices goes through it.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, make_primitive_in_place, rank, LatticeVector};

/// Generator description of `{x : <a_k, x> >= 0 for all k}`: the cone equals
/// `span(lineality) + cone(rays)`.
#[derive(Clone, Debug)]
pub(crate) struct ConeGenerators {
    pub lineality: Vec<LatticeVector>,
    pub rays: Vec<LatticeVector>,
}

impl ConeGenerators {
    pub fn dimension(&self) -> usize {
        let mut all = self.lineality.clone();
        all.extend(self.rays.iter().cloned());
        rank(&all)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: FixedBitSet,
}

/// Double description with lexicographically sorted constraint insertion.
pub(crate) fn cone_from_inequalities(dim: usize, rows: &[LatticeVector]) -> ConeGenerators {
    let mut order: Vec<&LatticeVector> = rows.iter().filter(|r| !r.is_zero()).collect();
    order.sort();
    order.dedup();
    let m = order.len();

    let mut lineality: Vec<Vec<BigInt>> =
        (0..dim).map(|i| LatticeVector::unit(dim, i).into_coords()).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in order.iter().enumerate() {
        let a = a.coords();
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.swap_remove(pos);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l.iter_mut().for_each(|x| *x = -&*x);
                al = -al;
            }
            for other in lineality.iter_mut() {
                let ao = dot(a, other);
                if !ao.is_zero() {
                    for (x, y) in other.iter_mut().zip(&l) {
                        *x = &al * &*x - &ao * y;
                    }
                    make_primitive_in_place(other);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    for (x, y) in r.v.iter_mut().zip(&l) {
                        *x = &al * &*x - &ar * y;
                    }
                    make_primitive_in_place(&mut r.v);
                }
                r.zeros.insert(k);
            }
            let mut zeros = FixedBitSet::with_capacity(m);
            zeros.insert_range(..k);
            rays.push(Ray { v: l, zeros });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        let pointed_dim = dim - lineality.len();
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[n].zeros);
                if pointed_dim >= 2 && common.count_ones(..) + 2 < pointed_dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let mut v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| &values[p] * xn - &values[n] * xp)
                    .collect();
                make_primitive_in_place(&mut v);
                common.insert(k);
                created.push(Ray { v, zeros: common });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, val) in rays.into_iter().zip(values) {
            if val.is_negative() {
                continue;
            }
            if val.is_zero() {
                r.zeros.insert(k);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    let mut rays: Vec<LatticeVector> = rays.into_iter().map(|r| LatticeVector::new(r.v)).collect();
    rays.sort();
    ConeGenerators {
        lineality: lineality.into_iter().map(LatticeVector::new).collect(),
        rays,
    }
}

/// Irredundant H-representation of a cone: `cone = {x : <u, x> >= 0 for all u}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeHRep {
    pub inequalities: Vec<LatticeVector>,
}

impl ConeHRep {
    pub fn contains(&self, x: &LatticeVector) -> bool {
        self.inequalities.iter().all(|u| !u.dot(x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &LatticeVector) -> bool {
        self.inequalities.iter().all(|u| u.dot(x).is_positive())
    }
}

/// The dual of `cone(generators)`.
///
/// The inequalities of the returned representation are the extremal rays of the
/// dual cone, i.e. the primitive inner facet normals of `cone(generators)`. For
/// a full-dimensional strictly convex input they are irredundant and the result
/// is pointed.
pub fn dual_cone(generators: &[LatticeVector], dim: usize) -> Result<ConeHRep> {
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
        }
    }
    let gens = cone_from_inequalities(dim, generators);
    if !gens.lineality.is_empty() {
        return Err(Error::LowerDimensional { affine_dim: dim - gens.lineality.len(), ambient: dim });
    }
    Ok(ConeHRep { inequalities: gens.rays })
}

/// True iff `cone(generators)` contains no line.
pub fn is_strictly_convex(generators: &[LatticeVector], dim: usize) -> bool {
    if generators.iter().all(LatticeVector::is_zero) {
        return true;
    }
    cone_from_inequalities(dim, generators).dimension() == dim
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from(v)
    }

    fn sorted(mut v: Vec<LatticeVector>) -> Vec<LatticeVector> {
        v.sort();
        v
    }

    #[test]
    fn octant_is_self_dual() {
        let d = dual_cone(&[lv(&[1, 0]), lv(&[0, 1])], 2).unwrap();
        assert_eq!(d.inequalities, vec![lv(&[0, 1]), lv(&[1, 0])]);
        let e3: Vec<_> = (0..3).map(|i| LatticeVector::unit(3, i)).collect();
        assert_eq!(dual_cone(&e3, 3).unwrap().inequalities, sorted(e3.clone()));
    }

    #[test]
    fn skewed_planar_cone() {
        let d = dual_cone(&[lv(&[1, 0]), lv(&[1, 2])], 2).unwrap();
        assert_eq!(d.inequalities, sorted(vec![lv(&[0, 1]), lv(&[2, -1])]));
    }

    #[test]
    fn dual_of_dual_recovers_extremal_rays() {
        // square pyramid with a redundant generator
        let gens = vec![
            lv(&[1, 1, 1]),
            lv(&[1, -1, 1]),
            lv(&[-1, 1, 1]),
            lv(&[-1, -1, 1]),
            lv(&[0, 0, 1]),
        ];
        let d = dual_cone(&gens, 3).unwrap();
        assert_eq!(d.inequalities.len(), 4);
        let dd = dual_cone(&d.inequalities, 3).unwrap();
        assert_eq!(dd.inequalities, sorted(gens[..4].to_vec()));
    }

    #[test]
    fn lineality_detected() {
        assert!(!is_strictly_convex(&[lv(&[1, 0]), lv(&[-1, 0])], 2));
        assert!(!is_strictly_convex(&[lv(&[1, 0]), lv(&[-1, 1]), lv(&[0, -1])], 2));
        assert!(is_strictly_convex(&[lv(&[1, 0]), lv(&[0, 1])], 2));
        assert!(is_strictly_convex(&[lv(&[1, 0, 0])], 3));
        assert!(matches!(
            dual_cone(&[lv(&[1, 0, 0]), lv(&[0, 1, 0])], 3),
            Err(Error::LowerDimensional { .. })
        ));
        assert!(matches!(dual_cone(&[], 2), Err(Error::NoGenerators)));
    }

    #[test]
    fn whole_space_and_halfspace() {
        let g = cone_from_inequalities(3, &[]);
        assert_eq!(g.lineality.len(), 3);
        assert!(g.rays.is_empty());
        let g = cone_from_inequalities(3, &[lv(&[0, 0, 2])]);
        assert_eq!(g.lineality.len(), 2);
        assert_eq!(g.rays, vec![lv(&[0, 0, 1])]);
    }
}
