//! Complete fans in `N_Q`, stored as primitive rays plus maximal cones.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::cone::{dual_cone, is_strictly_convex, ConeHRep};
use crate::error::{Error, Result};
use crate::linalg::{det, primitive, rank, IntMatrix, LatticeVector};

/// A fan given by its rays and maximal cones.
///
/// Each maximal cone is a sorted list of indices into `rays`. Non-maximal
/// cones are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
    known_complete: Option<bool>,
    known_smooth: Option<bool>,
}

/// A broken fan invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongLength { ray: usize, len: usize },
    ZeroRay { ray: usize },
    NonPrimitiveRay { ray: usize },
    DuplicateRay { first: usize, second: usize },
    InvalidRayIndex { cone: usize, index: usize },
    EmptyCone { cone: usize },
    NotStrictlyConvex { cone: usize },
    UnusedRay { ray: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { ray, len } => write!(f, "ray {ray} has {len} coordinates"),
            Violation::ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            Violation::NonPrimitiveRay { ray } => write!(f, "non-primitive ray {ray}"),
            Violation::DuplicateRay { first, second } => write!(f, "rays {first} and {second} coincide"),
            Violation::InvalidRayIndex { cone, index } => {
                write!(f, "cone {cone} references missing ray {index}")
            }
            Violation::EmptyCone { cone } => write!(f, "cone {cone} has no rays"),
            Violation::NotStrictlyConvex { cone } => write!(f, "cone {cone} is not strictly convex"),
            Violation::UnusedRay { ray } => write!(f, "ray {ray} lies in no maximal cone"),
        }
    }
}

impl Fan {
    /// Builds a fan and checks every structural invariant.
    pub fn new(dim: usize, rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        let fan = Fan::from_parts(dim, rays, cones);
        let violations = fan.validate();
        if violations.is_empty() {
            Ok(fan)
        } else {
            Err(Error::InvalidFan(violations))
        }
    }

    /// Builds a fan without validation. Cone index lists are sorted.
    pub fn from_parts(dim: usize, rays: Vec<LatticeVector>, mut cones: Vec<Vec<usize>>) -> Fan {
        for c in cones.iter_mut() {
            c.sort_unstable();
            c.dedup();
        }
        Fan { dim, rays, cones, known_complete: None, known_smooth: None }
    }

    /// Records completeness as known, letting later checks skip recomputation.
    pub fn with_known_complete(mut self, complete: bool) -> Fan {
        self.known_complete = Some(complete);
        self
    }

    pub fn with_known_smooth(mut self, smooth: bool) -> Fan {
        self.known_smooth = Some(smooth);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticeVector {
        &self.rays[i]
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn known_complete(&self) -> Option<bool> {
        self.known_complete
    }

    pub fn known_smooth(&self) -> Option<bool> {
        self.known_smooth
    }

    pub fn ray_index(&self, v: &LatticeVector) -> Option<usize> {
        self.rays.iter().position(|r| r == v)
    }

    pub fn cone_generators(&self, cone: usize) -> Vec<LatticeVector> {
        self.cones[cone].iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// Lists every broken invariant; empty iff the fan is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen: HashMap<&LatticeVector, usize> = HashMap::new();
        for (i, r) in self.rays.iter().enumerate() {
            if r.dim() != self.dim {
                out.push(Violation::WrongLength { ray: i, len: r.dim() });
                continue;
            }
            if r.is_zero() {
                out.push(Violation::ZeroRay { ray: i });
                continue;
            }
            if !r.is_primitive() {
                out.push(Violation::NonPrimitiveRay { ray: i });
            }
            if let Some(&first) = seen.get(r) {
                out.push(Violation::DuplicateRay { first, second: i });
            } else {
                seen.insert(r, i);
            }
        }
        let mut used = vec![false; self.rays.len()];
        for (c, cone) in self.cones.iter().enumerate() {
            if cone.is_empty() {
                out.push(Violation::EmptyCone { cone: c });
                continue;
            }
            let mut ok = true;
            for &i in cone {
                if i >= self.rays.len() {
                    out.push(Violation::InvalidRayIndex { cone: c, index: i });
                    ok = false;
                } else {
                    used[i] = true;
                    if self.rays[i].dim() != self.dim || self.rays[i].is_zero() {
                        ok = false;
                    }
                }
            }
            if ok && !is_strictly_convex(&self.cone_generators(c), self.dim) {
                out.push(Violation::NotStrictlyConvex { cone: c });
            }
        }
        for (i, u) in used.iter().enumerate() {
            if !u {
                out.push(Violation::UnusedRay { ray: i });
            }
        }
        out
    }

    fn cone_is_full_dimensional(&self, cone: usize) -> bool {
        rank(&self.cone_generators(cone)) == self.dim
    }

    /// Maximal cones that are not full-dimensional.
    pub fn lower_dimensional_cones(&self) -> Vec<usize> {
        (0..self.cones.len()).filter(|&c| !self.cone_is_full_dimensional(c)).collect()
    }

    /// Every maximal cone has `dim` linearly independent rays.
    pub fn is_simplicial(&self) -> bool {
        (0..self.cones.len())
            .all(|c| self.cones[c].len() == self.dim && self.cone_is_full_dimensional(c))
    }

    /// Simplicial, and every maximal cone's rays form a lattice basis.
    pub fn is_smooth(&self) -> bool {
        if let Some(s) = self.known_smooth {
            return s;
        }
        self.cones.iter().enumerate().all(|(c, cone)| {
            cone.len() == self.dim
                && det(&IntMatrix::from_rows(&self.cone_generators(c)).expect("rays share a length"))
                    .map(|d| d.abs() == 1.into())
                    .unwrap_or(false)
        })
    }

    /// Ridge-pairing completeness test.
    ///
    /// Every ridge of a maximal cone must be shared by exactly two maximal
    /// cones lying on opposite sides of it, the cones must be connected
    /// through ridges, and an interior point of the first cone must lie in
    /// the interior of no other cone.
    pub fn is_complete(&self) -> Result<bool> {
        if let Some(c) = self.known_complete {
            return Ok(c);
        }
        if self.cones.is_empty() {
            return Ok(false);
        }
        if let Some(&c) = self.lower_dimensional_cones().first() {
            return Err(Error::NotFullDimensional { cone: c });
        }
        let hreps: Vec<ConeHRep> = (0..self.cones.len())
            .map(|c| dual_cone(&self.cone_generators(c), self.dim))
            .collect::<Result<_>>()?;

        // ridge (as sorted ray indices) -> [(cone, inner normal)]
        let mut ridges: HashMap<Vec<usize>, Vec<(usize, &LatticeVector)>> = HashMap::new();
        for (c, h) in hreps.iter().enumerate() {
            for u in &h.inequalities {
                let ridge: Vec<usize> =
                    self.cones[c].iter().copied().filter(|&i| self.rays[i].dot(u).is_zero()).collect();
                ridges.entry(ridge).or_default().push((c, u));
            }
        }

        let mut parent: Vec<usize> = (0..self.cones.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (ridge, owners) in &ridges {
            if owners.len() != 2 {
                return Ok(false);
            }
            let (a, u) = owners[0];
            let (b, _) = owners[1];
            let opposite = self.cones[b]
                .iter()
                .filter(|i| !ridge.contains(i))
                .all(|&i| self.rays[i].dot(u).is_negative());
            if !opposite {
                return Ok(false);
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        if (0..self.cones.len()).any(|c| find(&mut parent, c) != root) {
            return Ok(false);
        }

        let probe = self.cone_generators(0).iter().fold(LatticeVector::zero(self.dim), |acc, g| &acc + g);
        let covering = hreps.iter().filter(|h| h.contains_in_interior(&probe)).count();
        Ok(covering == 1)
    }

    /// Returns an error unless the fan is (known or verified to be) complete.
    pub fn ensure_complete(&self) -> Result<()> {
        if self.is_complete()? {
            Ok(())
        } else {
            Err(Error::NotComplete)
        }
    }

    /// Product fan in `N_1 x N_2`; rays of `self` come first.
    pub fn product(&self, other: &Fan) -> Fan {
        let z1 = LatticeVector::zero(self.dim);
        let z2 = LatticeVector::zero(other.dim);
        let mut rays: Vec<LatticeVector> = self.rays.iter().map(|r| r.concat(&z2)).collect();
        rays.extend(other.rays.iter().map(|r| z1.concat(r)));
        let offset = self.rays.len();
        let mut cones = Vec::new();
        for a in &self.cones {
            for b in &other.cones {
                cones.push(a.iter().copied().chain(b.iter().map(|&j| j + offset)).collect());
            }
        }
        let mut fan = Fan::from_parts(self.dim + other.dim, rays, cones);
        if let (Some(x), Some(y)) = (self.known_complete, other.known_complete) {
            fan.known_complete = Some(x && y);
        }
        fan
    }

    /// Image of the fan under the linear map `x -> x * m` (rows of `m` are the
    /// images of the standard basis); `m` must be unimodular.
    pub fn transform(&self, m: &IntMatrix) -> Result<Fan> {
        let d = det(m)?;
        if d.abs() != 1.into() {
            return Err(Error::NotUnimodular { det: d });
        }
        let rays = self.rays.iter().map(|r| m.apply_right(r)).collect();
        Ok(Fan { rays, ..self.clone() })
    }

    /// Fan from arbitrary nonzero generators, replacing each by its primitive vector.
    pub fn from_generators(dim: usize, gens: &[LatticeVector], cones: Vec<Vec<usize>>) -> Result<Fan> {
        let rays = gens.iter().map(primitive).collect::<Result<Vec<_>>>()?;
        Fan::new(dim, rays, cones)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from(v)
    }

    fn p2() -> Fan {
        Fan::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(p2().validate().is_empty());
        let bad = Fan::from_parts(
            2,
            vec![lv(&[2, 0]), lv(&[0, 1]), lv(&[-1, -1])],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        );
        assert_eq!(bad.validate(), vec![Violation::NonPrimitiveRay { ray: 0 }]);
        let line = Fan::from_parts(2, vec![lv(&[1, 0]), lv(&[-1, 0])], vec![vec![0, 1]]);
        assert_eq!(line.validate(), vec![Violation::NotStrictlyConvex { cone: 0 }]);
        let unused = Fan::from_parts(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[0, -1])], vec![vec![0, 1]]);
        assert_eq!(unused.validate(), vec![Violation::UnusedRay { ray: 2 }]);
        let dangling = Fan::from_parts(2, vec![lv(&[1, 0])], vec![vec![0, 4]]);
        assert_eq!(dangling.validate(), vec![Violation::InvalidRayIndex { cone: 0, index: 4 }]);
        let dup = Fan::from_parts(1, vec![lv(&[1]), lv(&[1])], vec![vec![0], vec![1]]);
        assert_eq!(dup.validate(), vec![Violation::DuplicateRay { first: 0, second: 1 }]);
    }

    #[test]
    fn smoothness_examples() {
        let f = p2();
        assert!(f.is_simplicial());
        assert!(f.is_smooth());
        let singular = Fan::new(
            2,
            vec![lv(&[1, 0]), lv(&[1, 2]), lv(&[-1, -1])],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(singular.is_simplicial());
        assert!(!singular.is_smooth());
        let flat = Fan::new(2, vec![lv(&[1, 0]), lv(&[0, 1])], vec![vec![0], vec![1]]).unwrap();
        assert!(!flat.is_simplicial());
        assert_eq!(flat.lower_dimensional_cones(), vec![0, 1]);
        assert!(matches!(flat.is_complete(), Err(Error::NotFullDimensional { cone: 0 })));
    }

    #[test]
    fn completeness_examples() {
        let p1 = Fan::new(1, vec![lv(&[1]), lv(&[-1])], vec![vec![0], vec![1]]).unwrap();
        assert!(p1.is_complete().unwrap());
        assert!(p2().is_complete().unwrap());
        let missing = Fan::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])], vec![vec![0, 1], vec![1, 2]])
            .unwrap();
        assert!(!missing.is_complete().unwrap());
    }

    #[test]
    fn non_simplicial_cones() {
        // fan over the faces of the octahedron's dual: the 3-cube face fan
        let mut rays = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    rays.push(lv(&[x, y, z]));
                }
            }
        }
        let mut cones = Vec::new();
        for axis in 0..3 {
            for sign in [-1, 1] {
                cones.push((0..8).filter(|&i| rays[i][axis] == sign.into()).collect());
            }
        }
        let fan = Fan::new(3, rays, cones).unwrap();
        assert!(!fan.is_simplicial());
        assert!(!fan.is_smooth());
        assert!(fan.is_complete().unwrap());
    }

    #[test]
    fn triple_cover_is_rejected() {
        // eight rays around the circle, cones spanning 135 degrees each
        let rays: Vec<LatticeVector> = [[1, 0], [1, 1], [0, 1], [-1, 1], [-1, 0], [-1, -1], [0, -1], [1, -1]]
            .iter()
            .map(|v| lv(v))
            .collect();
        let cones = (0..8).map(|k| vec![(3 * k) % 8, (3 * k + 3) % 8]).collect();
        let fan = Fan::new(2, rays, cones).unwrap();
        assert!(!fan.is_complete().unwrap());
    }

    #[test]
    fn same_side_neighbours_are_rejected() {
        let fan = Fan::new(
            2,
            vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1]), lv(&[-1, -1])],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        );
        // {1,2} and {0,2} both lie inside {0,1}; ray 3 unused
        assert!(fan.is_err());
        let fan = Fan::from_parts(
            2,
            vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        );
        assert!(!fan.is_complete().unwrap());
    }

    #[test]
    fn product_of_projective_lines() {
        let p1 = Fan::new(1, vec![lv(&[1]), lv(&[-1])], vec![vec![0], vec![1]]).unwrap();
        let f = p1.product(&p1);
        assert_eq!(f.rays().len(), 4);
        assert_eq!(f.cones().len(), 4);
        assert!(f.validate().is_empty());
        assert!(f.is_smooth());
        assert!(f.is_complete().unwrap());
    }
}
