//! Lattice polytopes in V-representation with a cached facet description.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::cone_from_inequalities;
use crate::error::{Error, Result};
use crate::faces::FaceLattice;
use crate::fan::Fan;
use crate::linalg::{det, is_lattice_basis, primitive, rank, IntMatrix, LatticeVector};

/// Which of the two dual lattices a polytope lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    M,
    N,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::M => Side::N,
            Side::N => Side::M,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::M => "M",
            Side::N => "N",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A facet `{x in P : <normal, x> = -offset}`; the polytope lies in
/// `<normal, x> >= -offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: LatticeVector,
    pub offset: BigInt,
    pub vertices: Vec<usize>,
}

/// Result of a convex hull computation.
#[derive(Clone, Debug)]
pub struct Hull {
    pub vertices: Vec<LatticeVector>,
    pub facets: Vec<Facet>,
    /// Input points that turned out not to be vertices.
    pub discarded: Vec<LatticeVector>,
}

/// Facets and vertices of the convex hull of full-dimensional lattice points.
pub fn hull_facets(points: &[LatticeVector]) -> Result<Hull> {
    let dim = points.first().map(LatticeVector::dim).ok_or(Error::LowerDimensional { affine_dim: 0, ambient: 0 })?;
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let diffs: Vec<LatticeVector> = pts[1..].iter().map(|p| p - &pts[0]).collect();
    let affine_dim = rank(&diffs);
    if affine_dim < dim {
        return Err(Error::LowerDimensional { affine_dim, ambient: dim });
    }

    let one = LatticeVector::from([1]);
    let rows: Vec<LatticeVector> = pts.iter().map(|p| one.concat(p)).collect();
    let cone = cone_from_inequalities(dim + 1, &rows);
    debug_assert!(cone.lineality.is_empty());

    let mut raw: Vec<(LatticeVector, Vec<usize>)> = Vec::with_capacity(cone.rays.len());
    for ray in &cone.rays {
        let normal = primitive(&LatticeVector::new(ray.coords()[1..].to_vec()))?;
        let min = pts.iter().map(|p| normal.dot(p)).min().unwrap();
        let incident = (0..pts.len()).filter(|&i| normal.dot(&pts[i]) == min).collect();
        raw.push((normal, incident));
    }

    let is_vertex: Vec<bool> = (0..pts.len())
        .map(|i| {
            let normals: Vec<LatticeVector> =
                raw.iter().filter(|(_, inc)| inc.contains(&i)).map(|(n, _)| n.clone()).collect();
            rank(&normals) == dim
        })
        .collect();
    let mut new_index = vec![usize::MAX; pts.len()];
    let mut vertices = Vec::new();
    let mut discarded = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        if is_vertex[i] {
            new_index[i] = vertices.len();
            vertices.push(p.clone());
        } else {
            discarded.push(p.clone());
        }
    }
    let mut facets: Vec<Facet> = raw
        .into_iter()
        .map(|(normal, inc)| {
            let vs: Vec<usize> = inc.iter().filter(|&&i| is_vertex[i]).map(|&i| new_index[i]).collect();
            let offset = -normal.dot(&vertices[vs[0]]);
            Facet { normal, offset, vertices: vs }
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(Hull { vertices, facets, discarded })
}

/// A full-dimensional lattice polytope.
///
/// Vertices are kept sorted lexicographically and facets sorted by normal; the
/// face lattice is computed on first use.
#[derive(Debug)]
pub struct Polytope {
    dim: usize,
    side: Side,
    vertices: Vec<LatticeVector>,
    facets: Vec<Facet>,
    discarded: Vec<LatticeVector>,
    lattice: OnceLock<FaceLattice>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        Polytope {
            dim: self.dim,
            side: self.side,
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            discarded: self.discarded.clone(),
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.vertices == other.vertices
    }
}

impl Polytope {
    /// Convex hull of `points`. Points that are not vertices are dropped and
    /// kept in [`Polytope::discarded_points`].
    pub fn new(side: Side, points: &[LatticeVector]) -> Result<Polytope> {
        let hull = hull_facets(points)?;
        Ok(Polytope {
            dim: points[0].dim(),
            side,
            vertices: hull.vertices,
            facets: hull.facets,
            discarded: hull.discarded,
            lattice: OnceLock::new(),
        })
    }

    pub fn from_i64_rows(side: Side, rows: &[&[i64]]) -> Result<Polytope> {
        let pts: Vec<LatticeVector> = rows.iter().map(|r| LatticeVector::from(*r)).collect();
        Polytope::new(side, &pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The same vertex set, relabelled as living in the other lattice.
    pub fn with_side(mut self, side: Side) -> Polytope {
        self.side = side;
        self
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn discarded_points(&self) -> &[LatticeVector] {
        &self.discarded
    }

    pub fn vertex_index(&self, v: &LatticeVector) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| {
            let facets: Vec<Vec<usize>> = self.facets.iter().map(|f| f.vertices.clone()).collect();
            FaceLattice::build(self.dim, self.vertices.len(), &facets)
        })
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        self.facets.iter().all(|f| !(f.normal.dot(x) + &f.offset).is_negative())
    }

    pub fn contains_origin_in_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_positive())
    }

    fn require_origin_interior(&self) -> Result<()> {
        if self.contains_origin_in_interior() {
            Ok(())
        } else {
            Err(Error::OriginNotInterior)
        }
    }

    /// Every facet is at lattice distance one from the origin.
    pub fn is_reflexive(&self) -> Result<bool> {
        self.require_origin_interior()?;
        Ok(self.facets.iter().all(|f| f.offset.is_one()))
    }

    /// The polar dual; vertices are the facet normals. Lives in the other lattice.
    pub fn dual(&self) -> Result<Polytope> {
        if !self.is_reflexive()? {
            return Err(Error::NotReflexive);
        }
        let normals: Vec<LatticeVector> = self.facets.iter().map(|f| f.normal.clone()).collect();
        Polytope::new(self.side.dual(), &normals)
    }

    /// Primitive directions of the edges leaving vertex `v`.
    pub fn edges_at_vertex(&self, v: &LatticeVector) -> Result<Vec<LatticeVector>> {
        let i = self.vertex_index(v).ok_or_else(|| Error::NotAVertex(v.to_string()))?;
        Ok(self.edge_directions(i))
    }

    pub(crate) fn edge_directions(&self, i: usize) -> Vec<LatticeVector> {
        let mut dirs: Vec<LatticeVector> = self
            .face_lattice()
            .edges()
            .into_iter()
            .filter_map(|(a, b)| match (a == i, b == i) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .map(|j| primitive(&(&self.vertices[j] - &self.vertices[i])).expect("distinct vertices"))
            .collect();
        dirs.sort();
        dirs
    }

    /// The edge directions at vertex `i` form a lattice basis.
    pub(crate) fn is_smooth_vertex(&self, i: usize) -> bool {
        let dirs = self.edge_directions(i);
        dirs.len() == self.dim && is_lattice_basis(&dirs, self.dim).unwrap_or(false)
    }

    /// At every vertex the primitive edge directions form a lattice basis.
    pub fn is_smooth(&self) -> bool {
        (0..self.vertices.len()).all(|i| self.is_smooth_vertex(i))
    }

    /// The vertices of every facet form a lattice basis.
    pub fn is_smooth_fano(&self) -> Result<bool> {
        self.require_origin_interior()?;
        Ok(self.facets.iter().all(|f| {
            f.vertices.len() == self.dim && {
                let vs: Vec<LatticeVector> = f.vertices.iter().map(|&i| self.vertices[i].clone()).collect();
                is_lattice_basis(&vs, self.dim).unwrap_or(false)
            }
        }))
    }

    /// Every facet is a simplex.
    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.vertices.len() == self.dim)
    }

    /// Inner normal fan: rays are facet normals, the cone of vertex `v` is
    /// spanned by the normals of the facets through `v`. Cone `i` belongs to
    /// vertex `i`.
    pub fn normal_fan(&self) -> Fan {
        let rays = self.facets.iter().map(|f| f.normal.clone()).collect();
        let cones = (0..self.vertices.len())
            .map(|v| (0..self.facets.len()).filter(|&f| self.facets[f].vertices.contains(&v)).collect())
            .collect();
        Fan::from_parts(self.dim, rays, cones).with_known_complete(true)
    }

    /// Fan over the faces of a polytope with the origin in its interior: rays
    /// through the vertices, one maximal cone per facet. For a reflexive `P`
    /// this is the normal fan of the dual.
    pub fn face_fan(&self) -> Result<Fan> {
        self.require_origin_interior()?;
        let rays = self.vertices.iter().map(primitive).collect::<Result<Vec<_>>>()?;
        let cones = self.facets.iter().map(|f| f.vertices.clone()).collect();
        Ok(Fan::from_parts(self.dim, rays, cones).with_known_complete(true))
    }

    /// `(f_{-1}, f_0, ..., f_{dim-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.face_lattice().f_vector()
    }

    /// `dim! * volume`, exact.
    pub fn normalized_volume(&self) -> BigInt {
        let lattice = self.face_lattice();
        let mut total = BigInt::zero();
        for simplex in lattice.pulling_triangulation(self.dim, 0) {
            let base = &self.vertices[simplex[0]];
            let rows: Vec<LatticeVector> = simplex[1..].iter().map(|&i| &self.vertices[i] - base).collect();
            total += det(&IntMatrix::from_rows(&rows).expect("rows share a length")).unwrap().abs();
        }
        total
    }

    /// Lattice points of the polytope, by scanning its bounding box.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let lo: Vec<BigInt> =
            (0..self.dim).map(|k| self.vertices.iter().map(|v| v[k].clone()).min().unwrap()).collect();
        let hi: Vec<BigInt> =
            (0..self.dim).map(|k| self.vertices.iter().map(|v| v[k].clone()).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let p = LatticeVector::new(cur.clone());
            if self.contains(&p) {
                out.push(p);
            }
            let mut k = 0;
            loop {
                if k == self.dim {
                    return out;
                }
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k].clone();
                k += 1;
            }
        }
    }

    /// `conv(P x {0} u {0} x Q)`.
    pub fn free_sum(&self, other: &Polytope) -> Result<Polytope> {
        let z1 = LatticeVector::zero(self.dim);
        let z2 = LatticeVector::zero(other.dim);
        let mut pts: Vec<LatticeVector> = self.vertices.iter().map(|v| v.concat(&z2)).collect();
        pts.extend(other.vertices.iter().map(|w| z1.concat(w)));
        Polytope::new(self.side, &pts)
    }

    /// Cartesian product.
    pub fn product(&self, other: &Polytope) -> Result<Polytope> {
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for v in &self.vertices {
            for w in &other.vertices {
                pts.push(v.concat(w));
            }
        }
        Polytope::new(self.side, &pts)
    }

    /// Image under `x -> x * m` for a unimodular `m`.
    pub fn transform(&self, m: &IntMatrix) -> Result<Polytope> {
        let d = det(m)?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular { det: d });
        }
        let pts: Vec<LatticeVector> = self.vertices.iter().map(|v| m.apply_right(v)).collect();
        Polytope::new(self.side, &pts)
    }
}
