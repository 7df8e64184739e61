//! Face lattice of a polytope from its facet-vertex incidences.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

#[derive(Clone, Debug)]
pub struct Face {
    pub vertices: FixedBitSet,
    /// Indices of this face's facets in the level one dimension below.
    pub children: Vec<usize>,
}

/// All nonempty faces, grouped by dimension: `levels[k]` holds the k-faces and
/// `levels[dim]` holds the polytope itself.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    levels: Vec<Vec<Face>>,
}

impl FaceLattice {
    pub(crate) fn build(dim: usize, num_vertices: usize, facets: &[Vec<usize>]) -> FaceLattice {
        let mut top = FixedBitSet::with_capacity(num_vertices);
        top.insert_range(..);
        let facet_sets: Vec<FixedBitSet> = facets
            .iter()
            .map(|f| {
                let mut s = FixedBitSet::with_capacity(num_vertices);
                f.iter().for_each(|&i| s.insert(i));
                s
            })
            .collect();

        let mut levels: Vec<Vec<Face>> = vec![Vec::new(); dim + 1];
        levels[dim].push(Face { vertices: top, children: (0..facet_sets.len()).collect() });
        if dim == 0 {
            return FaceLattice { levels };
        }
        levels[dim - 1] = facet_sets.iter().map(|s| Face { vertices: s.clone(), children: Vec::new() }).collect();

        for k in (1..dim).rev() {
            let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
            let mut below: Vec<Face> = Vec::new();
            for f in 0..levels[k].len() {
                let face = &levels[k][f].vertices;
                let mut candidates: Vec<FixedBitSet> = Vec::new();
                for g in &facet_sets {
                    let mut c = face.clone();
                    c.intersect_with(g);
                    if c.count_ones(..) == 0 || &c == face || candidates.contains(&c) {
                        continue;
                    }
                    candidates.push(c);
                }
                let maximal: Vec<&FixedBitSet> = candidates
                    .iter()
                    .filter(|c| !candidates.iter().any(|d| d != *c && c.is_subset(d)))
                    .collect();
                let mut children = Vec::with_capacity(maximal.len());
                for c in maximal {
                    let idx = *index.entry(c.clone()).or_insert_with(|| {
                        below.push(Face { vertices: c.clone(), children: Vec::new() });
                        below.len() - 1
                    });
                    children.push(idx);
                }
                children.sort_unstable();
                levels[k][f].children = children;
            }
            levels[k - 1] = below;
        }
        FaceLattice { levels }
    }

    pub fn dim(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn faces(&self, k: usize) -> &[Face] {
        &self.levels[k]
    }

    /// `(f_{-1}, f_0, ..., f_{dim-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        std::iter::once(1).chain(self.levels[..self.dim()].iter().map(Vec::len)).collect()
    }

    /// Vertex index sets of the 1-faces.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        if self.dim() == 0 {
            return Vec::new();
        }
        self.levels[1]
            .iter()
            .map(|e| {
                let mut it = e.vertices.ones();
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect()
    }

    /// Pulling triangulation of the face `(k, idx)`: lists of `k + 1` vertex
    /// indices. The smallest vertex of each face is pulled first.
    pub fn pulling_triangulation(&self, k: usize, idx: usize) -> Vec<Vec<usize>> {
        let mut memo: Vec<HashMap<usize, Vec<Vec<usize>>>> = vec![HashMap::new(); self.levels.len()];
        self.triangulate(k, idx, &mut memo)
    }

    fn triangulate(
        &self,
        k: usize,
        idx: usize,
        memo: &mut Vec<HashMap<usize, Vec<Vec<usize>>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(t) = memo[k].get(&idx) {
            return t.clone();
        }
        let face = &self.levels[k][idx];
        let apex = face.vertices.ones().next().expect("faces are nonempty");
        let result = if k == 0 {
            vec![vec![apex]]
        } else {
            let mut out = Vec::new();
            for &child in &face.children {
                if self.levels[k - 1][child].vertices.contains(apex) {
                    continue;
                }
                for mut s in self.triangulate(k - 1, child, memo) {
                    s.push(apex);
                    out.push(s);
                }
            }
            out
        };
        memo[k].insert(idx, result.clone());
        result
    }
}
