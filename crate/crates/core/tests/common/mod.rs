//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::Signed;
use toric_additive::families::{
    del_pezzo_polytope, hirzebruch_bundle_fan, kleinschmidt_fan, projective_space_fan, projective_space_polytope,
    pseudo_del_pezzo_polytope, HirzebruchBundleParams, KleinschmidtParams,
};
use toric_additive::{Fan, LatticeVector, Polytope, Side};

pub fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector::from(v)
}

pub fn fan(dim: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    Fan::new(dim, rays.iter().map(|r| lv(r)).collect(), cones.iter().map(|c| c.to_vec()).collect()).unwrap()
}

pub fn poly(side: Side, rows: &[&[i64]]) -> Polytope {
    Polytope::from_i64_rows(side, rows).unwrap()
}

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// Every `m` in `[-r, r]^n` with `<p_i, m> = -1` and `<p_j, m> >= 0` otherwise.
pub fn brute_force_roots(fan: &Fan, i: usize, r: i64) -> Vec<LatticeVector> {
    let n = fan.dim();
    let mut out = Vec::new();
    let mut cur = vec![-r; n];
    loop {
        let m = LatticeVector::from(cur.clone());
        let ok = fan.rays().iter().enumerate().all(|(j, p)| {
            let d = p.dot(&m);
            if j == i {
                d == BigInt::from(-1)
            } else {
                !d.is_negative()
            }
        });
        if ok {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            if cur[k] < r {
                cur[k] += 1;
                break;
            }
            cur[k] = -r;
            k += 1;
        }
    }
}

/// Box radius for the oracle: the largest coordinate of the claimed roots
/// plus a margin, and never below `floor`.
pub fn oracle_radius(claimed: &[LatticeVector], floor: i64) -> i64 {
    let max = claimed
        .iter()
        .flat_map(|m| m.to_i64s().unwrap())
        .map(i64::abs)
        .max()
        .unwrap_or(0);
    (max + 2).max(floor)
}

/// Lattice points in the relative interior of facet `f` of `p`.
pub fn facet_interior_points(p: &Polytope, f: usize) -> Vec<LatticeVector> {
    let facets = p.facets();
    let mut pts: Vec<LatticeVector> = p
        .lattice_points()
        .into_iter()
        .filter(|x| {
            facets.iter().enumerate().all(|(g, fac)| {
                let on = fac.normal.dot(x) + &fac.offset;
                if g == f {
                    on == BigInt::from(0)
                } else {
                    on.is_positive()
                }
            })
        })
        .collect();
    pts.sort();
    pts
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

/// Root sets of the projectivized Hirzebruch bundle as listed in the
/// literature: singletons for rays 1, 2, 4, 5 and inequality systems for
/// rays 3 and 6.
pub fn hirzebruch_literature_roots(d: i64, a: i64, b: i64) -> [Vec<LatticeVector>; 6] {
    // ray 3: (p, q, -1) with p >= a, q >= 0, q d >= p, -b >= q
    let mut r3 = Vec::new();
    for q in 0..=(-b).max(-1) {
        for p in a..=q * d {
            r3.push(lv(&[p, q, -1]));
        }
    }
    // ray 6: (p, q, 1) with p >= -a, q >= 0, q d >= p, b >= q
    let mut r6 = Vec::new();
    for q in 0..=b.max(-1) {
        for p in -a..=q * d {
            r6.push(lv(&[p, q, 1]));
        }
    }
    r3.sort();
    r6.sort();
    [vec![lv(&[-1, 0, 0])], vec![lv(&[0, -1, 0])], r3, vec![lv(&[1, 0, 0])], vec![lv(&[0, 1, 0])], r6]
}

/// Root sets for rays 2 and 5 derived directly from the defining
/// inequalities: ray 2 forces `q = -1, r = 0, 0 <= p <= -d`; ray 5 forces
/// `q = 1, r = 0, 0 <= p <= d`.
pub fn hirzebruch_rays_2_and_5(d: i64) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
    let r2 = (0..=-d).map(|p| lv(&[p, -1, 0])).collect();
    let r5 = (0..=d).map(|p| lv(&[p, 1, 0])).collect();
    (r2, r5)
}

pub fn hirzebruch_grid() -> Vec<HirzebruchBundleParams> {
    let mut out = Vec::new();
    for d in 0..=4 {
        for a in -3..=3 {
            for b in a..=3 {
                out.push(HirzebruchBundleParams::new(d, a, b).unwrap());
            }
        }
    }
    out
}

pub fn nondecreasing(len: usize, max: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for head in nondecreasing(len - 1, max) {
        let start = head.last().copied().unwrap_or(0);
        for x in start..=max {
            let mut v = head.clone();
            v.push(x);
            out.push(v);
        }
    }
    out
}

pub fn kleinschmidt_grid(max_dim: usize, max_twist: i64) -> Vec<KleinschmidtParams> {
    let mut out = Vec::new();
    for n in 2..=max_dim {
        for r in 1..n {
            for a in nondecreasing(r, max_twist) {
                out.push(KleinschmidtParams::new(r, n - r, a).unwrap());
            }
        }
    }
    out
}

pub fn hexagon_fan() -> Fan {
    fan(
        2,
        &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]],
    )
}

/// Complete fans of dimension at most 3 used across the suites.
pub fn fixture_fans() -> Vec<(String, Fan)> {
    let mut out: Vec<(String, Fan)> = Vec::new();
    for n in 1..=3 {
        out.push((format!("P{n}"), projective_space_fan(n).unwrap()));
    }
    let p1 = projective_space_fan(1).unwrap();
    out.push(("P1xP1".into(), p1.product(&p1)));
    out.push(("P1xP1xP1".into(), p1.product(&p1).product(&p1)));
    out.push(("P1xP2".into(), p1.product(&projective_space_fan(2).unwrap())));
    out.push(("hexagon".into(), hexagon_fan()));
    for d in 0..=3 {
        out.push((format!("F{d}"), kleinschmidt_fan(&KleinschmidtParams::new(1, 1, vec![d]).unwrap()).unwrap()));
    }
    for (r, s, a) in [(1, 2, vec![2]), (2, 1, vec![0, 1]), (2, 1, vec![1, 3])] {
        let p = KleinschmidtParams::new(r, s, a).unwrap();
        out.push((format!("K{p:?}"), kleinschmidt_fan(&p).unwrap()));
    }
    for (d, a, b) in [(0, 0, 0), (1, -2, 1), (2, -1, 1), (1, -1, -1), (3, -3, 2), (2, 0, 3)] {
        let p = HirzebruchBundleParams::new(d, a, b).unwrap();
        out.push((format!("H{d},{a},{b}"), hirzebruch_bundle_fan(&p).unwrap()));
    }
    for (id, p) in toric_additive::atlas::dim2_fixture() {
        out.push((format!("grdb2-{id}"), p.face_fan().unwrap()));
    }
    // complete but not smooth
    let weighted = poly(Side::N, &[&[1, 0], &[0, 1], &[-1, -2]]);
    out.push(("singular".into(), weighted.face_fan().unwrap()));
    out
}

/// Reflexive polytopes in `M` (duals of smooth Fano polytopes and a few
/// others).
pub fn reflexive_m_fixtures() -> Vec<(String, Polytope)> {
    let mut out = Vec::new();
    for (id, p) in toric_additive::atlas::dim2_fixture() {
        out.push((format!("grdb2-{id}-dual"), p.dual().unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("P{n}-dual"), projective_space_polytope(n).unwrap().dual().unwrap()));
    }
    out.push(("dP4-dual".into(), del_pezzo_polytope(4).unwrap().dual().unwrap()));
    out.push(("pdP4-dual".into(), pseudo_del_pezzo_polytope(4).unwrap().dual().unwrap()));
    out.push(("hexagon-M".into(), poly(Side::M, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]])));
    // reflexive but not smooth
    out.push(("P112-dual".into(), poly(Side::N, &[&[1, 0], &[0, 1], &[-1, -2]]).dual().unwrap()));
    out
}

/// Smooth Fano polytopes in `N` of dimension at most 4.
pub fn smooth_fano_fixtures() -> Vec<(String, Polytope)> {
    let mut out: Vec<(String, Polytope)> =
        toric_additive::atlas::dim2_fixture().into_iter().map(|(id, p)| (format!("grdb2-{id}"), p)).collect();
    for n in 1..=4 {
        out.push((format!("P{n}"), projective_space_polytope(n).unwrap()));
    }
    let seg = toric_additive::families::interval();
    let pent = out[0].1.clone();
    out.push(("cross3".into(), seg.free_sum(&seg).unwrap().free_sum(&seg).unwrap()));
    out.push(("seg+pent".into(), seg.free_sum(&pent).unwrap()));
    out.push(("pent+pent".into(), pent.free_sum(&pent).unwrap()));
    out.push(("P2+P2".into(), projective_space_polytope(2).unwrap().free_sum(&projective_space_polytope(2).unwrap()).unwrap()));
    out.push(("dP4".into(), del_pezzo_polytope(4).unwrap()));
    out.push(("pdP4".into(), pseudo_del_pezzo_polytope(4).unwrap()));
    out
}
