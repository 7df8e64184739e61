//! Named fans and polytopes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg::LatticeVector;
use crate::polytope::{Polytope, Side};

fn sum_of_units(n: usize, sign: i64) -> LatticeVector {
    LatticeVector::from(vec![sign; n])
}

/// Fan of projective `n`-space: rays `e_1, .., e_n, -(e_1 + .. + e_n)`.
///
/// Maximal cones omit one ray each, in the order "omit `e_n`", "omit
/// `e_{n-1}`", .., "omit `e_1`", "omit the last ray". For `n = 2` the first
/// cone is `{e_1, -e_1 - e_2}`.
pub fn projective_space_fan(n: usize) -> Result<Fan> {
    if n < 1 {
        return Err(Error::InvalidParameters("projective space needs n >= 1".into()));
    }
    let mut rays: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    rays.push(sum_of_units(n, -1));
    let omit_order = (0..n).rev().chain(std::iter::once(n));
    let cones = omit_order.map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
    Ok(Fan::from_parts(n, rays, cones).with_known_complete(true).with_known_smooth(true))
}

/// Parameters of a smooth complete toric variety of Picard rank two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleinschmidtParams {
    pub r: usize,
    pub s: usize,
    /// Nondecreasing, nonnegative, length `r`.
    pub a: Vec<i64>,
}

impl KleinschmidtParams {
    pub fn new(r: usize, s: usize, a: Vec<i64>) -> Result<KleinschmidtParams> {
        let p = KleinschmidtParams { r, s, a };
        p.validate()?;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.r + self.s
    }

    fn validate(&self) -> Result<()> {
        if self.r < 1 || self.s < 1 {
            return Err(Error::InvalidParameters("r and s must be at least 1".into()));
        }
        if self.a.len() != self.r {
            return Err(Error::InvalidParameters(format!("expected {} twist entries, got {}", self.r, self.a.len())));
        }
        if self.a.first().is_some_and(|&x| x < 0) || self.a.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameters("twists must satisfy 0 <= a_1 <= .. <= a_r".into()));
        }
        Ok(())
    }
}

/// Rays `e_1..e_r, -(e_1+..+e_r), e_{r+1}..e_n, sum a_i e_i - (e_{r+1}+..+e_n)`.
///
/// The first `r + 1` and the last `s + 1` rays form two groups; maximal cones
/// omit one ray from each group.
pub fn kleinschmidt_fan(params: &KleinschmidtParams) -> Result<Fan> {
    params.validate()?;
    let (r, s) = (params.r, params.s);
    let n = r + s;
    let mut rays: Vec<LatticeVector> = (0..r).map(|i| LatticeVector::unit(n, i)).collect();
    let mut first_sum = vec![0i64; n];
    first_sum[..r].iter_mut().for_each(|x| *x = -1);
    rays.push(LatticeVector::from(first_sum));
    rays.extend((r..n).map(|i| LatticeVector::unit(n, i)));
    let mut last = vec![0i64; n];
    last[..r].copy_from_slice(&params.a);
    last[r..].iter_mut().for_each(|x| *x = -1);
    rays.push(LatticeVector::from(last));

    let mut cones = Vec::with_capacity((r + 1) * (s + 1));
    for skip1 in 0..=r {
        for skip2 in r + 1..=n + 1 {
            cones.push((0..=n + 1).filter(|&i| i != skip1 && i != skip2).collect());
        }
    }
    Ok(Fan::from_parts(n, rays, cones))
}

/// Parameters of the projective bundle `P(O + O(aF + b xi))` over the
/// Hirzebruch surface of degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HirzebruchBundleParams {
    pub d: i64,
    pub a: i64,
    pub b: i64,
}

impl HirzebruchBundleParams {
    pub fn new(d: i64, a: i64, b: i64) -> Result<HirzebruchBundleParams> {
        let p = HirzebruchBundleParams { d, a, b };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if self.d < 0 {
            return Err(Error::InvalidParameters("d must be nonnegative".into()));
        }
        if self.a > self.b {
            return Err(Error::InvalidParameters("twists must satisfy a <= b".into()));
        }
        Ok(())
    }
}

/// Rays `u1 = (1,0,a)`, `u2 = (0,1,0)`, `u3 = (0,0,1)`, `u4 = (-1,d,0)`,
/// `u5 = (0,-1,b)`, `u6 = (0,0,-1)` (indices 0..5); maximal cones `{x, y, z}`
/// with `x` in `{u1, u4}`, `y` in `{u2, u5}`, `z` in `{u3, u6}`.
pub fn hirzebruch_bundle_fan(params: &HirzebruchBundleParams) -> Result<Fan> {
    params.validate()?;
    let HirzebruchBundleParams { d, a, b } = *params;
    let rays = vec![
        LatticeVector::from([1, 0, a]),
        LatticeVector::from([0, 1, 0]),
        LatticeVector::from([0, 0, 1]),
        LatticeVector::from([-1, d, 0]),
        LatticeVector::from([0, -1, b]),
        LatticeVector::from([0, 0, -1]),
    ];
    let mut cones = Vec::with_capacity(8);
    for x in [0, 3] {
        for y in [1, 4] {
            for z in [2, 5] {
                cones.push(vec![x, y, z]);
            }
        }
    }
    Ok(Fan::from_parts(3, rays, cones))
}

/// `b <= 0` or `a + b d >= 0`.
pub fn hirzebruch_additivity_closed_form(params: &HirzebruchBundleParams) -> bool {
    params.b <= 0 || params.a + params.b * params.d >= 0
}

fn even_dim(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("dimension must be even and at least 2, got {n}")));
    }
    Ok(())
}

fn cross_vertices(n: usize) -> Vec<LatticeVector> {
    (0..n).flat_map(|i| [LatticeVector::unit(n, i), -&LatticeVector::unit(n, i)]).collect()
}

/// `conv{+-e_i, +-(e_1 + .. + e_n)}` in `N`, `n` even.
pub fn del_pezzo_polytope(n: usize) -> Result<Polytope> {
    even_dim(n)?;
    let mut pts = cross_vertices(n);
    pts.push(sum_of_units(n, 1));
    pts.push(sum_of_units(n, -1));
    Polytope::new(Side::N, &pts)
}

/// `conv{+-e_i, -(e_1 + .. + e_n)}` in `N`, `n` even.
pub fn pseudo_del_pezzo_polytope(n: usize) -> Result<Polytope> {
    even_dim(n)?;
    let mut pts = cross_vertices(n);
    pts.push(sum_of_units(n, -1));
    Polytope::new(Side::N, &pts)
}

/// `conv{e_1, .., e_n, -(e_1 + .. + e_n)}` in `N`.
pub fn projective_space_polytope(n: usize) -> Result<Polytope> {
    if n < 1 {
        return Err(Error::InvalidParameters("projective space needs n >= 1".into()));
    }
    let mut pts: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    pts.push(sum_of_units(n, -1));
    Polytope::new(Side::N, &pts)
}

/// `[-1, 1]` in `N`; its variety is the projective line.
pub fn interval() -> Polytope {
    Polytope::new(Side::N, &[LatticeVector::from([-1]), LatticeVector::from([1])]).expect("segment")
}
