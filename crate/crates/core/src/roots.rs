//! Demazure roots of complete fans.
//!
//! The roots of ray `p` are the lattice points `m` with `<p, m> = -1` and
//! `<q, m> >= 0` for every other ray `q`. The equation is solved once over the
//! integers (`m = m0 + t K`), the remaining inequalities are projected
//! coordinate by coordinate with Fourier-Motzkin elimination, and the integer
//! points are then read off slice by slice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg::{gcd_slice, hyperplane_parametrization, LatticeVector};

/// Demazure roots of every ray of a fan, indexed like the fan's rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    rays: Vec<LatticeVector>,
    roots: Vec<Vec<LatticeVector>>,
}

impl RootSet {
    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn for_ray(&self, i: usize) -> &[LatticeVector] {
        &self.roots[i]
    }

    pub fn per_ray(&self) -> &[Vec<LatticeVector>] {
        &self.roots
    }

    pub fn total(&self) -> usize {
        self.roots.iter().map(Vec::len).sum()
    }

    /// All roots of all rays, sorted. Root sets of distinct rays are disjoint.
    pub fn all(&self) -> Vec<LatticeVector> {
        let mut out: Vec<LatticeVector> = self.roots.iter().flatten().cloned().collect();
        out.sort();
        out
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            ray: &'a LatticeVector,
            roots: &'a [LatticeVector],
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            total: usize,
            rays: Vec<Entry<'a>>,
        }
        let rays = self.rays.iter().zip(&self.roots).map(|(ray, roots)| Entry { ray, roots }).collect();
        Doc { total: self.total(), rays }.serialize(s)
    }
}

/// Roots of ray `i` of a complete fan, sorted lexicographically.
pub fn roots_for_ray(fan: &Fan, i: usize) -> Result<Vec<LatticeVector>> {
    if i >= fan.rays().len() {
        return Err(Error::RayIndex { index: i, count: fan.rays().len() });
    }
    fan.ensure_complete()?;
    ray_roots(fan.rays(), i)
}

/// Roots of every ray of a complete fan.
pub fn all_roots(fan: &Fan) -> Result<RootSet> {
    fan.ensure_complete()?;
    let roots = (0..fan.rays().len())
        .into_par_iter()
        .map(|i| ray_roots(fan.rays(), i))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootSet { rays: fan.rays().to_vec(), roots })
}

/// Roots of `rays[i]` without any completeness check.
pub(crate) fn ray_roots(rays: &[LatticeVector], i: usize) -> Result<Vec<LatticeVector>> {
    let p = &rays[i];
    let (m0, kernel) = hyperplane_parametrization(p)?;
    let vars = kernel.len();

    // Each row is (c, a) meaning c + <a, t> >= 0.
    let rows: Vec<Constraint> = rays
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, q)| Constraint::new(q.dot(&m0), kernel.iter().map(|k| q.dot(k)).collect()))
        .collect();

    let systems = eliminate(rows, vars);
    if systems[0].iter().any(|c| c.constant.is_negative()) {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut t: Vec<BigInt> = Vec::with_capacity(vars);
    scan(&systems, &mut t, vars, i, &mut |t| {
        let m = t.iter().zip(&kernel).fold(m0.clone(), |acc, (tj, k)| &acc + &k.scale(tj));
        out.push(m);
    })?;

    out.retain(|m| {
        p.dot(m) == BigInt::from(-1)
            && rays.iter().enumerate().all(|(j, q)| j == i || !q.dot(m).is_negative())
    });
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Constraint {
    constant: BigInt,
    coeffs: Vec<BigInt>,
    /// Indices of the original constraints this one was derived from.
    history: Vec<usize>,
}

impl Constraint {
    fn new(constant: BigInt, coeffs: Vec<BigInt>) -> Constraint {
        Constraint { constant, coeffs, history: Vec::new() }
    }

    /// Divide by the content of the coefficients, rounding the constant down;
    /// this keeps the same integer solutions.
    fn normalize(&mut self) {
        let g = gcd_slice(&self.coeffs);
        if g > BigInt::from(1) {
            self.coeffs.iter_mut().for_each(|a| *a = &*a / &g);
            self.constant = self.constant.div_floor(&g);
        }
    }
}

/// `systems[k]` constrains the first `k` variables: it is the projection of the
/// original system onto `t_0..t_{k-1}`.
fn eliminate(rows: Vec<Constraint>, vars: usize) -> Vec<Vec<Constraint>> {
    let mut current: Vec<Constraint> = rows
        .into_iter()
        .enumerate()
        .map(|(idx, mut c)| {
            c.history = vec![idx];
            c.normalize();
            c
        })
        .collect();
    dedupe(&mut current);
    let mut systems = vec![Vec::new(); vars + 1];
    for k in (0..vars).rev() {
        let eliminated = vars - 1 - k;
        let mut next = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for c in &current {
            match c.coeffs[k].sign() {
                num_bigint::Sign::Plus => pos.push(c),
                num_bigint::Sign::Minus => neg.push(c),
                num_bigint::Sign::NoSign => next.push(c.clone()),
            }
        }
        for p in &pos {
            for n in &neg {
                let mut history: Vec<usize> = p.history.iter().chain(&n.history).copied().collect();
                history.sort_unstable();
                history.dedup();
                // Chernikov: a combination of more than s + 2 originals after
                // s + 1 eliminations is redundant.
                if history.len() > eliminated + 2 {
                    continue;
                }
                let a = &p.coeffs[k];
                let b = -&n.coeffs[k];
                let coeffs: Vec<BigInt> = p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| &b * x + a * y).collect();
                let constant = &b * &p.constant + a * &n.constant;
                let mut c = Constraint { constant, coeffs, history };
                c.normalize();
                next.push(c);
            }
        }
        dedupe(&mut next);
        systems[k + 1] = current;
        current = next;
    }
    systems[0] = current;
    systems
}

/// Drop exact duplicates and, among constraints with the same coefficient
/// vector, keep only the tightest.
fn dedupe(rows: &mut Vec<Constraint>) {
    rows.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(a.constant.cmp(&b.constant)));
    rows.dedup_by(|later, earlier| later.coeffs == earlier.coeffs);
}

fn scan(
    systems: &[Vec<Constraint>],
    t: &mut Vec<BigInt>,
    vars: usize,
    ray: usize,
    emit: &mut dyn FnMut(&[BigInt]),
) -> Result<()> {
    let k = t.len();
    if k == vars {
        emit(t);
        return Ok(());
    }
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for c in &systems[k + 1] {
        let a = &c.coeffs[k];
        let rest = t.iter().zip(&c.coeffs).fold(c.constant.clone(), |acc, (x, y)| acc + x * y);
        if a.is_zero() {
            if rest.is_negative() {
                return Ok(());
            }
            continue;
        }
        if a.is_positive() {
            let bound = (-rest).div_ceil(a);
            if lo.as_ref().is_none_or(|l| &bound > l) {
                lo = Some(bound);
            }
        } else {
            let bound = rest.div_floor(&-a);
            if hi.as_ref().is_none_or(|h| &bound < h) {
                hi = Some(bound);
            }
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::UnboundedRoots { ray });
    };
    let mut x = lo;
    while x <= hi {
        t.push(x.clone());
        scan(systems, t, vars, ray, emit)?;
        t.pop();
        x += 1;
    }
    Ok(())
}
