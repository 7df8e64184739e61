//! Betti numbers, Picard number and anticanonical degree.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::polytope::{Polytope, Side};

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

fn require_n_side(p: &Polytope) -> Result<()> {
    if p.side() != Side::N {
        return Err(Error::WrongSide { expected: "N", found: p.side().name() });
    }
    Ok(())
}

/// Even Betti numbers `h_0, .., h_n` of the variety of a simplicial polytope
/// in `N` with the origin in its interior, from its f-vector:
/// `h_p = sum_{i=p}^{n} (-1)^{i-p} C(i,p) f_{n-i-1}` with `f_{-1} = 1`.
pub fn betti_numbers(p: &Polytope) -> Result<Vec<i64>> {
    require_n_side(p)?;
    if !p.contains_origin_in_interior() {
        return Err(Error::OriginNotInterior);
    }
    if !p.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    Ok(betti_from_f_vector(&p.f_vector()))
}

/// `fv = (f_{-1}, f_0, .., f_{n-1})`.
pub fn betti_from_f_vector(fv: &[usize]) -> Vec<i64> {
    let n = fv.len() - 1;
    let f = |j: usize| fv[j] as i64; // f_{j-1}
    (0..=n)
        .map(|p| {
            (p..=n)
                .map(|i| {
                    let sign = if (i - p) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(i, p) * f(n - i)
                })
                .sum()
        })
        .collect()
}

/// Compare the general Betti formula with the closed forms in terms of vertex
/// and facet counts for dimensions 2, 3 and 4. Returns `None` for other
/// dimensions and the list of mismatches otherwise.
pub fn specialized_betti_checks(p: &Polytope) -> Result<Option<Vec<String>>> {
    let h = betti_numbers(p)?;
    let fv = p.f_vector();
    let n = p.dim();
    let v = fv[1] as i64;
    let facets = fv[n] as i64;
    let mut expected: Vec<(&str, usize, i64)> = Vec::new();
    match n {
        2 => {
            expected.push(("h1 = #V - 2", 1, v - 2));
            if v != facets {
                return Ok(Some(vec![format!("#V = {v} differs from #F = {facets}")]));
            }
        }
        3 => {
            expected.push(("h1 = #V - 3", 1, v - 3));
            expected.push(("h2 = #V - 3", 2, v - 3));
        }
        4 => {
            expected.push(("h1 = #V - 4", 1, v - 4));
            expected.push(("h3 = #V - 4", 3, v - 4));
            expected.push(("h2 = -2#V + #F + 6", 2, -2 * v + facets + 6));
        }
        _ => return Ok(None),
    }
    Ok(Some(
        expected
            .into_iter()
            .filter(|&(_, i, want)| h[i] != want)
            .map(|(name, i, want)| format!("{name}: closed form {want}, general formula {}", h[i]))
            .collect(),
    ))
}

/// `#rays - n` for a smooth complete fan.
pub fn picard_number(fan: &Fan) -> Result<usize> {
    if !fan.is_smooth() {
        return Err(Error::NotSmooth);
    }
    fan.ensure_complete()?;
    Ok(fan.rays().len() - fan.dim())
}

/// `(-K_X)^n = n! vol(P^*)` for a reflexive polytope `P` in `N`.
pub fn anticanonical_degree(p: &Polytope) -> Result<BigInt> {
    require_n_side(p)?;
    Ok(p.dual()?.normalized_volume())
}

/// Invariants of the variety of a simplicial reflexive polytope in `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub dim: usize,
    /// `(f_{-1}, f_0, .., f_{n-1})`.
    pub f_vector: Vec<usize>,
    /// `h_0, .., h_n`.
    pub betti_even: Vec<i64>,
    /// `#V - n`, the Picard number of the face fan.
    pub picard: i64,
    pub degree: i64,
}

pub fn invariant_record(p: &Polytope) -> Result<InvariantRecord> {
    let betti_even = betti_numbers(p)?;
    let degree = anticanonical_degree(p)?;
    let f_vector = p.f_vector();
    Ok(InvariantRecord {
        dim: p.dim(),
        picard: f_vector[1] as i64 - p.dim() as i64,
        f_vector,
        betti_even,
        degree: degree.to_i64().expect("degree fits in i64"),
    })
}
