//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision. Vectors compare lexicographically,
//! which is the tie-breaking order used for all sorted output in the crate.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the lattice `N` or `M`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The duality pairing; both vectors must have the same length.
    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        dot(&self.0, &other.0)
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Gcd of the absolute values of the entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        gcd_slice(&self.0)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }
}

impl Index<usize> for LatticeVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl From<Vec<BigInt>> for LatticeVector {
    fn from(v: Vec<BigInt>) -> Self {
        LatticeVector(v)
    }
}

impl From<&[i64]> for LatticeVector {
    fn from(v: &[i64]) -> Self {
        LatticeVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector::from(v.as_slice())
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(v: [i64; N]) -> Self {
        LatticeVector::from(&v[..])
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        -&self
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

// Entries serialize as JSON integers when they fit in an i64 and as decimal
// strings otherwise.
impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            match x.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Int(i64),
            Str(String),
        }

        struct EntriesVisitor;
        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = LatticeVector;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<LatticeVector, A::Error> {
                let mut out = Vec::new();
                while let Some(e) = seq.next_element::<Entry>()? {
                    out.push(match e {
                        Entry::Int(v) => BigInt::from(v),
                        Entry::Str(s) => s.parse().map_err(de::Error::custom)?,
                    });
                }
                Ok(LatticeVector(out))
            }
        }
        deserializer.deserialize_seq(EntriesVisitor)
    }
}

/// A point of `N_Q` or `M_Q`; entries are kept in lowest terms by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalVector(coords)
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// The vector as a lattice vector, if every entry is an integer.
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        self.0
            .iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
    }
}

impl From<&LatticeVector> for RationalVector {
    fn from(v: &LatticeVector) -> Self {
        RationalVector(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(rows: &[LatticeVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, LatticeVector::dim);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.dim() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.dim() });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<LatticeVector> = rows.iter().map(|r| LatticeVector::from(*r)).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> LatticeVector {
        LatticeVector(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<LatticeVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Image of a row vector `v` under right multiplication, `v * self`.
    pub fn apply_right(&self, v: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(v.dim(), self.rows);
        LatticeVector(
            (0..self.cols)
                .map(|c| (0..self.rows).map(|r| &v.0[r] * self.get(r, c)).sum())
                .collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.entries[idx] = -&self.entries[idx];
        }
    }

    /// row[target] -= k * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        for c in 0..self.cols {
            let delta = k * &self.entries[source * self.cols + c];
            self.entries[target * self.cols + c] -= delta;
        }
    }

    /// Replaces rows (a, b) by (x*a + y*b, s*a + t*b).
    fn combine_rows(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, s: &BigInt, t: &BigInt) {
        for c in 0..self.cols {
            let ra = self.entries[a * self.cols + c].clone();
            let rb = self.entries[b * self.cols + c].clone();
            self.entries[a * self.cols + c] = x * &ra + y * &rb;
            self.entries[b * self.cols + c] = s * &ra + t * &rb;
        }
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn gcd_slice(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides a nonzero integer vector by the gcd of its entries, in place.
pub(crate) fn make_primitive_in_place(v: &mut [BigInt]) {
    let g = gcd_slice(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `(g, x, y)` with `x*a + y*b = g = gcd(a, b) >= 0`.
pub(crate) fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// The primitive lattice vector on the ray through `v`.
pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(LatticeVector(v.iter().map(|x| x / &g).collect()))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    sign = !sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if sign { -d } else { d })
}

/// Rank of the matrix whose rows are `rows`, by fraction-free elimination.
pub fn rank(rows: &[LatticeVector]) -> usize {
    let Some(cols) = rows.first().map(LatticeVector::dim) else {
        return 0;
    };
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let (f, g) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &f - &a[r][j] * &g;
                a[i][j] = v;
            }
            make_primitive_in_place(&mut a[i][c..]);
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

fn check_square_basis(basis: &[LatticeVector], n: usize) -> Result<()> {
    if basis.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: basis.len() });
    }
    for b in basis {
        if b.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
        }
    }
    Ok(())
}

/// True iff the `n` vectors form a basis of `Z^n`.
pub fn is_lattice_basis(basis: &[LatticeVector], n: usize) -> Result<bool> {
    check_square_basis(basis, n)?;
    Ok(det(&IntMatrix::from_rows(basis)?)?.abs().is_one())
}

/// Coefficients `a` with `sum a_i * basis_i = p`.
pub fn solve_rational(basis: &[LatticeVector], p: &LatticeVector) -> Result<RationalVector> {
    let n = p.dim();
    check_square_basis(basis, n)?;
    // Augmented system B^T a = p.
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|row| {
            let mut r: Vec<BigRational> =
                basis.iter().map(|b| BigRational::from_integer(b[row].clone())).collect();
            r.push(BigRational::from_integer(p[row].clone()));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(c, piv);
        let inv = a[c][c].recip();
        for j in c..=n {
            a[c][j] = &a[c][j] * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in c..=n {
                    let d = &f * &a[c][j];
                    a[r][j] -= d;
                }
            }
        }
    }
    Ok(RationalVector(a.into_iter().map(|mut r| r.pop().unwrap()).collect()))
}

/// The dual basis `b_j^*` with `<b_i, b_j^*> = delta_ij` of a unimodular basis.
pub fn dual_basis(basis: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let n = basis.first().map_or(0, LatticeVector::dim);
    check_square_basis(basis, n)?;
    let m = IntMatrix::from_rows(basis)?;
    let d = det(&m)?;
    if !d.abs().is_one() {
        return Err(Error::NotUnimodular { det: d });
    }
    // HNF of a unimodular matrix is the identity, so U = B^{-1}; the dual basis
    // vectors are the columns of U.
    let (_, u) = hnf_with_transform(&m);
    Ok((0..n)
        .map(|j| LatticeVector((0..n).map(|i| u.get(i, j).clone()).collect()))
        .collect())
}

/// Row-style Hermite normal form `H = U * M` with `U` unimodular.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pr = 0;
    for c in 0..m.cols {
        if pr == m.rows {
            break;
        }
        for r in pr + 1..m.rows {
            if h.get(r, c).is_zero() {
                continue;
            }
            let a = h.get(pr, c).clone();
            let b = h.get(r, c).clone();
            let (g, x, y) = extended_gcd(&a, &b);
            let s = -(&b / &g);
            let t = &a / &g;
            h.combine_rows(pr, r, &x, &y, &s, &t);
            u.combine_rows(pr, r, &x, &y, &s, &t);
        }
        if h.get(pr, c).is_zero() {
            continue;
        }
        if h.get(pr, c).is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let piv = h.get(pr, c).clone();
        for r in 0..pr {
            let q = h.get(r, c).div_floor(&piv);
            if !q.is_zero() {
                h.sub_row_multiple(r, pr, &q);
                u.sub_row_multiple(r, pr, &q);
            }
        }
        pr += 1;
    }
    (h, u)
}

/// A particular solution `m0` of `<p, m> = -1` and a basis of the sublattice
/// `<p, m> = 0`, for primitive `p`.
pub(crate) fn hyperplane_parametrization(p: &LatticeVector) -> Result<(LatticeVector, Vec<LatticeVector>)> {
    let n = p.dim();
    let col = IntMatrix::from_entries(n, 1, p.coords().to_vec())?;
    let (h, u) = hnf_with_transform(&col);
    if !h.get(0, 0).is_one() {
        return Err(Error::InvalidParameters(format!("{p} is not primitive")));
    }
    let m0 = -u.row(0);
    let kernel = (1..n).map(|r| u.row(r)).collect();
    Ok((m0, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from(v)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&lv(&[2, 4])).unwrap(), lv(&[1, 2]));
        assert_eq!(primitive(&lv(&[1, 0, 1])).unwrap(), lv(&[1, 0, 1]));
        assert_eq!(primitive(&lv(&[-3, 6, -9])).unwrap(), lv(&[-1, 2, -3]));
        assert!(matches!(primitive(&lv(&[0, 0])), Err(Error::ZeroVector)));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let m = IntMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]).unwrap();
        assert_eq!(det(&m).unwrap(), BigInt::from(-1));
        for a in -5..=5 {
            let m = IntMatrix::from_i64_rows(&[&[1, 0, a], &[0, 1, 0], &[0, 0, 1]]).unwrap();
            assert_eq!(det(&m).unwrap(), BigInt::one());
        }
        let bad = IntMatrix::zeros(2, 3);
        assert!(matches!(det(&bad), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn det_needs_pivoting() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]).unwrap();
        // 0*(0-1) - 1*(0-1) + 2*(3-0) = 7
        assert_eq!(det(&m).unwrap(), BigInt::from(7));
    }

    #[test]
    fn lattice_basis_examples() {
        assert!(is_lattice_basis(&[lv(&[1, 0]), lv(&[0, 1])], 2).unwrap());
        assert!(!is_lattice_basis(&[lv(&[1, 0]), lv(&[1, 2])], 2).unwrap());
        assert!(is_lattice_basis(&[lv(&[1, 0, 7]), lv(&[0, 1, 0]), lv(&[0, 0, 1])], 3).unwrap());
        assert!(is_lattice_basis(&[lv(&[1, 0])], 2).is_err());
        assert!(is_lattice_basis(&[lv(&[1, 0]), lv(&[0, 1, 0])], 2).is_err());
    }

    #[test]
    fn solve_examples() {
        let e = [lv(&[1, 0]), lv(&[0, 1])];
        let a = solve_rational(&e, &lv(&[-1, -1])).unwrap();
        assert_eq!(a.coords(), &[q(-1, 1), q(-1, 1)]);
        let a = solve_rational(&e, &lv(&[1, 1])).unwrap();
        assert_eq!(a.coords(), &[q(1, 1), q(1, 1)]);
        let b = [lv(&[1, 0]), lv(&[1, 2])];
        let a = solve_rational(&b, &lv(&[0, 2])).unwrap();
        assert_eq!(a.coords(), &[q(-1, 1), q(1, 1)]);
        let a = solve_rational(&b, &lv(&[0, 1])).unwrap();
        assert_eq!(a.coords(), &[q(-1, 2), q(1, 2)]);
        let singular = [lv(&[1, 2]), lv(&[2, 4])];
        assert!(matches!(solve_rational(&singular, &lv(&[1, 1])), Err(Error::Singular)));
    }

    #[test]
    fn dual_basis_examples() {
        let e = [lv(&[1, 0]), lv(&[0, 1])];
        assert_eq!(dual_basis(&e).unwrap(), e.to_vec());
        let b = [lv(&[1, 1]), lv(&[0, 1])];
        assert_eq!(dual_basis(&b).unwrap(), vec![lv(&[1, 0]), lv(&[-1, 1])]);
        for a in -3..=3 {
            let b = [lv(&[1, 0, a]), lv(&[0, 1, 0]), lv(&[0, 0, 1])];
            assert_eq!(
                dual_basis(&b).unwrap(),
                vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[-a, 0, 1])]
            );
        }
        assert!(matches!(
            dual_basis(&[lv(&[1, 0]), lv(&[1, 2])]),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hnf_with_transform(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));

        let row = IntMatrix::from_i64_rows(&[&[2, 4]]).unwrap();
        let (h, u) = hnf_with_transform(&row);
        assert_eq!(h, row);
        assert!(det(&u).unwrap().abs().is_one());

        let col = IntMatrix::from_entries(2, 1, vec![3.into(), 5.into()]).unwrap();
        let (h, u) = hnf_with_transform(&col);
        assert_eq!(h.get(0, 0), &BigInt::one());
        assert!(h.get(1, 0).is_zero());
        assert_eq!(u.mul(&col).unwrap(), h);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let m = IntMatrix::from_i64_rows(&[&[2, 3, 1], &[4, 1, 7], &[0, 5, 3]]).unwrap();
        let (h, u) = hnf_with_transform(&m);
        assert_eq!(u.mul(&m).unwrap(), h);
        let mut pivots = Vec::new();
        for r in 0..3 {
            if let Some(c) = (0..3).find(|&c| !h.get(r, c).is_zero()) {
                assert!(h.get(r, c).is_positive());
                for above in 0..r {
                    assert!(!h.get(above, c).is_negative() && h.get(above, c) < h.get(r, c));
                }
                pivots.push(c);
            }
        }
        assert!(pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hyperplane_parametrization_spans_solutions() {
        let p = lv(&[3, -5, 2]);
        let (m0, k) = hyperplane_parametrization(&p).unwrap();
        assert_eq!(p.dot(&m0), BigInt::from(-1));
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(p.dot(v).is_zero());
        }
        let mut full = k.clone();
        full.push(m0);
        assert!(is_lattice_basis(&full, 3).unwrap());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[lv(&[1, 2]), lv(&[2, 4])]), 1);
        assert_eq!(rank(&[lv(&[1, 2, 3]), lv(&[0, 1, 1]), lv(&[1, 3, 4])]), 2);
        assert_eq!(rank(&[lv(&[0, 0]), lv(&[0, 3])]), 1);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn json_entries_round_trip() {
        let v = lv(&[1, -2, 0]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[1,-2,0]");
        let big = LatticeVector::new(vec![BigInt::from(i64::MAX) * 4, BigInt::from(1)]);
        let back: LatticeVector = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }
}
