//! Exact rational scalars, vectors and dense matrices.
//!
//! Everything here is exact: rank, nullspace, determinant and the LDLᵀ
//! positive-definiteness decision never round. Rationals serialize as the
//! reduced string `"p/q"` (or `"p"` when `q = 1`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision rational, always stored reduced with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_bigs(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Integer value if this is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    /// Floor of the square root of a non-negative rational, exactly.
    pub fn floor_sqrt(&self) -> BigInt {
        assert!(!self.is_negative(), "square root of a negative rational");
        // floor(sqrt(p/q)) = floor(floor(sqrt(p*q)) / q)
        let pq = self.numer() * self.denom();
        num_integer::Integer::div_floor(&pq.sqrt(), self.denom())
    }

    /// Lossy conversion for labelled approximate output only.
    pub fn to_f64_approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_int(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"`; only `p` may carry a leading minus.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let p_body = p.strip_prefix('-').unwrap_or(p);
        if !digits(p_body) {
            return Err(bad());
        }
        let numer: BigInt = p.parse().map_err(|_| bad())?;
        let denom: BigInt = match q {
            Some(q) if digits(q) => q.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_bigs(numer, denom))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for `Rational::new(p, q)`.
pub fn q(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// A fixed-length vector of rationals. Orders lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RationalVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RationalVector(entries.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        RationalVector(vec![Rational::zero(); len])
    }

    /// The all-ones vector `j`.
    pub fn ones(len: usize) -> Self {
        RationalVector(vec![Rational::one(); len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot product length mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn scale(&self, c: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Least common multiple of the entry denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()))
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RationalVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add<&RationalVector> for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.len(), rhs.len());
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&RationalVector> for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.len(), rhs.len());
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|x| -x).collect())
    }
}

impl FromIterator<Rational> for RationalVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RationalVector(iter.into_iter().collect())
    }
}

impl fmt::Display for RationalVector {
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

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of an exact LDLᵀ factorization of a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ldlt {
    /// Unit lower-triangular factor.
    pub lower: RationalMatrix,
    pub diag: Vec<Rational>,
}

impl Ldlt {
    pub fn is_positive_definite(&self) -> bool {
        self.diag.iter().all(Rational::is_positive)
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
        .expect("ragged integer rows")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[RationalVector], len: usize) -> Self {
        let mut m = Self::zeros(len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), len);
            for i in 0..len {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RationalVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, v: &RationalVector) -> RationalVector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v.iter()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += &t;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Reduced row echelon form and its pivot columns. Pivot choice is the
    /// first nonzero entry in the column.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let t = &factor * &m[(r, j)];
                    m[(i, j)] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact rank together with a basis of the right nullspace.
    pub fn rank_and_nullspace(&self) -> (usize, Vec<RationalVector>) {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = RationalVector::zeros(self.cols);
                v[f] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                v
            })
            .collect();
        (rank, basis)
    }

    /// Exact determinant by elimination with first-nonzero pivoting.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    let t = &factor * &m[(c, j)];
                    m[(i, j)] -= &t;
                }
            }
        }
        Ok(det)
    }

    /// Exact LDLᵀ of a symmetric matrix without pivoting.
    ///
    /// A zero pivot is accepted only if the rest of its column vanishes, in
    /// which case the matrix is reported as semidefinite through a zero in
    /// `diag`. A negative pivot yields [`Error::Indefinite`].
    pub fn ldlt(&self) -> Result<Ldlt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(Error::Usage("ldlt requires a symmetric matrix".into()));
        }
        let n = self.rows;
        // Schur complement updated in place.
        let mut s = self.clone();
        let mut lower = RationalMatrix::identity(n);
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            let pivot = s[(k, k)].clone();
            if pivot.is_negative() {
                return Err(Error::Indefinite { pivot: k });
            }
            if pivot.is_zero() {
                if (k + 1..n).any(|i| !s[(i, k)].is_zero()) {
                    return Err(Error::Indefinite { pivot: k });
                }
                diag.push(pivot);
                continue;
            }
            for i in k + 1..n {
                lower[(i, k)] = &s[(i, k)] / &pivot;
            }
            for i in k + 1..n {
                if s[(i, k)].is_zero() {
                    continue;
                }
                for j in k + 1..=i {
                    let t = &lower[(i, k)] * &s[(j, k)];
                    s[(i, j)] -= &t;
                    if i != j {
                        s[(j, i)] = s[(i, j)].clone();
                    }
                }
            }
            diag.push(pivot);
        }
        Ok(Ldlt { lower, diag })
    }

    /// Solves `self * x = rhs` for a square nonsingular matrix.
    pub fn solve(&self, rhs: &RationalVector) -> Result<RationalVector> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Usage("singular linear system".into()));
        }
        Ok((0..n).map(|i| r[(i, n)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(d)?;
        RationalMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Row echelon form modulo a large prime, built one row at a time. Rows
/// independent mod p are independent over Q, so `rank` is a lower bound on
/// the rational rank of the rows inserted so far.
pub(crate) struct ModpEchelon {
    cols: usize,
    basis: Vec<(usize, Vec<u64>)>,
}

impl ModpEchelon {
    pub(crate) fn new(cols: usize) -> Self {
        ModpEchelon { cols, basis: Vec::new() }
    }

    pub(crate) fn is_full(&self) -> bool {
        self.basis.len() == self.cols
    }

    pub(crate) fn insert_bigs(&mut self, row: &[BigInt]) -> bool {
        let p = BigInt::from(PRIME);
        self.insert(row.iter().map(|x| x.mod_floor(&p).to_u64().expect("reduced below p")).collect())
    }

    pub(crate) fn insert_ints(&mut self, row: &[i64]) -> bool {
        self.insert(row.iter().map(|&x| x.rem_euclid(PRIME as i64) as u64).collect())
    }

    /// Returns whether the row was independent of the previous ones.
    fn insert(&mut self, mut r: Vec<u64>) -> bool {
        for (pc, b) in &self.basis {
            let f = r[*pc];
            if f == 0 {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
            }
        }
        let Some(pc) = r.iter().position(|&x| x != 0) else { return false };
        let inv = powmod(r[pc], PRIME - 2);
        for x in r.iter_mut() {
            *x = mulmod(*x, inv);
        }
        self.basis.push((pc, r));
        true
    }
}

/// Indices of a maximal set of rows independent modulo a large prime.
pub(crate) fn independent_rows_mod_p(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut ech = ModpEchelon::new(rows.first().map_or(0, Vec::len));
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        if ech.is_full() {
            break;
        }
        if ech.insert_bigs(row) {
            chosen.push(idx);
        }
    }
    chosen
}

/// Nullspace of the given integer rows, computed modulo the prime and lifted
/// to Q by rational reconstruction. Every lifted vector is checked exactly
/// against every row in `check`; `None` if lifting or checking fails.
///
/// The vectors are the standard basis read off the reduced echelon form, so
/// they are independent and, when `rows` has full rank mod p, span the
/// rational nullspace of `check` provided they pass the check.
pub(crate) fn lifted_nullspace(rows: &[&Vec<BigInt>], check: &[Vec<BigInt>], cols: usize) -> Option<Vec<RationalVector>> {
    let p = BigInt::from(PRIME);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&p).to_u64().expect("reduced below p")).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, i);
        let inv = powmod(m[r][c], PRIME - 2);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            let x = (PRIME - m[i][f]) % PRIME;
            v[pc] = reconstruct(x)?;
        }
        let v = RationalVector::new(v);
        let dq = Rational::from(v.common_denominator());
        let iv: Vec<BigInt> = v.iter().map(|x| (x * &dq).to_integer().expect("cleared")).collect();
        let vanishes = check
            .iter()
            .all(|row| row.iter().zip(&iv).map(|(a, b)| a * b).sum::<BigInt>().is_zero());
        if !vanishes {
            return None;
        }
        out.push(v);
    }
    Some(out)
}

/// The fraction `r/s` with `|r|, |s| < 2^30` congruent to `a` mod p, if any.
fn reconstruct(a: u64) -> Option<Rational> {
    const BOUND: i128 = 1 << 30;
    let (mut r0, mut r1) = (PRIME as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 >= BOUND {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if s1 == 0 || s1.abs() >= BOUND {
        return None;
    }
    Some(Rational::new(r1 as i64, s1 as i64))
}

/// Sign of a rational as an [`Ordering`] against zero.
pub fn sign(x: &Rational) -> Ordering {
    x.cmp(&Rational::zero())
}
