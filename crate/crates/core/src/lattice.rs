//! The scaled lattice `Λ = Z^d + Z·(j/n)`, its odd parity class, canonical
//! representatives of short vectors, the candidate set `M`, affine lattices
//! spanned by point sets, and exact enumeration of lattice points inside an
//! ellipsoid.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Rational, RationalMatrix, RationalVector};
use crate::error::{Error, Result};
use crate::forms::InhomQuadratic;

/// `Λ = Z^d + Z·(j/n)` with `1 ≤ n < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScaledLattice {
    d: usize,
    n: usize,
}

impl ScaledLattice {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if n < 1 || n >= d {
            return Err(Error::ParameterOutOfRange(format!(
                "need 1 <= n < d (got d={d}, n={n})"
            )));
        }
        Ok(ScaledLattice { d, n })
    }

    /// The lattice for the family parameters `(d, k)`, i.e. `n = d − 2k`.
    pub fn for_family(d: usize, k: usize) -> Result<Self> {
        if k < 1 || 2 * k + 1 > d {
            return Err(Error::ParameterOutOfRange(format!(
                "d − 2k must be ≥ 1 (got d={d}, k={k})"
            )));
        }
        Self::new(d, d - 2 * k)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j_over_n(&self) -> RationalVector {
        RationalVector::ones(self.d).scale(&Rational::new(1, self.n as i64))
    }

    /// Splits `x = z + a0·(j/n)` with integer `z` and `0 ≤ a0 < n`.
    fn split(&self, x: &RationalVector) -> Option<(Vec<BigInt>, i64)> {
        if x.len() != self.d {
            return None;
        }
        let n = BigInt::from(self.n);
        let a0 = (&x[0] * Rational::from(n.clone())).to_integer()?.mod_floor(&n);
        let shift = Rational::from_bigs(a0.clone(), n);
        let z = x
            .iter()
            .map(|xi| (xi - &shift).to_integer())
            .collect::<Option<Vec<_>>>()?;
        Some((z, a0.to_i64().expect("a0 < n")))
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.split(x).is_some()
    }

    pub fn point_of(&self, rep: &CanonicalRep) -> RationalVector {
        let mut p = rep.a_times_j_over_n();
        let sign = if rep.l < 0 { -1 } else { 1 };
        for i in 0..rep.l.unsigned_abs() as usize {
            p[i] = &p[i] + Rational::from(sign);
        }
        p
    }

    /// The odd class `Λ⁰ = j/n + Λ_even` as an affine lattice.
    ///
    /// `Λ` has basis `j/n, e_2, …, e_d`, all of odd parity, so the even
    /// sublattice is spanned by `2·j/n` and `e_i − j/n`.
    pub fn odd_class(&self) -> AffineLattice {
        let jn = self.j_over_n();
        let mut points = vec![jn.clone(), jn.scale(&Rational::from(3))];
        points.extend((1..self.d).map(|i| RationalVector::unit(self.d, i)));
        AffineLattice::from_points(&points).expect("nonempty generator list")
    }
}

/// The parity functional `λ ↦ l⁰·λ mod 2` with
/// `l⁰ = (−1 repeated k times, +1 repeated d−k times)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityFunctional {
    lattice: ScaledLattice,
    k: usize,
    l0: RationalVector,
}

impl ParityFunctional {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        let lattice = ScaledLattice::for_family(d, k)?;
        let l0 = (0..d)
            .map(|i| Rational::from(if i < k { -1 } else { 1 }))
            .collect();
        Ok(ParityFunctional { lattice, k, l0 })
    }

    pub fn lattice(&self) -> &ScaledLattice {
        &self.lattice
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vector(&self) -> &RationalVector {
        &self.l0
    }

    pub fn parity(&self, x: &RationalVector) -> Result<u8> {
        if !self.lattice.contains(x) {
            return Err(Error::NotInLattice);
        }
        let v = self.l0.dot(x).to_integer().ok_or(Error::NotInLattice)?;
        Ok(if v.is_odd() { 1 } else { 0 })
    }

    /// Whether `u − v` lies in the even sublattice `Λ_even`. For the
    /// half-normalized polytope, whose translation lattice is `½·Λ_even`,
    /// this is congruence of the diagonals `u`, `v` modulo twice that lattice.
    pub fn congruent_mod_2(&self, u: &RationalVector, v: &RationalVector) -> bool {
        self.parity(&(u - v)) == Ok(0)
    }
}

/// The point `[1^l, 0^{d−|l|}] + a·(j/n)`; negative `l` stands for `|l|`
/// entries equal to `−1`. Valid reps satisfy `−d/2 ≤ l < d/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalRep {
    pub l: i64,
    pub a: i64,
    pub d: usize,
    pub n: usize,
}

impl CanonicalRep {
    pub fn parity(&self) -> u8 {
        (self.l + self.a).rem_euclid(2) as u8
    }

    /// `λ·j = l + a·d/n`.
    pub fn j_height(&self) -> Rational {
        Rational::from(self.l) + Rational::new(self.a * self.d as i64, self.n as i64)
    }

    pub fn in_window(&self) -> bool {
        let d = self.d as i64;
        -d <= 2 * self.l && 2 * self.l < d
    }

    fn a_times_j_over_n(&self) -> RationalVector {
        RationalVector::new(vec![Rational::new(self.a, self.n as i64); self.d])
    }

    pub fn point(&self) -> RationalVector {
        ScaledLattice {
            d: self.d,
            n: self.n,
        }
        .point_of(self)
    }
}

impl std::fmt::Display for CanonicalRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(l={}, a={})", self.l, self.a)
    }
}

/// Canonical representative of a lattice point up to coordinate permutation.
pub fn canonical_rep(x: &RationalVector, lat: &ScaledLattice) -> Result<CanonicalRep> {
    if x.len() != lat.d {
        return Err(Error::DimensionMismatch {
            expected: lat.d,
            got: x.len(),
        });
    }
    let (z, a0) = lat.split(x).ok_or(Error::NotInLattice)?;
    let lo = z.iter().min().expect("d >= 1").clone();
    let hi = z.iter().max().expect("d >= 1");
    if hi - &lo > BigInt::one() {
        return Err(Error::NotTwoValued);
    }
    let upper = if *hi == lo {
        0
    } else {
        z.iter().filter(|&v| *v == *hi).count() as i64
    };
    let b = lo.to_i64().ok_or(Error::NotTwoValued)?;
    let (d, n) = (lat.d as i64, lat.n as i64);
    let (mut l, mut a) = (upper, a0 + b * n);
    if 2 * l >= d {
        l -= d;
        a += n;
    }
    Ok(CanonicalRep {
        l,
        a,
        d: lat.d,
        n: lat.n,
    })
}

/// The candidate set `M` for parameters `(d, k)`, `n = d − 2k`: reps with
/// odd parity, `−d/2 ≤ l < d/2` and `0 ≤ l·n + a·d < d`, plus `j/n`.
/// Sorted by `l` ascending.
pub fn enumerate_m(d: usize, k: usize) -> Result<Vec<CanonicalRep>> {
    if d < 3 {
        return Err(Error::ParameterOutOfRange(format!("need d >= 3 (got {d})")));
    }
    let lat = ScaledLattice::for_family(d, k)?;
    let (di, ni) = (d as i64, lat.n as i64);
    let mut out: Vec<CanonicalRep> = (-(di / 2)..=(di - 1) / 2)
        .filter(|&l| l != 0)
        .filter_map(|l| {
            // the unique a with 0 <= l*n + a*d < d
            let a = -Integer::div_floor(&(l * ni), &di);
            let rep = CanonicalRep { l, a, d, n: lat.n };
            (rep.parity() == 1).then_some(rep)
        })
        .collect();
    out.push(CanonicalRep {
        l: 0,
        a: 1,
        d,
        n: lat.n,
    });
    out.sort_by_key(|r| r.l);
    Ok(out)
}

/// `origin + Z·basis`, with an echelon (Hermite-style) integer basis kept
/// alongside the rational one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    origin: RationalVector,
    basis: RationalMatrix,
    scale: BigInt,
    /// `scale·(basis column i)` as integer rows in reduced echelon form.
    int_rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct AffineLatticeRepr {
    origin: RationalVector,
    basis: Vec<RationalVector>,
}

impl Serialize for AffineLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AffineLatticeRepr {
            origin: self.origin.clone(),
            basis: self.generators(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineLattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = AffineLatticeRepr::deserialize(d)?;
        AffineLattice::from_generators(r.origin, &r.basis).map_err(serde::de::Error::custom)
    }
}

impl AffineLattice {
    /// The affine lattice generated by `points`: origin is the first point,
    /// the basis spans all differences.
    pub fn from_points(points: &[RationalVector]) -> Result<Self> {
        let origin = points
            .first()
            .ok_or_else(|| Error::Usage("need at least one point".into()))?
            .clone();
        let diffs: Vec<RationalVector> = points[1..].iter().map(|p| p - &origin).collect();
        Self::from_generators(origin, &diffs)
    }

    /// `origin + Z·generators`; generators need not be independent.
    pub fn from_generators(origin: RationalVector, generators: &[RationalVector]) -> Result<Self> {
        let dim = origin.len();
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.len(),
            });
        }
        let scale = generators
            .iter()
            .fold(BigInt::one(), |acc, g| acc.lcm(&g.common_denominator()));
        let sq = Rational::from(scale.clone());
        let rows: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| (x * &sq).to_integer().expect("scaled to common denominator"))
                    .collect()
            })
            .collect();
        let (int_rows, pivots) = hermite_rows(rows, dim);
        let inv = Rational::from_bigs(BigInt::one(), scale.clone());
        let cols: Vec<RationalVector> = int_rows
            .iter()
            .map(|r| r.iter().map(|x| Rational::from(x.clone()) * &inv).collect())
            .collect();
        let basis = RationalMatrix::from_columns(&cols, dim);
        Ok(AffineLattice {
            origin,
            basis,
            scale,
            int_rows,
            pivots,
        })
    }

    pub fn origin(&self) -> &RationalVector {
        &self.origin
    }

    /// Columns are the lattice generators.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn generators(&self) -> Vec<RationalVector> {
        (0..self.rank()).map(|i| self.basis.column(i)).collect()
    }

    pub fn rank(&self) -> usize {
        self.int_rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    /// Integer coordinates `y` with `x = origin + basis·y`, if `x` is in the lattice.
    pub fn coords(&self, x: &RationalVector) -> Option<Vec<BigInt>> {
        if x.len() != self.ambient_dim() {
            return None;
        }
        let sq = Rational::from(self.scale.clone());
        let mut w: Vec<BigInt> = (x - &self.origin)
            .iter()
            .map(|v| (v * &sq).to_integer())
            .collect::<Option<_>>()?;
        let mut y = Vec::with_capacity(self.rank());
        for (row, &p) in self.int_rows.iter().zip(&self.pivots) {
            let (c, r) = w[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (wi, ri) in w.iter_mut().zip(row) {
                    *wi -= &c * ri;
                }
            }
            y.push(c);
        }
        w.iter().all(Zero::is_zero).then_some(y)
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.coords(x).is_some()
    }

    pub fn point(&self, y: &[BigInt]) -> RationalVector {
        let yv: RationalVector = y.iter().map(|v| Rational::from(v.clone())).collect();
        &self.origin + &self.basis.mul_vec(&yv)
    }

    /// Same point set (the echelon basis is canonical).
    pub fn same_lattice(&self, other: &AffineLattice) -> bool {
        self.basis == other.basis && self.contains(&other.origin)
    }
}

/// Row-style Hermite normal form of an integer generating set: positive
/// pivots, entries above each pivot reduced into `[0, pivot)`, zero rows
/// dropped. Returns the rows and their pivot columns.
fn hermite_rows(mut rows: Vec<Vec<BigInt>>, dim: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        if r == rows.len() {
            break;
        }
        loop {
            // the row with the smallest nonzero |entry| in column c becomes the pivot
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let qt = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                for (a, b) in tail[0].iter_mut().zip(&head[r]) {
                    *a -= &qt * b;
                }
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let qt = rows[i][c].div_floor(&rows[r][c]);
            if qt.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(r);
            for (a, b) in head[i].iter_mut().zip(&tail[0]) {
                *a -= &qt * b;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Lattice points `x` with `f(x) ≤ bound`, sorted lexicographically.
pub fn enumerate_in_ellipsoid(
    lat: &AffineLattice,
    f: &InhomQuadratic,
    bound: &Rational,
) -> Result<Vec<RationalVector>> {
    enumerate_in_ellipsoid_budgeted(lat, f, bound, None)
}

/// As [`enumerate_in_ellipsoid`], failing with [`Error::BudgetExceeded`] once
/// more than `max_nodes` search-tree nodes have been visited.
///
/// Depth-first over lattice coordinates, last coordinate first, with exact
/// interval bounds read off the LDLᵀ factorization of the restricted form.
pub fn enumerate_in_ellipsoid_budgeted(
    lat: &AffineLattice,
    f: &InhomQuadratic,
    bound: &Rational,
    max_nodes: Option<u64>,
) -> Result<Vec<RationalVector>> {
    if f.dim() != lat.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: lat.ambient_dim(),
            got: f.dim(),
        });
    }
    let m = lat.rank();
    if m == 0 {
        let o = lat.origin().clone();
        return Ok(if f.eval(&o) <= *bound { vec![o] } else { vec![] });
    }
    let g = f.pullback(lat.origin(), lat.basis());
    let ldlt = g.gram.ldlt().map_err(|_| Error::NotPositiveDefinite)?;
    if !ldlt.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    // minimiser of g: gram·c = −linear/2
    let center = g.gram.solve(&g.linear.scale(&Rational::new(-1, 2)))?;
    let radius = bound - g.eval(&center);
    if radius.is_negative() {
        return Ok(Vec::new());
    }

    let mut search = Search {
        lower: &ldlt.lower,
        diag: &ldlt.diag,
        center: center.entries(),
        y: vec![BigInt::zero(); m],
        found: Vec::new(),
        nodes: 0,
        max_nodes,
    };
    search.descend(m, radius)?;

    let mut out: BTreeSet<RationalVector> = BTreeSet::new();
    for y in search.found {
        let x = lat.point(&y);
        debug_assert!(f.eval(&x) <= *bound);
        out.insert(x);
    }
    Ok(out.into_iter().collect())
}

struct Search<'a> {
    lower: &'a RationalMatrix,
    diag: &'a [Rational],
    center: &'a [Rational],
    y: Vec<BigInt>,
    found: Vec<Vec<BigInt>>,
    nodes: u64,
    max_nodes: Option<u64>,
}

impl Search<'_> {
    /// Coordinates `level..m` are fixed; choose coordinate `level − 1`.
    fn descend(&mut self, level: usize, remaining: Rational) -> Result<()> {
        if level == 0 {
            self.found.push(self.y.clone());
            return Ok(());
        }
        let i = level - 1;
        let m = self.y.len();
        let mut target = self.center[i].clone();
        for j in i + 1..m {
            let off = Rational::from(self.y[j].clone()) - &self.center[j];
            target -= &(&self.lower[(j, i)] * off);
        }
        let q = &remaining / &self.diag[i];
        let s = q.floor_sqrt();
        let lo = target.floor() - &s;
        let hi = target.ceil() + &s;
        let mut yi = lo;
        while yi <= hi {
            let t = Rational::from(yi.clone()) - &target;
            let used = &self.diag[i] * t.square();
            if used <= remaining {
                self.nodes += 1;
                if let Some(max) = self.max_nodes {
                    if self.nodes > max {
                        return Err(Error::BudgetExceeded(max));
                    }
                }
                self.y[i] = yi.clone();
                self.descend(i, &remaining - &used)?;
            }
            yi += 1;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::forms::{as_inhom, phi_main, RadialForm};

    fn rv(x: &[Rational]) -> RationalVector {
        RationalVector::new(x.to_vec())
    }

    #[test]
    fn canonical_rep_examples() {
        let lat = ScaledLattice::new(7, 3).unwrap();
        let r = canonical_rep(&RationalVector::unit(7, 0), &lat).unwrap();
        assert_eq!((r.l, r.a), (1, 0));

        let mut x = vec![q(-1, 3); 7];
        x[0] = q(2, 3);
        x[1] = q(2, 3);
        let r = canonical_rep(&rv(&x), &lat).unwrap();
        assert_eq!((r.l, r.a), (2, -1));

        let x = RationalVector::from_ints(&[2, 0, 0, 0, 0, 0, 0]);
        assert_eq!(canonical_rep(&x, &lat), Err(Error::NotTwoValued));

        let x = RationalVector::new(vec![q(1, 2); 7]);
        assert_eq!(canonical_rep(&x, &lat), Err(Error::NotInLattice));
    }

    #[test]
    fn canonical_rep_flips_large_l() {
        // [1^4, 0^3] in d = 7 becomes [-1^3, 0^4] + j
        let lat = ScaledLattice::new(7, 3).unwrap();
        let x = RationalVector::from_ints(&[1, 1, 1, 1, 0, 0, 0]);
        let r = canonical_rep(&x, &lat).unwrap();
        assert_eq!((r.l, r.a), (-3, 3));
        // even d boundary: four of eight entries up gives l = -4
        let lat = ScaledLattice::new(8, 2).unwrap();
        let x = RationalVector::from_ints(&[1, 1, 1, 1, 0, 0, 0, 0]);
        let r = canonical_rep(&x, &lat).unwrap();
        assert_eq!((r.l, r.a), (-4, 2));
        assert!(r.in_window());
    }

    #[test]
    fn parity_examples() {
        let pf = ParityFunctional::new(7, 2).unwrap();
        assert_eq!(pf.parity(&RationalVector::unit(7, 0)).unwrap(), 1);
        assert_eq!(pf.parity(&pf.lattice().j_over_n()).unwrap(), 1);
        assert_eq!(pf.parity(&RationalVector::from_ints(&[1, 1, 0, 0, 0, 0, 0])).unwrap(), 0);
        assert_eq!(pf.vector().sum(), q(3, 1));
        assert_eq!(
            pf.parity(&RationalVector::new(vec![q(1, 2); 7])),
            Err(Error::NotInLattice)
        );
        assert!(pf.congruent_mod_2(&RationalVector::unit(7, 0), &RationalVector::unit(7, 3)));
        assert!(!pf.congruent_mod_2(&RationalVector::unit(7, 0), &RationalVector::zeros(7)));
    }

    #[test]
    fn m_for_seven_two() {
        let m = enumerate_m(7, 2).unwrap();
        let pairs: Vec<(i64, i64)> = m.iter().map(|r| (r.l, r.a)).collect();
        assert_eq!(pairs, vec![(-3, 2), (-2, 1), (0, 1), (1, 0)]);
        assert!(m.iter().all(|r| r.parity() == 1));
        assert!(!pairs.contains(&(2, 0)));
        assert!(enumerate_m(7, 4).is_err());
    }

    #[test]
    fn affine_lattice_small_cases() {
        let pts: Vec<_> = [[0, 0], [1, 0], [0, 1]]
            .iter()
            .map(|p| RationalVector::from_ints(p))
            .collect();
        let lat = AffineLattice::from_points(&pts).unwrap();
        assert_eq!(lat.rank(), 2);
        assert_eq!(lat.basis(), &RationalMatrix::identity(2));

        let pts = [RationalVector::from_ints(&[0]), RationalVector::from_ints(&[2])];
        let lat = AffineLattice::from_points(&pts).unwrap();
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.basis()[(0, 0)], q(2, 1));
        assert!(!lat.contains(&RationalVector::from_ints(&[1])));
        assert_eq!(lat.coords(&RationalVector::from_ints(&[-6])), Some(vec![BigInt::from(-3)]));
    }

    #[test]
    fn affine_lattice_is_order_independent() {
        let pts: Vec<_> = [[0, 0, 0], [2, 4, 0], [6, 3, 0], [4, 1, 0], [1, 1, 0]]
            .iter()
            .map(|p| RationalVector::from_ints(p))
            .collect();
        let a = AffineLattice::from_points(&pts).unwrap();
        let mut rev = pts.clone();
        rev.reverse();
        let b = AffineLattice::from_points(&rev).unwrap();
        assert!(a.same_lattice(&b));
        assert_eq!(a.rank(), 2);
        for p in &pts {
            assert!(a.contains(p) && b.contains(p));
        }
    }

    #[test]
    fn ellipsoid_on_z2() {
        let lat = AffineLattice::from_points(&[
            RationalVector::from_ints(&[0, 0]),
            RationalVector::from_ints(&[1, 0]),
            RationalVector::from_ints(&[0, 1]),
        ])
        .unwrap();
        let f = as_inhom(&RadialForm::euclidean(2), &RationalVector::zeros(2), &q(0, 1));
        let pts = enumerate_in_ellipsoid(&lat, &f, &q(1, 1)).unwrap();
        assert_eq!(pts.len(), 5);
        assert!(enumerate_in_ellipsoid(&lat, &f, &q(-1, 1)).unwrap().is_empty());
        // off-centre ball through the unit square corners
        let c = RationalVector::new(vec![q(1, 2), q(1, 2)]);
        let g = as_inhom(&RadialForm::euclidean(2), &c, &q(0, 1));
        assert_eq!(enumerate_in_ellipsoid(&lat, &g, &q(1, 2)).unwrap().len(), 4);
    }

    #[test]
    fn odd_class_minimal_vectors_seven_two() {
        let lat = ScaledLattice::for_family(7, 2).unwrap();
        let odd = lat.odd_class();
        assert_eq!(odd.rank(), 7);
        let f = as_inhom(&phi_main(7, 1, 2).unwrap(), &RationalVector::zeros(7), &q(0, 1));
        let pts = enumerate_in_ellipsoid(&odd, &f, &q(12, 1)).unwrap();
        assert_eq!(pts.len(), 56);
        assert!(pts.iter().all(|p| f.eval(p) == q(12, 1)));
        let pf = ParityFunctional::new(7, 2).unwrap();
        assert!(pts.iter().all(|p| pf.parity(p).unwrap() == 1));
    }

    #[test]
    fn budget_is_enforced() {
        let lat = ScaledLattice::for_family(7, 2).unwrap().odd_class();
        let f = as_inhom(&phi_main(7, 1, 2).unwrap(), &RationalVector::zeros(7), &q(0, 1));
        assert_eq!(
            enumerate_in_ellipsoid_budgeted(&lat, &f, &q(12, 1), Some(10)),
            Err(Error::BudgetExceeded(10))
        );
    }

    #[test]
    fn indefinite_form_is_rejected() {
        let lat = AffineLattice::from_points(&[
            RationalVector::from_ints(&[0, 0]),
            RationalVector::from_ints(&[1, 0]),
            RationalVector::from_ints(&[0, 1]),
        ])
        .unwrap();
        let f = as_inhom(&RadialForm::new(q(1, 1), q(-1, 1), 2), &RationalVector::zeros(2), &q(0, 1));
        assert_eq!(enumerate_in_ellipsoid(&lat, &f, &q(1, 1)), Err(Error::NotPositiveDefinite));
    }
}
