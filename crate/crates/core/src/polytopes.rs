//! Vertex sets of the symmetric family `P(d, s, k)` in both normalizations,
//! the diagonal set `D(d, s, k)`, and the asymmetric sections `G^d`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use num_bigint::BigInt;

use crate::arith::{ModpEchelon, Rational, RationalVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    /// `½·conv(D ∪ −D)`.
    #[serde(rename = "half")]
    Half,
    /// `conv(D ∪ −D)`, twice the half normalization.
    #[serde(rename = "integral")]
    Integral,
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" => Ok(Normalization::Half),
            "integral" => Ok(Normalization::Integral),
            _ => Err(Error::Parse(format!("unknown normalization {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    #[serde(rename = "P-half")]
    PHalf,
    #[serde(rename = "P-integral")]
    PIntegral,
    #[serde(rename = "G-section")]
    GSection,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::PHalf => "P-half",
            FamilyTag::PIntegral => "P-integral",
            FamilyTag::GSection => "G-section",
        })
    }
}

/// Origin of a vertex set. For `G-section` sets `d` is the dimension of
/// the section and `(s, k) = (1, 2)` are the parameters of the parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMeta {
    pub family: FamilyTag,
    pub d: usize,
    pub s: usize,
    pub k: usize,
    pub ambient_dim: usize,
    pub affine_dim: usize,
}

/// Distinct vertices in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet {
    pub meta: VertexMeta,
    pub vertices: Vec<RationalVector>,
}

impl VertexSet {
    fn build(family: FamilyTag, d: usize, s: usize, k: usize, pts: Vec<RationalVector>) -> Self {
        let vertices: Vec<RationalVector> = pts.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let affine_dim = affine_dim(&vertices);
        Self::assemble(family, d, s, k, vertices, affine_dim)
    }

    /// Fast path for large sets: vertices given as integer numerators over
    /// one positive denominator, so sorting and rank never touch rationals.
    fn build_scaled(family: FamilyTag, d: usize, s: usize, k: usize, den: i64, mut keys: Vec<Vec<i64>>) -> Self {
        keys.sort_unstable();
        keys.dedup();
        let mut cache: BTreeMap<i64, Rational> = BTreeMap::new();
        let vertices: Vec<RationalVector> = keys
            .iter()
            .map(|key| {
                key.iter()
                    .map(|&x| cache.entry(x).or_insert_with(|| Rational::new(x, den)).clone())
                    .collect()
            })
            .collect();
        let dim = keys.first().map_or(0, Vec::len);
        let mut ech = ModpEchelon::new(dim);
        if let Some(first) = keys.first() {
            for key in &keys[1..] {
                if ech.is_full() {
                    break;
                }
                let diff: Vec<i64> = key.iter().zip(first).map(|(a, b)| a - b).collect();
                ech.insert_ints(&diff);
            }
        }
        let affine_dim = if ech.is_full() { dim } else { affine_dim(&vertices) };
        Self::assemble(family, d, s, k, vertices, affine_dim)
    }

    fn assemble(family: FamilyTag, d: usize, s: usize, k: usize, vertices: Vec<RationalVector>, affine_dim: usize) -> Self {
        VertexSet {
            meta: VertexMeta {
                family,
                d,
                s,
                k,
                ambient_dim: vertices.first().map_or(0, RationalVector::len),
                affine_dim,
            },
            vertices,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &RationalVector) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// One vertex per row, entries as rational strings, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&v.iter().map(ToString::to_string).join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("vertex set serializes")
    }
}

fn check_params(d: usize, s: usize, k: usize) -> Result<usize> {
    if s < 1 || k < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "need s >= 1 and k >= 2 (got s={s}, k={k})"
        )));
    }
    if 2 * k + 1 > d {
        return Err(Error::ParameterOutOfRange(format!(
            "d − 2k must be ≥ 1 (got d={d}, k={k})"
        )));
    }
    if s + 1 > d {
        return Err(Error::ParameterOutOfRange(format!(
            "need s + 1 <= d (got d={d}, s={s})"
        )));
    }
    Ok(d - 2 * k)
}

/// `[1^t, 0^{d−t}] − (t−1)/n · j`.
pub fn diagonal_generator(d: usize, t: usize, n: usize) -> RationalVector {
    let shift = Rational::new(t as i64 - 1, n as i64);
    (0..d)
        .map(|i| if i < t { Rational::one() - &shift } else { -&shift })
        .collect()
}

/// All coordinate permutations of the vectors `[1^t, 0^{d−t}] − (t−1)/n · j`
/// for `t ∈ {s, s+1}`; `C(d, s) + C(d, s+1)` vectors.
pub fn construct_d(d: usize, s: usize, k: usize) -> Result<Vec<RationalVector>> {
    let n = check_params(d, s, k)?;
    let mut out = Vec::new();
    for t in [s, s + 1] {
        let shift = Rational::new(t as i64 - 1, n as i64);
        let hi = Rational::one() - &shift;
        let lo = -&shift;
        for ones in (0..d).combinations(t) {
            let mut v = RationalVector::new(vec![lo.clone(); d]);
            for i in ones {
                v[i] = hi.clone();
            }
            out.push(v);
        }
    }
    Ok(out)
}

pub fn construct_p(d: usize, s: usize, k: usize, normalization: Normalization) -> Result<VertexSet> {
    let n = check_params(d, s, k)? as i64;
    let (den, tag) = match normalization {
        Normalization::Half => (2 * n, FamilyTag::PHalf),
        Normalization::Integral => (n, FamilyTag::PIntegral),
    };
    // numerators over `den` of [1^t, 0^{d−t}] − (t−1)/n · j and its negative
    let mut keys = Vec::new();
    for t in [s, s + 1] {
        let lo = -(t as i64 - 1);
        let hi = n + lo;
        for ones in (0..d).combinations(t) {
            let mut v = vec![lo; d];
            for i in ones {
                v[i] = hi;
            }
            keys.push(v.iter().map(|x| -x).collect());
            keys.push(v);
        }
    }
    Ok(VertexSet::build_scaled(tag, d, s, k, den, keys))
}

/// `u = [−1², 1^{d−1}] ∈ Z^{d+1}`.
pub fn section_normal(d: usize) -> RationalVector {
    (0..d + 1)
        .map(|i| Rational::from(if i < 2 { -1 } else { 1 }))
        .collect()
}

/// Vertices `v` of `P(d+1, 1, 2)` (half normalization) with `u·v = 1/2`.
pub fn construct_g(d: usize) -> Result<VertexSet> {
    if d < 6 {
        return Err(Error::ParameterOutOfRange(format!(
            "G-section needs d >= 6 (got {d})"
        )));
    }
    let parent = construct_p(d + 1, 1, 2, Normalization::Half)?;
    let u = section_normal(d);
    let half = Rational::new(1, 2);
    let pts = parent
        .vertices
        .into_iter()
        .filter(|v| v.dot(&u) == half)
        .collect();
    Ok(VertexSet::build(FamilyTag::GSection, d, 1, 2, pts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryInfo {
    pub centrally_symmetric: bool,
    pub center: Option<RationalVector>,
    pub affine_dim: usize,
}

/// Rank of the difference set. Each difference is scaled to an integer row
/// and reduced modulo a prime; reaching the ambient dimension there is
/// already exact, otherwise the rows are reduced over Q.
pub fn affine_dim(points: &[RationalVector]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let dim = first.len();
    let mut ech = ModpEchelon::new(dim);
    for p in &points[1..] {
        if ech.is_full() {
            return dim;
        }
        let diff = p - first;
        let dq = Rational::from(diff.common_denominator());
        let row: Vec<BigInt> = diff.iter().map(|x| (x * &dq).to_integer().expect("cleared")).collect();
        ech.insert_bigs(&row);
    }
    if ech.is_full() {
        return dim;
    }
    let mut basis: Vec<(usize, RationalVector)> = Vec::new();
    for p in &points[1..] {
        let mut r = p - first;
        for (pivot, b) in &basis {
            if !r[*pivot].is_zero() {
                let c = r[*pivot].clone();
                r = &r - &b.scale(&c);
            }
        }
        if let Some(pivot) = r.iter().position(|x| !x.is_zero()) {
            let inv = r[pivot].recip();
            basis.push((pivot, r.scale(&inv)));
        }
    }
    basis.len()
}

/// Central symmetry about the barycenter, plus affine dimension.
pub fn symmetry_and_dim(points: &[RationalVector]) -> Result<SymmetryInfo> {
    let first = points
        .first()
        .ok_or_else(|| Error::Usage("need at least one point".into()))?;
    let count = Rational::from(points.len() as i64);
    let mut sum = RationalVector::zeros(first.len());
    for p in points {
        sum = &sum + p;
    }
    let center = sum.scale(&count.recip());
    let set: BTreeSet<&RationalVector> = points.iter().collect();
    let twice = center.scale(&Rational::from(2));
    let symmetric = points.iter().all(|p| set.contains(&(&twice - p)));
    Ok(SymmetryInfo {
        centrally_symmetric: symmetric,
        center: symmetric.then_some(center),
        affine_dim: affine_dim(points),
    })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn d_set_seven_one_two() {
        let dset = construct_d(7, 1, 2).unwrap();
        assert_eq!(dset.len(), 28);
        assert!(dset.contains(&RationalVector::unit(7, 0)));
        let mut w = vec![q(-1, 3); 7];
        w[0] = q(2, 3);
        w[1] = q(2, 3);
        assert!(dset.contains(&RationalVector::new(w)));
        assert!(construct_d(7, 1, 4).is_err());
    }

    #[test]
    fn p_counts_and_scaling() {
        let half = construct_p(7, 1, 2, Normalization::Half).unwrap();
        assert_eq!(half.len(), 56);
        assert_eq!(half.meta.affine_dim, 7);
        let integral = construct_p(7, 1, 2, Normalization::Integral).unwrap();
        let doubled: BTreeSet<_> = half.vertices.iter().map(|v| v.scale(&q(2, 1))).collect();
        assert_eq!(doubled, integral.vertices.iter().cloned().collect());
        assert_eq!(construct_p(13, 1, 4, Normalization::Half).unwrap().len(), 182);
    }

    #[test]
    fn g_counts() {
        let g6 = construct_g(6).unwrap();
        assert_eq!(g6.len(), 27);
        assert_eq!(g6.meta.ambient_dim, 7);
        assert_eq!(g6.meta.affine_dim, 6);
        assert_eq!(construct_g(7).unwrap().len(), 35);
        assert!(construct_g(5).is_err());
    }

    #[test]
    fn g6_section_composition() {
        // by type: +e_i/2 for i >= 3, -e_i/2 for i in {1, 2}, and the
        // shifted pair vectors; totals 27
        let g6 = construct_g(6).unwrap();
        let u = section_normal(6);
        let mut plus_unit = 0;
        let mut minus_unit = 0;
        for v in &g6.vertices {
            assert_eq!(v.dot(&u), q(1, 2));
            let nz: Vec<_> = v.iter().filter(|x| !x.is_zero()).collect();
            if nz.len() == 1 {
                if nz[0].is_positive() {
                    plus_unit += 1;
                } else {
                    minus_unit += 1;
                }
            }
        }
        assert_eq!(plus_unit, 5);
        assert_eq!(minus_unit, 2);
    }

    #[test]
    fn symmetry_examples() {
        let p = construct_p(7, 1, 2, Normalization::Half).unwrap();
        let s = symmetry_and_dim(&p.vertices).unwrap();
        assert!(s.centrally_symmetric);
        assert_eq!(s.center, Some(RationalVector::zeros(7)));
        assert_eq!(s.affine_dim, 7);

        let g = construct_g(6).unwrap();
        let s = symmetry_and_dim(&g.vertices).unwrap();
        assert!(!s.centrally_symmetric);
        assert_eq!(s.center, None);
        assert_eq!(s.affine_dim, 6);

        let pt = RationalVector::from_ints(&[3, -1]);
        let s = symmetry_and_dim(std::slice::from_ref(&pt)).unwrap();
        assert!(s.centrally_symmetric);
        assert_eq!(s.center, Some(pt));
        assert_eq!(s.affine_dim, 0);
    }

    #[test]
    fn csv_is_rational_strings() {
        let p = construct_p(7, 1, 2, Normalization::Half).unwrap();
        let csv = p.to_csv();
        assert_eq!(csv.lines().count(), 56);
        assert!(csv.lines().all(|l| l.split(',').count() == 7));
        assert!(csv.contains("1/2"));
    }
}
