//! Delaunay and perfection certificates.
//!
//! The Delaunay certificate works on the diagram: the image of the
//! candidate set `M` under `x ↦ (φ₁(x), φ₂(x))`. A line `α·x₁ + β·x₂ = 1`
//! with `α, β > 0` through the images of the two target diagonals, with every
//! other diagram point strictly beyond it, certifies that the targets are
//! exactly the minimal vectors of the odd class for `α·φ₁ + β·φ₂`.
//!
//! The perfection certificate is a rank computation: the inhomogeneous
//! quadratics vanishing on the vertex set form a one-dimensional space.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{independent_rows_mod_p, lifted_nullspace, Rational, RationalMatrix, RationalVector};
use crate::error::{Error, Result};
use crate::forms::{as_inhom, eval_phi12, pair_to_radial, phi_main, InhomQuadratic, PairForm, RadialForm};
use crate::lattice::{canonical_rep, enumerate_in_ellipsoid_budgeted, enumerate_m, AffineLattice, CanonicalRep, ParityFunctional, ScaledLattice};
use crate::polytopes::{binomial, construct_p, diagonal_generator, Normalization, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub rep: CanonicalRep,
    pub phi1: Rational,
    pub phi2: Rational,
}

/// One point per element of `M`, sorted by `φ₂` then `φ₁`.
pub fn diagram(d: usize, k: usize) -> Result<Vec<DiagramPoint>> {
    let lat = ScaledLattice::for_family(d, k)?;
    let mut pts: Vec<DiagramPoint> = enumerate_m(d, k)?
        .into_iter()
        .map(|rep| {
            let (phi1, phi2) = eval_phi12(&lat.point_of(&rep));
            DiagramPoint { rep, phi1, phi2 }
        })
        .collect();
    pts.sort_by(|a, b| (&a.phi2, &a.phi1, a.rep.l).cmp(&(&b.phi2, &b.phi1, b.rep.l)));
    Ok(pts)
}

/// The point `t ↦ ((t + (1−t)·d/n)², t − t²/d)` of the curve carrying the
/// images of the diagonal generators.
pub fn curve_point(d: usize, n: usize, t: &Rational) -> (Rational, Rational) {
    let dq = Rational::from(d as i64);
    let ratio = Rational::new(d as i64, n as i64);
    let x1 = (t + (Rational::one() - t) * ratio).square();
    let x2 = t - t.square() / dq;
    (x1, x2)
}

/// Solves `α·p.0 + β·p.1 = 1` through two diagram points.
pub fn line_through(p: &(Rational, Rational), r: &(Rational, Rational)) -> Result<(Rational, Rational)> {
    if p == r {
        return Err(Error::DegenerateLine("target points coincide".into()));
    }
    let det = &p.0 * &r.1 - &p.1 * &r.0;
    if det.is_zero() {
        return Err(Error::DegenerateLine("targets are collinear with the origin".into()));
    }
    let alpha = (&r.1 - &p.1) / &det;
    let beta = (&p.0 - &r.0) / &det;
    Ok((alpha, beta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertStatus {
    Certified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Margin {
    pub rep: CanonicalRep,
    pub margin: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelaunayCertificate {
    pub d: usize,
    pub s: usize,
    pub k: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub on_line: [CanonicalRep; 2],
    pub min_margin: Option<Rational>,
    pub derived_form: RadialForm,
    pub status: CertStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure_witness: Option<CanonicalRep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<String>,
    pub margins: Vec<Margin>,
}

fn check_cert_params(d: usize, s: usize, k: usize) -> Result<ScaledLattice> {
    if s < 1 || k < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "need s >= 1 and k >= 2 (got s={s}, k={k})"
        )));
    }
    let lat = ScaledLattice::for_family(d, k)?;
    if s + 1 > d {
        return Err(Error::ParameterOutOfRange(format!(
            "need s + 1 <= d (got d={d}, s={s})"
        )));
    }
    Ok(lat)
}

fn negate_rep(lat: &ScaledLattice, rep: &CanonicalRep) -> CanonicalRep {
    canonical_rep(&-&lat.point_of(rep), lat).expect("negation stays two-valued")
}

/// Outcome of evaluating a candidate line against `M`; shared between
/// construction and re-validation.
struct LineCheck {
    margins: Vec<Margin>,
    min_margin: Option<Rational>,
    status: CertStatus,
    witness: Option<CanonicalRep>,
    reason: Option<String>,
}

fn check_line(
    lat: &ScaledLattice,
    k: usize,
    alpha: &Rational,
    beta: &Rational,
    targets: &[CanonicalRep; 2],
) -> Result<LineCheck> {
    let d = lat.d();
    let form = PairForm::new(alpha.clone(), beta.clone(), d);
    let target_pts: Vec<(Rational, Rational)> = targets
        .iter()
        .map(|t| eval_phi12(&lat.point_of(t)))
        .collect();
    let allowed: BTreeSet<CanonicalRep> = targets
        .iter()
        .flat_map(|t| [*t, negate_rep(lat, t)])
        .collect();

    let mut margins = Vec::new();
    let mut reason = None;
    let mut witness = None;
    let mut targets_seen = BTreeSet::new();
    for rep in enumerate_m(d, k)? {
        let pt = eval_phi12(&lat.point_of(&rep));
        if target_pts.contains(&pt) {
            if allowed.contains(&rep) {
                targets_seen.insert(pt);
                continue;
            }
            if reason.is_none() {
                reason = Some(format!("{rep} shares a target diagram point"));
                witness = Some(rep);
            }
        }
        let margin = form.eval(&lat.point_of(&rep)) - Rational::one();
        margins.push(Margin { rep, margin });
    }
    let min = margins.iter().min_by(|a, b| a.margin.cmp(&b.margin));
    let min_margin = min.map(|m| m.margin.clone());

    if reason.is_none() {
        if !alpha.is_positive() || !beta.is_positive() {
            reason = Some(format!("line coefficients not positive (alpha={alpha}, beta={beta})"));
            witness = min.filter(|m| !m.margin.is_positive()).map(|m| m.rep);
        } else if let Some(m) = min.filter(|m| !m.margin.is_positive()) {
            reason = Some(format!("{} has non-positive margin {}", m.rep, m.margin));
            witness = Some(m.rep);
        } else if targets_seen.len() != target_pts.iter().collect::<BTreeSet<_>>().len() {
            reason = Some("a target diagonal is not in the candidate set".into());
        }
    }
    let status = if reason.is_none() {
        CertStatus::Certified
    } else {
        CertStatus::Failed
    };
    Ok(LineCheck {
        margins,
        min_margin,
        status,
        witness,
        reason,
    })
}

/// Canonical reps of the target diagonals `v_s`, `v_{s+1}`.
pub fn target_reps(d: usize, s: usize, k: usize) -> Result<[CanonicalRep; 2]> {
    let lat = check_cert_params(d, s, k)?;
    let n = lat.n();
    Ok([
        canonical_rep(&diagonal_generator(d, s, n), &lat)?,
        canonical_rep(&diagonal_generator(d, s + 1, n), &lat)?,
    ])
}

pub fn delaunay_certificate(d: usize, s: usize, k: usize) -> Result<DelaunayCertificate> {
    let lat = check_cert_params(d, s, k)?;
    let on_line = target_reps(d, s, k)?;
    let p1 = eval_phi12(&lat.point_of(&on_line[0]));
    let p2 = eval_phi12(&lat.point_of(&on_line[1]));
    let (alpha, beta) = line_through(&p1, &p2)?;
    let check = check_line(&lat, k, &alpha, &beta, &on_line)?;
    let derived_form = pair_to_radial(&PairForm::new(alpha.clone(), beta.clone(), d));
    Ok(DelaunayCertificate {
        d,
        s,
        k,
        alpha,
        beta,
        on_line,
        min_margin: check.min_margin,
        derived_form,
        status: check.status,
        failure_witness: check.witness,
        failure_reason: check.reason,
        margins: check.margins,
    })
}

impl DelaunayCertificate {
    pub fn is_certified(&self) -> bool {
        self.status == CertStatus::Certified
    }

    pub fn pair_form(&self) -> PairForm {
        PairForm::new(self.alpha.clone(), self.beta.clone(), self.d)
    }

    /// Re-validates the payload: recomputes `M`, re-evaluates the stored
    /// line on every element and reproduces margins and status.
    pub fn recheck(&self) -> std::result::Result<(), String> {
        let lat = check_cert_params(self.d, self.s, self.k).map_err(|e| e.to_string())?;
        for rep in &self.on_line {
            if rep.d != self.d || rep.n != lat.n() || !rep.in_window() || rep.parity() != 1 {
                return Err(format!("on-line rep {rep} is not an odd canonical rep"));
            }
            if self.pair_form().eval(&lat.point_of(rep)) != Rational::one() {
                return Err(format!("on-line rep {rep} is not on the line"));
            }
        }
        if self.derived_form != pair_to_radial(&self.pair_form()) {
            return Err("derived form does not match the line".into());
        }
        let check = check_line(&lat, self.k, &self.alpha, &self.beta, &self.on_line)
            .map_err(|e| e.to_string())?;
        if check.margins != self.margins {
            return Err("margins differ from recomputation".into());
        }
        if check.min_margin != self.min_margin {
            return Err("min margin differs from recomputation".into());
        }
        if check.status != self.status {
            return Err(format!("status {:?} does not reproduce", self.status));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BruteOutcome {
    Certified {
        boundary_points: usize,
        level: Rational,
    },
    Violation {
        point: RationalVector,
        value: Rational,
        interior: bool,
    },
}

impl BruteOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, BruteOutcome::Certified { .. })
    }
}

/// Brute-force emptiness check: the lattice points with `f(x) ≤ f(v)`
/// must be exactly the vertices.
pub fn bruteforce_delaunay(
    vertices: &[RationalVector],
    f: &InhomQuadratic,
    lat: &AffineLattice,
    max_nodes: Option<u64>,
) -> Result<BruteOutcome> {
    let first = vertices
        .first()
        .ok_or_else(|| Error::Usage("empty vertex set".into()))?;
    let level = f.eval(first);
    if vertices.iter().any(|v| f.eval(v) != level) {
        return Err(Error::NotEquidistant);
    }
    if let Some(v) = vertices.iter().find(|v| !lat.contains(v)) {
        return Err(Error::Usage(format!("vertex {v} is not in the lattice")));
    }
    let found = enumerate_in_ellipsoid_budgeted(lat, f, &level, max_nodes)?;
    let vset: BTreeSet<&RationalVector> = vertices.iter().collect();
    for x in &found {
        let value = f.eval(x);
        if value < level {
            return Ok(BruteOutcome::Violation {
                point: x.clone(),
                value,
                interior: true,
            });
        }
        if !vset.contains(x) {
            return Ok(BruteOutcome::Violation {
                point: x.clone(),
                value,
                interior: false,
            });
        }
    }
    Ok(BruteOutcome::Certified {
        boundary_points: found.len(),
        level,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PerfectionStatus {
    Perfect,
    NotPerfect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionCertificate {
    pub family: String,
    pub m: usize,
    pub vertex_count: usize,
    pub rank: usize,
    pub nullity: usize,
    /// In hull coordinates `y`, where `x = frame.origin + frame.basis·y`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<InhomQuadratic>,
    pub status: PerfectionStatus,
    pub frame: AffineLattice,
    pub vertices: Vec<RationalVector>,
}

/// Monomials `y_i·y_j (i ≤ j)`, `y_i`, `1`.
fn monomial_row(y: &[BigInt]) -> Vec<BigInt> {
    let m = y.len();
    let mut row = Vec::with_capacity(binomial(m + 2, 2));
    for i in 0..m {
        for j in i..m {
            row.push(&y[i] * &y[j]);
        }
    }
    row.extend(y.iter().cloned());
    row.push(BigInt::from(1));
    row
}

fn quadratic_from_coefficients(m: usize, c: &RationalVector) -> InhomQuadratic {
    let mut gram = RationalMatrix::zeros(m, m);
    let half = Rational::new(1, 2);
    let mut idx = 0;
    for i in 0..m {
        for j in i..m {
            if i == j {
                gram[(i, i)] = c[idx].clone();
            } else {
                let v = &c[idx] * &half;
                gram[(i, j)] = v.clone();
                gram[(j, i)] = v;
            }
            idx += 1;
        }
    }
    let linear: RationalVector = (0..m).map(|i| c[idx + i].clone()).collect();
    InhomQuadratic {
        gram,
        linear,
        constant: c[idx + m].clone(),
    }
}

/// Exact rank and nullspace of an integer matrix given by rows.
///
/// Rows independent modulo a prime give a lower bound on the rank; the
/// nullspace of those rows, verified exactly against every row, gives the
/// matching upper bound. That nullspace is first lifted from its mod-p
/// image, then computed over Q if lifting fails; full rational elimination
/// is the last resort.
fn integer_rank_and_nullspace(rows: &[Vec<BigInt>], cols: usize) -> (usize, Vec<RationalVector>) {
    let to_matrix = |rs: &[&Vec<BigInt>]| {
        RationalMatrix::from_rows(
            rs.iter()
                .map(|r| r.iter().map(|x| Rational::from(x.clone())).collect())
                .collect(),
        )
        .expect("rows share a length")
    };
    if rows.is_empty() {
        let basis = (0..cols).map(|i| RationalVector::unit(cols, i)).collect();
        return (0, basis);
    }
    let chosen = independent_rows_mod_p(rows);
    let sub: Vec<&Vec<BigInt>> = chosen.iter().map(|&i| &rows[i]).collect();
    if let Some(null) = lifted_nullspace(&sub, rows, cols) {
        return (chosen.len(), null);
    }
    let (rank, null) = to_matrix(&sub).rank_and_nullspace();
    debug_assert_eq!(rank, chosen.len());
    let vanishes_everywhere = null.iter().all(|v| {
        let den = v.common_denominator();
        let dq = Rational::from(den);
        let iv: Vec<BigInt> = v.iter().map(|x| (x * &dq).to_integer().expect("cleared")).collect();
        rows.iter()
            .all(|r| r.iter().zip(&iv).map(|(a, b)| a * b).sum::<BigInt>().is_zero())
    });
    if vanishes_everywhere {
        return (rank, null);
    }
    let all: Vec<&Vec<BigInt>> = rows.iter().collect();
    to_matrix(&all).rank_and_nullspace()
}

fn normalize_generator(g: InhomQuadratic) -> InhomQuadratic {
    let lead = if !g.constant.is_zero() {
        -g.constant.clone()
    } else if let Some(x) = g.linear.iter().find(|x| !x.is_zero()) {
        x.clone()
    } else {
        let m = g.dim();
        (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|ij| g.gram[ij].clone())
            .find(|x| !x.is_zero())
            .unwrap_or_else(Rational::one)
    };
    g.scale(&lead.recip())
}

fn hull_coordinates(frame: &AffineLattice, vertices: &[RationalVector]) -> Result<Vec<Vec<BigInt>>> {
    vertices
        .iter()
        .map(|v| frame.coords(v).ok_or(Error::NotInLattice))
        .collect()
}

fn perfection_from_frame(
    family: String,
    frame: AffineLattice,
    vertices: Vec<RationalVector>,
) -> Result<PerfectionCertificate> {
    let m = frame.rank();
    let cols = binomial(m + 2, 2);
    let ys = hull_coordinates(&frame, &vertices)?;
    let rows: Vec<Vec<BigInt>> = ys.iter().map(|y| monomial_row(y)).collect();
    let (rank, null) = integer_rank_and_nullspace(&rows, cols);
    let nullity = null.len();
    let generator = (nullity == 1).then(|| normalize_generator(quadratic_from_coefficients(m, &null[0])));
    if let Some(g) = &generator {
        for y in &ys {
            let yv: RationalVector = y.iter().map(|x| Rational::from(x.clone())).collect();
            debug_assert!(g.eval(&yv).is_zero());
        }
    }
    Ok(PerfectionCertificate {
        family,
        m,
        vertex_count: vertices.len(),
        rank,
        nullity,
        generator,
        status: if nullity == 1 {
            PerfectionStatus::Perfect
        } else {
            PerfectionStatus::NotPerfect
        },
        frame,
        vertices,
    })
}

/// Rank of the vertex evaluation system on inhomogeneous quadratics in
/// affine-hull coordinates.
pub fn perfection_certificate(vs: &VertexSet) -> Result<PerfectionCertificate> {
    perfection_certificate_for_points(&vs.meta.family.to_string(), &vs.vertices)
}

pub fn perfection_certificate_for_points(
    family: &str,
    vertices: &[RationalVector],
) -> Result<PerfectionCertificate> {
    let frame = AffineLattice::from_points(vertices)?;
    perfection_from_frame(family.to_string(), frame, vertices.to_vec())
}

impl PerfectionCertificate {
    pub fn is_perfect(&self) -> bool {
        self.status == PerfectionStatus::Perfect
    }

    /// The generator as a function of ambient coordinates is only defined on
    /// the affine hull; this expresses an ambient function in hull
    /// coordinates for comparison.
    pub fn to_hull(&self, f: &InhomQuadratic) -> InhomQuadratic {
        f.pullback(self.frame.origin(), self.frame.basis())
    }

    /// Re-validates the payload: vertices lie in the frame, the generator
    /// vanishes on every vertex, and rank/nullity/status reproduce.
    pub fn recheck(&self) -> std::result::Result<(), String> {
        if self.vertices.len() != self.vertex_count {
            return Err("vertex count mismatch".into());
        }
        if self.frame.rank() != self.m {
            return Err("frame rank differs from m".into());
        }
        let cols = binomial(self.m + 2, 2);
        if self.rank + self.nullity != cols {
            return Err(format!("rank + nullity != {cols}"));
        }
        if (self.nullity == 1) != self.is_perfect() {
            return Err("status inconsistent with nullity".into());
        }
        let ys = hull_coordinates(&self.frame, &self.vertices).map_err(|_| "vertex outside frame".to_string())?;
        match (&self.generator, self.nullity) {
            (Some(g), 1) => {
                if g.dim() != self.m || g.is_zero() {
                    return Err("generator has the wrong shape".into());
                }
                for y in &ys {
                    let yv: RationalVector = y.iter().map(|x| Rational::from(x.clone())).collect();
                    if !g.eval(&yv).is_zero() {
                        return Err("generator does not vanish on a vertex".into());
                    }
                }
            }
            (None, n) if n != 1 => {}
            _ => return Err("generator present iff nullity is 1".into()),
        }
        let rows: Vec<Vec<BigInt>> = ys.iter().map(|y| monomial_row(y)).collect();
        let (rank, _) = integer_rank_and_nullspace(&rows, cols);
        if rank != self.rank {
            return Err(format!("rank {} does not reproduce (got {rank})", self.rank));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub congruent: bool,
    pub form: RadialForm,
    pub min_norm: Option<Rational>,
    pub minimal_count: usize,
    pub status: CertStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<RationalVector>,
}

/// The cross criterion: all diagonals are congruent modulo `2Λ` and are
/// exactly the minimal vectors of their class.
///
/// Uses the closed-form `phi_main` when the parameters admit it and the
/// diagram-derived form otherwise.
pub fn cross_minimality_check(d: usize, s: usize, k: usize, max_nodes: Option<u64>) -> Result<CrossCheck> {
    let lat = check_cert_params(d, s, k)?;
    let pf = ParityFunctional::new(d, k)?;
    let diagonals = construct_p(d, s, k, Normalization::Integral)?.vertices;
    let congruent = diagonals.iter().all(|v| pf.congruent_mod_2(v, &diagonals[0]));
    let form = match phi_main(d, s, k) {
        Ok(f) => f,
        Err(_) => delaunay_certificate(d, s, k)?.derived_form,
    };
    let failed = |min_norm, minimal_count, violation| CrossCheck {
        congruent,
        form: form.clone(),
        min_norm,
        minimal_count,
        status: CertStatus::Failed,
        violation,
    };
    if !form.is_positive_definite() {
        return Ok(failed(None, 0, None));
    }
    let norm = form.eval(&diagonals[0]);
    let f = as_inhom(&form, &RationalVector::zeros(d), &Rational::zero());
    let found = enumerate_in_ellipsoid_budgeted(&lat.odd_class(), &f, &norm, max_nodes)?;
    let min_norm = found.iter().map(|x| f.eval(x)).min();
    let minimal: BTreeSet<RationalVector> = found
        .iter()
        .filter(|x| Some(f.eval(x)) == min_norm)
        .cloned()
        .collect();
    let expected: BTreeSet<RationalVector> = diagonals.iter().cloned().collect();
    if !congruent || min_norm.as_ref() != Some(&norm) || minimal != expected {
        let violation = minimal.difference(&expected).next().cloned();
        return Ok(failed(min_norm, minimal.len(), violation));
    }
    Ok(CrossCheck {
        congruent,
        form,
        min_norm,
        minimal_count: minimal.len(),
        status: CertStatus::Certified,
        violation: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantReport {
    pub d: usize,
    pub k: usize,
    pub s: usize,
    pub n: usize,
    pub det4: Rational,
    pub det3: Rational,
    /// Determinant of the three-equation system before clearing the `1/n`
    /// denominator of its last equation.
    pub det3_as_printed: Rational,
    pub closed4: Rational,
    pub closed3: Rational,
    #[serde(rename = "match")]
    pub matches: bool,
}

type Linear4 = fn(&Params, [Rational; 4]) -> Rational;
type Linear3 = fn(&Params, [Rational; 3]) -> Rational;

pub(crate) struct Params {
    d: Rational,
    s: Rational,
    n: Rational,
}

fn r(v: i64) -> Rational {
    Rational::from(v)
}

/// Equations in `(t, α, β, δ)` for the diagonal step.
pub(crate) fn diagonal_equations() -> [Linear4; 4] {
    [
        |p, [t, al, be, de]| {
            let (d, s, n) = (&p.d, &p.s, &p.n);
            let s1 = s - r(1);
            let head = &t + r(2) * &s1 * &be + &s1 * &al + &s1 * (s - r(2)) * &de;
            let mid = &t + (s + d - r(2)) * &be + &s1 * &al + &s1 * (d - r(2)) * &de;
            let tail = &t + r(2) * (d - r(1)) * &be + (d - r(1)) * &al + (d - r(1)) * (d - r(2)) * &de;
            head - r(2) * &s1 * mid / n + s1.square() * tail / n.square()
        },
        |p, [t, al, be, de]| {
            let (d, s, n) = (&p.d, &p.s, &p.n);
            let head = &t + r(2) * s * &be + s * &al + s * (s - r(1)) * &de;
            let mid = &t + (s + d - r(1)) * &be + s * &al + s * (d - r(2)) * &de;
            let tail = &t + r(2) * (d - r(1)) * &be + (d - r(1)) * &al + (d - r(1)) * (d - r(2)) * &de;
            head - r(2) * s * mid / n + s.square() * tail / n.square()
        },
        |p, [t, al, _be, _de]| t + (&p.d - r(1)) * al,
        |p, [_t, _al, be, de]| {
            let d = &p.d;
            (d - r(1)) * (d - r(2)) * de + r(2) * (d - r(1)) * be
        },
    ]
}

/// Equations in `(α, β, δ)` for the off-diagonal step, as printed.
pub(crate) fn off_diagonal_equations() -> [Linear3; 3] {
    [
        |p, [al, be, de]| {
            let d = &p.d;
            r(2) * al + r(4) * (d - r(2)) * be + (d - r(2)) * (d - r(3)) * de
        },
        |p, [al, be, de]| {
            let (d, s, n) = (&p.d, &p.s, &p.n);
            let s1 = s - r(1);
            let head = r(4) * &s1 * &be + r(2) * &al + &s1 * (s - r(2)) * &de;
            let inner = r(2) * &al + r(2) * (s + d - r(3)) * &be + &s1 * (d - r(3)) * &de;
            head - r(2) * s / n * inner
        },
        |p, [_al, be, de]| {
            let (d, n) = (&p.d, &p.n);
            &de - r(2) * (r(2) * be + (d - r(3)) * &de) / n
        },
    ]
}

fn unit<const N: usize>(i: usize) -> [Rational; N] {
    std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
}

fn assemble4(p: &Params) -> RationalMatrix {
    let rows = diagonal_equations()
        .iter()
        .map(|eq| (0..4).map(|v| eq(p, unit(v))).collect())
        .collect();
    RationalMatrix::from_rows(rows).expect("4x4")
}

fn assemble3(p: &Params) -> RationalMatrix {
    let rows = off_diagonal_equations()
        .iter()
        .map(|eq| (0..3).map(|v| eq(p, unit(v))).collect())
        .collect();
    RationalMatrix::from_rows(rows).expect("3x3")
}

/// Assembles the two linear systems of the uniqueness argument, computes
/// their determinants and compares with the closed forms
/// `(2/n)(d−1)(s−d+1)(s−d)(d−2−n)` and `8(d−2−n)(−d+s+1)`.
///
/// The four-equation system is ordered `(t, α, β, δ)`. In the
/// three-equation system the last equation is multiplied by `−n` to clear
/// its denominator before taking the determinant.
pub fn thm7_determinants(d: usize, k: usize, s: usize) -> Result<DeterminantReport> {
    let lat = ScaledLattice::for_family(d, k)?;
    let n = lat.n();
    let p = Params {
        d: r(d as i64),
        s: r(s as i64),
        n: r(n as i64),
    };
    let det4 = assemble4(&p).determinant()?;
    let m3 = assemble3(&p);
    let det3_as_printed = m3.determinant()?;
    let det3 = &det3_as_printed * -&p.n;
    let (dq, sq, nq) = (&p.d, &p.s, &p.n);
    let closed4 = r(2) / nq * (dq - r(1)) * (sq - dq + r(1)) * (sq - dq) * (dq - r(2) - nq);
    let closed3 = r(8) * (dq - r(2) - nq) * (-dq + sq + r(1));
    let matches = det4 == closed4 && det3 == closed3;
    Ok(DeterminantReport {
        d,
        k,
        s,
        n,
        det4,
        det3,
        det3_as_printed,
        closed4,
        closed3,
        matches,
    })
}

#[cfg(test)]
pub(crate) fn params_for_tests(d: i64, s: i64, n: i64) -> Params {
    Params {
        d: r(d),
        s: r(s),
        n: r(n),
    }
}
