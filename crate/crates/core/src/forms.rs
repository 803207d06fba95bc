//! Quadratic forms in the two parameterizations used by the certificates,
//! `α·φ₁ + β·φ₂` and `A|x|² + B(j·x)²`, plus general inhomogeneous
//! quadratic functions.
//!
//! Here `φ₁(x) = (Σxᵢ)²` and `φ₂(x)` is the squared Euclidean distance from
//! `x` to the line spanned by the all-ones vector `j`.

use serde::{Deserialize, Serialize};

use crate::arith::{Rational, RationalMatrix, RationalVector};
use crate::error::{Error, Result};

/// `(φ₁(x), φ₂(x))`.
pub fn eval_phi12(x: &RationalVector) -> (Rational, Rational) {
    let d = Rational::from(x.len() as i64);
    let sum = x.sum();
    let phi1 = sum.square();
    let phi2 = x.norm_sq() - &phi1 / &d;
    (phi1, phi2)
}

/// `α·φ₁ + β·φ₂` on `R^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairForm {
    pub alpha: Rational,
    pub beta: Rational,
    pub d: usize,
}

impl PairForm {
    pub fn new(alpha: Rational, beta: Rational, d: usize) -> Self {
        PairForm { alpha, beta, d }
    }

    pub fn eval(&self, x: &RationalVector) -> Rational {
        let (p1, p2) = eval_phi12(x);
        &self.alpha * p1 + &self.beta * p2
    }

    pub fn is_positive_definite(&self) -> bool {
        self.alpha.is_positive() && self.beta.is_positive()
    }

    pub fn to_radial(&self) -> RadialForm {
        pair_to_radial(self)
    }
}

/// `A|x|² + B(j·x)²` on `R^d`. `B` may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadialForm {
    #[serde(rename = "A")]
    pub a: Rational,
    #[serde(rename = "B")]
    pub b: Rational,
    pub d: usize,
}

impl RadialForm {
    pub fn new(a: Rational, b: Rational, d: usize) -> Self {
        RadialForm { a, b, d }
    }

    /// The Euclidean form `|x|²`.
    pub fn euclidean(d: usize) -> Self {
        RadialForm::new(Rational::one(), Rational::zero(), d)
    }

    pub fn eval(&self, x: &RationalVector) -> Rational {
        &self.a * x.norm_sq() + &self.b * x.sum().square()
    }

    /// Eigenvalues are `A` (on `j^⊥`) and `A + B·d` (on `j`).
    pub fn is_positive_definite(&self) -> bool {
        let d = Rational::from(self.d as i64);
        self.a.is_positive() && (&self.a + &self.b * d).is_positive()
    }

    pub fn gram(&self) -> RationalMatrix {
        let mut g = RationalMatrix::zeros(self.d, self.d);
        let diag = &self.a + &self.b;
        for i in 0..self.d {
            for j in 0..self.d {
                g[(i, j)] = if i == j { diag.clone() } else { self.b.clone() };
            }
        }
        g
    }

    pub fn scale(&self, c: &Rational) -> RadialForm {
        RadialForm::new(&self.a * c, &self.b * c, self.d)
    }

    /// Returns `c` with `other = c·self`, if one exists.
    pub fn ratio_to(&self, other: &RadialForm) -> Option<Rational> {
        if self.d != other.d {
            return None;
        }
        let c = if !self.a.is_zero() {
            &other.a / &self.a
        } else if !self.b.is_zero() {
            &other.b / &self.b
        } else {
            return None;
        };
        (&self.scale(&c) == other).then_some(c)
    }
}

/// `(A, B) = (β, α − β/d)`, using `|x|² = φ₂ + (j·x)²/d` and `φ₁ = (j·x)²`.
pub fn pair_to_radial(pf: &PairForm) -> RadialForm {
    let d = Rational::from(pf.d as i64);
    RadialForm::new(pf.beta.clone(), &pf.alpha - &pf.beta / d, pf.d)
}

/// The closed-form circumscribing form of the symmetric family:
/// `4k(d − k(2s+1))|x|² + (d² − (4k+2s+1)d + 4k(2s+k))(j·x)²`.
pub fn phi_main(d: usize, s: usize, k: usize) -> Result<RadialForm> {
    if s < 1 || k < 2 || d < k * (2 * s + 1) + 1 {
        return Err(Error::ParameterOutOfRange(format!(
            "closed form needs s >= 1, k >= 2, d >= k(2s+1)+1 (got d={d}, s={s}, k={k})"
        )));
    }
    let (d, s, k) = (d as i64, s as i64, k as i64);
    let a = 4 * k * (d - k * (2 * s + 1));
    let b = d * d - (4 * k + 2 * s + 1) * d + 4 * k * (2 * s + k);
    let form = RadialForm::new(a.into(), b.into(), d as usize);
    if !form.is_positive_definite() {
        return Err(Error::ParameterOutOfRange(format!(
            "closed form is not positive definite at d={d}, s={s}, k={k}"
        )));
    }
    Ok(form)
}

/// `f(x) = xᵀ·gram·x + linear·x + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InhomQuadratic {
    pub gram: RationalMatrix,
    pub linear: RationalVector,
    pub constant: Rational,
}

impl InhomQuadratic {
    pub fn new(gram: RationalMatrix, linear: RationalVector, constant: Rational) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Usage("gram matrix must be symmetric".into()));
        }
        if linear.len() != gram.rows() {
            return Err(Error::DimensionMismatch {
                expected: gram.rows(),
                got: linear.len(),
            });
        }
        Ok(InhomQuadratic {
            gram,
            linear,
            constant,
        })
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    pub fn eval(&self, x: &RationalVector) -> Rational {
        x.dot(&self.gram.mul_vec(x)) + self.linear.dot(x) + &self.constant
    }

    pub fn scale(&self, c: &Rational) -> InhomQuadratic {
        InhomQuadratic {
            gram: self.gram.scale(c),
            linear: self.linear.scale(c),
            constant: &self.constant * c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero() && self.linear.is_zero() && self.constant.is_zero()
    }

    /// `y ↦ f(origin + basis·y)`, where the columns of `basis` span the
    /// affine subspace of interest.
    pub fn pullback(&self, origin: &RationalVector, basis: &RationalMatrix) -> InhomQuadratic {
        let bt = basis.transpose();
        let gram = bt.mul(&self.gram).mul(basis);
        let go = self.gram.mul_vec(origin);
        let two_go = go.scale(&Rational::from(2));
        let linear = bt.mul_vec(&(&two_go + &self.linear));
        InhomQuadratic {
            gram,
            linear,
            constant: self.eval(origin),
        }
    }

    /// Coefficients in a fixed order (constant, linear, upper-triangular gram).
    fn coefficients(&self) -> impl Iterator<Item = &Rational> {
        let n = self.dim();
        std::iter::once(&self.constant)
            .chain(self.linear.iter())
            .chain((0..n).flat_map(move |i| (i..n).map(move |j| &self.gram[(i, j)])))
    }
}

/// Expands `φ(x − center) − radius_sq`.
pub fn as_inhom(rf: &RadialForm, center: &RationalVector, radius_sq: &Rational) -> InhomQuadratic {
    let gram = rf.gram();
    let gc = gram.mul_vec(center);
    let linear = gc.scale(&Rational::from(-2));
    let constant = center.dot(&gc) - radius_sq;
    InhomQuadratic {
        gram,
        linear,
        constant,
    }
}

/// The degenerate perfect function `p(x) = (a·x)(a·x − 1)`.
pub fn degenerate_perfect(a: &RationalVector) -> InhomQuadratic {
    let n = a.len();
    let mut gram = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = &a[i] * &a[j];
        }
    }
    InhomQuadratic {
        gram,
        linear: -a,
        constant: Rational::zero(),
    }
}

/// Returns the nonzero `c` with `g = c·f`.
pub fn proportional(f: &InhomQuadratic, g: &InhomQuadratic) -> Result<Rational> {
    if f.dim() != g.dim() {
        return Err(Error::NotProportional);
    }
    let (fc, gc) = f
        .coefficients()
        .zip(g.coefficients())
        .find(|(x, _)| !x.is_zero())
        .ok_or_else(|| Error::Usage("reference function is identically zero".into()))?;
    let c = gc / fc;
    if c.is_zero() || &f.scale(&c) != g {
        return Err(Error::NotProportional);
    }
    Ok(c)
}
