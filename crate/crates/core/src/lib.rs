//! Exact construction and certification of two infinite families of perfect
//! Delaunay polytopes: the centrally symmetric `P(d, s, k)` and the
//! asymmetric sections `G^d`.
//!
//! All arithmetic is exact over the rationals. Certificates serialize to
//! JSON and re-validate from their own payload.

pub mod arith;
pub mod certify;
pub mod error;
pub mod forms;
pub mod lattice;
pub mod polytopes;

pub use arith::{Rational, RationalMatrix, RationalVector};
pub use certify::{
    bruteforce_delaunay, cross_minimality_check, delaunay_certificate, diagram, perfection_certificate,
    thm7_determinants, BruteOutcome, CertStatus, CrossCheck, DelaunayCertificate, DeterminantReport,
    DiagramPoint, PerfectionCertificate, PerfectionStatus,
};
pub use error::{Error, Result};
pub use forms::{as_inhom, eval_phi12, pair_to_radial, phi_main, proportional, InhomQuadratic, PairForm, RadialForm};
pub use lattice::{canonical_rep, enumerate_in_ellipsoid, enumerate_m, AffineLattice, CanonicalRep, ParityFunctional, ScaledLattice};
pub use polytopes::{construct_d, construct_g, construct_p, symmetry_and_dim, Normalization, VertexSet};
