use std::collections::BTreeSet;

use perfdel_core::arith::q;
use perfdel_core::lattice::enumerate_in_ellipsoid;
use perfdel_core::*;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, d)| Rational::new(p, d))
}

fn rational_vector(len: usize) -> impl Strategy<Value = RationalVector> {
    prop::collection::vec(small_rational(), len).prop_map(RationalVector::new)
}

fn rational_matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(small_rational(), c), r)
            .prop_map(|rows| RationalMatrix::from_rows(rows).unwrap())
    })
}

fn square_matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(small_rational(), n), n)
            .prop_map(|rows| RationalMatrix::from_rows(rows).unwrap())
    })
}

fn permute(v: &RationalVector, perm: &[usize]) -> RationalVector {
    perm.iter().map(|&i| v[i].clone()).collect()
}

fn leading_minors_positive(m: &RationalMatrix) -> bool {
    (1..=m.rows()).all(|k| {
        let rows = (0..k).map(|i| m.row(i)[..k].to_vec()).collect();
        RationalMatrix::from_rows(rows).unwrap().determinant().unwrap().is_positive()
    })
}

/// (d, n, rep) with rep inside the canonical window.
fn lattice_rep() -> impl Strategy<Value = CanonicalRep> {
    (4usize..=12)
        .prop_flat_map(|d| (Just(d), 1..d))
        .prop_flat_map(|(d, n)| {
            let lo = -(d as i64) / 2;
            let hi = (d as i64 - 1) / 2;
            (Just(d), Just(n), lo..=hi, -5i64..=5)
        })
        .prop_map(|(d, n, l, a)| CanonicalRep { l, a, d, n })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nullspace_vectors_are_exact(m in rational_matrix(5)) {
        let (rank, basis) = m.rank_and_nullspace();
        prop_assert_eq!(rank + basis.len(), m.cols());
        for v in &basis {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        if !basis.is_empty() {
            let b = RationalMatrix::from_columns(&basis, m.cols());
            prop_assert_eq!(b.rank(), basis.len());
        }
    }

    #[test]
    fn rank_of_transpose(m in rational_matrix(5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn determinant_vs_rank(m in square_matrix(5)) {
        let det = m.determinant().unwrap();
        prop_assert_eq!(!det.is_zero(), m.rank() == m.cols());
    }

    #[test]
    fn ldlt_vs_leading_minors(m in square_matrix(6)) {
        // symmetrize via AᵀA + shift so both outcomes occur
        let s = m.transpose().mul(&m);
        let shift = RationalMatrix::identity(m.rows()).scale(&q(-1, 1));
        let cands = [s.clone(), {
            let mut t = s.clone();
            for i in 0..t.rows() { t[(i, i)] = &t[(i, i)] + &shift[(i, i)]; }
            t
        }];
        for c in cands {
            let pd = c.ldlt().map(|f| f.is_positive_definite()).unwrap_or(false);
            prop_assert_eq!(pd, leading_minors_positive(&c));
        }
    }

    #[test]
    fn canonical_rep_round_trip(rep in lattice_rep()) {
        let lat = ScaledLattice::new(rep.d, rep.n).unwrap();
        let back = canonical_rep(&lat.point_of(&rep), &lat).unwrap();
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn canonical_rep_permutation_invariant(rep in lattice_rep(), seed in any::<u64>()) {
        let lat = ScaledLattice::new(rep.d, rep.n).unwrap();
        let x = lat.point_of(&rep);
        let mut perm: Vec<usize> = (0..rep.d).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let y = permute(&x, &perm);
        prop_assert_eq!(canonical_rep(&y, &lat).unwrap(), rep);
    }

    #[test]
    fn parity_symmetries(d in 5usize..=12, kk in 1usize..=5, z in prop::collection::vec(-3i64..=3, 12), a in -4i64..=4, seed in any::<u64>()) {
        prop_assume!(2 * kk < d);
        let pf = ParityFunctional::new(d, kk).unwrap();
        let lat = *pf.lattice();
        let x = &RationalVector::from_ints(&z[..d]) + &lat.j_over_n().scale(&Rational::from(a));
        let p = pf.parity(&x).unwrap();
        prop_assert_eq!(pf.parity(&-&x).unwrap(), p);
        let mut perm: Vec<usize> = (0..d).collect();
        perm.rotate_left((seed % d as u64) as usize);
        prop_assert_eq!(pf.parity(&permute(&x, &perm)).unwrap(), p);
        if let Ok(rep) = canonical_rep(&x, &lat) {
            prop_assert_eq!(rep.parity(), p);
        }
    }

    #[test]
    fn pair_and_radial_agree(alpha in small_rational(), beta in small_rational(), x in rational_vector(7)) {
        let pf = PairForm::new(alpha, beta, 7);
        prop_assert_eq!(pf.eval(&x), pair_to_radial(&pf).eval(&x));
    }

    #[test]
    fn phi12_invariances(x in rational_vector(6), shift in 0usize..6) {
        let mut perm: Vec<usize> = (0..6).collect();
        perm.rotate_left(shift);
        perm.swap(0, 5);
        let base = eval_phi12(&x);
        prop_assert_eq!(eval_phi12(&permute(&x, &perm)), base.clone());
        prop_assert_eq!(eval_phi12(&-&x), base);
    }

    #[test]
    fn affine_lattice_ignores_generator_order(
        pts in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 2..7),
        rot in 0usize..6,
    ) {
        let pts: Vec<RationalVector> = pts.iter().map(|p| RationalVector::from_ints(p)).collect();
        let a = AffineLattice::from_points(&pts).unwrap();
        let mut shuffled = pts.clone();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let b = AffineLattice::from_points(&shuffled).unwrap();
        prop_assert!(a.same_lattice(&b));
        for p in &pts {
            prop_assert!(a.contains(p));
        }
    }
}

#[test]
fn m_is_small_and_one_rep_per_l() {
    for d in 3..=30 {
        for k in 1..=(d - 1) / 2 {
            let m = enumerate_m(d, k).unwrap();
            assert!(m.len() <= d + 1);
            let ls: BTreeSet<i64> = m.iter().map(|r| r.l).collect();
            assert_eq!(ls.len(), m.len(), "d={d} k={k}");
            assert!(m.iter().all(|r| r.parity() == 1 && r.in_window()));
            let d_i = d as i64;
            for r in &m {
                let h = r.l * r.n as i64 + r.a * d_i;
                assert!((0..d_i).contains(&h) || (r.l, r.a) == (0, 1));
            }
        }
    }
}

#[test]
fn ellipsoid_points_closed_under_symmetries() {
    for (d, s, k) in [(7, 1, 2), (8, 1, 2)] {
        let lat = ScaledLattice::for_family(d, k).unwrap();
        let f = as_inhom(&phi_main(d, s, k).unwrap(), &RationalVector::zeros(d), &q(0, 1));
        let level = f.eval(&construct_p(d, s, k, Normalization::Integral).unwrap().vertices[0]);
        // a little beyond the minimum so interior shells are included
        let bound = &level * q(3, 2);
        let pts = enumerate_in_ellipsoid(&lat.odd_class(), &f, &bound).unwrap();
        let set: BTreeSet<&RationalVector> = pts.iter().collect();
        let mut swap: Vec<usize> = (0..d).collect();
        swap.swap(0, d - 1);
        let cycle: Vec<usize> = (1..d).chain([0]).collect();
        for p in &pts {
            assert!(set.contains(&-p));
            assert!(set.contains(&permute(p, &swap)));
            assert!(set.contains(&permute(p, &cycle)));
        }
    }
}

#[test]
fn minimal_vectors_lie_in_m() {
    let forms = [(1, 1, 1, 1), (3, 7, 2, 3), (1, 5, 1, 1), (2, 1, 1, 3), (1, 20, 1, 1)];
    for d in [7usize, 8, 9] {
        let k = 2;
        let lat = ScaledLattice::for_family(d, k).unwrap();
        let m = enumerate_m(d, k).unwrap();
        let m_set: BTreeSet<(i64, i64)> = m.iter().map(|r| (r.l, r.a)).collect();
        for (ap, aq, bp, bq) in forms {
            let pf = PairForm::new(q(ap, aq), q(bp, bq), d);
            let f = as_inhom(&pf.to_radial(), &RationalVector::zeros(d), &q(0, 1));
            // the minimum over M bounds the minimum over the odd class
            let bound = m.iter().map(|r| pf.eval(&lat.point_of(r))).min().unwrap();
            let pts = enumerate_in_ellipsoid(&lat.odd_class(), &f, &bound).unwrap();
            let min = pts.iter().map(|p| f.eval(p)).min().unwrap();
            assert_eq!(min, bound, "d={d} form={pf:?}");
            for p in pts.iter().filter(|p| f.eval(p) == min) {
                let r = canonical_rep(p, &lat).unwrap();
                let rn = canonical_rep(&-p, &lat).unwrap();
                assert!(
                    m_set.contains(&(r.l, r.a)) || m_set.contains(&(rn.l, rn.a)),
                    "d={d}: minimal vector {p} not in ±M"
                );
            }
        }
    }
}

#[test]
fn phi_main_positive_definite_on_grid() {
    for k in 2..=4 {
        for s in 1..=3 {
            for d in k * (2 * s + 1) + 1..=24 {
                let f = phi_main(d, s, k).unwrap();
                assert!(f.gram().ldlt().unwrap().is_positive_definite(), "({d},{s},{k})");
            }
        }
    }
}

#[test]
fn one_two_family_coefficients() {
    for d in 6..=30i64 {
        let f = phi_main(d as usize + 1, 1, 2).unwrap();
        assert_eq!((f.a, f.b), (q(8 * (d - 5), 1), q(d * d - 9 * d + 22, 1)));
    }
}
