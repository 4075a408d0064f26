mod common;

use common::suites::*;
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use toric_core::lattice::Lattice;
use toric_core::linalg::{gcd_maximal_minors, hnf, solve_right_factor, ExponentVector};
use toric_core::poly::{a_degree_check, binomial_from_vector, Poly};
use toric_core::toric::{
    finite_field_falsifier, is_projection, presentation, radical_criterion, CriterionOptions, FalsifierConfig, Verdict,
};

fn matrix(rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (Rows, usize)> {
    (rows, cols).prop_flat_map(|(r, c)| (prop::collection::vec(prop::collection::vec(-5i64..=5, c), r), Just(c)))
}

fn vector(len: usize, lo: i64, hi: i64) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(lo..=hi, len).prop_map(|v| ExponentVector::from_i64(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_form_and_kernel_agree_with_oracles((m, cols) in matrix(1..=5, 1..=6)) {
        check_hnf_kernel(&m, cols, 1).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn same_row_space_same_form((m, cols) in matrix(1..=4, 1..=5), u in prop::collection::vec(-2i64..=2, 16)) {
        // Left-multiply by a unimodular upper-triangular matrix.
        let r = m.len();
        let t: Rows = (0..r).map(|i| (0..r).map(|j| if i == j { 1 } else if j > i { u[(i * 4 + j) % 16] } else { 0 }).collect()).collect();
        let a = to_mat(&m, cols);
        let b = to_mat(&t, r).mul(&a).unwrap();
        prop_assert_eq!(hnf(&a), hnf(&b));
        prop_assert_eq!(gcd_maximal_minors(&a).ok(), gcd_maximal_minors(&b).ok());
    }

    #[test]
    fn rank_law_for_products((n, cols) in matrix(1..=3, 3..=6), d in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=3)) {
        let d: Rows = d.into_iter().map(|r| r[..n.len()].to_vec()).collect();
        check_rank_law(&n, &d, cols).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn right_factor_reproduces_target((n, cols) in matrix(1..=3, 1..=5), (m, _) in matrix(1..=3, 5..=5)) {
        let m: Rows = m.into_iter().map(|r| r[..cols].to_vec()).collect();
        let (nm, mm) = (to_mat(&n, cols), to_mat(&m, cols));
        match solve_right_factor(&nm, &mm).unwrap() {
            Some(d) => prop_assert!(d.mul_int(&nm).unwrap().equals_int(&mm)),
            None => prop_assert!(!is_projection(&nm, &mm).unwrap().sublattice_holds),
        }
        prop_assert!(is_projection(&nm, &mm).unwrap().consistent());
    }

    #[test]
    fn projection_bounds_heights((n, cols) in matrix(1..=3, 2..=6), d in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=3)) {
        let d: Rows = d.into_iter().map(|r| r[..n.len()].to_vec()).collect();
        let nm = to_mat(&n, cols);
        let mm = to_mat(&d, n.len()).mul(&nm).unwrap();
        prop_assume!(mm.zero_columns().is_empty() && nm.zero_columns().is_empty());
        prop_assert!(is_projection(&nm, &mm).unwrap().holds());
        prop_assert!(presentation(&nm).unwrap().height() <= presentation(&mm).unwrap().height());
    }

    #[test]
    fn binomial_split_reconstructs(z in vector(5, -6, 6)) {
        let b = binomial_from_vector(&z);
        prop_assert_eq!(b.plus().sub(b.minus()), z);
        prop_assert!(b.plus().is_nonnegative() && b.minus().is_nonnegative());
        prop_assert!(b.plus().support().iter().all(|i| !b.minus().support().contains(i)));
    }

    #[test]
    fn kernel_binomials_are_homogeneous((m, cols) in matrix(1..=3, 2..=6)) {
        let mm = to_mat(&m, cols);
        for u in toric_core::kernel_basis(&mm).basis_vectors() {
            let f = binomial_from_vector(&u).to_poly();
            prop_assert!(a_degree_check(&mm, &f).unwrap().is_some());
        }
    }

    #[test]
    fn power_steps(e in 0u32..5, c in -3i64..=3, x in 0i64..=3, y in 0i64..=3) {
        let p = Poly::from_terms(2, vec![
            (ExponentVector::from_i64(&[x, 0]), BigInt::from(c)),
            (ExponentVector::from_i64(&[0, y]), BigInt::from(-1)),
        ]).unwrap();
        prop_assert_eq!(&p.power(e) * &p, p.power(e + 1));
    }

    #[test]
    fn binomial_powers_match_the_binomial_theorem(p in 1u64..15, q in 1u64..15, e in 0u64..8) {
        let f = Poly::parse(&format!("t1^{p} - t2^{q}"), 2).unwrap();
        prop_assert_eq!(f.power(e as u32), binomial_power(2, &[(0, p)], &[(1, q)], e));
    }

    #[test]
    fn sublattice_is_transitive(a in vector(3, -4, 4), b in vector(3, -4, 4), k in 1i64..4, j in 1i64..4) {
        let l1 = Lattice::from_generators(3, [a.scale(&BigInt::from(k * j)), b.scale(&BigInt::from(k * j))]).unwrap();
        let l2 = Lattice::from_generators(3, [a.scale(&BigInt::from(k)), b.scale(&BigInt::from(k))]).unwrap();
        let l3 = Lattice::from_generators(3, [a.clone(), b.clone()]).unwrap();
        prop_assert!(l1.is_sublattice(&l2).unwrap() && l2.is_sublattice(&l3).unwrap());
        prop_assert!(l1.is_sublattice(&l3).unwrap());
    }

    #[test]
    fn falsifier_is_silent_on_identical_systems(seed in any::<u64>(), exps in prop::collection::vec(0i64..=3, 6)) {
        let g = Poly::from_terms(3, vec![
            (ExponentVector::from_i64(&exps[..3]), BigInt::from(1)),
            (ExponentVector::from_i64(&exps[3..]), BigInt::from(-1)),
        ]).unwrap();
        let cfg = FalsifierConfig { seed, ..FalsifierConfig::default() };
        for q in [2, 3, 5] {
            prop_assert_eq!(finite_field_falsifier(std::slice::from_ref(&g), std::slice::from_ref(&g), q, &cfg).unwrap(), None);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn saturation_matches_inverse_denominators(
        l0 in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 2),
        c in prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 2),
        p in prop::sample::select(vec![2u64, 3, 5]),
    ) {
        let lr: Vec<Vec<i128>> = l0.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let cr: Vec<Vec<i128>> = c.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        prop_assume!(rank_q(&lr) == 2 && rank_q(&cr) == 2);
        check_saturation(&l0, &c, 3, p).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn zero_patterns_match_exhaustive_search(
        ambient in 1usize..=5,
        raw in prop::collection::vec((prop::collection::vec(0i64..=2, 5), prop::collection::vec(0i64..=2, 5)), 0..=3),
        forced in 0usize..5,
    ) {
        prop_assume!(forced < ambient);
        let gens: Vec<Poly> = raw
            .iter()
            .filter(|(u, v)| u[..ambient] != v[..ambient])
            .map(|(u, v)| &Poly::monomial(ExponentVector::from_i64(&u[..ambient]), 1) - &Poly::monomial(ExponentVector::from_i64(&v[..ambient]), 1))
            .collect();
        check_patterns(&gens, ambient, forced).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn self_projection_always_holds((m, cols) in matrix(1..=2, 2..=4)) {
        let m: Rows = m.into_iter().map(|r| r.into_iter().map(i64::abs).collect()).collect();
        let mm = to_mat(&m, cols);
        prop_assume!(mm.zero_columns().is_empty());
        let gens: Vec<Poly> = toric_core::kernel_basis(&mm).basis_vectors().iter().map(|u| binomial_from_vector(u).to_poly()).collect();
        let report = radical_criterion(&mm, &mm, &gens, &[], &CriterionOptions::default()).unwrap();
        prop_assert_eq!(report.overall, Verdict::Holds);
    }
}
