//! Randomized invariants: every algebraic kernel is checked against an
//! independent formulation on generated inputs.

use catzeta::poly::{gcd_monic, series_exp, series_log, squarefree_decompose};
use catzeta::verify::lemma_suite;
use catzeta::zeta::{nerve_counts, zeta_series};
use catzeta::{FiniteCategory, Matrix, Poly, RationalMatrix, RationalPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    ((-5i64..=5).prop_filter("nonzero", |n| *n != 0), 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn int_matrix(max_n: usize, bound: i64) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        vec(-bound..=bound, n * n).prop_map(move |cells| {
            let rows: Vec<Vec<i64>> = cells.chunks(n).map(<[i64]>::to_vec).collect();
            Matrix::from_i64_rows(&rows)
        })
    })
}

fn rat_poly(max_len: usize) -> impl Strategy<Value = RationalPoly> {
    vec(rational(), 0..=max_len).prop_map(Poly::new)
}

fn nonzero_poly(max_extra: usize) -> impl Strategy<Value = RationalPoly> {
    (vec(rational(), 0..max_extra), nonzero_rational()).prop_map(|(mut coeffs, lead)| {
        coeffs.push(lead);
        Poly::new(coeffs)
    })
}

/// Reflexive relation on `{0, .., n-1}` that only relates `i <= j` upward,
/// closed under transitivity — always a valid partial order.
fn poset(max_n: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut leq = vec![vec![false; n]; n];
            let mut bits = bits.into_iter();
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
                for cell in row.iter_mut().skip(i + 1) {
                    *cell = bits.next().unwrap();
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if leq[i][k] && leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
            leq
        })
    })
}

proptest! {
    #[test]
    fn adjugate_satisfies_defining_identity(a in int_matrix(5, 4)) {
        let det = a.det().unwrap();
        let adj = a.adjugate().unwrap();
        let scaled_identity = Matrix::identity(a.rows()).scale(&det);
        prop_assert_eq!(adj.mul(&a).unwrap(), scaled_identity.clone());
        prop_assert_eq!(a.mul(&adj).unwrap(), scaled_identity);
    }

    #[test]
    fn determinant_is_multiplicative(
        (a, b) in (1usize..=4).prop_flat_map(|n| (int_matrix_fixed(n), int_matrix_fixed(n)))
    ) {
        let product = a.mul(&b).unwrap();
        prop_assert_eq!(product.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn coefficient_lemmas_hold_for_any_integer_matrix(a in int_matrix(5, 3)) {
        prop_assert!(lemma_suite(&a).unwrap().all_pass());
    }

    #[test]
    fn interpolation_reproduces_the_polynomial(p in rat_poly(6)) {
        let deg = p.degree().unwrap_or(0);
        let points: Vec<(BigRational, BigRational)> = (0..=deg as i64)
            .map(|t| {
                let node = rat(t, 1);
                let value = p.eval(&node);
                (node, value)
            })
            .collect();
        prop_assert_eq!(catzeta::poly::interpolate(&points), p);
    }

    #[test]
    fn division_with_remainder_reconstructs(a in rat_poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.degree() < b.degree());
        }
    }

    #[test]
    fn taylor_shift_translates_the_argument(
        p in rat_poly(6),
        c in rational(),
        x in rational(),
    ) {
        let shifted = p.taylor_shift(&c);
        prop_assert_eq!(shifted.eval(&x), p.eval(&(&x + &c)));
    }

    #[test]
    fn series_log_inverts_series_exp(tail in vec(rational(), 0..8)) {
        let mut a = vec![BigRational::zero()];
        a.extend(tail);
        let b = series_exp(&a).unwrap();
        prop_assert_eq!(series_log(&b).unwrap(), a);
    }

    #[test]
    fn squarefree_parts_are_coprime_and_reassemble(
        unit in nonzero_rational(),
        roots in vec((-2i64..=3, 1u32..=3), 1..=3),
    ) {
        let mut p = Poly::constant(unit);
        for (r, e) in &roots {
            let lin = Poly::new(vec![rat(-*r, 1), BigRational::one()]);
            p = &p * &lin.pow(*e);
        }
        let decomp = squarefree_decompose(&p).unwrap();
        prop_assert_eq!(decomp.reassemble(), p);
        for (i, f) in decomp.factors.iter().enumerate() {
            prop_assert!(f.multiplicity >= 1);
            if i > 0 {
                prop_assert!(f.multiplicity > decomp.factors[i - 1].multiplicity);
            }
            // Squarefree: coprime to its own derivative.
            prop_assert_eq!(gcd_monic(&f.poly, &f.poly.derivative()), Poly::one());
            for g in &decomp.factors[..i] {
                prop_assert_eq!(gcd_monic(&f.poly, &g.poly), Poly::one());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_counts_agree_across_three_formulations(leq in poset(5)) {
        let cat = FiniteCategory::from_poset(&leq).unwrap();
        let a: RationalMatrix = cat.adjacency_matrix();
        let dp = cat.enumerate_chains(4);
        prop_assert_eq!(&dp, &cat.enumerate_chains_literal(4));
        let from_matrix: Vec<BigRational> = nerve_counts(&a, 4).unwrap();
        let dp_rat: Vec<BigRational> = dp
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
            .collect();
        prop_assert_eq!(dp_rat, from_matrix.clone());

        // The series and its log stay consistent with the raw counts.
        let series = zeta_series(&a, 4).unwrap();
        let log = series_log(&series).unwrap();
        for (m, count) in from_matrix.iter().enumerate().skip(1) {
            prop_assert_eq!(&log[m] * rat(m as i64, 1), count.clone());
        }
    }

    #[test]
    fn every_poset_category_verifies_exactly(leq in poset(5)) {
        let cat = FiniteCategory::from_poset(&leq).unwrap();
        let report = catzeta::verify::verify_conjecture(&cat.adjacency_matrix(), 12, 1e-9).unwrap();
        prop_assert!(report.all_pass());
        // Poset adjacency matrices are unitriangular, so the whole spectrum
        // is the rational value 1 and everything stays exact.
        prop_assert!(report.exact_track);
        prop_assert_eq!(report.c1.max_rel_error, 0.0);
    }
}

fn int_matrix_fixed(n: usize) -> impl Strategy<Value = RationalMatrix> {
    vec(-3i64..=3, n * n).prop_map(move |cells| {
        let rows: Vec<Vec<i64>> = cells.chunks(n).map(<[i64]>::to_vec).collect();
        Matrix::from_i64_rows(&rows)
    })
}
