mod common;

use common::{b, companion_oracle};
use num_bigint::BigInt;
use proptest::prelude::*;
use trinom_core::trinomial::{coeff_A, trinomial_poly};
use trinom_core::{
    build_certificate, coeff_A_closed, coeff_A_recurrence, cofactor_Q, gf_coefficient_A,
    lucas_term, solve_k, verify_divides, FamilyPoint, Method, Poly,
};

fn a_of(k: i64, p: u64) -> BigInt {
    coeff_A_recurrence(&FamilyPoint::new(p, k).unwrap())
}

#[test]
fn three_routes_and_oracle_agree() {
    for p in [1u64, 3, 5, 7, 9, 11, 13] {
        for k in -50..=50 {
            let pt = FamilyPoint::new(p, k).unwrap();
            let oracle = companion_oracle(&b(k), p);
            assert_eq!(coeff_A_closed(&pt).unwrap(), oracle, "closed p={p} k={k}");
            assert_eq!(coeff_A_recurrence(&pt), oracle, "recurrence p={p} k={k}");
            assert_eq!(
                gf_coefficient_A(&b(k), p).unwrap(),
                oracle,
                "gf p={p} k={k}"
            );
        }
    }
}

#[test]
fn certificates_have_exactly_three_terms() {
    for p in [1u64, 3, 5, 7, 11, 13] {
        for k in -20..=20 {
            let pt = FamilyPoint::new(p, k).unwrap();
            let cert = build_certificate(&pt).unwrap();
            assert!(cert.verified);
            let product = cert.quadratic.mul(&cert.cofactor);
            let terms: Vec<(usize, BigInt)> = product
                .nonzero_terms()
                .map(|(j, c)| (j, c.clone()))
                .collect();
            let mut expect = vec![(0, b(1))];
            if cert.a != b(0) {
                expect.push((p as usize, -cert.a.clone()));
            }
            expect.push((2 * p as usize, b(1)));
            assert_eq!(terms, expect, "p={p} k={k}");
            assert!(cert.cofactor.is_palindromic());
            assert_eq!(cert.cofactor.degree(), Some(2 * p as usize - 2));
            for j in 0..p as usize {
                assert_eq!(
                    cert.cofactor.coeff(j),
                    lucas_term(&b(k), j as u64 + 2).unwrap()
                );
            }
        }
    }
}

#[test]
fn fixed_points_and_symmetry() {
    for p in (1u64..=41).step_by(2) {
        assert_eq!(a_of(2, p), b(2));
        assert_eq!(a_of(0, p), b(0));
        for k in -25..=25 {
            assert_eq!(a_of(-k, p), -a_of(k, p));
        }
        for k in 2..60 {
            assert!(a_of(k + 1, p) > a_of(k, p), "p={p} k={k}");
        }
    }
}

#[test]
fn inverse_roundtrip_grid() {
    for p in (1u64..=13).step_by(2) {
        for k in 0..=120 {
            assert_eq!(solve_k(&a_of(k, p), p).unwrap(), Some(b(k)), "p={p} k={k}");
        }
    }
}

#[test]
fn divisibility_oracle_flips_on_perturbation() {
    for p in [1u64, 3, 5, 7, 9, 11, 13] {
        for k in -30i64..=30 {
            let a = a_of(k, p);
            assert!(verify_divides(&a, p, &b(k)).unwrap());
            if k.abs() > 2 {
                assert!(!verify_divides(&(&a + 1), p, &b(k)).unwrap());
                assert!(!verify_divides(&(&a - 1), p, &b(k)).unwrap());
            }
        }
    }
}

#[test]
fn substitution_closure() {
    for p in [1u64, 3, 5, 7] {
        for k in -6..=6 {
            let cert = build_certificate(&FamilyPoint::new(p, k).unwrap()).unwrap();
            for t in 1..=4usize {
                let product = cert
                    .quadratic
                    .inflate(t)
                    .unwrap()
                    .mul(&cert.cofactor.inflate(t).unwrap());
                let tp = t * p as usize;
                let expect = Poly::monomial(1, 2 * tp)
                    .add(&Poly::monomial(-cert.a.clone(), tp))
                    .add(&Poly::one());
                assert_eq!(product, expect, "p={p} k={k} t={t}");
                if t == 1 {
                    assert_eq!(product, trinomial_poly(p, &cert.a));
                }
            }
        }
    }
}

#[test]
fn paper_example_cofactor() {
    let q = cofactor_Q(&FamilyPoint::new(5, 3).unwrap());
    assert_eq!(q.to_string(), "1,3,8,21,55,21,8,3,1");
}

proptest! {
    #[test]
    fn routes_agree_for_large_k(k in any::<i64>(), half in 0u64..25) {
        let p = 2 * half + 1;
        let pt = FamilyPoint::new(p, k).unwrap();
        let expect = coeff_A(&pt, Method::Recurrence).unwrap();
        prop_assert_eq!(coeff_A(&pt, Method::Closed).unwrap(), expect.clone());
        prop_assert_eq!(coeff_A(&pt, Method::Gf).unwrap(), expect);
    }

    #[test]
    fn solver_never_returns_a_false_witness(a in any::<i64>(), half in 0u64..7) {
        let p = 2 * half + 1;
        let a = b(a);
        if let Some(k) = solve_k(&a, p).unwrap() {
            prop_assert_eq!(coeff_A_recurrence(&FamilyPoint::new(p, k.clone()).unwrap()), a.clone());
            prop_assert!(verify_divides(&a, p, &k).unwrap());
        }
    }

    #[test]
    fn roundtrip_negative_k(k in 3i64..100_000, half in 0u64..7) {
        let p = 2 * half + 1;
        prop_assert_eq!(solve_k(&a_of(-k, p), p).unwrap(), Some(b(-k)));
    }
}
