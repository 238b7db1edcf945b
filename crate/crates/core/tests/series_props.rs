mod common;

use common::{b, closed_entry_oracle, companion_oracle};
use num_bigint::BigInt;
use proptest::prelude::*;
use trinom_core::trinomial::coeff_A;
use trinom_core::{gf_coefficient_A, FamilyPoint, Method, RiordanSpec, TruncatedSeries};

const ODD_P: [u64; 6] = [1, 3, 5, 7, 9, 11];

fn eval_row(row: &[BigInt], k: &BigInt) -> BigInt {
    row.iter().rev().fold(b(0), |acc, c| acc * k + c)
}

#[test]
fn row_sums_reproduce_gf_coefficient() {
    let spec = RiordanSpec::new(11);
    for p in ODD_P {
        let row = spec.row_poly(p).unwrap();
        assert_eq!(row.len(), p as usize + 1);
        for k in -10..=10 {
            let k = b(k);
            let gf = gf_coefficient_A(&k, p).unwrap();
            assert_eq!(eval_row(&row, &k), gf, "p={p} k={k}");
            assert_eq!(gf, companion_oracle(&k, p));
        }
    }
}

#[test]
fn gf_route_equals_recurrence_route() {
    for p in [1u64, 3, 5, 7, 9, 11, 13, 21] {
        for k in -30..=30 {
            let pt = FamilyPoint::new(p, k).unwrap();
            assert_eq!(
                coeff_A(&pt, Method::Gf).unwrap(),
                coeff_A(&pt, Method::Recurrence).unwrap(),
                "p={p} k={k}"
            );
        }
    }
}

#[test]
fn opposite_parity_entries_vanish() {
    let spec = RiordanSpec::new(20);
    for n in 0..=20 {
        for j in 0..=n + 2 {
            if (n + j) % 2 == 1 {
                assert_eq!(spec.entry(n, j).unwrap(), b(0), "d[{n},{j}]");
            }
        }
    }
}

#[test]
fn odd_columns_match_closed_binomial_entries() {
    let spec = RiordanSpec::new(11);
    for p in ODD_P {
        for i in 0..=(p - 1) / 2 {
            assert_eq!(
                spec.entry(p as usize, 2 * i as usize + 1).unwrap(),
                closed_entry_oracle(p, i),
                "p={p} i={i}"
            );
        }
    }
}

#[test]
fn diagonal_is_all_ones() {
    let spec = RiordanSpec::new(15);
    for n in 0..=15 {
        assert_eq!(spec.entry(n, n).unwrap(), b(1));
    }
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (
        prop::bool::ANY,
        prop::collection::vec(-20i64..=20, 0..12),
        0usize..12,
    )
        .prop_map(|(neg, tail, order)| {
            let head = if neg { -1 } else { 1 };
            TruncatedSeries::new(std::iter::once(head).chain(tail), order)
        })
}

proptest! {
    #[test]
    fn inverse_is_two_sided(a in unit_series()) {
        let inv = a.inverse().unwrap();
        let one = TruncatedSeries::one(a.order());
        prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&a).unwrap(), one);
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn quadratic_inverse_is_lucas_shift(k in -40i64..=40, order in 0usize..30) {
        let inv = TruncatedSeries::new([1, -k, 1], order).inverse().unwrap();
        let lucas = trinom_core::lucas_prefix(&b(k), order + 2);
        prop_assert_eq!(inv.coeffs(), &lucas[1..]);
    }
}
