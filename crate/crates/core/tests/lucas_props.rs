mod common;

use common::b;
use num_bigint::BigInt;
use proptest::prelude::*;
use trinom_core::{lucas_prefix, lucas_term, lucas_term_fast, LucasSeq};

#[test]
fn fast_matches_iterative_on_grid() {
    for k in -20..=20 {
        let k = b(k);
        let prefix = lucas_prefix(&k, 200);
        for i in 1..=200u64 {
            let slow = lucas_term(&k, i).unwrap();
            assert_eq!(lucas_term_fast(&k, i).unwrap(), slow, "k={k} i={i}");
            assert_eq!(prefix[i as usize - 1], slow);
        }
    }
}

#[test]
fn k_one_has_period_six() {
    let expect = common::ints(&[0, 1, 1, 0, -1, -1]);
    let prefix = lucas_prefix(&b(1), 60);
    for (i, v) in prefix.iter().enumerate() {
        assert_eq!(*v, expect[i % 6]);
    }
}

proptest! {
    #[test]
    fn prefix_satisfies_recurrence(k in -1000i64..=1000, n in 1usize..80) {
        let k = b(k);
        let a = lucas_prefix(&k, n);
        prop_assert_eq!(a.len(), n);
        prop_assert_eq!(&a[0], &b(0));
        if n > 1 {
            prop_assert_eq!(&a[1], &b(1));
        }
        for w in a.windows(3) {
            prop_assert_eq!(&w[2], &(&k * &w[1] - &w[0]));
        }
    }

    #[test]
    fn sign_symmetry(k in -50i64..=50, i in 1u64..120) {
        let pos = lucas_term(&b(k), i).unwrap();
        let neg = lucas_term(&b(-k), i).unwrap();
        let expect = if i % 2 == 0 { pos } else { -pos };
        prop_assert_eq!(neg, expect);
    }

    #[test]
    fn identity_bridge(k in -60i64..=60, half in 0u64..40) {
        let p = 2 * half + 1;
        let seq = LucasSeq::new(k);
        let kb = b(k);
        let lhs = &kb * seq.term(p + 1).unwrap() - seq.term(p).unwrap() * 2;
        let rhs = seq.term(p + 2).unwrap() - seq.term(p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fast_path_on_wide_parameters(k in any::<i64>(), i in 1u64..400) {
        let k = BigInt::from(k);
        prop_assert_eq!(lucas_term_fast(&k, i).unwrap(), lucas_term(&k, i).unwrap());
    }
}
