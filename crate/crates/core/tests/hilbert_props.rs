mod common;

use common::*;
use gt_core::exactmath::rat;
use gt_core::group::{valid_a_values, GroupParams};
use gt_core::hilbert::{hf_closed, hilbert_series, mu};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn three_way_equality() {
    for d in 3..=10 {
        for a in valid_a_values(d) {
            let p = GroupParams::new(d, a).unwrap();
            for t in 1..=3 {
                hf_three_way(&p, t).unwrap();
            }
        }
    }
}

#[test]
fn series_expands_to_hilbert_function() {
    for d in 3..=50 {
        let h = hilbert_series(d).unwrap();
        let coeffs = h.series_coefficients(12);
        for (t, c) in coeffs.iter().enumerate() {
            assert_eq!(*c, BigInt::from(hf_closed(d, t as u32)), "d={d}, t={t}");
        }
        assert_eq!(hf_closed(d, 1), mu(d) as u64);
    }
}

proptest! {
    #[test]
    fn polynomial_equals_function(d in 3u32..=200, t in 0u32..=1000) {
        let h = hilbert_series(d).unwrap();
        prop_assert_eq!(h.hp(&rat(t as i64)), rat(hf_closed(d, t) as i64));
    }

    #[test]
    fn numerator_at_one_is_degree(d in 3u32..=500) {
        let h = hilbert_series(d).unwrap();
        prop_assert_eq!(h.hs_numerator.eval(&BigInt::from(1)), BigInt::from(2 * d));
    }
}
