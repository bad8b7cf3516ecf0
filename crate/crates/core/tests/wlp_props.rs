use gt_core::exactmath::{rat, CycloField, Rational};
use gt_core::group::{act_on_polynomial, valid_a_values, GroupElement, GroupParams};
use gt_core::wlp::{
    apply_rational_matrix, multiplication_matrix, multiplication_rank, source_dim, source_vector, target_dim,
    witness_polynomials, witness_verify, wlp_failure_check, Quotient,
};
use proptest::prelude::*;

fn form(l: [i64; 3]) -> [Rational; 3] {
    l.map(rat)
}

#[test]
fn certificate_for_every_valid_a() {
    for d in 5..=8 {
        for a in valid_a_values(d) {
            let p = GroupParams::new(d, a).unwrap();
            let r = wlp_failure_check(&p, 11, 2).unwrap();
            assert!(r.certified, "d={d}, a={a}: {r:?}");
            assert!(witness_verify(&p, &form([3, -1, 4])).unwrap(), "d={d}, a={a}");
        }
    }
}

#[test]
fn witness_lies_in_the_kernel() {
    for d in 3..=6 {
        let p = GroupParams::with_default_a(d).unwrap();
        let field = CycloField::new(p.order());
        let l = form([2, 7, -5]);
        let (f, _) = witness_polynomials(&p, &l).unwrap();
        assert!(!f.is_zero());
        let m = multiplication_matrix(d, &l).unwrap();
        let v = source_vector(d, &f, &field);
        assert!(
            apply_rational_matrix(&m, &v, &field).iter().all(|x| x.is_zero()),
            "d={d}"
        );
        let (rank, kernel) = m.transpose().rank_and_kernel();
        assert_eq!(rank + kernel.len(), target_dim(d));
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank + kernel.len(), source_dim(d));
        assert!(!kernel.is_empty() && rank < source_dim(d).min(target_dim(d)), "d={d}");
    }
}

#[test]
fn rank_is_generic_below_bound() {
    for d in 3..=8 {
        let q = Quotient::new(d);
        let bound = source_dim(d).min(target_dim(d));
        for l in [[1, 1, 1], [5, 2, 9], [1, 0, 0], [0, 1, 0]] {
            assert!(multiplication_rank(d, &l, &q) < bound, "d={d}, l={l:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn product_is_invariant(d in 3u32..=6, l in prop::array::uniform3(-20i64..=20)) {
        prop_assume!(l != [0, 0, 0]);
        let p = GroupParams::with_default_a(d).unwrap();
        let (f, lf) = witness_polynomials(&p, &form(l)).unwrap();
        prop_assert!(!f.is_zero());
        for g in [GroupElement::TAU, GroupElement::ETA] {
            prop_assert_eq!(&act_on_polynomial(&g, &lf, &p).unwrap(), &lf);
        }
    }

    #[test]
    fn witness_independent_of_scaling(d in 3u32..=5, l in prop::array::uniform3(1i64..=30), k in 2i64..=9) {
        let p = GroupParams::with_default_a(d).unwrap();
        let scaled = l.map(|c| rat(c) / rat(k));
        prop_assert!(witness_verify(&p, &form(l)).unwrap());
        prop_assert!(witness_verify(&p, &scaled).unwrap());
    }
}
