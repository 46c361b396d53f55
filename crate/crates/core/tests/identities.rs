use dirres::series::{
    binomial, eval_identity, g_expression, h_expression, s_expression, sweep_grid, SweepBounds,
};
use dirres::{Error, ExactRational, IdentityId};
use proptest::prelude::*;

fn any_identity() -> impl Strategy<Value = IdentityId> {
    proptest::sample::select(IdentityId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn identities_hold_at_sampled_grid_points(id in any_identity(), pick in any::<prop::sample::Index>()) {
        let grid = sweep_grid(id, &SweepBounds::default());
        let params = &grid[pick.index(grid.len())];
        let e = eval_identity(id, params).unwrap();
        prop_assert_eq!(e.lhs, e.rhs, "{} {:?}", id, params);
    }

    #[test]
    fn g_and_h_vanish(n in 0i64..=15, p in 0i64..=8) {
        prop_assert!(g_expression(n, p).is_zero());
        prop_assert!(h_expression(n, p).is_zero());
    }

    #[test]
    fn s_forms_agree(n in 1i64..=10, l in 1i64..=10) {
        let s = s_expression(n, l).unwrap();
        prop_assert_eq!(s.definition, s.simplified);
    }

    #[test]
    fn binomial_symmetry(n in 0i64..=60, k in 0i64..=60) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
    }

    #[test]
    fn rational_laws(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000, e in -1000i64..1000) {
        let (x, y, z) = (ExactRational::ratio(a, b), ExactRational::ratio(c, d), ExactRational::ratio(e, b + d));
        prop_assert_eq!((&x + &y) + &z, x.clone() + (&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x * &y) * &z, x.clone() * (&y * &z));
        prop_assert_eq!(x.clone() * (&y + &z), &x * &y + &x * &z);
    }
}

#[test]
fn every_identity_has_a_nonempty_default_grid() {
    for id in IdentityId::ALL {
        let grid = sweep_grid(id, &SweepBounds::default());
        assert!(!grid.is_empty(), "{id}");
        assert!(grid.iter().all(|p| p.len() == id.params().len()));
    }
}

#[test]
fn out_of_range_parameters_are_rejected() {
    assert_eq!(
        eval_identity(IdentityId::SumInt, &[0]),
        Err(Error::OutOfValidityRange { id: "SumInt".into(), params: vec![0] })
    );
    assert!(eval_identity(IdentityId::BinOddSumI, &[1]).is_err());
    assert!(eval_identity(IdentityId::SumInt, &[1, 2]).is_err());
}

#[test]
fn binomial_derivative_at_unit_points() {
    for n in 1..=12 {
        for x in [1, -1] {
            let e = eval_identity(IdentityId::BinomialDerivative, &[n, x, 1]).unwrap();
            assert_eq!(e.lhs, e.rhs);
        }
        let at_one = eval_identity(IdentityId::BinomialDerivative, &[n, 1, 1]).unwrap();
        assert_eq!(at_one.lhs, ExactRational::from_int(n) * ExactRational::pow2(n - 1));
    }
}
