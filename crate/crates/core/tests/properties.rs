use hgbern_core::congruence::{congruent, ordp, PadicVal};
use hgbern_core::contfrac::{approximation_defect, convergent_closed, convergent_rec};
use hgbern_core::hbnum::{classical, hb, hb_higher, hb_series, recurrence_residual};
use hgbern_core::hessenberg::ToeplitzHessenberg;
use hgbern_core::{HbKey, MemoStore, Rational, Route};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=30).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_applicable_route_matches_the_recurrence(big_n in 1u64..=6, r in 1usize..=3, n in 0usize..=11) {
        let key = HbKey::new(big_n, r, n).unwrap();
        let oracle = hb_higher(big_n, r, n).unwrap();
        for route in Route::ALL.into_iter().filter(|x| x.applies(&key)) {
            prop_assert_eq!(route.evaluate(&key).unwrap(), oracle.clone(), "{}", route);
        }
    }

    #[test]
    fn recurrence_residual_vanishes(big_n in 1u64..=8, r in 1usize..=4, n in 1usize..=12) {
        prop_assert!(recurrence_residual(big_n, r, n).unwrap().is_zero());
    }

    #[test]
    fn series_inverts_the_generating_function(big_n in 1u64..=6, order in 1usize..=10) {
        let s = hb_series(big_n, 1, order).unwrap();
        for (k, c) in s.coeffs().iter().enumerate() {
            let mut fact = Rational::one();
            for i in 1..=k {
                fact *= Rational::from(i);
            }
            prop_assert_eq!(c * &fact, hb(big_n, k).unwrap());
        }
    }

    #[test]
    fn convergents_agree(big_n in 1u64..=8, n in 0usize..=10) {
        let rec = convergent_rec(big_n, n).unwrap();
        prop_assert_eq!(&rec, &convergent_closed(big_n, n).unwrap());
        prop_assert!(approximation_defect(&rec).unwrap().is_zero());
    }

    #[test]
    fn trudi_equals_determinant(a0 in rational(), entries in prop::collection::vec(rational(), 0..=6)) {
        let s = ToeplitzHessenberg::new(a0, entries);
        prop_assert_eq!(s.trudi_expand(), s.det());
    }

    #[test]
    fn congruence_matches_valuation(a in rational(), b in rational(), k in 1u32..=4) {
        let v = congruent(&a, &b, 3, k).unwrap();
        let ord = ordp(&(&a - &b), 3).unwrap();
        prop_assert_eq!(v.holds, ord >= PadicVal::Finite(k as i64));
        prop_assert_eq!(v.ord_difference, ord);
    }
}

#[test]
fn classical_values() {
    let want = ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66"];
    for (n, w) in want.iter().enumerate() {
        assert_eq!(classical(n), w.parse::<Rational>().unwrap());
        assert_eq!(hb(1, n).unwrap(), classical(n));
    }
}

#[test]
fn memo_store_survives_a_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("values.cache");
    let store = MemoStore::open(&path).unwrap();
    for big_n in 1..=3 {
        for r in 1..=2 {
            store.get(HbKey::new(big_n, r, 9).unwrap()).unwrap();
        }
    }
    store.save().unwrap();
    let again = MemoStore::open(&path).unwrap();
    assert_eq!(again.len(), 60);
    assert_eq!(again.audit_all().unwrap(), 60);
    assert_eq!(again.keys(), store.keys());
    assert_eq!(again.peek(&HbKey::new(2, 1, 4).unwrap()), Some("-1/270".parse().unwrap()));
}
