use peakalg::algebra::{rat, AlgebraElement};
use peakalg::combinatorics::{Composition, IndexSet};
use peakalg::io::{parse_nsf, parse_qsym, ElementJson};
use peakalg::peak::{theta_minus1, theta_q};
use peakalg::sym::{pairing, NsfBasis, NsfElement, QsymBasis, QsymElement};
use proptest::prelude::*;

fn composition() -> impl Strategy<Value = Composition> {
    (1usize..=4).prop_flat_map(|n| {
        (0..1u64 << (n - 1)).prop_map(move |bits| Composition::from_descents(&IndexSet::from_bits(n, bits), n).unwrap())
    })
}

fn terms() -> impl Strategy<Value = AlgebraElement<Composition>> {
    prop::collection::vec((composition(), -3i64..=3, 1i64..=2), 0..4).prop_map(|ts| {
        let mut x = AlgebraElement::zero();
        for (i, a, b) in ts {
            x.add_term(i, peakalg::algebra::ratio(a, b));
        }
        x
    })
}

fn nsf() -> impl Strategy<Value = NsfElement> {
    (terms(), any::<bool>()).prop_map(|(t, r)| NsfElement::from_terms(if r { NsfBasis::R } else { NsfBasis::S }, t))
}

fn qsym() -> impl Strategy<Value = QsymElement> {
    (terms(), any::<bool>()).prop_map(|(t, f)| QsymElement::from_terms(if f { QsymBasis::F } else { QsymBasis::M }, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_changes_are_inverse(x in nsf(), g in qsym()) {
        prop_assert!(x.to_s().to_r().same_as(&x));
        prop_assert_eq!(g.to_m().to_f().terms().clone(), g.to_f().terms().clone());
    }

    #[test]
    fn ncsf_product_is_associative(x in nsf(), y in nsf(), z in nsf()) {
        prop_assert!(x.product(&y).product(&z).same_as(&x.product(&y.product(&z))));
    }

    #[test]
    fn qsym_product_is_commutative(g in qsym(), h in qsym()) {
        prop_assert_eq!(g.product(&h).to_f().terms().clone(), h.product(&g).to_f().terms().clone());
    }

    #[test]
    fn pairing_is_bilinear(g in qsym(), x in nsf(), y in nsf()) {
        prop_assert_eq!(pairing(&g, &x.add(&y)), pairing(&g, &x) + pairing(&g, &y));
    }

    // θ_q is a ring endomorphism of NCSF
    #[test]
    fn theta_is_multiplicative(x in nsf(), y in nsf()) {
        prop_assert!(theta_minus1(&x.product(&y)).same_as(&theta_minus1(&x).product(&theta_minus1(&y))));
        let q = rat(3);
        prop_assert!(theta_q(&x.product(&y), &q).same_as(&theta_q(&x, &q).product(&theta_q(&y, &q))));
    }

    #[test]
    fn text_and_json_round_trip(x in nsf(), g in qsym()) {
        prop_assert!(parse_nsf(&x.to_string()).unwrap().same_as(&x));
        prop_assert_eq!(parse_qsym(&g.to_string()).unwrap().to_f().terms().clone(), g.to_f().terms().clone());
        let json = ElementJson::from(&x).to_json();
        prop_assert!(ElementJson::from_json(&json).unwrap().to_nsf().unwrap().same_as(&x));
        let json = ElementJson::from(&g).to_json();
        prop_assert_eq!(ElementJson::from_json(&json).unwrap().to_qsym().unwrap().terms().clone(), g.terms().clone());
    }
}
