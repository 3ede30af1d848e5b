use coxring::hopf_b::{basis, Monomial};
use coxring::hopf_d::{self, basis_d, ChargedMonomial, Charge};
use coxring::quillen::quillen_map_b;
use coxring::{ElementB, ElementD};
use proptest::prelude::*;
use proptest::sample::Index;

fn pick_b(n: u32, d: u32, i: Index) -> Option<Monomial> {
    let b = basis(n, d);
    (!b.is_empty()).then(|| b[i.index(b.len())].clone())
}

fn mono_b(max_n: u32, max_d: u32) -> impl Strategy<Value = ElementB> {
    (0..=max_n, 0..=max_d, any::<Index>()).prop_filter_map("empty basis", |(n, d, i)| pick_b(n, d, i).map(ElementB::from))
}

/// Two basis monomials of the same component.
fn pair_b(max_n: u32, max_d: u32) -> impl Strategy<Value = (ElementB, ElementB)> {
    (1..=max_n, 0..=max_d, 0..=max_d, any::<Index>(), any::<Index>()).prop_filter_map("empty basis", |(n, d, e, i, j)| {
        Some((ElementB::from(pick_b(n, d, i)?), ElementB::from(pick_b(n, e, j)?)))
    })
}

fn signed_d(max_n: u32, max_d: u32) -> impl Strategy<Value = ElementD> {
    (1..=max_n, 0..=max_d, any::<Index>()).prop_filter_map("no signed class", |(n, d, i)| {
        let b: Vec<ChargedMonomial> = basis_d(n, d).into_iter().filter(|m| m.charge() != Charge::Neutral).collect();
        (!b.is_empty()).then(|| ElementD::from(b[i.index(b.len())].clone()))
    })
}

fn mono_d(max_n: u32, max_d: u32) -> impl Strategy<Value = ElementD> {
    (2..=max_n, 0..=max_d, any::<Index>()).prop_filter_map("empty basis", |(n, d, i)| {
        let b = basis_d(n, d);
        (!b.is_empty()).then(|| ElementD::from(b[i.index(b.len())].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transfer_product_is_commutative_and_associative(x in mono_b(3, 4), y in mono_b(3, 4), z in mono_b(2, 3)) {
        prop_assert_eq!(x.odot(&y), y.odot(&x));
        prop_assert_eq!(x.odot(&y).odot(&z), x.odot(&y.odot(&z)));
    }

    #[test]
    fn coproduct_is_multiplicative_for_the_transfer_product(x in mono_b(3, 4), y in mono_b(3, 4)) {
        let lhs = x.odot(&y).coproduct();
        let rhs = x.coproduct().combine(&y.coproduct(), ElementB::odot);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cup_product_is_commutative_and_respects_the_coproduct((x, y) in pair_b(4, 4)) {
        let xy = x.cup(&y);
        prop_assert_eq!(&xy, &y.cup(&x));
        prop_assert_eq!(xy.coproduct(), x.coproduct().combine(&y.coproduct(), ElementB::cup));
    }

    #[test]
    fn restriction_is_multiplicative((x, y) in pair_b(4, 4)) {
        let n = x.terms().next().unwrap().component();
        let lhs = quillen_map_b(&x.cup(&y), n).unwrap();
        let rhs = quillen_map_b(&x, n).unwrap().mul(&quillen_map_b(&y, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transfer_kills_restrictions(x in mono_b(5, 6)) {
        prop_assert!(hopf_d::rho(&x).tr().is_zero());
    }

    #[test]
    fn signed_classes_absorb_restrictions(b in signed_d(3, 4), y in mono_b(3, 4)) {
        prop_assert_eq!(b.odot(&hopf_d::rho(&y)), hopf_d::rho(&b.tr().odot(&y)));
    }

    #[test]
    fn iota_is_an_involutive_cup_automorphism(x in mono_d(4, 4), y in mono_d(4, 4)) {
        prop_assert_eq!(x.iota().iota(), x.clone());
        prop_assert_eq!(x.iota().tr(), x.tr());
        prop_assert_eq!(x.cup(&y).iota(), x.iota().cup(&y.iota()));
    }
}
