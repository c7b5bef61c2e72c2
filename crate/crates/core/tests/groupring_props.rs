mod common;

use std::sync::Arc;

use common::{evaluate_word, word_strategy};
use neat_disks::groupring::InvolutionMode;
use neat_disks::groups::GroupDescription;
use neat_disks::RingElement;
use num_bigint::BigInt;
use proptest::prelude::*;

fn group() -> Arc<GroupDescription> {
    Arc::new(GroupDescription::free_product(vec![
        GroupDescription::cyclic("g", 2),
        GroupDescription::infinite_cyclic("t"),
    ]))
}

fn ring_strategy() -> impl Strategy<Value = RingElement> {
    let g = group();
    let n = g.generator_count();
    prop::collection::vec((word_strategy(n), -4i64..=4), 0..5).prop_map(move |terms| {
        RingElement::from_terms(
            g.clone(),
            terms.iter().map(|(w, c)| (evaluate_word(&g, w), BigInt::from(*c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in ring_strategy(), b in ring_strategy(), c in ring_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        let one = RingElement::one(a.group_arc().clone());
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn involution_is_an_anti_homomorphism(a in ring_strategy(), b in ring_strategy()) {
        prop_assert_eq!((&a * &b).bar(), &b.bar() * &a.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        let ext = a.involution(InvolutionMode::Extended);
        prop_assert!(ext.coefficient_at_one() == BigInt::from(0));
        prop_assert_eq!(ext, a.without_identity().bar());
    }

    #[test]
    fn norm_lands_in_sigma_fixed(a in ring_strategy()) {
        let n = a.without_identity().norm_map().unwrap();
        prop_assert!(n.is_sigma_fixed().unwrap());
        prop_assert!(n.reduce_to_f2_torsion().unwrap().is_zero());
    }

    #[test]
    fn antisymmetric_part_reduces_to_zero(a in ring_strategy()) {
        let a = a.without_identity();
        prop_assert!((&a - &a.bar()).reduce_mod_antisymmetric().unwrap().is_zero());
        let r = a.reduce_mod_antisymmetric().unwrap();
        prop_assert_eq!(r.reduce_mod_antisymmetric().unwrap(), r.clone());
        prop_assert_eq!(r.norm_map().unwrap(), a.norm_map().unwrap());
    }

    #[test]
    fn display_parses_back(a in ring_strategy()) {
        let text = a.to_string();
        prop_assert_eq!(RingElement::parse(a.group_arc().clone(), &text).unwrap(), a);
    }
}

#[test]
fn mixing_groups_is_an_error() {
    let a = RingElement::one(group());
    let b = RingElement::one(Arc::new(GroupDescription::infinite_cyclic("t")));
    assert!(a.try_add(&b).is_err());
    assert!(a.try_mul(&b).is_err());
}

#[test]
fn parse_errors_have_columns() {
    let g = Arc::new(GroupDescription::infinite_cyclic("t"));
    match RingElement::parse(g, "t + s") {
        Err(neat_disks::Error::Syntax { column, .. }) => assert_eq!(column, 5),
        other => panic!("{other:?}"),
    }
}
