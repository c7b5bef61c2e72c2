mod common;

use common::{evaluate_word, group_classes, word_strategy};
use neat_disks::groups::GroupDescription;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn run_axioms(g: &GroupDescription) {
    let n = g.generator_count();
    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        failure_persistence: None,
        ..Config::default()
    });
    let s = (word_strategy(n), word_strategy(n), word_strategy(n));
    runner
        .run(&s, |(u, v, w)| {
            let (a, b, c) = (evaluate_word(g, &u), evaluate_word(g, &v), evaluate_word(g, &w));
            let ab_c = g.multiply(&g.multiply(&a, &b).unwrap(), &c).unwrap();
            let a_bc = g.multiply(&a, &g.multiply(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(g.multiply(&a, &g.identity()).unwrap(), a.clone());
            prop_assert_eq!(g.multiply(&g.identity(), &a).unwrap(), a.clone());
            prop_assert!(g.is_identity(&g.multiply(&a, &g.invert(&a)).unwrap()));
            prop_assert!(g.is_identity(&g.multiply(&g.invert(&a), &a).unwrap()));
            Ok(())
        })
        .unwrap();
}

#[test]
fn group_axioms_per_class() {
    for (name, g) in group_classes() {
        g.validate().unwrap();
        eprintln!("axioms: {name}");
        run_axioms(&g);
    }
}

#[test]
fn normal_form_is_idempotent() {
    for (_, g) in group_classes() {
        let n = g.generator_count();
        let mut runner = TestRunner::new(Config {
            cases: 2_000,
            failure_persistence: None,
            ..Config::default()
        });
        runner
            .run(&word_strategy(n), |w| {
                let a = evaluate_word(&g, &w);
                let rebuilt = g.letters(&a).iter().fold(g.identity(), |acc, &(i, inv)| {
                    g.multiply(&acc, &g.generator_power(i, if inv { -1 } else { 1 }).unwrap())
                        .unwrap()
                });
                prop_assert_eq!(&rebuilt, &a);
                prop_assert_eq!(g.word_length(&a), g.letters(&a).len());
                prop_assert!(g.check(&a).is_ok());
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn free_group_ball_sizes() {
    for r in 1..=3usize {
        let names: Vec<String> = (0..r).map(|i| format!("x{i}")).collect();
        let g = GroupDescription::free(&names);
        for l in 0..=4usize {
            let expected: usize = 1 + (1..=l).map(|k| 2 * r * (2 * r - 1).pow(k as u32 - 1)).sum::<usize>();
            assert_eq!(g.enumerate(l).len(), expected, "rank {r}, length {l}");
        }
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for (_, g) in group_classes() {
        let e = g.enumerate(3);
        for w in e.windows(2) {
            assert_eq!(g.compare(&w[0], &w[1]), std::cmp::Ordering::Less);
        }
        assert!(g.is_identity(&e[0]));
    }
}

#[test]
fn depth_bound_is_enforced() {
    let mut g = GroupDescription::infinite_cyclic("t0");
    for i in 1..6 {
        g = GroupDescription::FreeProduct(vec![g, GroupDescription::infinite_cyclic(&format!("t{i}"))]);
    }
    assert!(g.validate().is_err());
}
