mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use common::laurent;
use neat_disks::gamma::QuadraticData;
use neat_disks::groups::{GroupDescription, GroupElement};
use neat_disks::span::hermite_form;
use neat_disks::RingElement;
use num_bigint::BigInt;
use proptest::prelude::*;

fn data(seed: &[Vec<i64>]) -> QuadraticData {
    let g = Arc::new(GroupDescription::infinite_cyclic("t"));
    let n = 3;
    let labels: Vec<String> = (0..n).map(|i| format!("b{i}")).collect();
    let diag: Vec<RingElement> = (0..n).map(|i| laurent(&g, 1, &seed[i])).collect();
    let mut off = BTreeMap::new();
    for (k, (a, b)) in [(1, 0), (2, 0), (2, 1)].into_iter().enumerate() {
        off.insert((a, b), laurent(&g, -3, &seed[n + k]));
    }
    QuadraticData::new(g, labels, diag, off).unwrap()
}

fn data_strategy() -> impl Strategy<Value = QuadraticData> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 6).prop_map(|s| data(&s))
}

fn vec_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 3)
}

fn big(x: &[i64]) -> Vec<BigInt> {
    x.iter().map(|v| BigInt::from(*v)).collect()
}

fn red(r: &RingElement) -> RingElement {
    r.reduce_mod_antisymmetric().unwrap()
}

/// q(0) = 0 and q(y ± e) from q(y), the basis values and the pairing on basis vectors.
fn oracle(q: &QuadraticData, x: &[i64]) -> RingElement {
    let g = Arc::new(GroupDescription::infinite_cyclic("t"));
    let mut y = vec![0i64; x.len()];
    let mut acc = RingElement::zero(g);
    let pair_with = |y: &[i64], a: usize| {
        y.iter()
            .enumerate()
            .fold(RingElement::zero(Arc::new(GroupDescription::infinite_cyclic("t"))), |s, (b, c)| {
                &s + &q.beta(b, a).scale_i64(*c)
            })
    };
    for a in 0..x.len() {
        while y[a] != x[a] {
            if x[a] > y[a] {
                acc = &(&acc + q.diagonal(a)) + &pair_with(&y, a);
                y[a] += 1;
            } else {
                y[a] -= 1;
                acc = &(&acc - q.diagonal(a)) - &pair_with(&y, a);
            }
        }
    }
    red(&acc)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn matches_recursive_oracle(q in data_strategy(), x in vec_strategy()) {
        prop_assert_eq!(q.evaluate(&big(&x)).unwrap(), oracle(&q, &x));
    }

    #[test]
    fn polarization_is_bilinear(q in data_strategy(), x in vec_strategy(), y in vec_strategy(), z in vec_strategy()) {
        let p = |u: &[i64], v: &[i64]| {
            let s: Vec<i64> = u.iter().zip(v).map(|(a, b)| a + b).collect();
            red(&(&q.evaluate(&big(&s)).unwrap() - &(&q.evaluate(&big(u)).unwrap() + &q.evaluate(&big(v)).unwrap())))
        };
        let xy: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let yz: Vec<i64> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
        prop_assert_eq!(p(&xy, &z), red(&(&p(&x, &z) + &p(&y, &z))));
        prop_assert_eq!(p(&x, &yz), red(&(&p(&x, &y) + &p(&x, &z))));
        prop_assert_eq!(p(&x, &y), q.pairing(&big(&x), &big(&y)).unwrap());
    }

    #[test]
    fn negation_identity(q in data_strategy(), x in vec_strategy()) {
        let neg: Vec<i64> = x.iter().map(|v| -v).collect();
        let qx = q.evaluate(&big(&x)).unwrap();
        let qn = q.evaluate(&big(&neg)).unwrap();
        prop_assert_eq!(&qn, &oracle(&q, &neg));
        let beta = q.pairing(&big(&x), &big(&x)).unwrap();
        prop_assert_eq!(&qn, &red(&(&beta - &qx)));
        prop_assert_eq!(qn, qx);
    }

    #[test]
    fn generators_span_the_values(q in data_strategy()) {
        let gens = q.gamma_image_generators();
        let mut values = Vec::new();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    values.push(q.evaluate(&big(&[a, b, c])).unwrap());
                }
            }
        }
        let keys: BTreeSet<GroupElement> = gens.iter().chain(&values).flat_map(|r| r.support().cloned().collect::<Vec<_>>()).collect();
        let keys: Vec<GroupElement> = keys.into_iter().collect();
        let coords = |r: &RingElement| keys.iter().map(|k| r.coefficient(k)).collect::<Vec<BigInt>>();
        let n = keys.len();
        let lg = hermite_form(&gens.iter().map(coords).collect::<Vec<_>>(), n);
        let lv = hermite_form(&values.iter().map(coords).collect::<Vec<_>>(), n);
        for v in &values {
            prop_assert!(lg.contains(&coords(v)));
        }
        for g in &gens {
            prop_assert!(lv.contains(&coords(g)));
        }
    }
}
