#![allow(dead_code)]

use std::sync::Arc;

use neat_disks::groups::{GroupDescription, GroupElement};
use neat_disks::manifold::{
    boundary_sum_example, closed_dax_example, make_mc, non_abelian_example, ManifoldData, Pi2Class,
};
use neat_disks::{DiskClass, DiskGroup, RingElement};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

/// One representative per supported description class.
pub fn group_classes() -> Vec<(&'static str, GroupDescription)> {
    vec![
        ("trivial", GroupDescription::trivial()),
        ("free-abelian", GroupDescription::free_abelian(&["x", "y"])),
        ("cyclic", GroupDescription::cyclic("g", 5)),
        ("free", GroupDescription::free(&["a", "b"])),
        (
            "direct-product",
            GroupDescription::direct_product(vec![GroupDescription::cyclic("g", 2), GroupDescription::infinite_cyclic("t")]),
        ),
        (
            "free-product",
            GroupDescription::free_product(vec![GroupDescription::cyclic("g", 2), GroupDescription::infinite_cyclic("t")]),
        ),
        (
            "nested",
            GroupDescription::free_product(vec![
                GroupDescription::direct_product(vec![GroupDescription::cyclic("h", 3), GroupDescription::infinite_cyclic("s")]),
                GroupDescription::free(&["u"]),
            ]),
        ),
    ]
}

/// Random words as `(generator index, exponent)` pairs.
pub fn word_strategy(generators: usize) -> BoxedStrategy<Vec<(usize, i64)>> {
    if generators == 0 {
        return Just(vec![]).boxed();
    }
    prop::collection::vec((0..generators, -3i64..=3), 0..8).boxed()
}

pub fn evaluate_word(g: &GroupDescription, w: &[(usize, i64)]) -> GroupElement {
    w.iter().fold(g.identity(), |acc, &(i, e)| {
        g.multiply(&acc, &g.generator_power(i, e).unwrap()).unwrap()
    })
}

pub fn zt() -> Arc<GroupDescription> {
    Arc::new(GroupDescription::infinite_cyclic("t"))
}

pub fn lit(g: &Arc<GroupDescription>, s: &str) -> RingElement {
    RingElement::parse(g.clone(), s).unwrap()
}

/// Laurent polynomial from coefficients at exponents `lo..`.
pub fn laurent(g: &Arc<GroupDescription>, lo: i64, coeffs: &[i64]) -> RingElement {
    RingElement::from_terms(
        g.clone(),
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| (g.generator_power(0, lo + k as i64).unwrap(), BigInt::from(*c))),
    )
}

/// Random element of `Z[π]` supported on the ball of the given radius.
pub fn random_ring<R: Rng>(rng: &mut R, g: &Arc<GroupDescription>, radius: usize, terms: usize, bound: i64) -> RingElement {
    let ball = g.enumerate(radius);
    let mut out = RingElement::zero(g.clone());
    for _ in 0..rng.gen_range(0..=terms) {
        let e = ball[rng.gen_range(0..ball.len())].clone();
        let c = rng.gen_range(-bound..=bound);
        out = &out + &RingElement::monomial(g.clone(), e, c);
    }
    out
}

pub fn random_class<R: Rng>(rng: &mut R, m: &ManifoldData, radius: usize) -> Pi2Class {
    let coeffs = (0..m.rank()).map(|_| random_ring(rng, &m.group, radius, 2, 2)).collect();
    Pi2Class::from_coefficients(m.group.clone(), coeffs).unwrap()
}

pub fn random_disk<R: Rng>(rng: &mut R, dg: &DiskGroup, radius: usize) -> DiskClass {
    let m = dg.manifold();
    let k = random_ring(rng, &m.group, radius, 3, 3);
    dg.element(k, random_class(rng, m, radius)).unwrap()
}

/// The four fixtures used for group-law checks.
pub fn fixtures() -> Vec<ManifoldData> {
    vec![
        boundary_sum_example(),
        closed_dax_example(),
        non_abelian_example(),
        make_mc(&[(1, 1)], 0).unwrap(),
    ]
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Quotient `Z^n / rowspan` by enumeration: the number of all-zero columns,
/// and `|Q_tors[k]|` for `k = 1..=D`, where `D` is the exponent bound used.
/// Panics unless the nonzero columns carry a finite quotient.
pub fn brute_force_quotient(rows: &[Vec<i64>], n: usize) -> (usize, Vec<usize>) {
    let live: Vec<usize> = (0..n).filter(|&j| rows.iter().any(|r| r[j] != 0)).collect();
    let free = n - live.len();
    let m: Vec<Vec<i64>> = rows.iter().map(|r| live.iter().map(|&j| r[j]).collect()).collect();
    let d = live.len();
    let big = subsets(m.len(), d)
        .into_iter()
        .map(|s| det(&s.iter().map(|&i| m[i].clone()).collect::<Vec<_>>()).abs())
        .filter(|v| *v != 0)
        .min()
        .expect("finite quotient on the live columns");
    let modulus = big as usize;
    let total = modulus.pow(d as u32);
    assert!(total <= 200_000, "oracle too large");
    let encode = |v: &[usize]| v.iter().fold(0usize, |acc, x| acc * modulus + x);
    let decode = |mut c: usize| {
        let mut v = vec![0usize; d];
        for k in (0..d).rev() {
            v[k] = c % modulus;
            c /= modulus;
        }
        v
    };
    let gens: Vec<Vec<usize>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(big) as usize).collect())
        .collect();
    let mut seen = vec![false; total];
    seen[0] = true;
    let mut queue = vec![0usize];
    while let Some(c) = queue.pop() {
        let v = decode(c);
        for g in &gens {
            let w: Vec<usize> = v.iter().zip(g).map(|(a, b)| (a + b) % modulus).collect();
            let e = encode(&w);
            if !seen[e] {
                seen[e] = true;
                queue.push(e);
            }
        }
    }
    let lattice = seen.iter().filter(|s| **s).count();
    let counts = (1..=modulus)
        .map(|k| {
            (0..total)
                .filter(|&c| {
                    let v: Vec<usize> = decode(c).iter().map(|x| x * k % modulus).collect();
                    seen[encode(&v)]
                })
                .count()
                / lattice
        })
        .collect();
    (free, counts)
}

/// `|Q[k]|` predicted by invariant factors.
pub fn predicted_counts(torsion: &[BigInt], upto: usize) -> Vec<usize> {
    use num_integer::Integer;
    (1..=upto)
        .map(|k| {
            torsion
                .iter()
                .map(|t| {
                    let t: usize = t.try_into().unwrap();
                    t.gcd(&k)
                })
                .product()
        })
        .collect()
}
