mod common;

use common::{brute_force_quotient, laurent, predicted_counts, zt};
use neat_disks::span::{hermite_form, smith_invariants, Ambient, Membership};
use neat_disks::{RingElement, SubgroupSpan};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, cols), 0..=max_rows)
}

fn big_rows(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|v| BigInt::from(*v)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hermite_preserves_span(cols in 1usize..5, seed in matrix(5, 4, 6)) {
        let rows: Vec<Vec<i64>> = seed.iter().map(|r| r[..cols].to_vec()).collect();
        let rows = big_rows(&rows);
        let h = hermite_form(&rows, cols);
        for r in &rows {
            prop_assert!(h.contains(r));
            let coeffs = h.solve(r).unwrap();
            let mut acc = vec![BigInt::zero(); cols];
            for (c, row) in coeffs.iter().zip(&rows) {
                for (a, v) in acc.iter_mut().zip(row) {
                    *a += c * v;
                }
            }
            prop_assert_eq!(&acc, r);
        }
        for (b, t) in h.basis.iter().zip(&h.transform) {
            let mut acc = vec![BigInt::zero(); cols];
            for (c, row) in t.iter().zip(&rows) {
                for (a, v) in acc.iter_mut().zip(row) {
                    *a += c * v;
                }
            }
            prop_assert_eq!(&acc, b);
        }
        for (k, &p) in h.pivots.iter().enumerate() {
            prop_assert!(h.basis[k][p].is_positive());
            for above in &h.basis[..k] {
                prop_assert!(!above[p].is_negative() && above[p] < h.basis[k][p]);
            }
        }
        let again = hermite_form(&h.basis, cols);
        prop_assert_eq!(again.basis, h.basis);
    }

    #[test]
    fn smith_matches_enumeration(n in 1usize..=3, seed in matrix(4, 3, 4)) {
        let rows: Vec<Vec<i64>> = seed.iter().map(|r| r[..n].to_vec()).collect();
        let s = smith_invariants(&big_rows(&rows), n);
        let live = (0..n).filter(|&j| rows.iter().any(|r| r[j] != 0)).count();
        prop_assume!(s.free_rank() == n - live);
        let order: BigInt = s.torsion().iter().product();
        prop_assume!(order <= BigInt::from(12));
        let (free, counts) = brute_force_quotient(&rows, n);
        prop_assert_eq!(free, s.free_rank());
        prop_assert_eq!(counts.clone(), predicted_counts(&s.torsion(), counts.len()));
    }

    #[test]
    fn membership_certificates_reconstruct(coeffs in prop::collection::vec(-3i64..=3, 5), extra in -2i64..=2) {
        let g = zt();
        let f = laurent(&g, 1, &[-1, 1]);
        let m = neat_disks::manifold::make_mc(&[(-1, 1), (1, 2)], 0).unwrap();
        let span = m.dax_image_span();
        let mut x = RingElement::zero(g.clone());
        for (k, c) in coeffs.iter().enumerate() {
            let shift = laurent(&g, k as i64, &[1]);
            x = &x + &(&shift * &f).norm_map().unwrap().scale_i64(*c);
        }
        match span.membership(&x, 10).unwrap() {
            Membership::In(cert) => {
                let mut acc = RingElement::zero(g.clone());
                for (r, c) in &cert {
                    acc = &acc + &r.scale(c);
                }
                prop_assert_eq!(acc, x.clone());
            }
            other => prop_assert!(false, "{x}: {other:?}"),
        }
        let y = &x + &laurent(&g, 1, &[extra]).norm_map().unwrap();
        let verdict = span.membership(&y, 10).unwrap();
        prop_assert_eq!(verdict.is_in(), extra == 0);
    }

    #[test]
    fn principal_ideal_towers(n in 1i64..=4, m in 1u32..=3) {
        let g = zt();
        let mut coeffs = vec![0i64; m as usize];
        coeffs[m as usize - 1] = n;
        let span = SubgroupSpan::principal_ideal(laurent(&g, 1, &coeffs)).unwrap();
        for window in [6usize, 10] {
            let q = span.quotient_structure(Ambient::Positive, window).unwrap();
            prop_assert_eq!(q.free_rank, m as usize - 1);
            let expect = if n == 1 { 0 } else { window + 1 - m as usize };
            prop_assert_eq!(q.torsion.len(), expect);
            prop_assert!(q.torsion.iter().all(|d| *d == BigInt::from(n)));
            prop_assert!(q.stable);
        }
    }
}

#[test]
fn membership_window_too_small_is_reported() {
    let g = zt();
    let mut span = SubgroupSpan::zero(g.clone());
    span.add_core(laurent(&g, 1, &[0, 0, 0, 0, 0, 1]).norm_map().unwrap()).unwrap();
    assert!(span.quotient_structure(Ambient::SigmaFixed, 3).is_err());
}
