//! Ready-made manifold data for the standard examples.

use std::sync::Arc;

use super::{empty_manifold, make_boundary_sum, make_connected_sum, ManifoldData, Pi2Class};
use crate::groupring::RingElement;
use crate::groups::GroupDescription;

fn with_dual_first(
    name: &str,
    group: Arc<GroupDescription>,
    labels: &[&str],
    lambda: Vec<Vec<RingElement>>,
) -> ManifoldData {
    let n = labels.len();
    let zero = RingElement::zero(group.clone());
    let mut dual = vec![zero.clone(); n];
    dual[0] = RingElement::one(group.clone());
    ManifoldData {
        name: name.into(),
        group: group.clone(),
        basis: labels.iter().map(|s| s.to_string()).collect(),
        lambda,
        mu2: vec![zero; n],
        dual: Pi2Class::from_coefficients(group, dual).expect("same group"),
        h3_tilde_zero: true,
        extra_dax_generators: vec![],
        assert_complete: false,
        boundary_s1xs2: false,
        separating_sphere: false,
        mu3_generators: vec![],
        w: Some(vec![0; n]),
    }
}

/// `(D²×S²) ♮ (S¹×D³)` with `G = 0×S²`.
pub fn boundary_sum_example() -> ManifoldData {
    let triv = Arc::new(GroupDescription::Trivial);
    let d2s2 = with_dual_first("D2xS2", triv.clone(), &["G"], vec![vec![RingElement::zero(triv)]]);
    let s1d3 = empty_manifold("S1xD3", GroupDescription::infinite_cyclic("t"));
    make_boundary_sum(&d2s2, &s1d3).expect("valid example")
}

/// `π₁ = Z/2` with `λ(a₁, a₂) = 1 - g` and `μ₂ = 0`, plus the dual `G`.
pub fn closed_dax_example() -> ManifoldData {
    let g = Arc::new(GroupDescription::cyclic("g", 2));
    let z = RingElement::zero(g.clone());
    let l = RingElement::parse(g.clone(), "1 - g").expect("literal");
    let lambda = vec![
        vec![z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), l.clone()],
        vec![z.clone(), l, z],
    ];
    let mut m = with_dual_first("closed-dax", g, &["G", "a1", "a2"], lambda);
    m.h3_tilde_zero = false;
    m.assert_complete = true;
    m
}

/// [`closed_dax_example`] with `S¹×S²` boundary, so every `g + g^-1` is in the Dax image.
pub fn closed_dax_s1xs2() -> ManifoldData {
    let mut m = closed_dax_example();
    m.name = "closed-dax-s1xs2".into();
    m.boundary_s1xs2 = true;
    m
}

/// Simply connected, basis `{G, a1, a2}` with `λ(a1, a2) = d`.
pub fn simply_connected_pair(d: i64) -> ManifoldData {
    let triv = Arc::new(GroupDescription::Trivial);
    let z = RingElement::zero(triv.clone());
    let l = RingElement::integer(triv.clone(), d);
    let lambda = vec![
        vec![z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), l.clone()],
        vec![z.clone(), l, z],
    ];
    with_dual_first("M1", triv, &["G", "a1", "a2"], lambda)
}

/// `M₁ # (S¹×D³)` with `λ(a1, a2) = 1` on `M₁` and `π₁` free on `g`.
pub fn non_abelian_example() -> ManifoldData {
    let m2 = empty_manifold("S1xD3", GroupDescription::free(&["g"]));
    let mut m = make_connected_sum(&simply_connected_pair(1), &m2).expect("valid example");
    m.name = "non-abelian".into();
    m
}
