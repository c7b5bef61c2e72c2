//! Declarative manifold data `(M, k, G)` and the Dax formulas built from
//! `λ` and `μ₂`.

mod catalog;

pub use catalog::{
    boundary_sum_example, closed_dax_example, closed_dax_s1xs2, non_abelian_example, simply_connected_pair,
};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gamma::QuadraticData;
use crate::groupring::{F2TorsionElement, RingElement};
use crate::groups::{GroupDescription, GroupElement};
use crate::span::{ClosureRule, Completeness, Direction, SubgroupSpan, TranslateFamily};

/// An element of `π₂M`, as coefficients over the module basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pi2Class {
    group: Arc<GroupDescription>,
    coeffs: Vec<RingElement>,
}

impl Pi2Class {
    pub fn zero(group: Arc<GroupDescription>, rank: usize) -> Self {
        Pi2Class {
            coeffs: vec![RingElement::zero(group.clone()); rank],
            group,
        }
    }

    pub fn basis(group: Arc<GroupDescription>, rank: usize, i: usize) -> Self {
        let mut c = Self::zero(group.clone(), rank);
        c.coeffs[i] = RingElement::one(group);
        c
    }

    pub fn from_coefficients(group: Arc<GroupDescription>, coeffs: Vec<RingElement>) -> Result<Self> {
        if coeffs.iter().any(|r| r.group() != &*group) {
            return Err(Error::GroupMismatch("π₂ coefficient over another group".into()));
        }
        Ok(Pi2Class { group, coeffs })
    }

    pub fn group_arc(&self) -> &Arc<GroupDescription> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, i: usize) -> &RingElement {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| r.is_zero())
    }

    pub fn add(&self, other: &Pi2Class) -> Pi2Class {
        Pi2Class {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Pi2Class) -> Pi2Class {
        Pi2Class {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Pi2Class {
        Pi2Class {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// `r · self` for the left module structure.
    pub fn scale(&self, r: &RingElement) -> Pi2Class {
        Pi2Class {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| r * a).collect(),
        }
    }

    pub fn translate(&self, g: &GroupElement) -> Pi2Class {
        Pi2Class {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a.left_translate(g)).collect(),
        }
    }

    /// Terms over the `Z`-basis `{g · b_i}`, ordered by `(i, g)`.
    pub fn z_terms(&self) -> Vec<(usize, GroupElement, BigInt)> {
        let mut out = Vec::new();
        for (i, r) in self.coeffs.iter().enumerate() {
            for (g, c) in r.sorted_terms() {
                out.push((i, g.clone(), c.clone()));
            }
        }
        out
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(labels)
            .filter(|(r, _)| !r.is_zero())
            .map(|(r, l)| {
                if r.is_one() {
                    l.clone()
                } else {
                    format!("({r})*{l}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for Pi2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|r| r.to_string())).finish()
    }
}

/// The data describing `(M, k, G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldData {
    pub name: String,
    pub group: Arc<GroupDescription>,
    pub basis: Vec<String>,
    /// Full hermitian form, `lambda[i][j] = λ(b_i, b_j)`.
    pub lambda: Vec<Vec<RingElement>>,
    /// Canonical representatives in `Z[π∖1]/⟨σ(g) - g⟩`.
    pub mu2: Vec<RingElement>,
    /// The class of the dual sphere; entries are `±g` or zero.
    pub dual: Pi2Class,
    pub h3_tilde_zero: bool,
    pub extra_dax_generators: Vec<RingElement>,
    pub assert_complete: bool,
    pub boundary_s1xs2: bool,
    /// Set when `M` splits off `D²×S²` along a 3-sphere, so every `g + g^-1` lies in the image.
    pub separating_sphere: bool,
    pub mu3_generators: Vec<F2TorsionElement>,
    /// Values of the spin^c functional on the basis.
    pub w: Option<Vec<i64>>,
}

/// One finger move of a realization: sign and exponent of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FingerMove {
    pub sign: i8,
    pub exponent: u32,
}

impl ManifoldData {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn zero_class(&self) -> Pi2Class {
        Pi2Class::zero(self.group.clone(), self.rank())
    }

    pub fn basis_class(&self, i: usize) -> Pi2Class {
        Pi2Class::basis(self.group.clone(), self.rank(), i)
    }

    /// Checks every structural invariant, naming the first violation.
    pub fn validate(&self) -> Result<()> {
        self.group.validate()?;
        let n = self.rank();
        let mut seen = std::collections::HashSet::new();
        for b in &self.basis {
            if !seen.insert(b) {
                return Err(Error::Validation(format!("duplicate basis label `{b}`")));
            }
        }
        if self.lambda.len() != n || self.lambda.iter().any(|row| row.len() != n) {
            return Err(Error::Validation(format!("lambda must be {n}x{n}")));
        }
        if self.mu2.len() != n || self.dual.rank() != n {
            return Err(Error::Validation("mu2 and dual must have one entry per basis element".into()));
        }
        let same = |r: &RingElement| r.group() == &*self.group;
        if !self.lambda.iter().flatten().all(same) || !self.mu2.iter().all(same) || !self.dual.coeffs.iter().all(same) {
            return Err(Error::Validation("all data must live over pi1".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if self.lambda[j][i] != self.lambda[i][j].bar() {
                    return Err(Error::Validation(format!(
                        "hermitian symmetry fails: lambda({}, {}) = {} but lambda({}, {}) = {}",
                        self.basis[i], self.basis[j], self.lambda[i][j], self.basis[j], self.basis[i], self.lambda[j][i]
                    )));
                }
            }
        }
        for i in 0..n {
            let mu = &self.mu2[i];
            if !mu.coefficient_at_one().is_zero() {
                return Err(Error::Validation(format!("mu2({}) has a coefficient at 1", self.basis[i])));
            }
            if mu.reduce_mod_antisymmetric()? != *mu {
                return Err(Error::Validation(format!(
                    "mu2({}) = {mu} is not in canonical form",
                    self.basis[i]
                )));
            }
            let lhs = self.lambda[i][i].without_identity().reduce_mod_antisymmetric()?;
            let rhs = mu.norm_map()?.reduce_mod_antisymmetric()?;
            if lhs != rhs {
                return Err(Error::Validation(format!(
                    "mu2/lambda inconsistency at {}: reduced lambda is {lhs}, norm of mu2 is {rhs}",
                    self.basis[i]
                )));
            }
        }
        self.validate_dual()?;
        for r in &self.extra_dax_generators {
            if !same(r) || !r.coefficient_at_one().is_zero() || !r.is_sigma_fixed()? {
                return Err(Error::Validation(format!("extra dax generator {r} must be σ-fixed on pi1 minus 1")));
            }
        }
        for m in &self.mu3_generators {
            if m.group() != &*self.group {
                return Err(Error::Validation("mu3 generator over another group".into()));
            }
        }
        if let Some(w) = &self.w {
            if w.len() != n {
                return Err(Error::Validation("W must have one entry per basis element".into()));
            }
            if self.w_eval(&self.dual)? != 0 {
                return Err(Error::Validation("W(G) must be 0".into()));
            }
            for i in 0..n {
                let l1 = self.lambda[i][i].coefficient_at_one();
                if !(BigInt::from(w[i]) - l1).is_even() {
                    return Err(Error::Validation(format!(
                        "W is not characteristic: W({}) and lambda_1({0}, {0}) differ mod 2",
                        self.basis[i]
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_dual(&self) -> Result<()> {
        let n = self.rank();
        for r in &self.dual.coeffs {
            if r.len() > 1 || r.terms().any(|(_, c)| c.abs() != BigInt::one()) {
                return Err(Error::Validation(format!("dual entry {r} is not of the form ±g")));
            }
        }
        if n > 0 && self.dual.is_zero() {
            return Err(Error::Validation("dual class G must be nonzero".into()));
        }
        if self.dual.is_zero() {
            return Ok(());
        }
        for j in 0..n {
            let v = self.lambda_eval(&self.dual, &self.basis_class(j), false)?;
            if !v.is_zero() {
                return Err(Error::Validation(format!(
                    "lambda(G, {}) = {v}, but G lies in the boundary",
                    self.basis[j]
                )));
            }
        }
        let mu = self.mu2_eval(&self.dual)?;
        if !mu.is_zero() {
            return Err(Error::Validation(format!("mu2(G) = {mu}, but G is embedded")));
        }
        Ok(())
    }

    /// Index of the first nonzero entry of the dual.
    pub fn dual_pivot(&self) -> Option<usize> {
        self.dual.coeffs.iter().position(|r| !r.is_zero())
    }

    fn check_class(&self, a: &Pi2Class) -> Result<()> {
        if a.rank() != self.rank() || a.group() != &*self.group {
            return Err(Error::GroupMismatch("class is not over this manifold's basis".into()));
        }
        Ok(())
    }

    /// `Σ r_i λ(b_i, b_j) σ(s_j)`; with `reduced` the coefficient at 1 is dropped.
    pub fn lambda_eval(&self, a: &Pi2Class, b: &Pi2Class, reduced: bool) -> Result<RingElement> {
        self.check_class(a)?;
        self.check_class(b)?;
        let mut acc = RingElement::zero(self.group.clone());
        for (i, r) in a.coeffs.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (j, s) in b.coeffs.iter().enumerate() {
                if s.is_zero() || self.lambda[i][j].is_zero() {
                    continue;
                }
                acc = &acc + &(&(r * &self.lambda[i][j]) * &s.bar());
            }
        }
        Ok(if reduced { acc.without_identity() } else { acc })
    }

    /// `λ̄(g·b_i, h·b_j)`.
    pub fn lambda_bar_basis(&self, i: usize, g: &GroupElement, j: usize, h: &GroupElement) -> RingElement {
        self.lambda[i][j]
            .left_translate(g)
            .right_translate(&self.group.invert(h))
            .without_identity()
    }

    /// Quadratic data of `μ₂` over the module basis.
    pub fn quadratic_data(&self) -> QuadraticData {
        let mut off = BTreeMap::new();
        for a in 0..self.rank() {
            for b in 0..a {
                off.insert((a, b), self.lambda[a][b].without_identity());
            }
        }
        QuadraticData::new(self.group.clone(), self.basis.clone(), self.mu2.clone(), off)
            .expect("validated manifold data")
    }

    /// `μ₂(a)` in canonical form, expanding `a` over the `Z`-basis `{g·b_i}`.
    pub fn mu2_eval(&self, a: &Pi2Class) -> Result<RingElement> {
        self.check_class(a)?;
        let terms = a.z_terms();
        let labels: Vec<String> = terms
            .iter()
            .map(|(i, g, _)| format!("{}.{}", self.group.format(g), self.basis[*i]))
            .collect();
        let diagonal: Vec<RingElement> = terms
            .iter()
            .map(|(i, g, _)| self.mu2[*i].conjugate(g))
            .collect();
        let mut off = BTreeMap::new();
        for (x, (i, g, _)) in terms.iter().enumerate() {
            for (y, (j, h, _)) in terms.iter().enumerate().take(x) {
                off.insert((x, y), self.lambda_bar_basis(*i, g, *j, h));
            }
        }
        let q = QuadraticData::new(self.group.clone(), labels, diagonal, off)?;
        let x: Vec<BigInt> = terms.into_iter().map(|t| t.2).collect();
        q.evaluate(&x)
    }

    /// `λ̄(a, b) + λ̄(b, a)`.
    pub fn dax_whitehead(&self, a: &Pi2Class, b: &Pi2Class) -> Result<RingElement> {
        Ok(&self.lambda_eval(a, b, true)? + &self.lambda_eval(b, a, true)?)
    }

    /// `μ₂(a) + σ(μ₂(a))`.
    pub fn dax_hopf(&self, a: &Pi2Class) -> Result<RingElement> {
        self.mu2_eval(a)?.norm_map()
    }

    /// `g · dax · g^-1`, the Dax value of `g·a` for a spherical class with value `dax`.
    pub fn dax_conjugate_sphere(&self, g: &GroupElement, dax: &RingElement) -> RingElement {
        dax.conjugate(g)
    }

    pub fn span_completeness(&self) -> Completeness {
        if self.h3_tilde_zero || self.boundary_s1xs2 {
            Completeness::Complete
        } else if self.assert_complete {
            Completeness::UserAsserted
        } else {
            Completeness::LowerBound
        }
    }

    /// The subgroup `dax(π₃M) ≤ Z[π∖1]^σ` generated by the Hopf and Whitehead
    /// families, the declared extras and, when present, all `g + g^-1`.
    pub fn dax_image_span(&self) -> SubgroupSpan {
        let mut s = SubgroupSpan::zero(self.group.clone());
        let q = self.quadratic_data();
        for gen in q.gamma_image_generators() {
            s.add_core(gen.norm_map().expect("reduced values")).expect("same group");
        }
        for r in &self.extra_dax_generators {
            s.add_core(r.clone()).expect("validated");
        }
        let cyclic = self.group.infinite_cyclic_generator().is_some();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let family = if i == j && cyclic {
                    TranslateFamily {
                        seed: self.mu2[i].clone(),
                        direction: Direction::Positive { min_power: 1 },
                        normed: true,
                    }
                } else {
                    TranslateFamily {
                        seed: self.lambda[i][j].clone(),
                        direction: Direction::All,
                        normed: true,
                    }
                };
                s.add_family(family).expect("same group");
            }
        }
        s.add_rule(ClosureRule::ConjugationByPi);
        if self.boundary_s1xs2 || self.separating_sphere {
            s.add_rule(ClosureRule::GPlusGInverseFamily);
        }
        s.set_completeness(self.span_completeness());
        s
    }

    /// `W` extended to `π₂M` by `W(g·b_i) = W(b_i)`.
    pub fn w_eval(&self, a: &Pi2Class) -> Result<i64> {
        self.check_class(a)?;
        let w = self.w.as_ref().ok_or_else(|| Error::Missing("no W functional declared".into()))?;
        let mut acc = BigInt::zero();
        for (i, r) in a.coeffs.iter().enumerate() {
            let aug: BigInt = r.terms().map(|(_, c)| c.clone()).sum();
            acc += aug * w[i];
        }
        acc.to_i64().ok_or_else(|| Error::Domain("W value out of range".into()))
    }

    /// True when every `W(b_i)` is even.
    pub fn is_spin(&self) -> Option<bool> {
        self.w.as_ref().map(|w| w.iter().all(|v| v % 2 == 0))
    }
}

/// Builds `M_c` for `f = Σ c·t^e` and a framing: `π₁ = Z`, basis `{G, S}`.
pub fn make_mc(terms: &[(i64, u32)], framing: i64) -> Result<ManifoldData> {
    let group = Arc::new(GroupDescription::infinite_cyclic("t"));
    let mut f = RingElement::zero(group.clone());
    for &(c, e) in terms {
        if e == 0 {
            return Err(Error::Precondition("f must have no constant term".into()));
        }
        f = &f + &RingElement::monomial(group.clone(), group.generator_power(0, e as i64)?, c);
    }
    let zero = RingElement::zero(group.clone());
    let lss = &(&f + &f.bar()) + &RingElement::integer(group.clone(), framing);
    let m = ManifoldData {
        name: format!("M_c({f})"),
        group: group.clone(),
        basis: vec!["G".into(), "S".into()],
        lambda: vec![vec![zero.clone(), zero.clone()], vec![zero.clone(), lss]],
        mu2: vec![zero.clone(), f],
        dual: Pi2Class::from_coefficients(group.clone(), vec![RingElement::one(group.clone()), zero])?,
        h3_tilde_zero: true,
        extra_dax_generators: vec![],
        assert_complete: false,
        boundary_s1xs2: false,
        separating_sphere: false,
        mu3_generators: vec![],
        w: Some(vec![0, framing]),
    };
    m.validate()?;
    Ok(m)
}

/// Terms `(coefficient, exponent)` of an element of `t·Z[t]`.
pub fn polynomial_terms(f: &RingElement) -> Result<Vec<(i64, u32)>> {
    let g = f.group();
    let mut out = Vec::new();
    for (e, c) in f.sorted_terms() {
        let k = g
            .cyclic_exponent(e)
            .ok_or_else(|| Error::Domain("polynomials need an infinite cyclic group".into()))?;
        if k < 1 {
            return Err(Error::Precondition(format!("{f} is not in t·Z[t]")));
        }
        let c = c.to_i64().ok_or_else(|| Error::Domain("coefficient out of range".into()))?;
        out.push((c, k as u32));
    }
    out.sort_by_key(|t| t.1);
    Ok(out)
}

/// One finger move per unit of coefficient, by increasing exponent.
pub fn realize_polynomial(terms: &[(i64, u32)]) -> Result<Vec<FingerMove>> {
    let mut combined: BTreeMap<u32, i64> = BTreeMap::new();
    for &(c, e) in terms {
        if e == 0 {
            return Err(Error::Precondition("exponents must be at least 1".into()));
        }
        *combined.entry(e).or_default() += c;
    }
    let mut out = Vec::new();
    for (e, c) in combined {
        let sign = if c < 0 { -1 } else { 1 };
        for _ in 0..c.unsigned_abs() {
            out.push(FingerMove { sign, exponent: e });
        }
    }
    Ok(out)
}

/// Inverse of [`realize_polynomial`]: combined terms by increasing exponent.
pub fn assemble_polynomial(moves: &[FingerMove]) -> Vec<(i64, u32)> {
    let mut combined: BTreeMap<u32, i64> = BTreeMap::new();
    for m in moves {
        *combined.entry(m.exponent).or_default() += m.sign as i64;
    }
    combined.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect()
}

fn embed_summand<'a>(
    target: &Arc<GroupDescription>,
    k: usize,
    m: &'a ManifoldData,
) -> impl Fn(&RingElement) -> RingElement + 'a {
    let target = target.clone();
    move |r: &RingElement| r.map_support(target.clone(), |g| target.embed_free_factor(k, g, &m.group))
}

fn combine(a: &ManifoldData, b: &ManifoldData, boundary: bool) -> Result<ManifoldData> {
    let group = Arc::new(GroupDescription::free_product(vec![
        (*a.group).clone(),
        (*b.group).clone(),
    ]));
    group.validate()?;
    let ea = embed_summand(&group, 0, a);
    let eb = embed_summand(&group, 1, b);
    let (na, nb) = (a.rank(), b.rank());
    let n = na + nb;
    let zero = RingElement::zero(group.clone());
    let mut lambda = vec![vec![zero.clone(); n]; n];
    for i in 0..na {
        for j in 0..na {
            lambda[i][j] = ea(&a.lambda[i][j]);
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            lambda[na + i][na + j] = eb(&b.lambda[i][j]);
        }
    }
    let mut mu2 = Vec::with_capacity(n);
    for r in a.mu2.iter().map(&ea).chain(b.mu2.iter().map(&eb)) {
        mu2.push(r.reduce_mod_antisymmetric()?);
    }
    let mut basis = a.basis.clone();
    for l in &b.basis {
        if basis.contains(l) {
            return Err(Error::Validation(format!("basis label `{l}` occurs in both summands")));
        }
        basis.push(l.clone());
    }
    let a_dual = !a.dual.is_zero();
    let b_dual = !b.dual.is_zero();
    if boundary && a_dual && b_dual {
        return Err(Error::Validation("both summands carry a dual sphere".into()));
    }
    let dual_coeffs: Vec<RingElement> = if a_dual || !b_dual || !boundary {
        a.dual.coeffs.iter().map(&ea).chain(std::iter::repeat_n(zero.clone(), nb)).collect()
    } else {
        std::iter::repeat_n(zero.clone(), na).chain(b.dual.coeffs.iter().map(&eb)).collect()
    };
    let w = match (&a.w, &b.w, na, nb) {
        (Some(x), Some(y), _, _) => Some(x.iter().chain(y).copied().collect()),
        (Some(x), None, _, 0) => Some(x.clone()),
        (None, Some(y), 0, _) => Some(y.clone()),
        _ => None,
    };
    let mut mu3 = Vec::new();
    for m in a.mu3_generators.iter().map(|x| (x, 0, a)).chain(b.mu3_generators.iter().map(|x| (x, 1, b))) {
        let (x, k, src) = m;
        let items = x.support().map(|g| group.embed_free_factor(k, g, &src.group));
        mu3.push(F2TorsionElement::from_support(group.clone(), items)?);
    }
    let trivial_first = *a.group == GroupDescription::Trivial;
    Ok(ManifoldData {
        name: format!("{} {} {}", a.name, if boundary { "bsum" } else { "#" }, b.name),
        group: group.clone(),
        basis,
        lambda,
        mu2,
        dual: Pi2Class::from_coefficients(group.clone(), dual_coeffs)?,
        h3_tilde_zero: a.h3_tilde_zero && b.h3_tilde_zero && (boundary || trivial_first || *b.group == GroupDescription::Trivial),
        extra_dax_generators: a
            .extra_dax_generators
            .iter()
            .map(&ea)
            .chain(b.extra_dax_generators.iter().map(&eb))
            .collect(),
        assert_complete: a.assert_complete && b.assert_complete,
        boundary_s1xs2: a.boundary_s1xs2 || b.boundary_s1xs2,
        separating_sphere: a.separating_sphere || b.separating_sphere || (!boundary && trivial_first && a_dual),
        mu3_generators: mu3,
        w,
    })
}

/// Boundary connected sum. The dual sphere comes from whichever summand has one.
pub fn make_boundary_sum(a: &ManifoldData, b: &ManifoldData) -> Result<ManifoldData> {
    let m = combine(a, b, true)?;
    m.validate()?;
    Ok(m)
}

/// Interior connected sum; the dual sphere is taken from the first summand.
pub fn make_connected_sum(a: &ManifoldData, b: &ManifoldData) -> Result<ManifoldData> {
    let m = combine(a, b, false)?;
    m.validate()?;
    Ok(m)
}

/// Empty data over a given group: no `π₂`, no dual.
pub fn empty_manifold(name: &str, group: GroupDescription) -> ManifoldData {
    let group = Arc::new(group);
    ManifoldData {
        name: name.into(),
        group: group.clone(),
        basis: vec![],
        lambda: vec![],
        mu2: vec![],
        dual: Pi2Class::zero(group, 0),
        h3_tilde_zero: true,
        extra_dax_generators: vec![],
        assert_complete: false,
        boundary_s1xs2: false,
        separating_sphere: false,
        mu3_generators: vec![],
        w: Some(vec![]),
    }
}

impl Pi2Class {
    fn group(&self) -> &GroupDescription {
        &self.group
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::span::Membership;

    fn lit(m: &ManifoldData, s: &str) -> RingElement {
        RingElement::parse(m.group.clone(), s).unwrap()
    }

    #[test]
    fn mc_lambda_and_mu2() {
        let m = make_mc(&[(-1, 1), (1, 2)], 0).unwrap();
        let s = m.basis_class(1);
        let l = m.lambda_eval(&s, &s, false).unwrap();
        assert_eq!(l, lit(&m, "-t + t^2 - t^-1 + t^-2"));
        assert_eq!(l.bar(), l);
        assert_eq!(m.mu2_eval(&s).unwrap(), lit(&m, "-t + t^2"));
        let t = m.group.word(&[("t", 1)]).unwrap();
        assert_eq!(m.mu2_eval(&s.translate(&t)).unwrap(), lit(&m, "-t + t^2"));
        assert!(m.mu2_eval(&m.zero_class()).unwrap().is_zero());
        assert!(m.lambda_eval(&s, &m.zero_class(), true).unwrap().is_zero());
        assert_eq!(m.dax_hopf(&s).unwrap(), l.without_identity());
    }

    #[test]
    fn mc_rejects_constant_term() {
        assert!(matches!(make_mc(&[(1, 0)], 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn closed_dax_values() {
        let m = closed_dax_example();
        let (a1, a2) = (m.basis_class(1), m.basis_class(2));
        assert_eq!(m.dax_whitehead(&a1, &a2).unwrap(), lit(&m, "-2*g"));
        let q = m.quadratic_data();
        assert_eq!(q.gamma_image_generators(), vec![lit(&m, "-g")]);
        let span = m.dax_image_span();
        assert!(span.membership(&lit(&m, "-2*g"), 2).unwrap().is_in());
        assert_eq!(span.membership(&lit(&m, "g"), 2).unwrap(), Membership::NotInWithinWindow);
    }

    #[test]
    fn non_abelian_lambda() {
        let m = non_abelian_example();
        let g = m.group.word(&[("g", 1)]).unwrap();
        let a1 = m.basis_class(m.label_index("a1").unwrap()).translate(&g);
        let a2 = m.basis_class(m.label_index("a2").unwrap());
        assert_eq!(m.lambda_eval(&a1, &a2, true).unwrap(), lit(&m, "g"));
    }

    #[test]
    fn hermitian_violation_is_named() {
        let mut m = closed_dax_example();
        m.lambda[2][1] = lit(&m, "1");
        let err = m.validate().unwrap_err().to_string();
        assert!(err.contains("lambda(a1, a2)") && err.contains("lambda(a2, a1)"), "{err}");
    }

    #[test]
    fn realization_examples() {
        let mv = realize_polynomial(&[(-1, 1), (1, 2)]).unwrap();
        assert_eq!(mv, vec![FingerMove { sign: -1, exponent: 1 }, FingerMove { sign: 1, exponent: 2 }]);
        assert_eq!(realize_polynomial(&[(2, 3)]).unwrap().len(), 2);
        assert!(realize_polynomial(&[]).unwrap().is_empty());
    }

    #[test]
    fn sums() {
        let m = boundary_sum_example();
        assert_eq!(m.rank(), 1);
        assert_eq!(*m.group, GroupDescription::infinite_cyclic("t"));
        let x = closed_dax_example();
        let triv = empty_manifold("S4", GroupDescription::Trivial);
        let y = make_connected_sum(&x, &triv).unwrap();
        assert_eq!(y.lambda, x.lambda);
        assert_eq!(y.mu2, x.mu2);
        assert!(make_boundary_sum(&x, &make_mc(&[(1, 1)], 0).unwrap()).is_err());
    }
}
