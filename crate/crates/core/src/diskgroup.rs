//! The group of disk isotopy classes as a central extension
//! `Z[π]/dax ↣ 𝒟 ↠ π₂M/Z[π]·G`.
//!
//! An element is a pair `(r, ā)`: `r` is the finger-move coordinate and `ā`
//! is a class in `π₂M` normalised to have zero component at the pivot of `G`.
//! The product is `(r₁ + r₂ + c(ā₁, ā₂), ā₁ + ā₂)` where `c` is the
//! strictly upper-triangular cocycle `c(e_α, e_β) = λ̄(e_α, e_β)` for `α > β`
//! on the `Z`-basis `{g·b_i}` ordered by `(i, g)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::groupring::{F2TorsionElement, InvolutionMode, RingElement};
use crate::groups::GroupElement;
use crate::manifold::{ManifoldData, Pi2Class};
use crate::span::{lattice::F2Echelon, Ambient, Completeness, Membership, QuotientReport, SubgroupSpan};

/// Default support window for span computations.
pub const DEFAULT_WINDOW: usize = 8;
/// Default word-length budget for enumerations.
pub const DEFAULT_BUDGET: usize = 4;

#[derive(Debug, Clone)]
pub struct DiskGroup {
    manifold: Arc<ManifoldData>,
    span: SubgroupSpan,
    window: usize,
}

#[derive(Clone, PartialEq, Eq)]
pub struct DiskClass {
    manifold: Arc<ManifoldData>,
    kernel: RingElement,
    quotient: Pi2Class,
}

/// A relative Dax value: the raw difference and, when membership is
/// decidable, its canonical representative modulo the Dax image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaxValue {
    pub raw: RingElement,
    pub reduced: Option<RingElement>,
}

impl DaxValue {
    pub fn is_exact(&self) -> bool {
        self.reduced.is_some()
    }

    /// The reduced form when known, else the raw value.
    pub fn best(&self) -> &RingElement {
        self.reduced.as_ref().unwrap_or(&self.raw)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

/// A pair of `Z`-basis classes whose commutator is nontrivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianWitness {
    pub left: (GroupElement, usize),
    pub right: (GroupElement, usize),
    pub value: RingElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianVerdict {
    Yes(String),
    No(AbelianWitness),
    Unknown(String),
}

impl AbelianVerdict {
    pub fn verdict(&self) -> Verdict {
        match self {
            AbelianVerdict::Yes(_) => Verdict::Yes,
            AbelianVerdict::No(_) => Verdict::No,
            AbelianVerdict::Unknown(_) => Verdict::Unknown,
        }
    }
}

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub manifold: String,
    pub pi1: String,
    pub dax_span: String,
    pub completeness: &'static str,
    pub dax_target: std::result::Result<QuotientReport, String>,
    pub kernel: std::result::Result<QuotientReport, String>,
    pub quotient_rank: usize,
    pub spin: Option<bool>,
    pub d0_index: Option<u32>,
    pub splitting: Option<String>,
    pub abelian: AbelianVerdict,
    pub nilpotent_class_two: bool,
    pub homotopy_image: std::result::Result<QuotientReport, String>,
    pub fq_target_dimension: Option<usize>,
}

impl DiskGroup {
    pub fn new(m: ManifoldData) -> Result<Self> {
        m.validate()?;
        Ok(Self::from_arc(Arc::new(m)))
    }

    fn from_arc(m: Arc<ManifoldData>) -> Self {
        let span = m.dax_image_span();
        DiskGroup {
            manifold: m,
            span,
            window: DEFAULT_WINDOW,
        }
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.window = window;
        self
    }

    pub fn manifold(&self) -> &ManifoldData {
        &self.manifold
    }

    pub fn dax_span(&self) -> &SubgroupSpan {
        &self.span
    }

    pub fn window(&self) -> usize {
        self.window
    }

    fn zero_ring(&self) -> RingElement {
        RingElement::zero(self.manifold.group.clone())
    }

    pub fn identity(&self) -> DiskClass {
        DiskClass {
            manifold: self.manifold.clone(),
            kernel: self.zero_ring(),
            quotient: self.manifold.zero_class(),
        }
    }

    /// Removes the pivot component of `a` using `G`.
    pub fn normalize_quotient(&self, a: &Pi2Class) -> Pi2Class {
        let Some(p) = self.manifold.dual_pivot() else {
            return a.clone();
        };
        let gp = self.manifold.dual.coefficient(p);
        let (g, eps) = gp.terms().next().map(|(g, c)| (g.clone(), c.clone())).expect("pivot is nonzero");
        let factor = a.coefficient(p).right_translate(&self.manifold.group.invert(&g)).scale(&eps);
        a.sub(&self.manifold.dual.scale(&factor))
    }

    pub fn element(&self, kernel: RingElement, quotient: Pi2Class) -> Result<DiskClass> {
        if kernel.group() != &*self.manifold.group || quotient.rank() != self.manifold.rank() {
            return Err(Error::GroupMismatch("coordinates are not over this manifold".into()));
        }
        Ok(DiskClass {
            manifold: self.manifold.clone(),
            kernel,
            quotient: self.normalize_quotient(&quotient),
        })
    }

    /// `Ū + fm(r)^G`.
    pub fn fm(&self, r: &RingElement) -> Result<DiskClass> {
        self.fm_act(&self.identity(), r)
    }

    /// The section class over `a`.
    pub fn section(&self, a: &Pi2Class) -> Result<DiskClass> {
        self.element(self.zero_ring(), a.clone())
    }

    fn check(&self, x: &DiskClass) -> Result<()> {
        if Arc::ptr_eq(&x.manifold, &self.manifold) || *x.manifold == *self.manifold {
            Ok(())
        } else {
            Err(Error::GroupMismatch("disk class over another manifold".into()))
        }
    }

    fn key_cmp(&self, a: &(usize, GroupElement, BigInt), b: &(usize, GroupElement, BigInt)) -> Ordering {
        a.0.cmp(&b.0).then_with(|| self.manifold.group.compare(&a.1, &b.1))
    }

    /// `c(a, b) = Σ_{α > β} a_α b_β λ̄(e_α, e_β)`.
    pub fn cocycle(&self, a: &Pi2Class, b: &Pi2Class) -> RingElement {
        let ta = a.z_terms();
        let tb = b.z_terms();
        let mut acc = self.zero_ring();
        for x in &ta {
            for y in &tb {
                if self.key_cmp(x, y) == Ordering::Greater {
                    let v = self.manifold.lambda_bar_basis(x.0, &x.1, y.0, &y.1);
                    if !v.is_zero() {
                        acc = &acc + &v.scale(&(&x.2 * &y.2));
                    }
                }
            }
        }
        acc
    }

    pub fn multiply(&self, x: &DiskClass, y: &DiskClass) -> Result<DiskClass> {
        self.check(x)?;
        self.check(y)?;
        let c = self.cocycle(&x.quotient, &y.quotient);
        Ok(DiskClass {
            manifold: self.manifold.clone(),
            kernel: &(&x.kernel + &y.kernel) + &c,
            quotient: x.quotient.add(&y.quotient),
        })
    }

    pub fn inverse(&self, x: &DiskClass) -> Result<DiskClass> {
        self.check(x)?;
        let c = self.cocycle(&x.quotient, &x.quotient);
        Ok(DiskClass {
            manifold: self.manifold.clone(),
            kernel: &c - &x.kernel,
            quotient: x.quotient.neg(),
        })
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(&self, x: &DiskClass, y: &DiskClass) -> Result<DiskClass> {
        let xy = self.multiply(x, y)?;
        let xi = self.inverse(x)?;
        let yi = self.inverse(y)?;
        self.multiply(&self.multiply(&xy, &xi)?, &yi)
    }

    pub fn fm_act(&self, x: &DiskClass, r: &RingElement) -> Result<DiskClass> {
        self.check(x)?;
        if r.group() != &*self.manifold.group {
            return Err(Error::GroupMismatch("finger-move coefficient over another group".into()));
        }
        Ok(DiskClass {
            manifold: self.manifold.clone(),
            kernel: &x.kernel + r,
            quotient: x.quotient.clone(),
        })
    }

    /// `ā + (σ(r) - r)·G` with `σ(1) = 0`.
    pub fn homotopy_class(&self, x: &DiskClass) -> Result<Pi2Class> {
        self.check(x)?;
        let shift = &x.kernel.involution(InvolutionMode::Extended) - &x.kernel;
        Ok(x.quotient.add(&self.manifold.dual.scale(&shift)))
    }

    /// Membership in the Dax image. When the span is only a lower bound, a
    /// negative answer stands only for elements outside the σ-fixed set.
    pub fn dax_membership(&self, x: &RingElement, window: usize) -> Result<Membership> {
        let m = self.span.membership(x, window)?;
        if m == Membership::NotInWithinWindow
            && self.span.completeness() == Completeness::LowerBound
            && x.without_identity() == *x
            && x.is_sigma_fixed()?
        {
            return Ok(Membership::Unknown);
        }
        Ok(m)
    }

    /// Decides whether two classes are equal.
    pub fn equal(&self, x: &DiskClass, y: &DiskClass) -> Result<Verdict> {
        self.check(x)?;
        self.check(y)?;
        if x.quotient != y.quotient {
            return Ok(Verdict::No);
        }
        Ok(match self.dax_membership(&(&y.kernel - &x.kernel), self.window)? {
            Membership::In(_) => Verdict::Yes,
            Membership::NotInWithinWindow => Verdict::No,
            Membership::Unknown => Verdict::Unknown,
        })
    }

    /// Canonical kernel coordinate modulo the Dax image, when decidable.
    pub fn canonical_kernel(&self, x: &DiskClass) -> Result<Option<RingElement>> {
        self.span.reduce(&x.kernel, self.window)
    }

    /// `Dax(x, y) = [r_y - r_x]` for homotopic `x`, `y`.
    pub fn relative_dax(&self, x: &DiskClass, y: &DiskClass) -> Result<DaxValue> {
        let hx = self.homotopy_class(x)?;
        let hy = self.homotopy_class(y)?;
        if hx != hy {
            let labels = &self.manifold.basis;
            return Err(Error::Domain(format!(
                "classes are not homotopic: {} vs {}",
                hx.display_with(labels),
                hy.display_with(labels)
            )));
        }
        let raw = &y.kernel - &x.kernel;
        let reduced = self.span.reduce(&raw, self.window)?;
        Ok(DaxValue { raw, reduced })
    }

    /// Reduces an element of `F_2[T]` modulo the declared `μ₃` generators.
    pub fn reduce_mod_mu3(&self, v: &F2TorsionElement) -> F2TorsionElement {
        let mut keys: Vec<GroupElement> = v.support().cloned().collect();
        for m in &self.manifold.mu3_generators {
            keys.extend(m.support().cloned());
        }
        keys.sort_by_cached_key(|g| self.manifold.group.sort_key(g));
        keys.dedup();
        let index: BTreeMap<&GroupElement, usize> = keys.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let vector = |e: &F2TorsionElement| {
            let mut b = vec![false; keys.len()];
            for g in e.support() {
                b[index[g]] = true;
            }
            b
        };
        let ech = F2Echelon::new(self.manifold.mu3_generators.iter().map(vector));
        let red = ech.reduce(&vector(v));
        F2TorsionElement::from_support(
            self.manifold.group.clone(),
            keys.iter().zip(red).filter(|(_, b)| *b).map(|(g, _)| g.clone()),
        )
        .expect("support drawn from 2-torsion elements")
    }

    /// Freedman–Quinn invariant: the relative Dax value in `F_2[T]/μ₃`.
    pub fn fq_pair(&self, x: &DiskClass, y: &DiskClass) -> Result<F2TorsionElement> {
        let d = self.relative_dax(x, y)?;
        Ok(self.reduce_mod_mu3(&d.raw.reduce_to_f2_torsion()?))
    }

    /// Relative Euler number `2·r_1 + W(homotopy class)`.
    pub fn euler_rel(&self, x: &DiskClass) -> Result<i64> {
        self.check(x)?;
        let two_r1: BigInt = x.kernel.coefficient_at_one() * 2;
        let w = match &self.manifold.w {
            Some(_) => self.manifold.w_eval(&self.homotopy_class(x)?)?,
            None if x.quotient.is_zero() => 0,
            None => {
                return Err(Error::Missing(
                    "W is required for the Euler number of classes with nonzero quotient coordinate".into(),
                ))
            }
        };
        (two_r1 + BigInt::from(w)).to_i64().ok_or_else(|| Error::Domain("Euler number out of range".into()))
    }

    /// `η = (e - W(homotopy class)) / 2`, which is the coefficient of `r` at 1.
    pub fn eta(&self, x: &DiskClass) -> Result<i64> {
        let e = self.euler_rel(x)?;
        let w = match &self.manifold.w {
            Some(_) => self.manifold.w_eval(&self.homotopy_class(x)?)?,
            None => 0,
        };
        Ok((e - w) / 2)
    }

    pub fn in_disk_group_zero(&self, x: &DiskClass) -> Result<bool> {
        Ok(self.euler_rel(x)? == 0)
    }

    /// Tests `λ̄(g·b_i, b_j) ∈ dax` over `g` of length at most `budget`.
    pub fn is_abelian(&self, budget: usize) -> Result<AbelianVerdict> {
        let m = &self.manifold;
        let pivot = m.dual_pivot();
        let free: Vec<usize> = (0..m.rank()).filter(|&i| Some(i) != pivot).collect();
        if free.is_empty() {
            return Ok(AbelianVerdict::Yes("pi2 / <G> = 0".into()));
        }
        let all_zero = free.iter().all(|&i| {
            free.iter().all(|&j| {
                let l = &m.lambda[i][j];
                l.is_zero() || (m.group.generator_count() == 0 && l.without_identity().is_zero())
            })
        });
        if all_zero {
            return Ok(AbelianVerdict::Yes("reduced intersection form vanishes".into()));
        }
        let mut unknown = false;
        for g in m.group.enumerate(budget) {
            for &i in &free {
                for &j in &free {
                    let v = m.lambda_bar_basis(i, &g, j, &m.group.identity());
                    match self.dax_membership(&v, self.window.max(budget))? {
                        Membership::In(_) => {}
                        Membership::NotInWithinWindow => {
                            return Ok(AbelianVerdict::No(AbelianWitness {
                                left: (g.clone(), i),
                                right: (m.group.identity(), j),
                                value: v,
                            }))
                        }
                        Membership::Unknown => unknown = true,
                    }
                }
            }
        }
        let covered = m
            .group
            .diameter()
            .is_some_and(|d| budget >= d);
        if unknown {
            Ok(AbelianVerdict::Unknown(format!("membership undecided within budget {budget}")))
        } else if covered {
            Ok(AbelianVerdict::Yes("all pairs lie in the Dax image".into()))
        } else {
            Ok(AbelianVerdict::Unknown(format!(
                "no witness among group elements of length at most {budget}"
            )))
        }
    }

    /// Sample classes built from basis spheres and small finger moves.
    pub fn sample_classes(&self, budget: usize) -> Vec<DiskClass> {
        let m = &self.manifold;
        let mut out = vec![self.identity()];
        let elems = m.group.enumerate(budget.min(2));
        for g in &elems {
            let r = RingElement::monomial(m.group.clone(), g.clone(), 1);
            out.push(self.fm(&r).expect("same group"));
            for i in 0..m.rank() {
                let a = m.basis_class(i).translate(g);
                out.push(self.section(&a).expect("same basis"));
            }
        }
        out
    }

    /// Checks that all triple commutators of sample classes vanish.
    pub fn is_nilpotent_class_two(&self, budget: usize) -> Result<bool> {
        let s = self.sample_classes(budget);
        let s: Vec<&DiskClass> = s.iter().take(12).collect();
        for x in &s {
            for y in &s {
                let c = self.commutator(x, y)?;
                for z in &s {
                    let cc = self.commutator(&c, z)?;
                    if !cc.kernel.is_zero() || !cc.quotient.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn structure_report(&self, window: usize, budget: usize) -> Result<StructureReport> {
        let m = &self.manifold;
        let dax_target = self
            .span
            .quotient_structure(Ambient::SigmaFixed, window)
            .map_err(|e| e.to_string());
        let kernel = self
            .span
            .quotient_structure(Ambient::GroupRing, window)
            .map_err(|e| e.to_string());
        let homotopy_image = SubgroupSpan::sigma_fixed_part(m.group.clone())
            .quotient_structure(Ambient::GroupRing, window)
            .map_err(|e| e.to_string());
        let quotient_rank = m.rank() - usize::from(m.dual_pivot().is_some());
        let spin = m.is_spin();
        let d0_index = spin.map(|s| if s { 1 } else { 2 });
        let splitting = m.w.as_ref().map(|_| "D = Z x ker(eta), eta(U_tw) = 1".to_string());
        let fq_target_dimension = if m.group.two_torsion_is_exact() {
            let t = m.group.two_torsion(budget);
            let keys: Vec<GroupElement> = t.clone();
            let vector = |e: &F2TorsionElement| keys.iter().map(|g| e.contains(g)).collect::<Vec<bool>>();
            let ech = F2Echelon::new(m.mu3_generators.iter().map(vector));
            Some(t.len() - ech.rank())
        } else {
            None
        };
        Ok(StructureReport {
            manifold: m.name.clone(),
            pi1: format!("{:?}", m.group),
            dax_span: self.span.to_string(),
            completeness: self.span.completeness().as_str(),
            dax_target,
            kernel,
            quotient_rank,
            spin,
            d0_index,
            splitting,
            abelian: self.is_abelian(budget)?,
            nilpotent_class_two: self.is_nilpotent_class_two(budget)?,
            homotopy_image,
            fq_target_dimension,
        })
    }
}

impl DiskClass {
    pub fn kernel(&self) -> &RingElement {
        &self.kernel
    }

    pub fn quotient(&self) -> &Pi2Class {
        &self.quotient
    }

    pub fn is_identity(&self) -> bool {
        self.kernel.is_zero() && self.quotient.is_zero()
    }
}

impl fmt::Display for DiskClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.kernel, self.quotient.display_with(&self.manifold.basis))
    }
}

impl fmt::Debug for DiskClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiskClass{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::{boundary_sum_example, closed_dax_example, make_mc, non_abelian_example};

    fn lit(d: &DiskGroup, s: &str) -> RingElement {
        RingElement::parse(d.manifold().group.clone(), s).unwrap()
    }

    #[test]
    fn kernel_product_and_identity() {
        let d = DiskGroup::new(make_mc(&[(-1, 1), (1, 2)], 0).unwrap()).unwrap();
        let x = d.fm(&lit(&d, "t")).unwrap();
        let y = d.fm(&lit(&d, "2 + t^-1")).unwrap();
        let xy = d.multiply(&x, &y).unwrap();
        assert_eq!(xy.kernel(), &lit(&d, "2 + t + t^-1"));
        assert_eq!(d.multiply(&d.identity(), &x).unwrap(), x);
        let s = d.section(&d.manifold().basis_class(1)).unwrap();
        assert!(d.commutator(&s, &s).unwrap().is_identity());
    }

    #[test]
    fn homotopy_class_examples() {
        let d = DiskGroup::new(boundary_sum_example()).unwrap();
        let m = d.manifold();
        let g = m.dual.clone();
        let h = d.homotopy_class(&d.fm(&lit(&d, "t")).unwrap()).unwrap();
        assert_eq!(h, g.scale(&lit(&d, "t^-1 - t")));
        let h = d.homotopy_class(&d.fm(&lit(&d, "1")).unwrap()).unwrap();
        assert_eq!(h, g.neg());
        let h = d.homotopy_class(&d.fm(&lit(&d, "t + t^-1")).unwrap()).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn relative_dax_examples() {
        let d = DiskGroup::new(boundary_sum_example()).unwrap();
        let u = d.identity();
        let v = d.fm(&lit(&d, "t + t^-1")).unwrap();
        let dax = d.relative_dax(&u, &v).unwrap();
        assert_eq!(dax.raw, lit(&d, "t + t^-1"));
        assert!(d.relative_dax(&u, &u).unwrap().raw.is_zero());
        let back = d.relative_dax(&v, &u).unwrap();
        assert_eq!(back.raw, -&dax.raw);
        let w = d.fm(&lit(&d, "t")).unwrap();
        assert!(matches!(d.relative_dax(&u, &w), Err(Error::Domain(_))));
    }

    #[test]
    fn mc_relative_dax_is_reduced() {
        let d = DiskGroup::new(make_mc(&[(-1, 1), (1, 2)], 0).unwrap()).unwrap();
        let u = d.identity();
        let a = d.fm(&lit(&d, "t + t^-1")).unwrap();
        let b = d.fm(&lit(&d, "t^2 + t^-2")).unwrap();
        let ra = d.relative_dax(&u, &a).unwrap().reduced.unwrap();
        let rb = d.relative_dax(&u, &b).unwrap().reduced.unwrap();
        // t^2 - t lies in the ideal, so both classes agree
        assert_eq!(ra, rb);
    }

    #[test]
    fn euler_examples() {
        let d = DiskGroup::new(boundary_sum_example()).unwrap();
        let tw = d.fm(&lit(&d, "1")).unwrap();
        assert_eq!(d.euler_rel(&tw).unwrap(), 2);
        assert_eq!(d.eta(&tw).unwrap(), 1);
        assert_eq!(d.euler_rel(&d.fm(&lit(&d, "t + t^-1")).unwrap()).unwrap(), 0);
        assert_eq!(d.euler_rel(&d.identity()).unwrap(), 0);
        assert!(d.in_disk_group_zero(&d.identity()).unwrap());
        assert!(!d.in_disk_group_zero(&tw).unwrap());
    }

    #[test]
    fn abelian_examples() {
        let d = DiskGroup::new(boundary_sum_example()).unwrap();
        assert_eq!(d.is_abelian(4).unwrap().verdict(), Verdict::Yes);
        let d = DiskGroup::new(non_abelian_example()).unwrap();
        match d.is_abelian(4).unwrap() {
            AbelianVerdict::No(w) => assert_eq!(w.value.to_string(), "g"),
            other => panic!("{other:?}"),
        }
        // λ̄(a1, a2) = -g is not in 2Z·g
        let d = DiskGroup::new(closed_dax_example()).unwrap();
        assert_eq!(d.is_abelian(4).unwrap().verdict(), Verdict::No);
    }

    #[test]
    fn fq_on_closed_dax() {
        let d = DiskGroup::new(closed_dax_example()).unwrap();
        let u = d.identity();
        let v = d.fm(&lit(&d, "2*g")).unwrap();
        assert!(d.fq_pair(&u, &v).unwrap().is_zero());
        let v = d.fm(&lit(&d, "g")).unwrap();
        assert_eq!(d.fq_pair(&u, &v).unwrap().to_string(), "g");
    }
}
