//! Exact arithmetic in `Z[π]` with arbitrary-precision coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{GroupDescription, GroupElement};

/// A finite-support element of `Z[π]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    group: Arc<GroupDescription>,
    terms: BTreeMap<GroupElement, BigInt>,
}

/// Which involution to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionMode {
    /// `g ↦ g^-1`.
    Standard,
    /// `g ↦ g^-1` for `g ≠ 1`, and `1 ↦ 0`.
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Sub,
    Mul,
    Scale,
}

/// Right operand of [`ring_combine`].
#[derive(Debug, Clone)]
pub enum Operand {
    Ring(RingElement),
    Integer(BigInt),
}

/// An element of `F_2[T]`, `T` the nontrivial 2-torsion of `π`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2TorsionElement {
    group: Arc<GroupDescription>,
    support: BTreeSet<GroupElement>,
}

fn same_group(a: &Arc<GroupDescription>, b: &Arc<GroupDescription>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RingElement {
    pub fn zero(group: Arc<GroupDescription>) -> Self {
        RingElement {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(group: Arc<GroupDescription>) -> Self {
        let id = group.identity();
        Self::monomial(group, id, BigInt::one())
    }

    pub fn integer(group: Arc<GroupDescription>, c: impl Into<BigInt>) -> Self {
        let id = group.identity();
        Self::monomial(group, id, c.into())
    }

    pub fn monomial(group: Arc<GroupDescription>, g: GroupElement, c: impl Into<BigInt>) -> Self {
        let mut r = Self::zero(group);
        r.add_term(g, c.into());
        r
    }

    pub fn from_terms<I, C>(group: Arc<GroupDescription>, terms: I) -> Self
    where
        I: IntoIterator<Item = (GroupElement, C)>,
        C: Into<BigInt>,
    {
        let mut r = Self::zero(group);
        for (g, c) in terms {
            r.add_term(g, c.into());
        }
        r
    }

    pub fn group(&self) -> &GroupDescription {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupDescription> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in structural order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in enumeration order (the order used for display).
    pub fn sorted_terms(&self) -> Vec<(&GroupElement, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(g, _)| self.group.sort_key(g));
        v
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length in the support, 0 for the zero element.
    pub fn max_word_length(&self) -> usize {
        self.terms.keys().map(|g| self.group.word_length(g)).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, g: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn ensure_same(&self, other: &RingElement) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!(
                "{:?} vs {:?}",
                self.group, other.group
            )))
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.ensure_same(other)?;
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(g.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.ensure_same(other)?;
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(g.clone(), -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.ensure_same(other)?;
        let mut r = RingElement::zero(self.group.clone());
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                r.add_term(self.group.mul_unchecked(g, h), a * b);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, k: &BigInt) -> RingElement {
        if k.is_zero() {
            return RingElement::zero(self.group.clone());
        }
        RingElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> RingElement {
        self.scale(&BigInt::from(k))
    }

    /// `g · self`.
    pub fn left_translate(&self, g: &GroupElement) -> RingElement {
        RingElement {
            group: self.group.clone(),
            terms: self
                .terms
                .iter()
                .map(|(h, c)| (self.group.mul_unchecked(g, h), c.clone()))
                .collect(),
        }
    }

    /// `self · g`.
    pub fn right_translate(&self, g: &GroupElement) -> RingElement {
        RingElement {
            group: self.group.clone(),
            terms: self
                .terms
                .iter()
                .map(|(h, c)| (self.group.mul_unchecked(h, g), c.clone()))
                .collect(),
        }
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient at the identity.
    /// True for the unit `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient_at_one().is_one()
    }

    pub fn coefficient_at_one(&self) -> BigInt {
        self.coefficient(&self.group.identity())
    }

    /// `self` with the coefficient at the identity removed.
    pub fn without_identity(&self) -> RingElement {
        let mut r = self.clone();
        r.terms.remove(&self.group.identity());
        r
    }

    pub fn involution(&self, mode: InvolutionMode) -> RingElement {
        let id = self.group.identity();
        let mut r = RingElement::zero(self.group.clone());
        for (g, c) in &self.terms {
            if mode == InvolutionMode::Extended && *g == id {
                continue;
            }
            r.add_term(self.group.invert(g), c.clone());
        }
        r
    }

    /// `σ(self)` for the standard involution.
    pub fn bar(&self) -> RingElement {
        self.involution(InvolutionMode::Standard)
    }

    fn require_augmentation_free(&self) -> Result<()> {
        if self.coefficient_at_one().is_zero() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{self} has a nonzero coefficient at 1"
            )))
        }
    }

    /// `a ↦ a + σ(a)` on `Z[π∖1]`.
    pub fn norm_map(&self) -> Result<RingElement> {
        self.require_augmentation_free()?;
        Ok(self + &self.bar())
    }

    pub fn is_sigma_fixed(&self) -> Result<bool> {
        self.require_augmentation_free()?;
        Ok(self.bar() == *self)
    }

    /// `g · self · g^-1`.
    pub fn conjugate(&self, g: &GroupElement) -> RingElement {
        RingElement {
            group: self.group.clone(),
            terms: self
                .terms
                .iter()
                .map(|(h, c)| (self.group.conjugate(g, h), c.clone()))
                .collect(),
        }
    }

    /// Canonical representative in `Z[π∖1]/⟨σ(g) - g⟩`.
    pub fn reduce_mod_antisymmetric(&self) -> Result<RingElement> {
        self.require_augmentation_free()?;
        Ok(self.fold_orbits())
    }

    /// Folds each `{g, g^-1}` orbit onto its representative, keeping any
    /// coefficient at 1.
    pub(crate) fn fold_orbits(&self) -> RingElement {
        let mut r = RingElement::zero(self.group.clone());
        for (g, c) in &self.terms {
            r.add_term(self.group.orbit_representative(g), c.clone());
        }
        r
    }

    /// Image in `F_2[T]` of a σ-fixed element of `Z[π∖1]`.
    pub fn reduce_to_f2_torsion(&self) -> Result<F2TorsionElement> {
        if !self.is_sigma_fixed()? {
            return Err(Error::Precondition(format!("{self} is not σ-fixed")));
        }
        let two = BigInt::from(2);
        let support = self
            .terms
            .iter()
            .filter(|(g, c)| self.group.is_involution_fixed(g) && c.mod_floor(&two).is_one())
            .map(|(g, _)| g.clone())
            .collect();
        Ok(F2TorsionElement {
            group: self.group.clone(),
            support,
        })
    }

    /// Re-expresses the element over another group along a support map.
    pub fn map_support<F>(&self, target: Arc<GroupDescription>, f: F) -> RingElement
    where
        F: Fn(&GroupElement) -> GroupElement,
    {
        let mut r = RingElement::zero(target);
        for (g, c) in &self.terms {
            r.add_term(f(g), c.clone());
        }
        r
    }

    /// Parses a group-ring literal such as `-t + t^2`, `2*g` or `a*b^-1 + 1`.
    pub fn parse(group: Arc<GroupDescription>, text: &str) -> Result<RingElement> {
        Self::parse_at(group, text, 1, 1)
    }

    /// As [`Self::parse`], reporting syntax errors relative to `line`/`column`.
    pub fn parse_at(group: Arc<GroupDescription>, text: &str, line: usize, column: usize) -> Result<RingElement> {
        let mut p = LiteralParser {
            chars: text.char_indices().collect(),
            pos: 0,
            group: &group,
            line,
            column,
        };
        let terms = p.expr()?;
        let mut r = RingElement::zero(group.clone());
        for (g, c) in terms {
            r.add_term(g, c);
        }
        Ok(r)
    }
}

/// Parses a single group word such as `a*b^-1` or `1`.
pub fn parse_group_element(group: &GroupDescription, text: &str) -> Result<GroupElement> {
    let mut p = LiteralParser {
        chars: text.char_indices().collect(),
        pos: 0,
        group,
        line: 1,
        column: 1,
    };
    p.skip_ws();
    let g = if p.peek() == Some('1') {
        p.pos += 1;
        group.identity()
    } else {
        p.word()?
    };
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("trailing input after word"));
    }
    Ok(g)
}

struct LiteralParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    group: &'a GroupDescription,
    line: usize,
    column: usize,
}

impl LiteralParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::syntax(self.line, self.column + self.pos, msg)
    }

    fn expr(&mut self) -> Result<Vec<(GroupElement, BigInt)>> {
        let mut out = Vec::new();
        self.skip_ws();
        let mut sign = BigInt::one();
        if self.peek() == Some('-') {
            sign = -sign;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let (g, c) = self.term()?;
            out.push((g, c * &sign));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => sign = BigInt::one(),
                Some('-') => sign = -BigInt::one(),
                Some(_) => return Err(self.error("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().ok()
    }

    fn term(&mut self) -> Result<(GroupElement, BigInt)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().ok_or_else(|| self.error("bad integer"))?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek() == Some('1') {
                        self.pos += 1;
                        return Ok((self.group.identity(), n));
                    }
                    let g = self.word()?;
                    Ok((g, n))
                } else {
                    Ok((self.group.identity(), n))
                }
            }
            Some(c) if c.is_alphabetic() || c == '_' => Ok((self.word()?, BigInt::one())),
            Some(_) => Err(self.error("expected a term")),
            None => Err(self.error("unexpected end of literal")),
        }
    }

    fn word(&mut self) -> Result<GroupElement> {
        let mut acc = self.group.identity();
        loop {
            self.skip_ws();
            let atom = self.atom()?;
            acc = self.group.mul_unchecked(&acc, &atom);
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                self.pos = save;
                return Ok(acc);
            }
        }
    }

    fn atom(&mut self) -> Result<GroupElement> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a generator"));
        }
        let name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        let idx = self.group.generator_index(&name).ok_or_else(|| {
            Error::syntax(self.line, self.column + start, format!("unknown generator `{name}`"))
        })?;
        let mut exp = 1i64;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let n = self.integer().ok_or_else(|| self.error("expected an exponent"))?;
            let n: i64 = i64::try_from(&n).map_err(|_| self.error("exponent too large"))?;
            exp = if neg { -n } else { n };
        }
        self.group
            .generator_power(idx, exp)
            .map_err(|e| Error::syntax(self.line, self.column + start, e.to_string()))
    }
}

/// Arithmetic dispatch on a tagged operation.
pub fn ring_combine(op: CombineOp, a: &RingElement, b: &Operand) -> Result<RingElement> {
    match (op, b) {
        (CombineOp::Add, Operand::Ring(b)) => a.try_add(b),
        (CombineOp::Sub, Operand::Ring(b)) => a.try_sub(b),
        (CombineOp::Mul, Operand::Ring(b)) => a.try_mul(b),
        (CombineOp::Scale, Operand::Integer(k)) | (CombineOp::Mul, Operand::Integer(k)) => Ok(a.scale(k)),
        (CombineOp::Add, Operand::Integer(k)) => Ok(a + &RingElement::integer(a.group.clone(), k.clone())),
        (CombineOp::Sub, Operand::Integer(k)) => Ok(a - &RingElement::integer(a.group.clone(), k.clone())),
        (CombineOp::Scale, Operand::Ring(_)) => Err(Error::Malformed("scale expects an integer".into())),
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    /// # Panics
    /// On group mismatch; use [`RingElement::try_add`] for a checked version.
    fn add(self, rhs: &'a RingElement) -> RingElement {
        self.try_add(rhs).expect("ring elements over different groups")
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &'a RingElement) -> RingElement {
        self.try_sub(rhs).expect("ring elements over different groups")
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &'a RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring elements over different groups")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale_i64(-1)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if self.group.is_identity(g) {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&self.group.format(g))?;
            } else {
                write!(f, "{abs}*{}", self.group.format(g))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

impl F2TorsionElement {
    pub fn zero(group: Arc<GroupDescription>) -> Self {
        F2TorsionElement {
            group,
            support: BTreeSet::new(),
        }
    }

    /// Builds the element with the given support; every element must be nontrivial 2-torsion.
    pub fn from_support<I: IntoIterator<Item = GroupElement>>(group: Arc<GroupDescription>, items: I) -> Result<Self> {
        let mut r = Self::zero(group);
        for g in items {
            if r.group.is_identity(&g) || !r.group.is_involution_fixed(&g) {
                return Err(Error::Precondition(format!(
                    "{} is not a nontrivial 2-torsion element",
                    r.group.format(&g)
                )));
            }
            if !r.support.remove(&g) {
                r.support.insert(g);
            }
        }
        Ok(r)
    }

    pub fn group(&self) -> &GroupDescription {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.support.iter()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.support.contains(g)
    }

    pub fn try_add(&self, other: &F2TorsionElement) -> Result<F2TorsionElement> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch("F2 elements over different groups".into()));
        }
        Ok(F2TorsionElement {
            group: self.group.clone(),
            support: self.support.symmetric_difference(&other.support).cloned().collect(),
        })
    }
}

impl fmt::Display for F2TorsionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.support.iter().collect();
        v.sort_by_cached_key(|g| self.group.sort_key(g));
        let parts: Vec<String> = v.iter().map(|g| self.group.format(g)).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for F2TorsionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2TorsionElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt() -> Arc<GroupDescription> {
        Arc::new(GroupDescription::infinite_cyclic("t"))
    }

    fn c2() -> Arc<GroupDescription> {
        Arc::new(GroupDescription::cyclic("g", 2))
    }

    fn lit(g: &Arc<GroupDescription>, s: &str) -> RingElement {
        RingElement::parse(g.clone(), s).unwrap()
    }

    #[test]
    fn combine_examples() {
        let g = zt();
        let r = ring_combine(CombineOp::Add, &lit(&g, "t"), &Operand::Ring(lit(&g, "-t + t^2"))).unwrap();
        assert_eq!(r, lit(&g, "t^2"));
        assert_eq!(&lit(&g, "1 - t") * &lit(&g, "1 + t"), lit(&g, "1 - t^2"));
        let f = Arc::new(GroupDescription::free(&["a", "b"]));
        let ab = &lit(&f, "a") * &lit(&f, "b");
        let ba = &lit(&f, "b") * &lit(&f, "a");
        assert_eq!(ab, lit(&f, "a*b"));
        assert_ne!(ab, ba);
        let other = lit(&c2(), "g");
        assert!(matches!(
            ring_combine(CombineOp::Add, &ab, &Operand::Ring(other)),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn involution_examples() {
        let g = zt();
        assert_eq!(lit(&g, "t - t^2").bar(), lit(&g, "t^-1 - t^-2"));
        assert_eq!(lit(&g, "3 + t").involution(InvolutionMode::Extended), lit(&g, "t^-1"));
        let h = c2();
        assert_eq!(lit(&h, "g").bar(), lit(&h, "g"));
    }

    #[test]
    fn coefficient_examples() {
        let g = zt();
        let t2 = g.word(&[("t", 2)]).unwrap();
        assert_eq!(lit(&g, "-t + t^2").coefficient(&t2), BigInt::from(1));
        assert_eq!(lit(&g, "-t + t^2").coefficient_at_one(), BigInt::from(0));
        assert_eq!(lit(&g, "5 + 2*t").coefficient_at_one(), BigInt::from(5));
    }

    #[test]
    fn norm_examples() {
        let g = zt();
        assert_eq!(lit(&g, "t").norm_map().unwrap(), lit(&g, "t + t^-1"));
        assert_eq!(lit(&c2(), "g").norm_map().unwrap(), lit(&c2(), "2*g"));
        assert_eq!(
            lit(&g, "-t + t^2").norm_map().unwrap(),
            lit(&g, "-t - t^-1 + t^2 + t^-2")
        );
        assert!(matches!(lit(&g, "1 + t").norm_map(), Err(Error::Precondition(_))));
    }

    #[test]
    fn sigma_fixed_examples() {
        let g = zt();
        assert!(lit(&g, "t + t^-1").is_sigma_fixed().unwrap());
        assert!(!lit(&g, "t").is_sigma_fixed().unwrap());
        assert!(lit(&c2(), "g").is_sigma_fixed().unwrap());
    }

    #[test]
    fn conjugate_examples() {
        let g = zt();
        let t3 = g.word(&[("t", 3)]).unwrap();
        assert_eq!(lit(&g, "-t + t^2").conjugate(&t3), lit(&g, "-t + t^2"));
        let f = Arc::new(GroupDescription::free(&["a", "b"]));
        let a = f.word(&[("a", 1)]).unwrap();
        assert_eq!(lit(&f, "b").conjugate(&a), lit(&f, "a*b*a^-1"));
        assert_eq!(lit(&f, "1").conjugate(&a), lit(&f, "1"));
    }

    #[test]
    fn antisymmetric_reduction_examples() {
        let g = zt();
        assert_eq!(lit(&g, "t^-1").reduce_mod_antisymmetric().unwrap(), lit(&g, "t"));
        assert!(lit(&g, "t - t^-1").reduce_mod_antisymmetric().unwrap().is_zero());
        assert_eq!(lit(&c2(), "g").reduce_mod_antisymmetric().unwrap(), lit(&c2(), "g"));
    }

    #[test]
    fn f2_examples() {
        assert!(lit(&zt(), "t + t^-1").reduce_to_f2_torsion().unwrap().is_zero());
        let h = c2();
        let r = lit(&h, "g").reduce_to_f2_torsion().unwrap();
        assert_eq!(r.to_string(), "g");
        assert!(lit(&h, "2*g").reduce_to_f2_torsion().unwrap().is_zero());
        assert!(lit(&zt(), "t").reduce_to_f2_torsion().is_err());
    }

    #[test]
    fn display_and_parse() {
        let g = zt();
        assert_eq!(lit(&g, "t^2 - t").to_string(), "-t + t^2");
        assert_eq!(lit(&c2(), "g + g").to_string(), "2*g");
        assert_eq!(lit(&g, "t - t").to_string(), "0");
        let f = Arc::new(GroupDescription::free(&["a", "b"]));
        assert_eq!(lit(&f, "1 + a*b^-1").to_string(), "1 + a*b^-1");
        match RingElement::parse(g.clone(), "t + q") {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(RingElement::parse(g, "t +").is_err());
    }
}
