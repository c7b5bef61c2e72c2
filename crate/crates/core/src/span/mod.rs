//! Subgroups of `Z[π∖1]` given by finitely many core generators and
//! symbolic closure families, with windowed lattice membership and quotient
//! analysis.

pub mod lattice;

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::groupring::RingElement;
use crate::groups::{GroupDescription, GroupElement};

pub use lattice::{hermite_form, smith_invariants, F2Echelon, HermiteForm, SmithInvariants};

/// Upper bound on the number of coordinates of a windowed lattice.
pub const MAX_COORDINATES: usize = 600;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Completeness {
    Complete,
    LowerBound,
    UserAsserted,
}

impl Completeness {
    pub fn as_str(self) -> &'static str {
        match self {
            Completeness::Complete => "complete",
            Completeness::LowerBound => "lower-bound",
            Completeness::UserAsserted => "user-asserted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosureRule {
    /// Closed under `x ↦ g x g^-1`.
    ConjugationByPi,
    /// Contains the translate families listed in the span.
    NormOfModuleTranslates,
    /// Contains `g + g^-1` for every `g ≠ 1`.
    GPlusGInverseFamily,
    /// Contains every nontrivial `g` with `g = g^-1`.
    TwoTorsionElements,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `t^k` for `k ≥ min_power`, `t` the generator of an infinite cyclic `π`.
    Positive { min_power: i64 },
    /// Every `g ∈ π`.
    All,
}

/// `{ n(g · seed - coefficient at 1) }` over `g` in the given direction, `n` the
/// norm map when `normed` and the identity otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslateFamily {
    pub seed: RingElement,
    pub direction: Direction,
    pub normed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSpan {
    group: Arc<GroupDescription>,
    core: Vec<RingElement>,
    families: Vec<TranslateFamily>,
    rules: BTreeSet<ClosureRule>,
    completeness: Completeness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// Certificate: instances and integer coefficients summing to the input.
    In(Vec<(RingElement, BigInt)>),
    /// Provably not in the span.
    NotInWithinWindow,
    Unknown,
}

impl Membership {
    pub fn is_in(&self) -> bool {
        matches!(self, Membership::In(_))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Membership::In(_) => "in",
            Membership::NotInWithinWindow => "not-in",
            Membership::Unknown => "unknown",
        }
    }
}

/// Coordinate system of a quotient computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// `Z[π∖1]^σ`, one coordinate per orbit `{g, g^-1}`.
    SigmaFixed,
    /// `t·Z[t]` for infinite cyclic `π`, coordinates `t, …, t^W`.
    Positive,
    /// `Z[π∖1]` on the ball.
    Plain,
    /// `Z[π]` on the ball, identity included.
    GroupRing,
}

impl Ambient {
    pub fn as_str(self) -> &'static str {
        match self {
            Ambient::SigmaFixed => "sigma-fixed",
            Ambient::Positive => "positive",
            Ambient::Plain => "plain",
            Ambient::GroupRing => "group-ring",
        }
    }
}

/// Invariant factors of a windowed quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub ambient: Ambient,
    pub window: usize,
    pub ambient_rank: usize,
    pub relation_count: usize,
    pub relation_rank: usize,
    /// Torsion orders greater than 1, each dividing the next.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
    pub comparison_window: usize,
    pub comparison_free_rank: usize,
    pub comparison_torsion: Vec<BigInt>,
    pub stable: bool,
    pub notes: Vec<String>,
}

impl QuotientReport {
    /// Factors as strings, torsion first, e.g. `["Z/2", "Z/2", "Z"]`.
    pub fn factors(&self) -> Vec<String> {
        let mut v: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        v.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        v
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Distinct torsion orders.
    pub fn torsion_pattern(&self) -> BTreeSet<BigInt> {
        self.torsion.iter().cloned().collect()
    }
}

impl fmt::Display for QuotientReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        let mut counts: BTreeMap<&BigInt, usize> = BTreeMap::new();
        for d in &self.torsion {
            *counts.entry(d).or_default() += 1;
        }
        for (d, c) in counts {
            parts.push(if c == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{c}") });
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        f.write_str(&parts.join(" + "))
    }
}

struct Coordinates {
    keys: Vec<GroupElement>,
    index: BTreeMap<GroupElement, usize>,
}

impl Coordinates {
    fn new(group: &GroupDescription, mut keys: Vec<GroupElement>) -> Self {
        keys.sort_by_cached_key(|g| Reverse(group.sort_key(g)));
        let index = keys.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        Coordinates { keys, index }
    }

    fn vector(&self, r: &RingElement) -> Option<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.keys.len()];
        for (g, c) in r.terms() {
            v[*self.index.get(g)?] = c.clone();
        }
        Some(v)
    }
}

impl SubgroupSpan {
    /// The zero subgroup.
    pub fn zero(group: Arc<GroupDescription>) -> Self {
        SubgroupSpan {
            group,
            core: Vec::new(),
            families: Vec::new(),
            rules: BTreeSet::new(),
            completeness: Completeness::Complete,
        }
    }

    /// `f · Z[t]` for infinite cyclic `π` and `f ∈ t·Z[t]`.
    pub fn principal_ideal(f: RingElement) -> Result<Self> {
        let group = f.group_arc().clone();
        if group.infinite_cyclic_generator().is_none() {
            return Err(Error::Precondition("principal ideals need an infinite cyclic group".into()));
        }
        if f.support().any(|g| group.cyclic_exponent(g).unwrap_or(0) < 1) {
            return Err(Error::Precondition(format!("{f} is not in t·Z[t]")));
        }
        let mut s = SubgroupSpan::zero(group);
        if !f.is_zero() {
            s.core.push(f.clone());
            s.families.push(TranslateFamily {
                seed: f,
                direction: Direction::Positive { min_power: 1 },
                normed: false,
            });
            s.rules.insert(ClosureRule::NormOfModuleTranslates);
        }
        Ok(s)
    }

    /// All of `Z[π∖1]^σ`.
    pub fn sigma_fixed_part(group: Arc<GroupDescription>) -> Self {
        let mut s = SubgroupSpan::zero(group);
        s.rules.insert(ClosureRule::GPlusGInverseFamily);
        s.rules.insert(ClosureRule::TwoTorsionElements);
        s
    }

    pub fn group(&self) -> &GroupDescription {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupDescription> {
        &self.group
    }

    pub fn core(&self) -> &[RingElement] {
        &self.core
    }

    pub fn families(&self) -> &[TranslateFamily] {
        &self.families
    }

    pub fn rules(&self) -> &BTreeSet<ClosureRule> {
        &self.rules
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    pub fn set_completeness(&mut self, c: Completeness) {
        self.completeness = c;
    }

    fn check_group(&self, r: &RingElement) -> Result<()> {
        if r.group() == &*self.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch("element and span over different groups".into()))
        }
    }

    /// Adds a core generator. Zero is ignored, as are repeats.
    pub fn add_core(&mut self, r: RingElement) -> Result<()> {
        self.check_group(&r)?;
        if !r.coefficient_at_one().is_zero() {
            return Err(Error::Precondition(format!("generator {r} has a coefficient at 1")));
        }
        if !r.is_zero() && !self.core.contains(&r) {
            self.core.push(r);
        }
        Ok(())
    }

    pub fn add_family(&mut self, family: TranslateFamily) -> Result<()> {
        self.check_group(&family.seed)?;
        if let Direction::Positive { .. } = family.direction {
            if self.group.infinite_cyclic_generator().is_none() {
                return Err(Error::Precondition("positive translates need an infinite cyclic group".into()));
            }
        }
        if family.seed.is_zero() || self.families.contains(&family) {
            return Ok(());
        }
        self.families.push(family);
        self.rules.insert(ClosureRule::NormOfModuleTranslates);
        Ok(())
    }

    pub fn add_rule(&mut self, rule: ClosureRule) {
        self.rules.insert(rule);
    }

    fn conjugation_active(&self) -> bool {
        self.rules.contains(&ClosureRule::ConjugationByPi) && !self.group.is_abelian()
    }

    fn has_gplus(&self) -> bool {
        self.rules.contains(&ClosureRule::GPlusGInverseFamily)
    }

    fn has_torsion_rule(&self) -> bool {
        self.rules.contains(&ClosureRule::TwoTorsionElements) && !self.group.is_torsion_free()
    }

    /// True when every generator the span can produce is σ-fixed.
    pub fn is_sigma_generated(&self) -> bool {
        self.core.iter().all(|r| r.is_sigma_fixed().unwrap_or(false))
            && self
                .families
                .iter()
                .all(|f| f.normed)
    }

    /// True when the span contains all of `Z[π∖1]^σ`.
    pub fn contains_all_sigma_fixed(&self) -> bool {
        self.has_gplus() && (self.group.is_torsion_free() || self.has_torsion_rule())
    }

    fn has_infinite_closure(&self) -> bool {
        if self.group.is_finite() {
            return false;
        }
        !self.families.is_empty() || self.has_gplus() || self.conjugation_active() || self.has_torsion_rule()
    }

    fn family_instance(&self, fam: &TranslateFamily, g: &GroupElement) -> RingElement {
        let r = fam.seed.left_translate(g).without_identity();
        if fam.normed {
            r.norm_map().expect("identity coefficient removed")
        } else {
            r
        }
    }

    fn family_translates(&self, fam: &TranslateFamily, window: usize) -> Vec<GroupElement> {
        let reach = window + fam.seed.max_word_length();
        match fam.direction {
            Direction::All => self.group.enumerate(reach),
            Direction::Positive { min_power } => {
                (min_power..=reach as i64)
                    .map(|k| self.group.generator_power(0, k).expect("checked on insertion"))
                    .collect()
            }
        }
    }

    /// Every instance of the closure whose support has word length at most
    /// `window`, plus all core generators. Conjugates are taken by elements of
    /// length at most `conj_budget`.
    pub fn materialize(&self, window: usize, conj_budget: usize) -> Vec<RingElement> {
        let mut seen: HashSet<RingElement> = HashSet::new();
        let mut out: Vec<RingElement> = Vec::new();
        let mut push = |r: RingElement, out: &mut Vec<RingElement>| {
            if !r.is_zero() && seen.insert(r.clone()) {
                out.push(r);
            }
        };
        for r in &self.core {
            push(r.clone(), &mut out);
        }
        for fam in &self.families {
            for g in self.family_translates(fam, window) {
                let r = self.family_instance(fam, &g);
                if r.max_word_length() <= window {
                    push(r, &mut out);
                }
            }
        }
        if self.has_gplus() || self.has_torsion_rule() {
            for g in self.group.enumerate(window) {
                if self.group.is_identity(&g) {
                    continue;
                }
                let inv = self.group.invert(&g);
                if inv == g {
                    if self.has_torsion_rule() {
                        push(RingElement::monomial(self.group.clone(), g.clone(), 1), &mut out);
                    }
                    if self.has_gplus() {
                        push(RingElement::monomial(self.group.clone(), g, 2), &mut out);
                    }
                } else if self.has_gplus() && self.group.orbit_representative(&g) == g {
                    let r = RingElement::from_terms(self.group.clone(), [(g, 1), (inv, 1)]);
                    push(r, &mut out);
                }
            }
        }
        if self.conjugation_active() {
            let conj = self.group.enumerate(conj_budget);
            let base = out.clone();
            for r in &base {
                for h in &conj {
                    let c = r.conjugate(h);
                    if c.max_word_length() <= window {
                        push(c, &mut out);
                    }
                }
            }
        }
        out
    }

    /// Largest window `≤ requested` whose ball fits the coordinate cap, but
    /// never below `floor`.
    fn effective_window(&self, requested: usize, floor: usize) -> usize {
        if self.group.is_finite() {
            return requested.min(self.group.diameter().unwrap_or(0)).max(floor);
        }
        let mut w = requested;
        while w > floor && self.group.enumerate(w).len() > MAX_COORDINATES {
            w -= 1;
        }
        w.max(floor)
    }

    /// Exactness of windowed membership for an element of word length `len`.
    fn window_is_exact(&self, window: usize, len: usize) -> bool {
        if let Some(d) = self.group.diameter() {
            return window >= d;
        }
        let core_len = self.core.iter().map(|r| r.max_word_length()).max().unwrap_or(0);
        if !self.has_infinite_closure() {
            return window >= core_len.max(len);
        }
        if self.group.infinite_cyclic_generator().is_some()
            && !self.has_gplus()
            && self.families.len() == 1
        {
            let fam = &self.families[0];
            let nonneg = fam.seed.support().all(|g| self.group.cyclic_exponent(g).unwrap_or(-1) >= 0);
            if let Direction::Positive { min_power } = fam.direction {
                return nonneg && min_power >= 1 && window >= core_len.max(len);
            }
        }
        false
    }

    /// Decides whether `x` lies in the span, searching instances with support
    /// of word length at most `window`.
    pub fn membership(&self, x: &RingElement, window: usize) -> Result<Membership> {
        self.check_group(x)?;
        if x.is_zero() {
            return Ok(Membership::In(Vec::new()));
        }
        if !x.coefficient_at_one().is_zero() {
            return Ok(Membership::NotInWithinWindow);
        }
        let sigma_generated = self.is_sigma_generated();
        if sigma_generated && !x.is_sigma_fixed()? {
            return Ok(Membership::NotInWithinWindow);
        }
        if self.contains_all_sigma_fixed() {
            return Ok(if x.is_sigma_fixed()? {
                Membership::In(self.sigma_decomposition(x))
            } else {
                Membership::NotInWithinWindow
            });
        }
        if self.has_gplus() && sigma_generated && !self.conjugation_active() && self.families.is_empty() {
            return self.torsion_membership(x);
        }
        let w = self.effective_window(window.max(x.max_word_length()), x.max_word_length());
        let instances = self.materialize(w, w);
        let coords = Coordinates::new(&self.group, self.group.enumerate(w));
        let inside: Vec<&RingElement> = instances.iter().filter(|r| r.max_word_length() <= w).collect();
        let rows: Vec<Vec<BigInt>> = inside.iter().map(|r| coords.vector(r).expect("inside window")).collect();
        let h = hermite_form(&rows, coords.keys.len());
        let xv = coords.vector(x).expect("window covers x");
        if let Some(c) = h.solve(&xv) {
            let cert = inside
                .into_iter()
                .zip(c)
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (r.clone(), c))
                .collect();
            return Ok(Membership::In(cert));
        }
        let all_core_inside = self.core.iter().all(|r| r.max_word_length() <= w);
        if all_core_inside && self.window_is_exact(w, x.max_word_length()) {
            Ok(Membership::NotInWithinWindow)
        } else {
            Ok(Membership::Unknown)
        }
    }

    /// Writes a σ-fixed `x` as a sum of `g + g^-1` and self-inverse `g`.
    fn sigma_decomposition(&self, x: &RingElement) -> Vec<(RingElement, BigInt)> {
        let mut cert = Vec::new();
        for (g, c) in x.sorted_terms() {
            let inv = self.group.invert(g);
            if inv == *g {
                cert.push((RingElement::monomial(self.group.clone(), g.clone(), 1), c.clone()));
            } else if self.group.orbit_representative(g) == *g {
                cert.push((
                    RingElement::from_terms(self.group.clone(), [(g.clone(), 1), (inv, 1)]),
                    c.clone(),
                ));
            }
        }
        cert
    }

    fn torsion_part(&self, r: &RingElement) -> RingElement {
        RingElement::from_terms(
            self.group.clone(),
            r.terms()
                .filter(|(g, _)| self.group.is_involution_fixed(g))
                .map(|(g, c)| (g.clone(), c.clone())),
        )
    }

    /// Membership for `core + {g + g^-1}`: only the self-inverse coordinates
    /// carry information, and those are finitely many.
    fn torsion_membership(&self, x: &RingElement) -> Result<Membership> {
        let xt = self.torsion_part(x);
        let cores: Vec<RingElement> = self.core.iter().map(|r| self.torsion_part(r)).collect();
        let mut keys: BTreeSet<GroupElement> = xt.support().cloned().collect();
        for c in &cores {
            keys.extend(c.support().cloned());
        }
        let coords = Coordinates::new(&self.group, keys.into_iter().collect());
        let mut rows: Vec<Vec<BigInt>> = cores.iter().map(|r| coords.vector(r).unwrap()).collect();
        for i in 0..coords.keys.len() {
            let mut v = vec![BigInt::zero(); coords.keys.len()];
            v[i] = BigInt::from(2);
            rows.push(v);
        }
        let h = hermite_form(&rows, coords.keys.len());
        let Some(c) = h.solve(&coords.vector(&xt).unwrap()) else {
            return Ok(Membership::NotInWithinWindow);
        };
        let mut cert = Vec::new();
        let mut rest = x.clone();
        for (r, k) in self.core.iter().zip(c) {
            if k.is_zero() {
                continue;
            }
            rest = &rest - &r.scale(&k);
            cert.push((r.clone(), k));
        }
        for (g, c) in rest.sorted_terms() {
            let inv = self.group.invert(g);
            if inv == *g {
                // an even multiple of a self-inverse element: 2g = g + g^-1
                cert.push((RingElement::monomial(self.group.clone(), g.clone(), 2), c / 2));
            } else if self.group.orbit_representative(g) == *g {
                cert.push((
                    RingElement::from_terms(self.group.clone(), [(g.clone(), 1), (inv, 1)]),
                    c.clone(),
                ));
            }
        }
        Ok(Membership::In(cert))
    }

    /// Canonical representative of `x` modulo the span, when membership is
    /// exactly decidable for `x`.
    pub fn reduce(&self, x: &RingElement, window: usize) -> Result<Option<RingElement>> {
        self.check_group(x)?;
        if self.core.is_empty() && self.families.is_empty() && !self.has_gplus() && !self.has_torsion_rule() {
            return Ok(Some(x.clone()));
        }
        if self.contains_all_sigma_fixed() {
            // fold each orbit onto its representative; self-inverse elements vanish
            let mut r = RingElement::zero(self.group.clone());
            for (g, c) in x.terms() {
                if self.group.is_identity(g) {
                    r.add_term(g.clone(), c.clone());
                    continue;
                }
                let inv = self.group.invert(g);
                if inv == *g {
                    continue;
                }
                let rep = self.group.orbit_representative(g);
                if rep == *g {
                    r.add_term(g.clone(), c.clone());
                } else {
                    r.add_term(rep, -c);
                }
            }
            return Ok(Some(r));
        }
        let len = x.max_word_length();
        let w = self.effective_window(window.max(len), len);
        if !self.core.iter().all(|r| r.max_word_length() <= w) || !self.window_is_exact(w, len) {
            return Ok(None);
        }
        let instances = self.materialize(w, w);
        let coords = Coordinates::new(&self.group, self.group.enumerate(w));
        let rows: Vec<Vec<BigInt>> = instances
            .iter()
            .filter(|r| r.max_word_length() <= w)
            .map(|r| coords.vector(r).unwrap())
            .collect();
        let h = hermite_form(&rows, coords.keys.len());
        let (rem, _) = h.reduce(&coords.vector(x).unwrap());
        Ok(Some(RingElement::from_terms(
            self.group.clone(),
            coords.keys.iter().cloned().zip(rem),
        )))
    }

    fn ambient_coordinates(&self, ambient: Ambient, window: usize) -> Result<Vec<GroupElement>> {
        let ball = self.group.enumerate(window);
        Ok(match ambient {
            Ambient::GroupRing => ball,
            Ambient::Plain => ball.into_iter().filter(|g| !self.group.is_identity(g)).collect(),
            Ambient::SigmaFixed => ball
                .into_iter()
                .filter(|g| !self.group.is_identity(g) && self.group.orbit_representative(g) == *g)
                .collect(),
            Ambient::Positive => {
                if self.group.infinite_cyclic_generator().is_none() {
                    return Err(Error::Precondition("positive ambient needs an infinite cyclic group".into()));
                }
                (1..=window as i64).map(|k| self.group.generator_power(0, k).unwrap()).collect()
            }
        })
    }

    fn project(&self, ambient: Ambient, r: &RingElement) -> RingElement {
        match ambient {
            Ambient::SigmaFixed => RingElement::from_terms(
                self.group.clone(),
                r.terms()
                    .filter(|(g, _)| self.group.orbit_representative(g) == **g)
                    .map(|(g, c)| (g.clone(), c.clone())),
            ),
            Ambient::Positive => RingElement::from_terms(
                self.group.clone(),
                r.terms()
                    .filter(|(g, _)| self.group.cyclic_exponent(g).unwrap_or(0) >= 1)
                    .map(|(g, c)| (g.clone(), c.clone())),
            ),
            _ => r.clone(),
        }
    }

    fn quotient_at(&self, ambient: Ambient, window: usize) -> Result<(SmithInvariants, usize, usize)> {
        if ambient == Ambient::SigmaFixed && !self.is_sigma_generated() {
            return Err(Error::Precondition("σ-fixed ambient needs σ-fixed generators".into()));
        }
        for r in &self.core {
            if r.max_word_length() > window {
                return Err(Error::Window(format!(
                    "generator {r} has support of length {} beyond window {window}",
                    r.max_word_length()
                )));
            }
        }
        let keys = self.ambient_coordinates(ambient, window)?;
        let coords = Coordinates::new(&self.group, keys);
        let mut rows = Vec::new();
        for r in self.materialize(window, window) {
            if r.max_word_length() > window {
                continue;
            }
            let p = self.project(ambient, &r);
            if let Some(v) = coords.vector(&p) {
                rows.push(v);
            }
        }
        let n = coords.keys.len();
        let count = rows.len();
        Ok((smith_invariants(&rows, n), n, count))
    }

    /// Invariant factors of the windowed quotient `ambient / span`, compared
    /// against the window of twice the size to detect a stable pattern.
    pub fn quotient_structure(&self, ambient: Ambient, window: usize) -> Result<QuotientReport> {
        let w = self.effective_window(window, 0);
        let mut notes = Vec::new();
        if w < window && !self.group.is_finite() {
            notes.push(format!("window reduced from {window} to {w} to bound the lattice size"));
        }
        let (s, n, count) = self.quotient_at(ambient, w)?;
        let w2 = self.effective_window(2 * w.max(1), w);
        let (s2, _, _) = self.quotient_at(ambient, w2)?;
        let torsion = s.torsion();
        let torsion2 = s2.torsion();
        let stable = s.free_rank() == s2.free_rank()
            && torsion.iter().collect::<BTreeSet<_>>() == torsion2.iter().collect::<BTreeSet<_>>();
        let exhaustive = self.group.diameter().is_some_and(|d| w >= d);
        if exhaustive {
            notes.push("the window covers the whole finite group; the quotient is exact".into());
        } else if w2 == w {
            notes.push("comparison window could not grow; stability is not established".into());
        }
        if torsion.iter().any(|d| d.is_negative()) {
            unreachable!("invariant factors are absolute values");
        }
        Ok(QuotientReport {
            ambient,
            window: w,
            ambient_rank: n,
            relation_count: count,
            relation_rank: s.rank(),
            free_rank: s.free_rank(),
            torsion,
            comparison_window: w2,
            comparison_free_rank: s2.free_rank(),
            comparison_torsion: torsion2,
            stable: exhaustive || (stable && w2 > w),
            notes,
        })
    }
}

impl fmt::Display for SubgroupSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.core.iter().map(|r| format!("({r})")).collect();
        for fam in &self.families {
            let dir = match fam.direction {
                Direction::All => "g in pi".to_string(),
                Direction::Positive { min_power } => format!("t^k, k >= {min_power}"),
            };
            let body = if fam.normed { "norm(g*seed)" } else { "g*seed" };
            parts.push(format!("{{{body} : seed = {}, {dir}}}", fam.seed));
        }
        if self.has_gplus() {
            parts.push("{g + g^-1}".into());
        }
        if self.has_torsion_rule() {
            parts.push("{g : g = g^-1}".into());
        }
        if self.conjugation_active() {
            parts.push("conjugates".into());
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "<{}>", parts.join(", "))
        }
    }
}
