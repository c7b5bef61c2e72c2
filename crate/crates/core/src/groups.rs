//! Normal forms and bounded enumeration for the supported fundamental groups.
//!
//! Every supported group has a decidable canonical form, so equality of
//! [`GroupElement`]s is structural equality. Element order for reports and
//! for orbit representatives is length-lexicographic over the global
//! generator order, with `x` before `x^-1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Maximum nesting depth of product constructions.
pub const MAX_DEPTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDescription {
    Trivial,
    FreeAbelian { generators: Vec<String> },
    Cyclic { generator: String, modulus: u64 },
    Free { generators: Vec<String> },
    DirectProduct(Vec<GroupDescription>),
    FreeProduct(Vec<GroupDescription>),
}

/// Canonical normal form of a group element. The variant mirrors the
/// [`GroupDescription`] it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Trivial,
    /// Exponent vector.
    FreeAbelian(Vec<i64>),
    /// Residue in `[0, n)`.
    Cyclic(u64),
    /// Freely reduced word of (generator index, nonzero exponent) syllables.
    Free(Vec<(usize, i64)>),
    Product(Vec<GroupElement>),
    /// Alternating syllables (factor index, nontrivial factor element).
    FreeProduct(Vec<(usize, GroupElement)>),
}

/// One letter of a canonical word: global generator index and whether it is inverted.
pub type Letter = (usize, bool);

impl GroupDescription {
    pub fn trivial() -> Self {
        GroupDescription::Trivial
    }

    pub fn infinite_cyclic(name: &str) -> Self {
        GroupDescription::FreeAbelian {
            generators: vec![name.to_string()],
        }
    }

    pub fn free_abelian<S: AsRef<str>>(names: &[S]) -> Self {
        GroupDescription::FreeAbelian {
            generators: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn cyclic(name: &str, modulus: u64) -> Self {
        GroupDescription::Cyclic {
            generator: name.to_string(),
            modulus,
        }
    }

    pub fn free<S: AsRef<str>>(names: &[S]) -> Self {
        GroupDescription::Free {
            generators: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    /// Free product with trivial factors dropped. A single remaining factor
    /// is returned as is.
    pub fn free_product(factors: Vec<GroupDescription>) -> Self {
        let mut kept: Vec<GroupDescription> = factors
            .into_iter()
            .filter(|f| *f != GroupDescription::Trivial)
            .collect();
        match kept.len() {
            0 => GroupDescription::Trivial,
            1 => kept.pop().unwrap(),
            _ => GroupDescription::FreeProduct(kept),
        }
    }

    pub fn direct_product(factors: Vec<GroupDescription>) -> Self {
        let mut kept: Vec<GroupDescription> = factors
            .into_iter()
            .filter(|f| *f != GroupDescription::Trivial)
            .collect();
        match kept.len() {
            0 => GroupDescription::Trivial,
            1 => kept.pop().unwrap(),
            _ => GroupDescription::DirectProduct(kept),
        }
    }

    /// Checks distinct generator names, positive ranks, moduli and the depth bound.
    pub fn validate(&self) -> Result<()> {
        if self.depth() > MAX_DEPTH {
            return Err(Error::Validation(format!(
                "group nesting depth {} exceeds {}",
                self.depth(),
                MAX_DEPTH
            )));
        }
        self.validate_shape()?;
        let names = self.generator_names();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Validation(format!("duplicate generator name `{n}`")));
            }
        }
        Ok(())
    }

    fn validate_shape(&self) -> Result<()> {
        match self {
            GroupDescription::Trivial => Ok(()),
            GroupDescription::FreeAbelian { generators } | GroupDescription::Free { generators } => {
                if generators.is_empty() {
                    Err(Error::Validation("rank must be positive".into()))
                } else {
                    Ok(())
                }
            }
            GroupDescription::Cyclic { modulus, .. } => {
                if *modulus < 2 {
                    Err(Error::Validation(format!("cyclic modulus {modulus} < 2")))
                } else {
                    Ok(())
                }
            }
            GroupDescription::DirectProduct(fs) | GroupDescription::FreeProduct(fs) => {
                if fs.is_empty() {
                    return Err(Error::Validation("empty product".into()));
                }
                fs.iter().try_for_each(|f| f.validate_shape())
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            GroupDescription::DirectProduct(fs) | GroupDescription::FreeProduct(fs) => {
                1 + fs.iter().map(|f| f.depth()).max().unwrap_or(0)
            }
            _ => 1,
        }
    }

    pub fn generator_count(&self) -> usize {
        match self {
            GroupDescription::Trivial => 0,
            GroupDescription::FreeAbelian { generators } | GroupDescription::Free { generators } => {
                generators.len()
            }
            GroupDescription::Cyclic { .. } => 1,
            GroupDescription::DirectProduct(fs) | GroupDescription::FreeProduct(fs) => {
                fs.iter().map(|f| f.generator_count()).sum()
            }
        }
    }

    /// Generator names in global order.
    pub fn generator_names(&self) -> Vec<String> {
        match self {
            GroupDescription::Trivial => vec![],
            GroupDescription::FreeAbelian { generators } | GroupDescription::Free { generators } => {
                generators.clone()
            }
            GroupDescription::Cyclic { generator, .. } => vec![generator.clone()],
            GroupDescription::DirectProduct(fs) | GroupDescription::FreeProduct(fs) => {
                fs.iter().flat_map(|f| f.generator_names()).collect()
            }
        }
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names().iter().position(|n| n == name)
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupDescription::Trivial => GroupElement::Trivial,
            GroupDescription::FreeAbelian { generators } => {
                GroupElement::FreeAbelian(vec![0; generators.len()])
            }
            GroupDescription::Cyclic { .. } => GroupElement::Cyclic(0),
            GroupDescription::Free { .. } => GroupElement::Free(vec![]),
            GroupDescription::DirectProduct(fs) => {
                GroupElement::Product(fs.iter().map(|f| f.identity()).collect())
            }
            GroupDescription::FreeProduct(_) => GroupElement::FreeProduct(vec![]),
        }
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        *a == self.identity()
    }

    /// `gen^exponent` for the generator with the given global index.
    pub fn generator_power(&self, index: usize, exponent: i64) -> Result<GroupElement> {
        if index >= self.generator_count() {
            return Err(Error::Malformed(format!("generator index {index} out of range")));
        }
        Ok(self.power_unchecked(index, exponent))
    }

    fn power_unchecked(&self, index: usize, exponent: i64) -> GroupElement {
        match self {
            GroupDescription::Trivial => GroupElement::Trivial,
            GroupDescription::FreeAbelian { generators } => {
                let mut v = vec![0; generators.len()];
                v[index] = exponent;
                GroupElement::FreeAbelian(v)
            }
            GroupDescription::Cyclic { modulus, .. } => {
                GroupElement::Cyclic(exponent.rem_euclid(*modulus as i64) as u64)
            }
            GroupDescription::Free { .. } => {
                if exponent == 0 {
                    GroupElement::Free(vec![])
                } else {
                    GroupElement::Free(vec![(index, exponent)])
                }
            }
            GroupDescription::DirectProduct(fs) => {
                let mut offset = 0;
                let mut comps = Vec::with_capacity(fs.len());
                for f in fs {
                    let n = f.generator_count();
                    if index >= offset && index < offset + n {
                        comps.push(f.power_unchecked(index - offset, exponent));
                    } else {
                        comps.push(f.identity());
                    }
                    offset += n;
                }
                GroupElement::Product(comps)
            }
            GroupDescription::FreeProduct(fs) => {
                let mut offset = 0;
                for (k, f) in fs.iter().enumerate() {
                    let n = f.generator_count();
                    if index < offset + n {
                        let e = f.power_unchecked(index - offset, exponent);
                        return if f.is_identity(&e) {
                            GroupElement::FreeProduct(vec![])
                        } else {
                            GroupElement::FreeProduct(vec![(k, e)])
                        };
                    }
                    offset += n;
                }
                unreachable!("index checked by caller")
            }
        }
    }

    /// Checks that `a` is a well-formed canonical element of this group.
    pub fn check(&self, a: &GroupElement) -> Result<()> {
        let bad = || Err(Error::GroupMismatch(format!("{a:?} is not an element of {self:?}")));
        match (self, a) {
            (GroupDescription::Trivial, GroupElement::Trivial) => Ok(()),
            (GroupDescription::FreeAbelian { generators }, GroupElement::FreeAbelian(v)) => {
                if v.len() == generators.len() {
                    Ok(())
                } else {
                    bad()
                }
            }
            (GroupDescription::Cyclic { modulus, .. }, GroupElement::Cyclic(k)) => {
                if k < modulus {
                    Ok(())
                } else {
                    bad()
                }
            }
            (GroupDescription::Free { generators }, GroupElement::Free(w)) => {
                let ok = w.iter().all(|&(g, e)| g < generators.len() && e != 0)
                    && w.windows(2).all(|p| p[0].0 != p[1].0);
                if ok {
                    Ok(())
                } else {
                    bad()
                }
            }
            (GroupDescription::DirectProduct(fs), GroupElement::Product(cs)) => {
                if fs.len() != cs.len() {
                    return bad();
                }
                fs.iter().zip(cs).try_for_each(|(f, c)| f.check(c))
            }
            (GroupDescription::FreeProduct(fs), GroupElement::FreeProduct(syl)) => {
                for (i, (k, e)) in syl.iter().enumerate() {
                    if *k >= fs.len() || fs[*k].is_identity(e) {
                        return bad();
                    }
                    if i > 0 && syl[i - 1].0 == *k {
                        return bad();
                    }
                    fs[*k].check(e)?;
                }
                Ok(())
            }
            _ => bad(),
        }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupDescription::Trivial, _, _) => GroupElement::Trivial,
            (GroupDescription::FreeAbelian { .. }, GroupElement::FreeAbelian(x), GroupElement::FreeAbelian(y)) => {
                GroupElement::FreeAbelian(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (GroupDescription::Cyclic { modulus, .. }, GroupElement::Cyclic(x), GroupElement::Cyclic(y)) => {
                GroupElement::Cyclic((x + y) % modulus)
            }
            (GroupDescription::Free { .. }, GroupElement::Free(x), GroupElement::Free(y)) => {
                let mut out = x.clone();
                for &(g, e) in y {
                    match out.last_mut() {
                        Some(last) if last.0 == g => {
                            last.1 += e;
                            if last.1 == 0 {
                                out.pop();
                            }
                        }
                        _ => out.push((g, e)),
                    }
                }
                GroupElement::Free(out)
            }
            (GroupDescription::DirectProduct(fs), GroupElement::Product(x), GroupElement::Product(y)) => {
                GroupElement::Product(
                    fs.iter()
                        .zip(x.iter().zip(y))
                        .map(|(f, (p, q))| f.mul_unchecked(p, q))
                        .collect(),
                )
            }
            (GroupDescription::FreeProduct(fs), GroupElement::FreeProduct(x), GroupElement::FreeProduct(y)) => {
                let mut out = x.clone();
                let mut rest = y.iter();
                for (k, e) in rest.by_ref() {
                    match out.last_mut() {
                        Some(last) if last.0 == *k => {
                            let m = fs[*k].mul_unchecked(&last.1, e);
                            if fs[*k].is_identity(&m) {
                                out.pop();
                                continue;
                            }
                            last.1 = m;
                            break;
                        }
                        _ => {
                            out.push((*k, e.clone()));
                            break;
                        }
                    }
                }
                out.extend(rest.cloned());
                GroupElement::FreeProduct(out)
            }
            _ => panic!("element shapes do not match {self:?}"),
        }
    }

    pub fn invert(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupDescription::Trivial, _) => GroupElement::Trivial,
            (_, GroupElement::FreeAbelian(v)) => GroupElement::FreeAbelian(v.iter().map(|e| -e).collect()),
            (GroupDescription::Cyclic { modulus, .. }, GroupElement::Cyclic(k)) => {
                GroupElement::Cyclic((modulus - k) % modulus)
            }
            (_, GroupElement::Free(w)) => GroupElement::Free(w.iter().rev().map(|&(g, e)| (g, -e)).collect()),
            (GroupDescription::DirectProduct(fs), GroupElement::Product(cs)) => {
                GroupElement::Product(fs.iter().zip(cs).map(|(f, c)| f.invert(c)).collect())
            }
            (GroupDescription::FreeProduct(fs), GroupElement::FreeProduct(syl)) => GroupElement::FreeProduct(
                syl.iter().rev().map(|(k, e)| (*k, fs[*k].invert(e))).collect(),
            ),
            _ => panic!("element {a:?} does not belong to {self:?}"),
        }
    }

    pub fn conjugate(&self, g: &GroupElement, a: &GroupElement) -> GroupElement {
        let ga = self.mul_unchecked(g, a);
        self.mul_unchecked(&ga, &self.invert(g))
    }

    /// Canonical word as a letter sequence (shortest word for every variant).
    pub fn letters(&self, a: &GroupElement) -> Vec<Letter> {
        let mut out = Vec::new();
        self.push_letters(a, 0, &mut out);
        out
    }

    fn push_letters(&self, a: &GroupElement, offset: usize, out: &mut Vec<Letter>) {
        match (self, a) {
            (GroupDescription::Trivial, _) => {}
            (_, GroupElement::FreeAbelian(v)) => {
                for (i, &e) in v.iter().enumerate() {
                    for _ in 0..e.unsigned_abs() {
                        out.push((offset + i, e < 0));
                    }
                }
            }
            (GroupDescription::Cyclic { modulus, .. }, GroupElement::Cyclic(k)) => {
                let (count, inv) = if *k <= modulus - k { (*k, false) } else { (modulus - k, true) };
                for _ in 0..count {
                    out.push((offset, inv));
                }
            }
            (_, GroupElement::Free(w)) => {
                for &(g, e) in w {
                    for _ in 0..e.unsigned_abs() {
                        out.push((offset + g, e < 0));
                    }
                }
            }
            (GroupDescription::DirectProduct(fs), GroupElement::Product(cs)) => {
                let mut off = offset;
                for (f, c) in fs.iter().zip(cs) {
                    f.push_letters(c, off, out);
                    off += f.generator_count();
                }
            }
            (GroupDescription::FreeProduct(fs), GroupElement::FreeProduct(syl)) => {
                let offsets: Vec<usize> = fs
                    .iter()
                    .scan(offset, |acc, f| {
                        let o = *acc;
                        *acc += f.generator_count();
                        Some(o)
                    })
                    .collect();
                for (k, e) in syl {
                    fs[*k].push_letters(e, offsets[*k], out);
                }
            }
            _ => panic!("element {a:?} does not belong to {self:?}"),
        }
    }

    /// Word length of the canonical (geodesic) word.
    pub fn word_length(&self, a: &GroupElement) -> usize {
        self.letters(a).len()
    }

    /// Length-lexicographic comparison, the order used by [`Self::enumerate`].
    pub fn compare(&self, a: &GroupElement, b: &GroupElement) -> Ordering {
        let la = self.letters(a);
        let lb = self.letters(b);
        la.len().cmp(&lb.len()).then_with(|| la.cmp(&lb))
    }

    pub fn sort_key(&self, a: &GroupElement) -> (usize, Vec<Letter>) {
        let l = self.letters(a);
        (l.len(), l)
    }

    /// The enumerate-smaller of `g` and `g^-1`.
    pub fn orbit_representative(&self, g: &GroupElement) -> GroupElement {
        let inv = self.invert(g);
        if self.compare(&inv, g) == Ordering::Less {
            inv
        } else {
            g.clone()
        }
    }

    /// All elements of word length at most `max_length`, identity first, in
    /// length-lexicographic order.
    pub fn enumerate(&self, max_length: usize) -> Vec<GroupElement> {
        let gens: Vec<GroupElement> = (0..self.generator_count())
            .flat_map(|i| [self.power_unchecked(i, 1), self.power_unchecked(i, -1)])
            .collect();
        let id = self.identity();
        let mut seen: HashSet<GroupElement> = HashSet::new();
        seen.insert(id.clone());
        let mut all = vec![id];
        let mut frontier = all.clone();
        for _ in 0..max_length {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &gens {
                    let y = self.mul_unchecked(x, g);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by_cached_key(|e| self.sort_key(e));
        all
    }

    pub fn is_finite(&self) -> bool {
        match self {
            GroupDescription::Trivial | GroupDescription::Cyclic { .. } => true,
            GroupDescription::FreeAbelian { .. } | GroupDescription::Free { .. } => false,
            GroupDescription::DirectProduct(fs) => fs.iter().all(|f| f.is_finite()),
            GroupDescription::FreeProduct(fs) => {
                let nontrivial: Vec<_> = fs.iter().filter(|f| **f != GroupDescription::Trivial).collect();
                nontrivial.len() <= 1 && nontrivial.iter().all(|f| f.is_finite())
            }
        }
    }

    /// Largest word length of an element, for finite groups.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        Some(match self {
            GroupDescription::Trivial => 0,
            GroupDescription::Cyclic { modulus, .. } => (*modulus / 2) as usize,
            GroupDescription::DirectProduct(fs) | GroupDescription::FreeProduct(fs) => {
                fs.iter().map(|f| f.diameter().unwrap_or(0)).sum()
            }
            _ => unreachable!(),
        })
    }

    pub fn is_torsion_free(&self) -> bool {
        match self {
            GroupDescription::Trivial | GroupDescription::FreeAbelian { .. } | GroupDescription::Free { .. } => true,
            GroupDescription::Cyclic { .. } => false,
            GroupDescription::DirectProduct(fs) | GroupDescription::FreeProduct(fs) => {
                fs.iter().all(|f| f.is_torsion_free())
            }
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GroupDescription::Trivial | GroupDescription::FreeAbelian { .. } | GroupDescription::Cyclic { .. } => true,
            GroupDescription::Free { generators } => generators.len() == 1,
            GroupDescription::DirectProduct(fs) => fs.iter().all(|f| f.is_abelian()),
            GroupDescription::FreeProduct(fs) => {
                let nontrivial: Vec<_> = fs.iter().filter(|f| **f != GroupDescription::Trivial).collect();
                nontrivial.len() <= 1 && nontrivial.iter().all(|f| f.is_abelian())
            }
        }
    }

    /// The generator when the group is presented as a single infinite cyclic group.
    pub fn infinite_cyclic_generator(&self) -> Option<GroupElement> {
        match self {
            GroupDescription::FreeAbelian { generators } | GroupDescription::Free { generators }
                if generators.len() == 1 =>
            {
                Some(self.power_unchecked(0, 1))
            }
            _ => None,
        }
    }

    /// Exponent of `a` when the group is infinite cyclic.
    pub fn cyclic_exponent(&self, a: &GroupElement) -> Option<i64> {
        match (self.infinite_cyclic_generator(), a) {
            (Some(_), GroupElement::FreeAbelian(v)) => Some(v[0]),
            (Some(_), GroupElement::Free(w)) => Some(w.first().map(|s| s.1).unwrap_or(0)),
            _ => None,
        }
    }

    /// Nontrivial elements with `g^2 = 1` among `enumerate(max_length)`.
    /// Complete regardless of `max_length` when [`Self::two_torsion_is_exact`] holds.
    pub fn two_torsion(&self, max_length: usize) -> Vec<GroupElement> {
        if self.is_torsion_free() {
            return vec![];
        }
        let len = self.diameter().unwrap_or(max_length);
        self.enumerate(len)
            .into_iter()
            .filter(|g| !self.is_identity(g) && self.is_identity(&self.mul_unchecked(g, g)))
            .collect()
    }

    pub fn two_torsion_is_exact(&self) -> bool {
        self.is_torsion_free() || self.is_finite()
    }

    pub fn is_involution_fixed(&self, g: &GroupElement) -> bool {
        self.invert(g) == *g
    }

    /// Human-readable word, e.g. `a*b^-1`, `t^2`, `1`.
    pub fn format(&self, a: &GroupElement) -> String {
        let letters = self.letters(a);
        if letters.is_empty() {
            return "1".to_string();
        }
        let names = self.generator_names();
        let mut runs: Vec<(usize, i64)> = Vec::new();
        for (g, inv) in letters {
            let step = if inv { -1 } else { 1 };
            match runs.last_mut() {
                Some(last) if last.0 == g => last.1 += step,
                _ => runs.push((g, step)),
            }
        }
        let mut s = String::new();
        for (i, (g, e)) in runs.iter().filter(|r| r.1 != 0).enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&names[*g]);
            if *e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }

    /// Element corresponding to a product of generator powers given by name.
    pub fn word(&self, atoms: &[(&str, i64)]) -> Result<GroupElement> {
        let mut acc = self.identity();
        for (name, e) in atoms {
            let idx = self
                .generator_index(name)
                .ok_or_else(|| Error::Malformed(format!("unknown generator `{name}`")))?;
            acc = self.mul_unchecked(&acc, &self.power_unchecked(idx, *e));
        }
        Ok(acc)
    }

    /// Embedding of factor `k` of a free product (or the identity map when
    /// `self` is not a free product, i.e. the factor list collapsed).
    pub fn embed_free_factor(&self, k: usize, e: &GroupElement, factor: &GroupDescription) -> GroupElement {
        match self {
            GroupDescription::FreeProduct(fs) if fs.get(k) == Some(factor) => {
                if factor.is_identity(e) {
                    GroupElement::FreeProduct(vec![])
                } else {
                    GroupElement::FreeProduct(vec![(k, e.clone())])
                }
            }
            _ if self == factor => e.clone(),
            _ => {
                // the factor was trivial and dropped
                self.identity()
            }
        }
    }

    /// Set of elements with word length at most `w`, as an ordered set.
    pub fn ball(&self, w: usize) -> BTreeSet<GroupElement> {
        self.enumerate(w).into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> GroupDescription {
        GroupDescription::infinite_cyclic("t")
    }

    fn f2() -> GroupDescription {
        GroupDescription::free(&["a", "b"])
    }

    #[test]
    fn multiply_examples() {
        let g = z();
        let a = g.word(&[("t", 2)]).unwrap();
        let b = g.word(&[("t", -3)]).unwrap();
        assert_eq!(g.multiply(&a, &b).unwrap(), g.word(&[("t", -1)]).unwrap());

        let c2 = GroupDescription::cyclic("g", 2);
        let x = c2.word(&[("g", 1)]).unwrap();
        assert!(c2.is_identity(&c2.multiply(&x, &x).unwrap()));

        let f = f2();
        let ab = f.word(&[("a", 1), ("b", 1)]).unwrap();
        let bia = f.word(&[("b", -1), ("a", 1)]).unwrap();
        assert_eq!(f.multiply(&ab, &bia).unwrap(), f.word(&[("a", 2)]).unwrap());
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let g = z();
        assert!(matches!(
            g.multiply(&GroupElement::Cyclic(1), &g.identity()),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn invert_examples() {
        let g = z();
        assert_eq!(g.invert(&g.word(&[("t", 2)]).unwrap()), g.word(&[("t", -2)]).unwrap());
        assert_eq!(g.invert(&g.identity()), g.identity());
        let f = f2();
        assert_eq!(
            f.invert(&f.word(&[("a", 1), ("b", 1)]).unwrap()),
            f.word(&[("b", -1), ("a", -1)]).unwrap()
        );
    }

    #[test]
    fn enumerate_examples() {
        let g = z();
        let names: Vec<String> = g.enumerate(2).iter().map(|e| g.format(e)).collect();
        assert_eq!(names, ["1", "t", "t^-1", "t^2", "t^-2"]);

        let c2 = GroupDescription::cyclic("g", 2);
        let names: Vec<String> = c2.enumerate(5).iter().map(|e| c2.format(e)).collect();
        assert_eq!(names, ["1", "g"]);

        let f = f2();
        let names: Vec<String> = f.enumerate(1).iter().map(|e| f.format(e)).collect();
        assert_eq!(names, ["1", "a", "a^-1", "b", "b^-1"]);
    }

    #[test]
    fn free_group_ball_sizes() {
        for rank in 1..=3usize {
            let names: Vec<String> = (0..rank).map(|i| format!("x{i}")).collect();
            let f = GroupDescription::free(&names);
            for l in 0..=5u32 {
                let r = rank as u64;
                let expected: u64 = 1 + (1..=l).map(|k| 2 * r * (2 * r - 1).pow(k - 1)).sum::<u64>();
                assert_eq!(f.enumerate(l as usize).len() as u64, expected, "rank {rank} length {l}");
            }
        }
    }

    #[test]
    fn two_torsion_examples() {
        assert!(z().two_torsion(10).is_empty());
        let c2 = GroupDescription::cyclic("g", 2);
        assert_eq!(c2.two_torsion(0), vec![GroupElement::Cyclic(1)]);
        let c4 = GroupDescription::cyclic("g", 4);
        assert_eq!(c4.two_torsion(1), vec![GroupElement::Cyclic(2)]);
        assert!(c4.two_torsion_is_exact());
    }

    #[test]
    fn free_product_normal_form() {
        let fp = GroupDescription::free_product(vec![
            GroupDescription::cyclic("g", 2),
            GroupDescription::infinite_cyclic("t"),
        ]);
        let g = fp.word(&[("g", 1)]).unwrap();
        let t = fp.word(&[("t", 1)]).unwrap();
        let gtg = fp.word(&[("g", 1), ("t", 1), ("g", 1)]).unwrap();
        assert_eq!(fp.multiply(&fp.multiply(&g, &t).unwrap(), &g).unwrap(), gtg);
        // g * g collapses to the identity and the syllables merge
        let w = fp.word(&[("t", 1), ("g", 1), ("g", 1), ("t", 1)]).unwrap();
        assert_eq!(w, fp.word(&[("t", 2)]).unwrap());
        fp.check(&w).unwrap();
        assert_eq!(fp.format(&gtg), "g*t*g");
    }

    #[test]
    fn validation() {
        let dup = GroupDescription::direct_product(vec![z(), z()]);
        assert!(dup.validate().is_err());
        let deep = GroupDescription::DirectProduct(vec![GroupDescription::FreeProduct(vec![
            GroupDescription::DirectProduct(vec![GroupDescription::FreeProduct(vec![z()])]),
        ])]);
        assert!(deep.validate().is_err());
        assert!(GroupDescription::cyclic("g", 1).validate().is_err());
    }
}
