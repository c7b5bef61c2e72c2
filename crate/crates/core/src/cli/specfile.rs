//! The sectioned manifold-spec text format.
//!
//! ```text
//! [manifold]
//! name = M_c
//! pi1 = Z(t)
//!
//! [pi2]
//! basis = G, S
//!
//! [lambda]
//! S,S = -t + t^2 - t^-1 + t^-2
//!
//! [mu2]
//! S = -t + t^2
//!
//! [dual]
//! G = 1
//!
//! [dax]
//! h3_tilde_zero = true
//!
//! [spinc]
//! W = 0, 0
//! ```
//!
//! Group expressions combine `1`, `Z(t)`, `Z(x,y)`, `Z/n(g)`, `F(a,b)` and
//! parentheses with `x` (direct product, binds tighter) and `*` (free product).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groupring::{F2TorsionElement, RingElement};
use crate::groups::GroupDescription;
use crate::manifold::{ManifoldData, Pi2Class};

const SECTIONS: &[(&str, &[&str])] = &[
    ("manifold", &["name", "pi1"]),
    ("pi2", &["basis"]),
    ("lambda", &[]),
    ("mu2", &[]),
    ("dual", &[]),
    (
        "dax",
        &[
            "h3_tilde_zero",
            "boundary_S1xS2",
            "extra_generators",
            "mu3_generators",
            "assert_complete",
            "separating_sphere",
        ],
    ),
    ("spinc", &["W"]),
];

#[derive(Debug, Clone)]
struct Entry {
    value: String,
    line: usize,
    key_col: usize,
    value_col: usize,
}

type Sections = BTreeMap<String, BTreeMap<String, Entry>>;

fn lex(text: &str) -> Result<Sections> {
    let mut sections: Sections = BTreeMap::new();
    let mut current: Option<String> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| Error::syntax(line, indent + 1, "unterminated section header"))?
                .trim();
            if !SECTIONS.iter().any(|(s, _)| *s == name) {
                return Err(Error::syntax(line, indent + 2, format!("unknown section `{name}`")));
            }
            if sections.contains_key(name) {
                return Err(Error::syntax(line, indent + 2, format!("duplicate section `{name}`")));
            }
            sections.insert(name.to_string(), BTreeMap::new());
            current = Some(name.to_string());
            continue;
        }
        let section = current
            .as_ref()
            .ok_or_else(|| Error::syntax(line, indent + 1, "entry outside of a section"))?;
        let eq = content
            .find('=')
            .ok_or_else(|| Error::syntax(line, indent + 1, "expected `key = value`"))?;
        let key = content[..eq].trim();
        if key.is_empty() {
            return Err(Error::syntax(line, indent + 1, "empty key"));
        }
        let allowed = SECTIONS.iter().find(|(s, _)| s == section).map(|(_, k)| *k).unwrap_or(&[]);
        if !allowed.is_empty() && !allowed.contains(&key) {
            return Err(Error::syntax(line, indent + 1, format!("unknown key `{key}` in [{section}]")));
        }
        let after = &content[eq + 1..];
        let value_offset = eq + 1 + (after.len() - after.trim_start().len());
        let entry = Entry {
            value: after.trim().to_string(),
            line,
            key_col: indent + 1,
            value_col: value_offset + 1,
        };
        let map = sections.get_mut(section).expect("section exists");
        if map.contains_key(key) {
            return Err(Error::syntax(line, indent + 1, format!("duplicate key `{key}`")));
        }
        map.insert(key.to_string(), entry);
    }
    Ok(sections)
}

/// Parses a group expression such as `Z(t)`, `Z/2(g) * Z(t)` or `1`.
pub fn parse_group(text: &str) -> Result<GroupDescription> {
    parse_group_at(text, 1, 1)
}

fn parse_group_at(text: &str, line: usize, col: usize) -> Result<GroupDescription> {
    let mut p = GroupParser {
        s: text.chars().collect(),
        pos: 0,
        line,
        col,
    };
    let g = p.free()?;
    p.ws();
    if p.pos < p.s.len() {
        return Err(p.err("unexpected input after group expression"));
    }
    Ok(g)
}

struct GroupParser {
    s: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl GroupParser {
    fn err(&self, msg: &str) -> Error {
        Error::syntax(self.line, self.col + self.pos, msg)
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn free(&mut self) -> Result<GroupDescription> {
        let mut factors = vec![self.direct()?];
        loop {
            self.ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                factors.push(self.direct()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupDescription::free_product(factors)
        })
    }

    fn direct(&mut self) -> Result<GroupDescription> {
        let mut factors = vec![self.atom()?];
        loop {
            self.ws();
            if self.peek() == Some('x') {
                self.pos += 1;
                factors.push(self.atom()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupDescription::direct_product(factors)
        })
    }

    fn ident(&mut self) -> Result<String> {
        self.ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos || self.s[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.err("expected a generator name"));
        }
        Ok(self.s[start..self.pos].iter().collect())
    }

    fn names(&mut self) -> Result<Vec<String>> {
        self.expect('(')?;
        let mut out = vec![self.ident()?];
        loop {
            self.ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    out.push(self.ident()?);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }

    fn atom(&mut self) -> Result<GroupDescription> {
        self.ws();
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                Ok(GroupDescription::Trivial)
            }
            Some('(') => {
                self.pos += 1;
                let g = self.free()?;
                self.expect(')')?;
                Ok(g)
            }
            Some('Z') => {
                self.pos += 1;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let start = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let n: u64 = self.s[start..self.pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| self.err("expected a modulus"))?;
                    let names = self.names()?;
                    if names.len() != 1 {
                        return Err(self.err("a cyclic group has one generator"));
                    }
                    Ok(GroupDescription::cyclic(&names[0], n))
                } else {
                    Ok(GroupDescription::free_abelian(&self.names()?))
                }
            }
            Some('F') => {
                self.pos += 1;
                Ok(GroupDescription::free(&self.names()?))
            }
            _ => Err(self.err("expected a group: 1, Z(..), Z/n(..), F(..) or (..)")),
        }
    }
}

/// Inverse of [`parse_group`].
pub fn emit_group(g: &GroupDescription) -> String {
    fn wrap(g: &GroupDescription) -> String {
        match g {
            GroupDescription::DirectProduct(_) | GroupDescription::FreeProduct(_) => format!("({})", emit_group(g)),
            _ => emit_group(g),
        }
    }
    match g {
        GroupDescription::Trivial => "1".into(),
        GroupDescription::FreeAbelian { generators } => format!("Z({})", generators.join(",")),
        GroupDescription::Cyclic { generator, modulus } => format!("Z/{modulus}({generator})"),
        GroupDescription::Free { generators } => format!("F({})", generators.join(",")),
        GroupDescription::DirectProduct(fs) => fs.iter().map(wrap).collect::<Vec<_>>().join(" x "),
        GroupDescription::FreeProduct(fs) => fs.iter().map(wrap).collect::<Vec<_>>().join(" * "),
    }
}

fn parse_bool(e: &Entry) -> Result<bool> {
    match e.value.as_str() {
        "true" | "yes" => Ok(true),
        "false" | "no" | "" => Ok(false),
        other => Err(Error::syntax(e.line, e.value_col, format!("expected true or false, found `{other}`"))),
    }
}

fn parse_literal(group: &Arc<GroupDescription>, e: &Entry) -> Result<RingElement> {
    RingElement::parse_at(group.clone(), &e.value, e.line, e.value_col)
}

fn split_items(e: &Entry, sep: char) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in e.value.split(sep) {
        let lead = part.len() - part.trim_start().len();
        if !part.trim().is_empty() {
            out.push((part.trim().to_string(), e.value_col + offset + lead));
        }
        offset += part.len() + 1;
    }
    out
}

/// Parses and validates a manifold spec.
pub fn parse_spec(text: &str) -> Result<ManifoldData> {
    let sections = lex(text)?;
    let empty = BTreeMap::new();
    let get = |s: &str| sections.get(s).unwrap_or(&empty);
    let manifold = sections.get("manifold").ok_or_else(|| Error::syntax(1, 1, "missing [manifold] section"))?;
    let name = manifold.get("name").map(|e| e.value.clone()).unwrap_or_default();
    let group = match manifold.get("pi1") {
        Some(e) => parse_group_at(&e.value, e.line, e.value_col)?,
        None => GroupDescription::Trivial,
    };
    group.validate()?;
    let group = Arc::new(group);
    let basis: Vec<String> = match get("pi2").get("basis") {
        Some(e) => split_items(e, ',').into_iter().map(|(s, _)| s).collect(),
        None => vec![],
    };
    let n = basis.len();
    let index = |label: &str, line: usize, col: usize| -> Result<usize> {
        basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| Error::syntax(line, col, format!("unknown basis label `{label}`")))
    };
    let zero = RingElement::zero(group.clone());

    let mut upper: BTreeMap<(usize, usize), (RingElement, String)> = BTreeMap::new();
    let mut lower: Vec<((usize, usize), RingElement, String)> = Vec::new();
    for (key, e) in get("lambda") {
        let parts: Vec<&str> = key.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::syntax(e.line, e.key_col, "lambda keys have the form `a,b`"));
        }
        let i = index(parts[0], e.line, e.key_col)?;
        let j = index(parts[1], e.line, e.key_col)?;
        let v = parse_literal(&group, e)?;
        let label = format!("lambda({}, {})", parts[0], parts[1]);
        if i <= j {
            upper.insert((i, j), (v, label));
        } else {
            lower.push(((j, i), v, label));
        }
    }
    let mut lambda = vec![vec![zero.clone(); n]; n];
    for ((i, j), (v, _)) in &upper {
        lambda[*i][*j] = v.clone();
        lambda[*j][*i] = v.bar();
        if i == j && v.bar() != *v {
            return Err(Error::Validation(format!(
                "hermitian symmetry fails: lambda({0}, {0}) = {v} is not σ-fixed",
                basis[*i]
            )));
        }
    }
    for ((i, j), v, label) in lower {
        let (u, ulabel) = match upper.get(&(i, j)) {
            Some((u, l)) => (u.clone(), l.clone()),
            None => (zero.clone(), format!("lambda({}, {})", basis[i], basis[j])),
        };
        if v != u.bar() {
            return Err(Error::Validation(format!(
                "hermitian symmetry fails: {ulabel} = {u} but {label} = {v}"
            )));
        }
    }

    let mut mu2 = vec![zero.clone(); n];
    for (key, e) in get("mu2") {
        let i = index(key, e.line, e.key_col)?;
        let v = parse_literal(&group, e)?;
        mu2[i] = v
            .reduce_mod_antisymmetric()
            .map_err(|_| Error::Validation(format!("mu2({key}) = {v} has a coefficient at 1")))?;
    }
    let mut dual = vec![zero.clone(); n];
    for (key, e) in get("dual") {
        let i = index(key, e.line, e.key_col)?;
        dual[i] = parse_literal(&group, e)?;
    }
    let dax = get("dax");
    let flag = |k: &str| dax.get(k).map(parse_bool).transpose().map(|v| v.unwrap_or(false));
    let mut extra = Vec::new();
    if let Some(e) = dax.get("extra_generators") {
        for (item, col) in split_items(e, ';') {
            extra.push(RingElement::parse_at(group.clone(), &item, e.line, col)?);
        }
    }
    let mut mu3 = Vec::new();
    if let Some(e) = dax.get("mu3_generators") {
        for (item, col) in split_items(e, ';') {
            let r = RingElement::parse_at(group.clone(), &item, e.line, col)?;
            let support = r
                .terms()
                .filter(|(_, c)| c.is_odd())
                .map(|(g, _)| g.clone());
            mu3.push(F2TorsionElement::from_support(group.clone(), support).map_err(|err| {
                Error::Validation(format!("mu3 generator `{item}` at line {}: {err}", e.line))
            })?);
        }
    }
    let w = match get("spinc").get("W") {
        Some(e) => {
            let mut v = Vec::new();
            for (item, col) in split_items(e, ',') {
                v.push(
                    item.parse::<i64>()
                        .map_err(|_| Error::syntax(e.line, col, format!("expected an integer, found `{item}`")))?,
                );
            }
            Some(v)
        }
        None => None,
    };
    let m = ManifoldData {
        name,
        group: group.clone(),
        basis,
        lambda,
        mu2,
        dual: Pi2Class::from_coefficients(group, dual)?,
        h3_tilde_zero: flag("h3_tilde_zero")?,
        extra_dax_generators: extra,
        assert_complete: flag("assert_complete")?,
        boundary_s1xs2: flag("boundary_S1xS2")?,
        separating_sphere: flag("separating_sphere")?,
        mu3_generators: mu3,
        w,
    };
    m.validate()?;
    Ok(m)
}

/// Writes `m` in the spec format; [`parse_spec`] reads it back unchanged.
pub fn emit_spec(m: &ManifoldData) -> String {
    let mut out = String::new();
    out.push_str("[manifold]\n");
    out.push_str(&format!("name = {}\n", m.name));
    out.push_str(&format!("pi1 = {}\n\n", emit_group(&m.group)));
    out.push_str("[pi2]\n");
    out.push_str(&format!("basis = {}\n\n", m.basis.join(", ")));
    out.push_str("[lambda]\n");
    for i in 0..m.rank() {
        for j in i..m.rank() {
            if !m.lambda[i][j].is_zero() {
                out.push_str(&format!("{},{} = {}\n", m.basis[i], m.basis[j], m.lambda[i][j]));
            }
        }
    }
    out.push_str("\n[mu2]\n");
    for (b, v) in m.basis.iter().zip(&m.mu2) {
        if !v.is_zero() {
            out.push_str(&format!("{b} = {v}\n"));
        }
    }
    out.push_str("\n[dual]\n");
    for (b, v) in m.basis.iter().zip(m.dual.coefficients()) {
        if !v.is_zero() {
            out.push_str(&format!("{b} = {v}\n"));
        }
    }
    out.push_str("\n[dax]\n");
    out.push_str(&format!("h3_tilde_zero = {}\n", m.h3_tilde_zero));
    out.push_str(&format!("boundary_S1xS2 = {}\n", m.boundary_s1xs2));
    out.push_str(&format!("assert_complete = {}\n", m.assert_complete));
    out.push_str(&format!("separating_sphere = {}\n", m.separating_sphere));
    let extras: Vec<String> = m.extra_dax_generators.iter().map(|r| r.to_string()).collect();
    out.push_str(&format!("extra_generators = {}\n", extras.join("; ")));
    let mu3: Vec<String> = m.mu3_generators.iter().map(|r| r.to_string()).collect();
    out.push_str(&format!("mu3_generators = {}\n", mu3.join("; ")));
    if let Some(w) = &m.w {
        out.push_str("\n[spinc]\n");
        let v: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("W = {}\n", v.join(", ")));
    }
    out
}
