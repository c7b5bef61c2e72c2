//! Command implementations producing JSON reports.

use std::sync::Arc;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::specfile::{emit_group, parse_spec};
use crate::diskgroup::{AbelianVerdict, DiskClass, DiskGroup, Verdict};
use crate::error::{Error, Result};
use crate::groupring::RingElement;
use crate::groups::GroupDescription;
use crate::manifold::{assemble_polynomial, polynomial_terms, realize_polynomial, ManifoldData, Pi2Class};
use crate::span::{Ambient, Membership, QuotientReport};

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub window: usize,
    pub budget: usize,
    pub strict: bool,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            window: crate::diskgroup::DEFAULT_WINDOW,
            budget: crate::diskgroup::DEFAULT_BUDGET,
            strict: false,
            format: Format::Json,
        }
    }
}

/// A command with its positional arguments. The input file text (or, for
/// `realize-poly`, the polynomial) is passed separately as the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    DaxTarget,
    DkStructure,
    IsAbelian,
    RelDax { disk: String, base: String },
    Fq { disk: String, base: String },
    RealizePoly,
    CheckInvariants,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::DaxTarget => "dax-target",
            Command::DkStructure => "dk-structure",
            Command::IsAbelian => "is-abelian",
            Command::RelDax { .. } => "rel-dax",
            Command::Fq { .. } => "fq",
            Command::RealizePoly => "realize-poly",
            Command::CheckInvariants => "check-invariants",
        }
    }
}

/// A finished report and the process exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => render_text(&self.report),
        }
    }
}

struct Partial {
    result: Value,
    completeness: Option<&'static str>,
    verdicts: Vec<&'static str>,
    diagnostics: Vec<String>,
    failed: bool,
}

impl Partial {
    fn new(result: Value) -> Self {
        Partial {
            result,
            completeness: None,
            verdicts: vec![],
            diagnostics: vec![],
            failed: false,
        }
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Runs `command` on `input` and assembles the report.
pub fn run_command(command: &Command, input: &str, options: &Options) -> Outcome {
    let outcome = match command {
        Command::RealizePoly => realize(input),
        _ => parse_spec(input).and_then(|m| manifold_command(command, m, options)),
    };
    let (partial, code) = match outcome {
        Ok(p) => {
            let code = if p.failed {
                1
            } else if options.strict && p.verdicts.contains(&"unknown") {
                2
            } else {
                0
            };
            (p, code)
        }
        Err(e) => {
            let mut p = Partial::new(Value::Null);
            p.diagnostics.push(format!("error: {e}"));
            (p, 1)
        }
    };
    let report = json!({
        "command": command.name(),
        "input_digest": digest(input),
        "result": partial.result,
        "flags": {
            "completeness": partial.completeness,
            "verdicts": partial.verdicts,
        },
        "diagnostics": partial.diagnostics,
    });
    Outcome {
        report,
        exit_code: code,
    }
}

fn manifold_command(command: &Command, m: ManifoldData, opts: &Options) -> Result<Partial> {
    let dg = DiskGroup::new(m)?.with_window(opts.window);
    let completeness = dg.dax_span().completeness().as_str();
    let mut p = match command {
        Command::DaxTarget => dax_target(&dg, opts)?,
        Command::DkStructure => dk_structure(&dg, opts)?,
        Command::IsAbelian => is_abelian(&dg, opts)?,
        Command::RelDax { disk, base } => rel_dax(&dg, disk, base)?,
        Command::Fq { disk, base } => fq(&dg, disk, base)?,
        Command::CheckInvariants => check_invariants(&dg, opts)?,
        Command::RealizePoly => unreachable!("handled without a manifold"),
    };
    p.completeness = Some(completeness);
    if completeness == "lower-bound" {
        p.diagnostics
            .push("the Dax image is only a lower bound; quotients may be too large".into());
    }
    Ok(p)
}

fn big_json(v: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    v.to_i64().map_or_else(|| Value::String(v.to_string()), Value::from)
}

pub fn quotient_json(q: &QuotientReport) -> Value {
    json!({
        "ambient": q.ambient.as_str(),
        "window": q.window,
        "structure": q.to_string(),
        "invariant_factors": q.factors(),
        "free_rank": q.free_rank,
        "torsion": q.torsion.iter().map(big_json).collect::<Vec<_>>(),
        "ambient_rank": q.ambient_rank,
        "relation_rank": q.relation_rank,
        "comparison_window": q.comparison_window,
        "comparison_free_rank": q.comparison_free_rank,
        "comparison_torsion": q.comparison_torsion.iter().map(big_json).collect::<Vec<_>>(),
        "stable": q.stable,
    })
}

fn quotient_or_error(q: &std::result::Result<QuotientReport, String>) -> Value {
    match q {
        Ok(q) => quotient_json(q),
        Err(e) => json!({ "error": e }),
    }
}

pub fn disk_json(m: &ManifoldData, x: &DiskClass) -> Value {
    json!({
        "kernel": x.kernel().to_string(),
        "quotient": x.quotient().display_with(&m.basis),
    })
}

fn dax_target(dg: &DiskGroup, opts: &Options) -> Result<Partial> {
    let q = dg.dax_span().quotient_structure(Ambient::SigmaFixed, opts.window)?;
    let mut result = quotient_json(&q);
    result["span"] = Value::String(dg.dax_span().to_string());
    let mut p = Partial::new(result);
    p.verdicts.push(if q.stable { "stable" } else { "unknown" });
    p.diagnostics.extend(q.notes.iter().cloned());
    Ok(p)
}

fn dk_structure(dg: &DiskGroup, opts: &Options) -> Result<Partial> {
    let r = dg.structure_report(opts.window, opts.budget)?;
    let m = dg.manifold();
    let abelian = r.abelian.verdict();
    let result = json!({
        "manifold": r.manifold,
        "pi1": emit_group(&m.group),
        "dax_span": r.dax_span,
        "completeness": r.completeness,
        "dax_target": quotient_or_error(&r.dax_target),
        "kernel": quotient_or_error(&r.kernel),
        "quotient": {
            "description": "pi2 / <G>",
            "rank": r.quotient_rank,
        },
        "homotopy_image": quotient_or_error(&r.homotopy_image),
        "abelian": abelian_json(m, &r.abelian),
        "nilpotent_class_two": r.nilpotent_class_two,
        "spin": r.spin,
        "d0_index": r.d0_index,
        "splitting": r.splitting,
        "fq_target_dimension": r.fq_target_dimension,
    });
    let mut p = Partial::new(result);
    p.verdicts.push(abelian.as_str());
    for q in [&r.dax_target, &r.kernel, &r.homotopy_image] {
        match q {
            Ok(q) => {
                p.diagnostics.extend(q.notes.iter().cloned());
                if !q.stable {
                    p.verdicts.push("unknown");
                }
            }
            Err(e) => p.diagnostics.push(e.clone()),
        }
    }
    if let AbelianVerdict::Yes(reason) | AbelianVerdict::Unknown(reason) = &r.abelian {
        p.diagnostics.push(format!("abelian: {reason}"));
    }
    p.diagnostics.sort();
    p.diagnostics.dedup();
    Ok(p)
}

fn abelian_json(m: &ManifoldData, v: &AbelianVerdict) -> Value {
    match v {
        AbelianVerdict::No(w) => json!({
            "verdict": "no",
            "witness": {
                "left": translate_label(m, &w.left.0, w.left.1),
                "right": translate_label(m, &w.right.0, w.right.1),
                "lambda_bar": w.value.to_string(),
            }
        }),
        other => json!({ "verdict": other.verdict().as_str() }),
    }
}

fn translate_label(m: &ManifoldData, g: &crate::groups::GroupElement, i: usize) -> String {
    if m.group.is_identity(g) {
        m.basis[i].clone()
    } else {
        format!("{}*{}", m.group.format(g), m.basis[i])
    }
}

fn is_abelian(dg: &DiskGroup, opts: &Options) -> Result<Partial> {
    let v = dg.is_abelian(opts.budget)?;
    let mut p = Partial::new(abelian_json(dg.manifold(), &v));
    p.verdicts.push(v.verdict().as_str());
    if let AbelianVerdict::Yes(reason) | AbelianVerdict::Unknown(reason) = &v {
        p.diagnostics.push(reason.clone());
    }
    Ok(p)
}

fn rel_dax(dg: &DiskGroup, disk: &str, base: &str) -> Result<Partial> {
    let x = parse_disk(dg, base)?;
    let y = parse_disk(dg, disk)?;
    let d = dg.relative_dax(&x, &y)?;
    let zero = match dg.dax_membership(&d.raw, dg.window())? {
        Membership::In(_) => Verdict::Yes,
        Membership::NotInWithinWindow => Verdict::No,
        Membership::Unknown => Verdict::Unknown,
    };
    let mut p = Partial::new(json!({
        "dax": d.raw.to_string(),
        "canonical": d.reduced.as_ref().map(|r| r.to_string()),
        "isotopic": zero.as_str(),
    }));
    p.verdicts.push(zero.as_str());
    Ok(p)
}

fn fq(dg: &DiskGroup, disk: &str, base: &str) -> Result<Partial> {
    let x = parse_disk(dg, base)?;
    let y = parse_disk(dg, disk)?;
    let v = dg.fq_pair(&x, &y)?;
    Ok(Partial::new(json!({ "fq": v.to_string() })))
}

fn realize(input: &str) -> Result<Partial> {
    let group = Arc::new(GroupDescription::infinite_cyclic("t"));
    let f = RingElement::parse(group.clone(), input.trim())?;
    let terms = polynomial_terms(&f)?;
    let moves = realize_polynomial(&terms)?;
    let back = assemble_polynomial(&moves);
    let rebuilt = RingElement::from_terms(
        group.clone(),
        back.iter().map(|&(c, e)| {
            (
                group.generator_power(0, e as i64).expect("generator exists"),
                num_bigint::BigInt::from(c),
            )
        }),
    );
    let moves_json: Vec<Value> = moves
        .iter()
        .map(|mv| json!({ "sign": if mv.sign < 0 { "-" } else { "+" }, "exponent": mv.exponent }))
        .collect();
    let ok = rebuilt == f;
    let mut p = Partial::new(json!({
        "polynomial": f.to_string(),
        "manifold": format!("M_c with c = {f}"),
        "finger_moves": moves_json,
        "reassembled": rebuilt.to_string(),
        "round_trip": ok,
    }));
    p.failed = !ok;
    Ok(p)
}

fn check_invariants(dg: &DiskGroup, opts: &Options) -> Result<Partial> {
    let m = dg.manifold();
    let n = m.rank();
    let mut checks = Vec::new();
    let mut verdicts = Vec::new();
    let mut push = |name: String, status: &'static str, detail: String| {
        checks.push(json!({ "name": name, "status": status, "detail": detail }));
        verdicts.push(status);
    };
    push("validation".into(), "pass", "hermitian form, mu2 and dual sphere are consistent".into());
    for i in 0..n {
        let a = m.basis_class(i);
        let hopf = m.dax_hopf(&a)?;
        let wh = m.dax_whitehead(&a, &a)?;
        let ok = hopf.scale_i64(2) == wh;
        push(
            format!("hopf-whitehead({})", m.basis[i]),
            if ok { "pass" } else { "fail" },
            format!("2*hopf = {}, whitehead = {wh}", hopf.scale_i64(2)),
        );
    }
    for i in 0..n {
        for j in i..n {
            let (a, b) = (m.basis_class(i), m.basis_class(j));
            let wh = m.dax_whitehead(&a, &b)?;
            let fixed = wh.is_sigma_fixed()?;
            let label = format!("({}, {})", m.basis[i], m.basis[j]);
            push(
                format!("whitehead-sigma-fixed{label}"),
                if fixed { "pass" } else { "fail" },
                wh.to_string(),
            );
            let status = match dg.dax_membership(&wh, opts.window)? {
                Membership::In(_) => "pass",
                Membership::NotInWithinWindow => "fail",
                Membership::Unknown => "unknown",
            };
            push(format!("whitehead-in-dax-image{label}"), status, wh.to_string());
        }
    }
    let samples = dg.sample_classes(opts.budget);
    let nilpotent = dg.is_nilpotent_class_two(opts.budget)?;
    push(
        "nilpotent-class-two".into(),
        if nilpotent { "pass" } else { "fail" },
        format!("triple commutators over {} sample classes", samples.len().min(12)),
    );
    let mut twisted = true;
    for x in samples.iter().take(12) {
        for y in samples.iter().take(12) {
            let xy = dg.multiply(x, y)?;
            let yx = dg.multiply(y, x)?;
            let lhs = dg.homotopy_class(&xy)?.sub(&dg.homotopy_class(&yx)?);
            let d = &m.lambda_eval(y.quotient(), x.quotient(), false)? - &m.lambda_eval(x.quotient(), y.quotient(), false)?;
            let rhs = m.dual.scale(&d);
            twisted &= lhs == rhs;
        }
    }
    push(
        "twisted-structure".into(),
        if twisted { "pass" } else { "fail" },
        "hc(xy) - hc(yx) = (lambda(b,a) - lambda(a,b)) G".into(),
    );
    let mut p = Partial::new(json!({ "checks": checks }));
    p.failed = verdicts.contains(&"fail");
    p.verdicts = if verdicts.contains(&"fail") {
        vec!["no"]
    } else if verdicts.contains(&"unknown") {
        vec!["unknown"]
    } else {
        vec!["yes"]
    };
    Ok(p)
}

/// Parses a disk literal such as `fm(t + t^-1) * sec(S, t) * U`.
///
/// Factors: `U` or `1` (the basepoint disk), `fm(r)`, `sec(label)`,
/// `sec(label, r)` and `inv(word)`.
pub fn parse_disk(dg: &DiskGroup, text: &str) -> Result<DiskClass> {
    parse_word(dg, text, 1)
}

fn parse_word(dg: &DiskGroup, text: &str, col: usize) -> Result<DiskClass> {
    let mut acc = dg.identity();
    for (factor, offset) in split_top(text, '*', col)? {
        let x = parse_factor(dg, &factor, offset)?;
        acc = dg.multiply(&acc, &x)?;
    }
    Ok(acc)
}

fn split_top(text: &str, sep: char, col: usize) -> Result<Vec<(String, usize)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::syntax(1, col + i, "unbalanced `)`"));
                }
            }
            c if c == sep && depth == 0 => {
                out.push(trimmed(text, start, i, col)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::syntax(1, col + text.len(), "unbalanced `(`"));
    }
    out.push(trimmed(text, start, text.len(), col)?);
    Ok(out)
}

fn trimmed(text: &str, start: usize, end: usize, col: usize) -> Result<(String, usize)> {
    let s = &text[start..end];
    let lead = s.len() - s.trim_start().len();
    if s.trim().is_empty() {
        return Err(Error::syntax(1, col + start, "empty factor"));
    }
    Ok((s.trim().to_string(), col + start + lead))
}

fn parse_factor(dg: &DiskGroup, f: &str, col: usize) -> Result<DiskClass> {
    if f == "U" || f == "1" {
        return Ok(dg.identity());
    }
    let open = f
        .find('(')
        .filter(|_| f.ends_with(')'))
        .ok_or_else(|| Error::syntax(1, col, format!("expected fm(..), sec(..), inv(..) or U, found `{f}`")))?;
    let head = f[..open].trim();
    let inner = &f[open + 1..f.len() - 1];
    let inner_col = col + open + 1;
    let m = dg.manifold();
    match head {
        "fm" => dg.fm(&RingElement::parse_at(m.group.clone(), inner, 1, inner_col)?),
        "inv" => dg.inverse(&parse_word(dg, inner, inner_col)?),
        "sec" => {
            let parts = split_top(inner, ',', inner_col)?;
            let (label, lcol) = &parts[0];
            let i = m
                .label_index(label)
                .ok_or_else(|| Error::syntax(1, *lcol, format!("unknown basis label `{label}`")))?;
            let coeff = match parts.get(1) {
                Some((lit, c)) => RingElement::parse_at(m.group.clone(), lit, 1, *c)?,
                None => RingElement::one(m.group.clone()),
            };
            if parts.len() > 2 {
                return Err(Error::syntax(1, parts[2].1, "sec takes a label and one coefficient"));
            }
            let mut coeffs = vec![RingElement::zero(m.group.clone()); m.rank()];
            coeffs[i] = coeff;
            dg.section(&Pi2Class::from_coefficients(m.group.clone(), coeffs)?)
        }
        other => Err(Error::syntax(1, col, format!("unknown disk constructor `{other}`"))),
    }
}

fn render_text(report: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", report["command"].as_str().unwrap_or("")));
    out.push_str(&format!("input_digest: {}\n", report["input_digest"].as_str().unwrap_or("")));
    flatten(&mut out, "", &report["result"]);
    if let Some(c) = report["flags"]["completeness"].as_str() {
        out.push_str(&format!("completeness: {c}\n"));
    }
    let verdicts: Vec<&str> = report["flags"]["verdicts"].as_array().into_iter().flatten().filter_map(|v| v.as_str()).collect();
    if !verdicts.is_empty() {
        out.push_str(&format!("verdicts: {}\n", verdicts.join(", ")));
    }
    for d in report["diagnostics"].as_array().into_iter().flatten() {
        out.push_str(&format!("note: {}\n", d.as_str().unwrap_or("")));
    }
    out
}

fn flatten(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(out, &key, v);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (i, item) in items.iter().enumerate() {
                flatten(out, &format!("{prefix}[{i}]"), item);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        Value::Null if prefix.is_empty() => {}
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}
