//! Recursion spec files: `key = value` lines, `#` comments.
//!
//! ```text
//! kind = order2-reduced
//! a0 = 1
//! a2 = 0
//! ```
//!
//! `kind` is one of `order2-reduced`, `order3-type1`, `order3-type2` or
//! `general`. General files give `order` and the coefficients
//! `a0..a{order}`, `b{order}` and `b0` of
//! `z_n = (Σ a_m·z_{n−m} + a0) / (b{order}·z_{n−order} + b0)`.
//! Values use the field grammar (`I`, `SQRT3`, `cyclo(c0, c1, c2, c3)`).

use std::collections::BTreeMap;

use fracrec_core::recursion::{GeneralSpec, RecursionKind, RecursionSpec};
use fracrec_core::ring::{CycloElem, Expr, Pos};
use fracrec_core::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecDoc {
    Reduced(RecursionSpec),
    General(GeneralSpec),
}

impl SpecDoc {
    pub fn order(&self) -> usize {
        match self {
            SpecDoc::Reduced(s) => s.order(),
            SpecDoc::General(g) => g.order(),
        }
    }
}

pub fn kind_file_name(kind: RecursionKind) -> &'static str {
    match kind {
        RecursionKind::Order2Reduced => "order2-reduced",
        RecursionKind::Order3Type1 => "order3-type1",
        RecursionKind::Order3Type2 => "order3-type2",
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

struct Entry {
    line: usize,
    column: usize,
    raw: String,
    value_col: usize,
}

pub fn parse_spec_file(src: &str) -> Result<SpecDoc> {
    let mut entries: BTreeMap<String, Entry> = BTreeMap::new();
    for (idx, full) in src.lines().enumerate() {
        let line = idx + 1;
        let text = full.split('#').next().unwrap_or("");
        if text.trim().is_empty() {
            continue;
        }
        let key_col = text.len() - text.trim_start().len() + 1;
        let Some(eq) = text.find('=') else {
            return Err(err(line, key_col, "expected `key = value`"));
        };
        let key = text[..eq].trim().to_ascii_lowercase();
        if key.is_empty() {
            return Err(err(line, key_col, "missing key before `=`"));
        }
        let rest = &text[eq + 1..];
        let value_col = eq + 2 + (rest.len() - rest.trim_start().len());
        if entries.contains_key(&key) {
            return Err(err(line, key_col, format!("duplicate key `{key}`")));
        }
        entries.insert(key, Entry { line, column: key_col, raw: rest.trim().to_string(), value_col });
    }

    let Some(kind_entry) = entries.remove("kind") else {
        return Err(err(1, 1, "missing `kind`"));
    };
    let order_entry = entries.remove("order");
    let order = match &order_entry {
        Some(e) => Some(match e.raw.as_str() {
            "2" => 2,
            "3" => 3,
            _ => return Err(err(e.line, e.value_col, "order must be 2 or 3")),
        }),
        None => None,
    };

    let value = |entries: &mut BTreeMap<String, Entry>, name: &str, at: &Entry| -> Result<CycloElem> {
        let Some(e) = entries.remove(name) else {
            return Err(err(at.line, at.column, format!("missing coefficient `{name}`")));
        };
        let pos = Pos { line: e.line, column: e.value_col };
        let expr = Expr::parse_at(&e.raw, pos)?;
        expr.eval_cyclo().map_err(|x| match x {
            Error::Parse { line: 0, message, .. } => err(e.line, e.value_col, message),
            other => other,
        })
    };

    let doc = if kind_entry.raw.eq_ignore_ascii_case("general") {
        let Some(order) = order else {
            return Err(err(kind_entry.line, kind_entry.column, "general specs need `order = 2` or `order = 3`"));
        };
        let mut a = Vec::with_capacity(order + 1);
        for m in 0..=order {
            a.push(value(&mut entries, &format!("a{m}"), &kind_entry)?);
        }
        let b_lead = value(&mut entries, &format!("b{order}"), &kind_entry)?;
        let b0 = value(&mut entries, "b0", &kind_entry)?;
        SpecDoc::General(GeneralSpec::new(a, b_lead, b0)?)
    } else {
        let kind: RecursionKind = kind_entry
            .raw
            .parse()
            .map_err(|_| err(kind_entry.line, kind_entry.value_col, format!("unknown kind `{}`", kind_entry.raw)))?;
        if let (Some(o), Some(e)) = (order, &order_entry) {
            if o != kind.order() {
                return Err(err(e.line, e.value_col, format!("{} has order {}", kind_file_name(kind), kind.order())));
            }
        }
        let mut bindings = Vec::new();
        for &p in kind.live_params() {
            bindings.push((p, value(&mut entries, p, &kind_entry)?));
        }
        SpecDoc::Reduced(RecursionSpec::concrete(kind, &bindings)?)
    };
    if let Some((k, e)) = entries.into_iter().next() {
        return Err(err(e.line, e.column, format!("unexpected key `{k}`")));
    }
    Ok(doc)
}

/// Canonical text form, accepted by [`parse_spec_file`].
pub fn render_spec(doc: &SpecDoc) -> String {
    let mut out = String::new();
    match doc {
        SpecDoc::Reduced(s) => {
            out.push_str(&format!("kind = {}\norder = {}\n", kind_file_name(s.kind()), s.order()));
            for (n, v) in s.bindings() {
                out.push_str(&format!("{n} = {}\n", v.to_notation()));
            }
        }
        SpecDoc::General(g) => {
            let order = g.order();
            out.push_str(&format!("kind = general\norder = {order}\n"));
            for m in (0..=order).rev() {
                out.push_str(&format!("a{m} = {}\n", g.numerator()[m].to_notation()));
            }
            out.push_str(&format!("b{order} = {}\n", g.b_lead().to_notation()));
            out.push_str(&format!("b0 = {}\n", g.b0().to_notation()));
        }
    }
    out
}
