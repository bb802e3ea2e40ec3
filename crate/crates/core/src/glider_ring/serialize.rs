//! JSON and text forms of keys and ring elements.
//!
//! JSON: `{"A": ["1", "k"], "B": {"irrep_4": [[[4, [[0, "1"]]], …]]}}`.
//! Shorthand: `A={i,j}`, `B={U:[1:1]}`, `B={U:*}` (full space), rows separated
//! by `;`, entries by `:` or `,`.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use super::key::GliderKey;
use super::ring::RingElement;
use crate::error::{Error, Result};
use crate::exact_linear::cyclotomic::rational_to_string;
use crate::exact_linear::{CycMatrix, CycScalar};
use crate::rep_theory::RepData;

/// Short label of an irreducible: `T_<z>` for linear ones, `U` when there is a
/// single higher-dimensional irreducible, otherwise `U1`, `U2`, ….
pub fn irrep_label(rep: &RepData, i: usize) -> String {
    if let Some(z) = rep.irrep_to_linear[i] {
        return format!("T_{}", rep.linear.name(z));
    }
    let higher: Vec<usize> = (0..rep.irrep_count()).filter(|&k| rep.dim(k) >= 2).collect();
    if higher.len() == 1 {
        "U".to_string()
    } else {
        let pos = higher.iter().position(|&k| k == i).expect("higher irreducible");
        format!("U{}", pos + 1)
    }
}

fn resolve_irrep(rep: &RepData, label: &str) -> Result<usize> {
    let label = label.trim();
    let bad = || Error::Parse(format!("unknown irreducible `{label}`"));
    let idx = if let Some(n) = label.strip_prefix("irrep_") {
        n.parse::<usize>().map_err(|_| bad())?
    } else if let Ok(n) = label.parse::<usize>() {
        n
    } else {
        (0..rep.irrep_count()).find(|&i| irrep_label(rep, i) == label).ok_or_else(bad)?
    };
    if idx >= rep.irrep_count() {
        return Err(bad());
    }
    Ok(idx)
}

fn resolve_linear(rep: &RepData, name: &str) -> Result<usize> {
    let name = name.trim();
    let name = name.strip_prefix("T_").unwrap_or(name);
    rep.linear
        .abelianization
        .quotient
        .index_of(name)
        .ok_or_else(|| Error::Parse(format!("unknown element `{name}` of the abelianization")))
}

fn point_from_rows(rep: &RepData, i: usize, rows: Vec<Vec<CycScalar>>) -> Result<CycMatrix> {
    let d = rep.dim(i);
    if d < 2 {
        return Err(Error::Parse(format!("`{}` is linear; list it in A", irrep_label(rep, i))));
    }
    let point = CycMatrix::from_rows(rep.conductor, d, rows)?.row_space();
    if point.rows() == 0 {
        return Err(Error::Parse("empty subspace in B".into()));
    }
    Ok(point)
}

/// JSON form of a key.
pub fn key_to_json(rep: &RepData, key: &GliderKey) -> Value {
    let a: Vec<&str> = key.a.iter().map(|&z| rep.linear.name(z)).collect();
    let b: BTreeMap<String, Value> = key
        .b
        .iter()
        .map(|(&i, m)| (format!("irrep_{i}"), serde_json::to_value(m).expect("matrices serialize")))
        .collect();
    json!({ "A": a, "B": b })
}

/// Parses the JSON form of a key.
pub fn key_from_json(rep: &RepData, value: &Value) -> Result<GliderKey> {
    let obj = value.as_object().ok_or_else(|| Error::Parse("key must be a JSON object".into()))?;
    let mut key = GliderKey::zero();
    if let Some(a) = obj.get("A") {
        let list = a.as_array().ok_or_else(|| Error::Parse("`A` must be a list".into()))?;
        for item in list {
            let name = item.as_str().ok_or_else(|| Error::Parse("`A` entries must be strings".into()))?;
            key.a.insert(resolve_linear(rep, name)?);
        }
    }
    if let Some(b) = obj.get("B") {
        let map = b.as_object().ok_or_else(|| Error::Parse("`B` must be an object".into()))?;
        for (label, rows) in map {
            let i = resolve_irrep(rep, label)?;
            let rows: Vec<Vec<CycScalar>> =
                serde_json::from_value(rows.clone()).map_err(|e| Error::Parse(format!("bad matrix: {e}")))?;
            key.b.insert(i, point_from_rows(rep, i, rows)?);
        }
    }
    Ok(key)
}

fn braced<'a>(text: &'a str, tag: &str) -> Result<Option<&'a str>> {
    let Some(start) = text.find(&format!("{tag}={{")) else {
        return Ok(None);
    };
    let body_start = start + tag.len() + 2;
    let mut depth = 1;
    for (off, ch) in text[body_start..].char_indices() {
        match ch {
            '{' | '[' => depth += 1,
            '}' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(Some(&text[body_start..body_start + off]));
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!("unbalanced braces after `{tag}=`")))
}

/// Parses the shorthand `A={…} B={…}` (either part may be omitted).
pub fn parse_key_shorthand(rep: &RepData, text: &str) -> Result<GliderKey> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut key = GliderKey::zero();
    let a = braced(&text, "A")?;
    let b = braced(&text, "B")?;
    if a.is_none() && b.is_none() {
        return Err(Error::Parse(format!("expected `A={{…}}` and/or `B={{…}}`, found `{text}`")));
    }
    if let Some(a) = a {
        for name in a.split(',').filter(|s| !s.is_empty()) {
            key.a.insert(resolve_linear(rep, name)?);
        }
    }
    if let Some(b) = b {
        // entries `label:[rows]` or `label:*`, separated by commas at depth zero
        let mut entries = Vec::new();
        let mut depth = 0;
        let mut cur = String::new();
        for ch in b.chars() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                ',' if depth == 0 => {
                    entries.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            entries.push(cur);
        }
        for entry in entries {
            let (label, body) =
                entry.split_once(':').ok_or_else(|| Error::Parse(format!("bad B entry `{entry}`")))?;
            let i = resolve_irrep(rep, label)?;
            let point = if body == "*" {
                CycMatrix::identity(rep.conductor, rep.dim(i))
            } else {
                let inner = body
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse(format!("bad subspace `{body}`")))?;
                let rows = inner
                    .split(';')
                    .map(|row| {
                        row.split([':', ','])
                            .map(|x| CycScalar::parse(rep.conductor, x))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                point_from_rows(rep, i, rows)?
            };
            key.b.insert(i, point);
        }
    }
    Ok(key)
}

/// Parses either the JSON form or the shorthand.
pub fn parse_key(rep: &RepData, text: &str) -> Result<GliderKey> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("bad key JSON: {e}")))?;
        key_from_json(rep, &value)
    } else {
        parse_key_shorthand(rep, trimmed)
    }
}

/// Text form `({i,j}, {U:[1:1]})`, with `*` for full subspaces.
pub fn format_key(rep: &RepData, key: &GliderKey) -> String {
    format_key_capped(rep, key, usize::MAX)
}

/// Like [`format_key`], printing at most `cap` rows and `cap` entries per row
/// of each subspace and marking omitted parts with `…`.
pub fn format_key_capped(rep: &RepData, key: &GliderKey, cap: usize) -> String {
    if key.is_zero() {
        return "0".to_string();
    }
    let a: Vec<&str> = key.a.iter().map(|&z| rep.linear.name(z)).collect();
    let b: Vec<String> = key
        .b
        .iter()
        .map(|(&i, m)| {
            let label = irrep_label(rep, i);
            if m.rows() == rep.dim(i) {
                return format!("{label}:*");
            }
            let mut rows: Vec<String> = m
                .row_vecs()
                .iter()
                .take(cap)
                .map(|r| {
                    let mut entries: Vec<String> = r.iter().take(cap).map(|x| x.to_string()).collect();
                    if r.len() > cap {
                        entries.push("…".into());
                    }
                    entries.join(":")
                })
                .collect();
            if m.rows() > cap {
                rows.push("…".into());
            }
            format!("{label}:[{}]", rows.join(";"))
        })
        .collect();
    let a = if a.is_empty() { "∅".to_string() } else { format!("{{{}}}", a.join(",")) };
    let b = if b.is_empty() { "∅".to_string() } else { format!("{{{}}}", b.join(",")) };
    format!("({a}, {b})")
}

/// JSON form of a ring element: list of `{"coeff": "p/q", "key": …}` in key order.
pub fn element_to_json(rep: &RepData, element: &RingElement) -> Value {
    Value::Array(
        element
            .terms()
            .iter()
            .map(|(k, q)| json!({ "coeff": rational_to_string(q), "key": key_to_json(rep, k) }))
            .collect(),
    )
}

/// Text form `q1·key1 + q2·key2`.
pub fn format_element(rep: &RepData, element: &RingElement) -> String {
    if element.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = element
        .terms()
        .iter()
        .map(|(k, q)| format!("{}·{}", rational_to_string(q), format_key(rep, k)))
        .collect();
    parts.join(" + ")
}

/// Names of a set of `G^ab` elements.
pub fn linear_names(rep: &RepData, set: &BTreeSet<usize>) -> Vec<String> {
    set.iter().map(|&z| rep.linear.name(z).to_string()).collect()
}
