//! Input documents: a group and a set of named values.
//!
//! Text form, one statement per line or separated by `;`:
//!
//! ```text
//! group cyclic 2
//! A = [[e + g, t],
//!      [0, 2*g*t]]
//! n = 8
//! ```
//!
//! Statements may span lines while brackets are open. `#` starts a comment.
//! The JSON form is an object with a `group` (as in certificates) and the
//! values as further string or number fields.

use gsft_core::groups::{make_group, GroupRef, GroupSpec};
use gsft_core::parse::{parse_matrix, render_matrix};
use gsft_core::{Error, Result};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq)]
pub struct InputDocument {
    pub group: GroupSpec,
    pub values: BTreeMap<String, String>,
}

impl Default for InputDocument {
    fn default() -> Self {
        InputDocument {
            group: GroupSpec::trivial(),
            values: BTreeMap::new(),
        }
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column: 1,
        message: message.into(),
    }
}

/// `cyclic 4 [gen]`, `dihedral 3`, `symmetric 4`, `trivial`,
/// `product cyclic 2, cyclic 2`, or `json {...}`.
pub fn parse_group_spec(text: &str) -> std::result::Result<GroupSpec, String> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("json") {
        return serde_json::from_str(rest.trim()).map_err(|e| e.to_string());
    }
    if let Some(rest) = text.strip_prefix("product") {
        let factors = rest
            .split(',')
            .map(parse_group_spec)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(GroupSpec::Product { factors });
    }
    let words: Vec<&str> = text.split_whitespace().collect();
    let num = |w: Option<&&str>| -> std::result::Result<usize, String> {
        w.ok_or("missing group order")?
            .parse()
            .map_err(|_| "group order must be a positive integer".to_string())
    };
    match words.first().copied() {
        Some("trivial") if words.len() == 1 => Ok(GroupSpec::trivial()),
        Some("cyclic") if words.len() <= 3 => Ok(GroupSpec::Cyclic {
            n: num(words.get(1))?,
            generator: words.get(2).map(|s| s.to_string()),
        }),
        Some("dihedral") if words.len() == 2 => Ok(GroupSpec::Dihedral {
            n: num(words.get(1))?,
        }),
        Some("symmetric") if words.len() == 2 => Ok(GroupSpec::Symmetric {
            n: num(words.get(1))?,
        }),
        _ => Err(format!("unknown group description {text:?}")),
    }
}

pub fn render_group_spec(spec: &GroupSpec) -> String {
    match spec {
        GroupSpec::Cyclic {
            n: 1,
            generator: None,
        } => "trivial".into(),
        GroupSpec::Cyclic { n, generator: None } => format!("cyclic {n}"),
        GroupSpec::Cyclic {
            n,
            generator: Some(g),
        } => format!("cyclic {n} {g}"),
        GroupSpec::Dihedral { n } => format!("dihedral {n}"),
        GroupSpec::Symmetric { n } => format!("symmetric {n}"),
        GroupSpec::Product { factors }
            if factors
                .iter()
                .all(|f| !matches!(f, GroupSpec::Product { .. } | GroupSpec::Explicit { .. })) =>
        {
            let parts: Vec<String> = factors.iter().map(render_group_spec).collect();
            format!("product {}", parts.join(", "))
        }
        other => format!(
            "json {}",
            serde_json::to_string(other).expect("spec serializes")
        ),
    }
}

fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut start_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for c in line.chars() {
            match c {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                _ => {}
            }
            if c == ';' && depth <= 0 {
                if !cur.trim().is_empty() {
                    out.push((start_line, cur.trim().to_string()));
                }
                cur.clear();
                start_line = idx + 1;
                continue;
            }
            if cur.trim().is_empty() {
                start_line = idx + 1;
            }
            cur.push(c);
        }
        if depth <= 0 {
            if !cur.trim().is_empty() {
                out.push((start_line, cur.trim().to_string()));
            }
            cur.clear();
        } else {
            cur.push(' ');
        }
    }
    if !cur.trim().is_empty() {
        out.push((start_line, cur.trim().to_string()));
    }
    out
}

pub fn parse_text(text: &str) -> Result<InputDocument> {
    let mut doc = InputDocument::default();
    let mut seen_group = false;
    for (line, stmt) in statements(text) {
        if let Some(rest) = stmt.strip_prefix("group ") {
            if seen_group {
                return Err(perr(line, "group given twice"));
            }
            doc.group = parse_group_spec(rest).map_err(|m| perr(line, m))?;
            seen_group = true;
            continue;
        }
        let Some((name, value)) = stmt.split_once('=') else {
            return Err(perr(
                line,
                format!("expected `name = value`, found {stmt:?}"),
            ));
        };
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(perr(line, format!("invalid name {name:?}")));
        }
        if doc
            .values
            .insert(name.to_string(), value.trim().to_string())
            .is_some()
        {
            return Err(perr(line, format!("{name} given twice")));
        }
    }
    Ok(doc)
}

pub fn parse_json(text: &str) -> Result<InputDocument> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = v
        .as_object()
        .ok_or_else(|| perr(1, "input JSON must be an object"))?;
    let mut doc = InputDocument::default();
    for (k, val) in obj {
        if k == "group" {
            doc.group = match val {
                serde_json::Value::String(s) => parse_group_spec(s).map_err(|m| perr(1, m))?,
                other => serde_json::from_value(other.clone())
                    .map_err(|e| perr(1, format!("group: {e}")))?,
            };
            continue;
        }
        let s = match val {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::Bool(b) => b.to_string(),
            other => other.to_string(),
        };
        doc.values.insert(k.clone(), s);
    }
    Ok(doc)
}

/// JSON if the text starts with `{`, otherwise the text form.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

impl InputDocument {
    pub fn group_ref(&self) -> Result<GroupRef> {
        make_group(&self.group)
    }

    pub fn render(&self) -> String {
        let mut out = format!("group {}\n", render_group_spec(&self.group));
        for (k, v) in &self.values {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out
    }

    /// Values that parse as matrices over the group are re-rendered in
    /// canonical form; everything else is kept as written.
    pub fn normalize(&self) -> Result<InputDocument> {
        let g = self.group_ref()?;
        let values = self
            .values
            .iter()
            .map(|(k, v)| {
                let canon = match parse_matrix(&g, v) {
                    Ok(m) if v.trim_start().starts_with('[') => render_matrix(&m),
                    _ => v.clone(),
                };
                (k.clone(), canon)
            })
            .collect();
        Ok(InputDocument {
            group: self.group.clone(),
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_documents() {
        let doc = parse_input("group cyclic 2; A = [[e+g]]").unwrap();
        assert_eq!(doc.group, GroupSpec::cyclic(2));
        assert_eq!(doc.values["A"], "[[e+g]]");

        let multi = "# comment\ngroup symmetric 3\nA = [[e, (12)],\n     [0, (123)]]\nn = 4\n";
        let doc = parse_input(multi).unwrap();
        assert_eq!(doc.values.len(), 2);
        assert_eq!(doc.values["n"], "4");

        let norm = doc.normalize().unwrap();
        assert_eq!(parse_input(&norm.render()).unwrap(), norm);
        assert_eq!(norm.normalize().unwrap(), norm);

        assert!(parse_input("group cyclic x").is_err());
        assert!(parse_input("A = 1; A = 2").is_err());
        assert!(parse_input("just words").is_err());
    }

    #[test]
    fn json_documents() {
        let doc =
            parse_input(r#"{"group": {"kind": "cyclic", "n": 4}, "A": "[[g]]", "n": 3}"#).unwrap();
        assert_eq!(doc.group, GroupSpec::cyclic(4));
        assert_eq!(doc.values["n"], "3");
        let doc = parse_input(r#"{"group": "dihedral 3", "A": "[[r]]"}"#).unwrap();
        assert_eq!(doc.group, GroupSpec::Dihedral { n: 3 });
        for spec in [
            GroupSpec::cyclic(5),
            GroupSpec::trivial(),
            GroupSpec::Symmetric { n: 4 },
            GroupSpec::Product {
                factors: vec![GroupSpec::cyclic(2), GroupSpec::cyclic(3)],
            },
        ] {
            assert_eq!(parse_group_spec(&render_group_spec(&spec)).unwrap(), spec);
        }
    }
}
