//! Ring specification files.
//!
//! One `key = value` per line; `#` starts a comment. A value ending in a
//! comma continues on the next line, so long ideals can be wrapped.
//!
//! ```text
//! name = S0(1) with a cone variable
//! field = Q                 # or Fp(p)
//! vars = x, y
//! ideal = x^2, x*y,
//!         y^2
//! cone_vars = Y
//! analytically_unramified = true
//! finite_cm_type = false
//! regular = false
//! ```
//!
//! `ideal` may be empty or absent for a polynomial ring. `cone_vars` are
//! power series variables adjoined after the ideal is taken.

use std::collections::BTreeMap;
use std::path::Path;

use fiberlab::fiber::DeclaredFlags;
use fiberlab::groebner::IdealSpec;
use fiberlab::{Error, FieldSpec, PolyRing, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpecFile {
    pub name: String,
    pub field: String,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub cone_vars: Vec<String>,
    pub declared: DeclaredFlags,
}

const KEYS: [&str; 8] =
    ["name", "field", "vars", "ideal", "cone_vars", "analytically_unramified", "finite_cm_type", "regular"];

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn split_list(v: &str) -> Vec<String> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn parse_bool(v: &str, line: usize, col: usize) -> Result<bool> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(parse_err(line, col, format!("expected true or false, got {v:?}"))),
    }
}

impl RingSpecFile {
    pub fn parse(text: &str) -> Result<RingSpecFile> {
        // key -> (value, line, column where the value starts)
        let mut entries: BTreeMap<String, (String, usize, usize)> = BTreeMap::new();
        let mut open: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            if let Some(key) = open.take() {
                let entry = entries.get_mut(&key).unwrap();
                entry.0.push(' ');
                entry.0.push_str(content.trim());
                if content.trim_end().ends_with(',') {
                    open = Some(key);
                }
                continue;
            }
            if content.trim().is_empty() {
                continue;
            }
            let Some(eq) = content.find('=') else {
                return Err(parse_err(lineno, 1, "expected key = value"));
            };
            let key = content[..eq].trim().to_string();
            if !KEYS.contains(&key.as_str()) {
                return Err(parse_err(lineno, 1, format!("unknown key {key:?}")));
            }
            if entries.contains_key(&key) {
                return Err(parse_err(lineno, 1, format!("duplicate key {key:?}")));
            }
            let value = content[eq + 1..].trim();
            let col = eq + 2 + (content[eq + 1..].len() - content[eq + 1..].trim_start().len());
            if value.ends_with(',') {
                open = Some(key.clone());
            }
            entries.insert(key, (value.to_string(), lineno, col));
        }
        let get = |k: &str| entries.get(k);
        let (vars_text, vline, vcol) = get("vars").cloned().ok_or_else(|| parse_err(1, 1, "missing key vars"))?;
        let vars = split_list(&vars_text);
        let cone_vars = get("cone_vars").map(|e| split_list(&e.0)).unwrap_or_default();
        if let Some(v) = cone_vars.iter().find(|v| vars.contains(v)) {
            let (_, l, c) = get("cone_vars").unwrap();
            return Err(parse_err(*l, *c, format!("cone variable {v} is also a ring variable")));
        }
        if vars.is_empty() {
            return Err(parse_err(vline, vcol, "vars must not be empty"));
        }
        let flag = |k: &str| -> Result<Option<bool>> {
            match get(k) {
                Some((v, l, c)) => parse_bool(v, *l, *c).map(Some),
                None => Ok(None),
            }
        };
        let spec = RingSpecFile {
            name: get("name").map(|e| e.0.clone()).unwrap_or_else(|| "R".into()),
            field: get("field").map(|e| e.0.clone()).unwrap_or_else(|| "Q".into()),
            vars,
            ideal: get("ideal").map(|e| split_list(&e.0)).unwrap_or_default(),
            cone_vars,
            declared: DeclaredFlags {
                analytically_unramified: flag("analytically_unramified")?,
                finite_cm_type: flag("finite_cm_type")?,
                regular: flag("regular")?,
            },
        };
        // surface field and polynomial errors with the line they came from
        if let Err(e) = spec.field_spec() {
            let (_, l, c) = get("field").unwrap();
            return Err(parse_err(*l, *c, e.to_string()));
        }
        if let Err(e) = spec.ideal_spec() {
            let (_, l, c) = get("ideal").cloned().unwrap_or(("".into(), 1, 1));
            return Err(match e {
                Error::Parse { col, msg, .. } => parse_err(l, c + col.saturating_sub(1), msg),
                other => parse_err(l, c, other.to_string()),
            });
        }
        Ok(spec)
    }

    pub fn read(path: &Path) -> Result<RingSpecFile> {
        let text = std::fs::read_to_string(path).map_err(|e| parse_err(0, 0, format!("{}: {e}", path.display())))?;
        RingSpecFile::parse(&text)
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.parse()
    }

    pub fn ideal_spec(&self) -> Result<IdealSpec> {
        let ring = PolyRing::new(&self.vars, self.field_spec()?)?;
        IdealSpec::parse(&ring, &self.ideal)
    }

    /// The same text format, one key per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "name = {}\nfield = {}\nvars = {}\nideal = {}\n",
            self.name,
            self.field,
            self.vars.join(", "),
            self.ideal.join(", ")
        );
        if !self.cone_vars.is_empty() {
            out.push_str(&format!("cone_vars = {}\n", self.cone_vars.join(", ")));
        }
        let d = &self.declared;
        for (k, v) in [
            ("analytically_unramified", d.analytically_unramified),
            ("finite_cm_type", d.finite_cm_type),
            ("regular", d.regular),
        ] {
            if let Some(v) = v {
                out.push_str(&format!("{k} = {v}\n"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuation_and_comments() {
        let s =
            RingSpecFile::parse("# square\nname = S\nvars = x, y\nideal = x^2, x*y,\n   y^2 # last\ncone_vars = Y\n")
                .unwrap();
        assert_eq!(s.ideal, vec!["x^2", "x*y", "y^2"]);
        assert_eq!(s.cone_vars, vec!["Y"]);
        assert_eq!(RingSpecFile::parse(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn errors_carry_positions() {
        let e = RingSpecFile::parse("vars = x\nideal = x^2 + + 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = RingSpecFile::parse("vars = x\nbogus = 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 1, .. }));
        let e = RingSpecFile::parse("vars = x\ncone_vars = x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = RingSpecFile::parse("vars = x\nregular = maybe\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 11, .. }), "{e:?}");
        let e = RingSpecFile::parse("vars = x\nfield = Fp(4)\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }
}
