//! Canonical text and JSON forms of [`BiPoly`].
//!
//! Text grammar:
//!
//! ```text
//! poly := term (" + " term)* | "0"
//! term := coef [" * x^" int] [" * y^" int]
//! coef := num ["/" den]
//! ```
//!
//! Terms are rendered by decreasing x-exponent, then decreasing y-exponent.

use serde::{Deserialize, Serialize};

use super::BiPoly;
use crate::error::{Error, Result};
use crate::rational::{scan_integer, scan_rat, Rat};

pub fn bp_to_text(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, ((a, b), c)) in p.canonical_terms().enumerate() {
        if n > 0 {
            out.push_str(" + ");
        }
        out.push_str(&c.to_string());
        if a > 0 {
            out.push_str(&format!(" * x^{a}"));
        }
        if b > 0 {
            out.push_str(&format!(" * y^{b}"));
        }
    }
    out
}

fn error_at(s: &str, offset: usize, message: impl Into<String>) -> Error {
    let before = &s[..offset.min(s.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn relocate(s: &str, e: Error) -> Error {
    // scan_rat reports single-line 1-based columns, i.e. byte offset + 1
    match e {
        Error::Parse {
            column, message, ..
        } => error_at(s, column - 1, message),
        other => other,
    }
}

fn scan_exponent(s: &str, pos: usize) -> Result<(u32, usize)> {
    let end = scan_integer(s.as_bytes(), pos, false)
        .ok_or_else(|| error_at(s, pos, "expected exponent"))?;
    let e = s[pos..end]
        .parse::<u32>()
        .map_err(|_| error_at(s, pos, "exponent out of range"))?;
    Ok((e, end))
}

pub fn bp_from_text(s: &str) -> Result<BiPoly> {
    let mut p = BiPoly::zero();
    let mut pos = 0;
    loop {
        let (coef, mut next) = scan_rat(s, pos).map_err(|e| relocate(s, e))?;
        let mut xexp = 0;
        let mut yexp = 0;
        if s[next..].starts_with(" * x^") {
            (xexp, next) = scan_exponent(s, next + 5)?;
        }
        if s[next..].starts_with(" * y^") {
            (yexp, next) = scan_exponent(s, next + 5)?;
        }
        p.add_term(xexp, yexp, &coef);
        if next == s.len() {
            return Ok(p);
        }
        if !s[next..].starts_with(" + ") {
            return Err(error_at(s, next, "expected \" + \" or end of input"));
        }
        pos = next + 3;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub x: u32,
    pub y: u32,
    pub c: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub terms: Vec<JsonTerm>,
}

impl From<&BiPoly> for JsonPoly {
    fn from(p: &BiPoly) -> JsonPoly {
        JsonPoly {
            terms: p
                .canonical_terms()
                .map(|((x, y), c)| JsonTerm { x, y, c: c.clone() })
                .collect(),
        }
    }
}

impl From<&JsonPoly> for BiPoly {
    fn from(j: &JsonPoly) -> BiPoly {
        BiPoly::from_terms(j.terms.iter().map(|t| ((t.x, t.y), t.c.clone())))
    }
}

pub fn bp_to_json(p: &BiPoly) -> String {
    serde_json::to_string(&JsonPoly::from(p)).expect("plain data serializes")
}

pub fn bp_from_json(s: &str) -> Result<BiPoly> {
    let j: JsonPoly = serde_json::from_str(s).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(BiPoly::from(&j))
}

impl std::fmt::Display for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&bp_to_text(self))
    }
}

impl std::str::FromStr for BiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<BiPoly> {
        bp_from_text(s)
    }
}
