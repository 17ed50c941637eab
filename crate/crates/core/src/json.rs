//! Versioned JSON form of [`LaurentPoly`] and a canonical human rendering.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{CoeffField, IntPoly2, LaurentPoly};
use crate::error::{Error, Result};
use crate::weyl::dblex_total_cmp;

pub const SCHEMA_VERSION: u32 = 1;

/// One coefficient monomial `c q^qe v^ve`, with `c` as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffTerm(pub u32, pub u32, pub String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub num: Vec<CoeffTerm>,
    pub den: Vec<CoeffTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub schema_version: u32,
    pub n: usize,
    pub terms: Vec<TermJson>,
    pub human: String,
}

fn descending(a: &[i32], b: &[i32]) -> Ordering {
    dblex_total_cmp(b, a)
}

fn poly_terms(p: &IntPoly2) -> Vec<CoeffTerm> {
    p.terms().map(|(&(a, b), c)| CoeffTerm(a, b, c.to_string())).collect()
}

fn parse_terms(ts: &[CoeffTerm]) -> Result<IntPoly2> {
    let terms = ts
        .iter()
        .map(|CoeffTerm(a, b, c)| {
            BigInt::from_str(c).map(|c| (*a, *b, c)).map_err(|_| Error::Argument(format!("bad integer {c:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly2::from_terms(terms))
}

fn sorted_terms(f: &LaurentPoly) -> Vec<(&Vec<i32>, &CoeffField)> {
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|a, b| descending(a.0, b.0));
    terms
}

fn monomial(e: &[i32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(i, &d)| if d == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, d) })
        .collect();
    parts.join("*")
}

/// Canonical string: terms in descending DBlex order, coefficients in the
/// reduced form of [`CoeffField::render`].
pub fn render(f: &LaurentPoly) -> String {
    let terms = sorted_terms(f);
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in terms.into_iter().enumerate() {
        let m = monomial(e);
        let neg = c.is_poly() && c.num().len() == 1 && c.render().starts_with('-');
        let c = if neg { -c } else { c.clone() };
        if k > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let s = c.render();
        let simple = !s.contains([' ', '/']);
        match (m.is_empty(), c.is_one()) {
            (true, _) => out.push_str(&s),
            (false, true) => out.push_str(&m),
            (false, false) if simple => out.push_str(&format!("{s}*{m}")),
            (false, false) => out.push_str(&format!("({s})*{m}")),
        }
    }
    out
}

pub fn to_json(f: &LaurentPoly) -> PolyJson {
    PolyJson {
        schema_version: SCHEMA_VERSION,
        n: f.n(),
        terms: sorted_terms(f)
            .into_iter()
            .map(|(e, c)| TermJson { exp: e.clone(), num: poly_terms(c.num()), den: poly_terms(c.den()) })
            .collect(),
        human: render(f),
    }
}

pub fn from_json(j: &PolyJson) -> Result<LaurentPoly> {
    if j.schema_version != SCHEMA_VERSION {
        return Err(Error::Argument(format!("unsupported schema version {}", j.schema_version)));
    }
    let terms = j
        .terms
        .iter()
        .map(|t| {
            if t.exp.len() != j.n {
                return Err(Error::Dimension(j.n, t.exp.len()));
            }
            Ok((t.exp.clone(), CoeffField::from_parts(parse_terms(&t.num)?, parse_terms(&t.den)?)?))
        })
        .collect::<Result<Vec<_>>>()?;
    LaurentPoly::from_terms(j.n, terms)
}

/// Pretty-printed JSON text with a trailing newline.
pub fn to_string(f: &LaurentPoly) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(f)).expect("serializable");
    s.push('\n');
    s
}

pub fn from_str(s: &str) -> Result<LaurentPoly> {
    let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Argument(format!("invalid polynomial JSON: {e}")))?;
    from_json(&j)
}
