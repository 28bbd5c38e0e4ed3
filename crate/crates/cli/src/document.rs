//! The plain-text algebra document.
//!
//! ```text
//! # e1^2 = e2, e2^2 = e1 + e2
//! field rational
//! dim 2
//! 0 1
//! 1 1
//! ```
//!
//! Row `k`, column `i` holds the coefficient of `e_k` in `e_i^2`, so each
//! column lists one basis square. See `FORMAT.md` for the full grammar.

use evolalg_core::{EvolutionAlgebra, FieldDescriptor, Matrix, Scalar, Subspace};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Validation(String),
}

/// A scalar as written: an integer or a fraction, not yet placed in a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawScalar {
    pub num: BigInt,
    pub den: BigInt,
}

impl RawScalar {
    pub fn in_field(&self, field: FieldDescriptor) -> Result<Scalar, String> {
        field
            .from_ratio(&self.num, &self.den)
            .map_err(|_| format!("denominator {} is zero in {}", self.den, field))
    }
}

/// `[+-]digits` optionally followed by `/digits` with a positive denominator.
pub fn parse_raw_scalar(token: &str) -> Result<RawScalar, String> {
    let (num_text, den_text) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let digits = num_text.strip_prefix(['+', '-']).unwrap_or(num_text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed scalar `{token}`"));
    }
    let num: BigInt = num_text.parse().map_err(|_| format!("malformed scalar `{token}`"))?;
    let den = match den_text {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("malformed denominator in `{token}`"));
            }
            let d: BigInt = d.parse().map_err(|_| format!("malformed denominator in `{token}`"))?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in `{token}`"));
            }
            d
        }
    };
    Ok(RawScalar { num, den })
}

/// Meaningful lines with their 1-based numbers, comments removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((i + 1, line))
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(byte, t)| (line[..byte].chars().count() + 1, t)).collect()
}

fn err(line: usize, column: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Parse { line, column, message: message.into() }
}

fn parse_field_line(line_no: usize, toks: &[(usize, &str)]) -> Result<FieldDescriptor, DocumentError> {
    match toks {
        [(_, "field"), (_, "rational")] => Ok(FieldDescriptor::Rational),
        [(_, "field"), (_, "prime"), (col, p)] => {
            let p: u64 = p.parse().map_err(|_| err(line_no, *col, format!("malformed modulus `{p}`")))?;
            FieldDescriptor::prime(p).map_err(|e| DocumentError::Validation(e.to_string()))
        }
        [(_, "field"), (col, other), ..] => {
            Err(err(line_no, *col, format!("expected `rational` or `prime P`, found `{other}`")))
        }
        [(col, _), ..] => Err(err(line_no, *col, "expected `field rational` or `field prime P`")),
        [] => unreachable!("content lines are nonempty"),
    }
}

fn parse_dim_line(line_no: usize, toks: &[(usize, &str)]) -> Result<usize, DocumentError> {
    match toks {
        [(_, "dim"), (col, n)] => {
            let n: usize = n.parse().map_err(|_| err(line_no, *col, format!("malformed dimension `{n}`")))?;
            if n == 0 {
                return Err(DocumentError::Validation("dimension must be at least 1".into()));
            }
            Ok(n)
        }
        [(col, _), ..] => Err(err(line_no, *col, "expected `dim N`")),
        [] => unreachable!("content lines are nonempty"),
    }
}

/// Parses a document. `field_override` replaces the declared field, and every
/// entry is then read in the override field.
pub fn parse_document(
    text: &str,
    field_override: Option<FieldDescriptor>,
) -> Result<EvolutionAlgebra, DocumentError> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count().max(1);

    let (line_no, line) = lines.next().ok_or_else(|| err(1, 1, "empty document"))?;
    let declared = parse_field_line(line_no, &tokens(line))?;
    let field = field_override.unwrap_or(declared);

    let (line_no, line) = lines.next().ok_or_else(|| err(last_line, 1, "missing `dim` line"))?;
    let n = parse_dim_line(line_no, &tokens(line))?;

    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(last_line, 1, format!("expected {n} matrix rows, found {r}")))?;
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
            return Err(err(line_no, col, format!("row has {} entries, expected {n}", toks.len())));
        }
        let mut row = Vec::with_capacity(n);
        for (col, t) in toks {
            let raw = parse_raw_scalar(t).map_err(|m| err(line_no, col, m))?;
            row.push(raw.in_field(field).map_err(|m| err(line_no, col, m))?);
        }
        rows.push(row);
    }
    if let Some((line_no, line)) = lines.next() {
        let col = tokens(line)[0].0;
        return Err(err(line_no, col, "unexpected content after the matrix"));
    }
    let m = Matrix::from_rows(field, rows).map_err(|e| DocumentError::Validation(e.to_string()))?;
    EvolutionAlgebra::new(m).map_err(|e| DocumentError::Validation(e.to_string()))
}

/// Canonical text for an algebra; `parse_document(&emit_document(a), None)`
/// returns `a`, and emitting that again reproduces the same bytes.
pub fn emit_document(a: &EvolutionAlgebra) -> String {
    let mut out = String::new();
    match a.field() {
        FieldDescriptor::Rational => out.push_str("field rational\n"),
        FieldDescriptor::Prime(p) => out.push_str(&format!("field prime {p}\n")),
    }
    out.push_str(&format!("dim {}\n", a.dim()));
    for row in a.structure().row_vecs() {
        let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `"c1,c2,..."` with exactly `n` scalars of `field`.
pub fn parse_vector(text: &str, field: FieldDescriptor, n: usize) -> Result<Vec<Scalar>, DocumentError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(DocumentError::Validation(format!(
            "vector has {} coordinates, algebra has dimension {n}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|t| {
            parse_raw_scalar(t)
                .and_then(|r| r.in_field(field))
                .map_err(|m| DocumentError::Validation(format!("vector: {m}")))
        })
        .collect()
}

/// One vector per line (entries separated by whitespace or commas); the
/// result is their span. Blank and `#` lines are ignored, so an empty file
/// describes the zero subspace.
pub fn parse_subspace(text: &str, field: FieldDescriptor, n: usize) -> Result<Subspace, DocumentError> {
    let mut vectors = Vec::new();
    for (line_no, line) in content_lines(text) {
        let spaced = line.replace(',', " ");
        let toks = tokens(&spaced);
        if toks.len() != n {
            return Err(err(line_no, 1, format!("vector has {} entries, expected {n}", toks.len())));
        }
        let mut v = Vec::with_capacity(n);
        for (col, t) in toks {
            let raw = parse_raw_scalar(t).map_err(|m| err(line_no, col, m))?;
            v.push(raw.in_field(field).map_err(|m| err(line_no, col, m))?);
        }
        vectors.push(v);
    }
    Subspace::from_vectors(field, n, &vectors).map_err(|e| DocumentError::Validation(e.to_string()))
}
