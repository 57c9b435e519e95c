//! Plain-text file formats.
//!
//! Ideal file:
//!
//! ```text
//! # optional comments and blank lines
//! vars 3 x y z
//! 4 0 0
//! 0 4 0
//! 3 2 2
//! end
//! ```
//!
//! The variable names after the count are optional; when given there must be
//! exactly `n` of them. Exponents are finite integers no larger than 2^32.
//!
//! Component file:
//!
//! ```text
//! components 3 2
//! 4 4 2
//! 4 1 inf
//! end
//! ```
//!
//! Rows are emitted in lex order, so identical component sets produce
//! identical bytes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::{ComponentSet, GeneratorSet};
use crate::vector::{ExpVector, Exponent, MAX_INPUT_EXPONENT};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_exponent(tok: &str, line: usize, allow_inf: bool) -> Result<Exponent> {
    if tok == "inf" {
        return if allow_inf {
            Ok(Exponent::INF)
        } else {
            Err(err(line, "`inf` is not allowed in a generator"))
        };
    }
    let v: u64 = tok
        .parse()
        .map_err(|_| err(line, format!("`{tok}` is not a nonnegative integer")))?;
    if v > MAX_INPUT_EXPONENT {
        return Err(err(line, format!("exponent {v} exceeds 2^32")));
    }
    Ok(Exponent::new(v))
}

fn parse_row(l: &str, line: usize, n: usize, allow_inf: bool) -> Result<ExpVector> {
    let coords = l
        .split_whitespace()
        .map(|t| parse_exponent(t, line, allow_inf))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != n {
        return Err(err(
            line,
            format!("expected {n} exponents, found {}", coords.len()),
        ));
    }
    Ok(ExpVector::new(coords))
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| err(line, format!("bad {what}")))
}

/// Parse rows until `end`, then make sure nothing but comments follows.
fn parse_body<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    allow_inf: bool,
    header_line: usize,
) -> Result<Vec<ExpVector>> {
    let mut rows = Vec::new();
    let mut last = header_line;
    loop {
        match lines.next() {
            Some((_, "end")) => {
                if let Some((extra, _)) = lines.next() {
                    return Err(err(extra, "content after `end`"));
                }
                return Ok(rows);
            }
            Some((ln, l)) => {
                rows.push(parse_row(l, ln, n, allow_inf)?);
                last = ln;
            }
            None => return Err(err(last, "missing `end`")),
        }
    }
}

pub fn parse_ideal(text: &str) -> Result<GeneratorSet> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("vars") {
        return Err(err(hl, "expected `vars <n> [names...]`"));
    }
    let n = parse_count(toks.next(), hl, "variable count")?;
    if n == 0 {
        return Err(err(hl, "variable count must be positive"));
    }
    let names: Vec<String> = toks.map(str::to_owned).collect();
    if !names.is_empty() && names.len() != n {
        return Err(err(
            hl,
            format!("expected {n} variable names, found {}", names.len()),
        ));
    }
    let gens = parse_body(&mut lines, n, false, hl)?;
    let g = GeneratorSet::new(n, gens).map_err(|e| err(hl, e.to_string()))?;
    if names.is_empty() {
        Ok(g)
    } else {
        g.with_names(names)
    }
}

pub fn emit_ideal(g: &GeneratorSet) -> String {
    let mut out = format!("vars {}", g.n());
    if let Some(names) = g.names() {
        for name in names {
            out.push(' ');
            out.push_str(name);
        }
    }
    out.push('\n');
    for v in g.gens() {
        push_row(&mut out, v);
    }
    out.push_str("end\n");
    out
}

pub fn parse_components(text: &str) -> Result<ComponentSet> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("components") {
        return Err(err(hl, "expected `components <n> <r>`"));
    }
    let n = parse_count(toks.next(), hl, "variable count")?;
    let r = parse_count(toks.next(), hl, "component count")?;
    if toks.next().is_some() {
        return Err(err(hl, "trailing tokens in header"));
    }
    let rows = parse_body(&mut lines, n, true, hl)?;
    if rows.len() != r {
        return Err(err(
            hl,
            format!("header says {r} components, found {}", rows.len()),
        ));
    }
    ComponentSet::new(n, rows)
}

pub fn emit_components(c: &ComponentSet) -> String {
    let mut out = format!("components {} {}\n", c.n(), c.len());
    for v in c.comps() {
        push_row(&mut out, v);
    }
    out.push_str("end\n");
    out
}

fn push_row(out: &mut String, v: &ExpVector) {
    for (i, e) in v.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{e}");
    }
    out.push('\n');
}
