//! The plain-text ideal format.
//!
//! Monomials are separated by commas or newlines and written either as
//! `x1*x3*x4` (the `*` is optional) or as `{1,3,4}`. `#` starts a comment.
//! An optional `n=<count>` line fixes the ambient ring; otherwise `n` is the
//! largest variable index used.

use std::fmt::Write as _;

use sqfree_core::{minimal_generators, MonomialIdeal, SquarefreeMonomial, MAX_VARS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Monomials as written, before minimalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialList {
    pub n: usize,
    pub monomials: Vec<SquarefreeMonomial>,
}

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Splits one line at commas outside braces, keeping 1-based columns.
fn split_line<'a>(line_no: usize, line: &'a str, out: &mut Vec<Token<'a>>) -> Result<(), ParseError> {
    let mut depth = 0usize;
    let mut start = 0;
    let mut push = |from: usize, to: usize| {
        let raw = &line[from..to];
        let trimmed = raw.trim_start();
        let offset = raw.len() - trimmed.len();
        let text = trimmed.trim_end();
        if !text.is_empty() {
            out.push(Token { line: line_no, column: from + offset + 1, text });
        }
    };
    for (i, c) in line.char_indices() {
        match c {
            '{' => depth += 1,
            '}' if depth == 0 => return Err(err(line_no, i + 1, "unmatched `}`")),
            '}' => depth -= 1,
            ',' if depth == 0 => {
                push(start, i);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth > 0 {
        return Err(err(line_no, line.len() + 1, "unterminated `{`"));
    }
    push(start, line.len());
    Ok(())
}

fn parse_header(token: &Token<'_>) -> Option<Result<usize, ParseError>> {
    let rest = token.text.strip_prefix('n')?.trim_start();
    let value = rest.strip_prefix('=')?.trim();
    Some(match value.parse::<usize>() {
        Ok(n) if (1..=MAX_VARS).contains(&n) => Ok(n),
        _ => Err(err(token.line, token.column, format!("bad ambient size `{value}`, expected 1..={MAX_VARS}"))),
    })
}

/// Parses a list of monomials without minimalizing it.
pub fn parse_monomials(text: &str) -> Result<MonomialList, ParseError> {
    let mut tokens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        split_line(i + 1, line, &mut tokens)?;
    }
    let mut header = None;
    let mut supports = Vec::new();
    for token in &tokens {
        if let Some(n) = parse_header(token) {
            if header.is_some() || !supports.is_empty() {
                return Err(err(token.line, token.column, "`n=` must come once, before any monomial"));
            }
            header = Some(n?);
            continue;
        }
        let u = SquarefreeMonomial::parse(MAX_VARS, token.text)
            .map_err(|e| err(token.line, token.column, format!("`{}`: {e}", token.text)))?;
        supports.push((token, u.support_vec()));
    }
    let used = supports.iter().flat_map(|(_, s)| s.iter().copied()).max().unwrap_or(0);
    let n = match header {
        Some(n) => n,
        None if used == 0 => return Err(err(1, 1, "no variables: give an `n=` header or a monomial")),
        None => used,
    };
    let monomials = supports
        .into_iter()
        .map(|(token, s)| {
            SquarefreeMonomial::new(n, &s).map_err(|e| err(token.line, token.column, format!("`{}`: {e}", token.text)))
        })
        .collect::<Result<_, _>>()?;
    Ok(MonomialList { n, monomials })
}

/// Parses and minimalizes an ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let list = parse_monomials(text)?;
    minimal_generators(list.n, list.monomials).map_err(|e| err(1, 1, e.to_string()))
}

/// `n=<n>` followed by the minimal generators, one per line.
pub fn emit_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n={}\n", ideal.n());
    for u in ideal.generators() {
        let _ = writeln!(out, "{u}");
    }
    out
}
