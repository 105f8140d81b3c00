//! The line-oriented input format:
//!
//! ```text
//! dim 2
//! X1: 0 1 ; 0 0
//! X2: 2 3 ; 0 2
//! ```
//!
//! Rows are separated by `;`, entries by whitespace, rationals are `p` or
//! `p/q`. A lone `/` separates statements on one line, and `#` starts a
//! comment.

use std::fmt;
use std::path::Path;

use sjplane::exactmath::parse_rational;
use sjplane::{Mat, Rational, Rep};

use crate::error::CliError;

/// A parsed document: the stated dimension and both matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct InputDocument {
    pub dim: usize,
    pub x1: Mat,
    pub x2: Mat,
}

impl InputDocument {
    /// The module described by the document, after checking the relations.
    pub fn representation(&self) -> Result<Rep, CliError> {
        Ok(Rep::new(self.x1.clone(), self.x2.clone())?)
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}\nX1: {}\nX2: {}", self.dim, self.x1, self.x2)
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug)]
struct Token<'a> {
    text: &'a str,
    pos: Pos,
}

fn tokenize(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let col_of = |byte: usize| body[..byte].chars().count() + 1;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() || ch == ';' {
            if let Some(s) = start.take() {
                out.push(Token { text: &body[s..i], pos: Pos { line: line_no, col: col_of(s) } });
            }
            if ch == ';' {
                out.push(Token { text: ";", pos: Pos { line: line_no, col: col_of(i) } });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &body[s..], pos: Pos { line: line_no, col: col_of(s) } });
    }
    out
}

fn parse_err(origin: &str, pos: Pos, msg: impl Into<String>) -> CliError {
    CliError::Parse { origin: origin.to_string(), line: pos.line, col: pos.col, msg: msg.into() }
}

fn mismatch(origin: &str, pos: Pos, msg: impl Into<String>) -> CliError {
    CliError::DimensionMismatch { origin: origin.to_string(), line: pos.line, col: pos.col, msg: msg.into() }
}

struct RawMatrix {
    rows: Vec<Vec<Rational>>,
    row_pos: Vec<Pos>,
    pos: Pos,
}

fn parse_matrix(origin: &str, key: &Token, tokens: &[Token]) -> Result<RawMatrix, CliError> {
    let mut rows = vec![Vec::new()];
    let mut row_pos = vec![tokens.first().map_or(key.pos, |t| t.pos)];
    for t in tokens {
        if t.text == ";" {
            rows.push(Vec::new());
            row_pos.push(t.pos);
            continue;
        }
        let q = parse_rational(t.text)
            .map_err(|_| parse_err(origin, t.pos, format!("invalid rational {:?}", t.text)))?;
        rows.last_mut().expect("at least one row").push(q);
    }
    if rows.iter().all(Vec::is_empty) {
        return Err(parse_err(origin, key.pos, format!("{} has no entries", key.text)));
    }
    Ok(RawMatrix { rows, row_pos, pos: key.pos })
}

fn check_shape(origin: &str, name: &str, m: &RawMatrix, dim: usize) -> Result<Mat, CliError> {
    if m.rows.len() != dim {
        return Err(mismatch(
            origin,
            m.pos,
            format!("{name} has {} rows but dim is {dim}", m.rows.len()),
        ));
    }
    for (i, (row, pos)) in m.rows.iter().zip(&m.row_pos).enumerate() {
        if row.len() != dim {
            return Err(mismatch(
                origin,
                *pos,
                format!("row {} of {name} has {} entries but dim is {dim}", i + 1, row.len()),
            ));
        }
    }
    Ok(Mat::from_rows(m.rows.clone())?)
}

/// Parses a document; `origin` names the source in diagnostics.
pub fn parse_input_from(text: &str, origin: &str) -> Result<InputDocument, CliError> {
    let mut dim: Option<(usize, Pos)> = None;
    let mut x1: Option<RawMatrix> = None;
    let mut x2: Option<RawMatrix> = None;
    let mut end = Pos { line: 1, col: 1 };
    for (i, line) in text.lines().enumerate() {
        let tokens = tokenize(line, i + 1);
        end = Pos { line: i + 1, col: line.chars().count() + 1 };
        for stmt in tokens.split(|t| t.text == "/") {
            let Some((key, rest)) = stmt.split_first() else {
                continue;
            };
            match key.text {
                "dim" => {
                    if dim.is_some() {
                        return Err(parse_err(origin, key.pos, "dim given twice"));
                    }
                    let [n] = rest else {
                        return Err(parse_err(origin, key.pos, "expected `dim N`"));
                    };
                    let value: usize = n
                        .text
                        .parse()
                        .map_err(|_| parse_err(origin, n.pos, format!("invalid dimension {:?}", n.text)))?;
                    if value == 0 {
                        return Err(parse_err(origin, n.pos, "dimension must be positive"));
                    }
                    dim = Some((value, key.pos));
                }
                "X1:" | "X2:" => {
                    let slot = if key.text == "X1:" { &mut x1 } else { &mut x2 };
                    if slot.is_some() {
                        return Err(parse_err(origin, key.pos, format!("{} given twice", key.text)));
                    }
                    *slot = Some(parse_matrix(origin, key, rest)?);
                }
                other => {
                    return Err(parse_err(
                        origin,
                        key.pos,
                        format!("unexpected {other:?}; expected `dim`, `X1:` or `X2:`"),
                    ))
                }
            }
        }
    }
    let Some((dim, _)) = dim else {
        return Err(parse_err(origin, end, "missing `dim N`"));
    };
    let x1 = x1.ok_or_else(|| parse_err(origin, end, "missing `X1:`"))?;
    let x2 = x2.ok_or_else(|| parse_err(origin, end, "missing `X2:`"))?;
    Ok(InputDocument {
        dim,
        x1: check_shape(origin, "X1", &x1, dim)?,
        x2: check_shape(origin, "X2", &x2, dim)?,
    })
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    parse_input_from(text, "<input>")
}

/// Reads and parses a file; `-` reads standard input.
pub fn load_document(path: &str) -> Result<InputDocument, CliError> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(Path::new(path))
    }
    .map_err(|source| CliError::Io { path: path.to_string(), source })?;
    parse_input_from(&text, path)
}
