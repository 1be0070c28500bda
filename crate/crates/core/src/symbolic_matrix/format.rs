//! Line-oriented text formats.
//!
//! Symbolic matrix (`.smx`):
//!
//! ```text
//! n=2
//! alphabet= a b c
//! 1,1= a
//! 1,2= b
//! 2,1= c
//! ```
//!
//! Cells are 1-based, omitted cells are 0, and a repeated token expresses
//! multiplicity. Integer matrix (`.int`): `n=<size>` followed by `n` rows of
//! `n` whitespace-separated integers. Blank lines and lines starting with
//! `#` are ignored in both formats.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Alphabet, Symbol, SymbolicError, SymbolicMatrix};
use crate::abelian::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] SymbolicError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_size(line: Option<(usize, &str)>) -> Result<usize, ParseError> {
    let (no, l) = line.ok_or_else(|| syntax(1, "missing `n=<size>` header"))?;
    let v = l
        .strip_prefix("n=")
        .ok_or_else(|| syntax(no, "expected `n=<size>`"))?
        .trim();
    match v.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(syntax(no, format!("bad size `{v}`"))),
    }
}

impl SymbolicMatrix {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let n = parse_size(lines.next())?;
        let (no, l) = lines
            .next()
            .ok_or_else(|| syntax(2, "missing `alphabet=` line"))?;
        let rest = l
            .strip_prefix("alphabet=")
            .ok_or_else(|| syntax(no, "expected `alphabet= <sym> ...`"))?;
        let alphabet = Alphabet::new(
            rest.split_whitespace()
                .map(Symbol::new)
                .collect::<Result<Vec<_>, _>>()?,
        )?;

        let mut cells: Vec<Option<Vec<Symbol>>> = vec![None; n * n];
        for (no, l) in lines {
            let (pos, body) = l
                .split_once('=')
                .ok_or_else(|| syntax(no, "expected `<i>,<j>= <sym>+<sym>...`"))?;
            let (i, j) = pos
                .split_once(',')
                .and_then(|(i, j)| {
                    Some((
                        i.trim().parse::<usize>().ok()?,
                        j.trim().parse::<usize>().ok()?,
                    ))
                })
                .ok_or_else(|| syntax(no, format!("bad cell position `{pos}`")))?;
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(syntax(
                    no,
                    format!("cell ({i},{j}) outside a {n}x{n} matrix"),
                ));
            }
            let slot = &mut cells[(i - 1) * n + (j - 1)];
            if slot.is_some() {
                return Err(syntax(no, format!("cell ({i},{j}) given twice")));
            }
            let body = body.trim();
            let entry = if body.is_empty() || body == "0" {
                Vec::new()
            } else {
                body.split('+')
                    .map(|t| Symbol::new(t.trim()))
                    .collect::<Result<Vec<_>, _>>()?
            };
            *slot = Some(entry);
        }
        Ok(SymbolicMatrix::new(
            n,
            alphabet,
            cells.into_iter().map(Option::unwrap_or_default).collect(),
        )?)
    }

    pub fn to_text(&self) -> String {
        let n = self.size();
        let mut out = format!("n={n}\nalphabet=");
        for s in self.alphabet().iter() {
            out.push(' ');
            out.push_str(s.as_str());
        }
        out.push('\n');
        for i in 0..n {
            for j in 0..n {
                if self.entry_len(i, j) == 0 {
                    continue;
                }
                let body: Vec<&str> = self.entry(i, j).map(Symbol::as_str).collect();
                out.push_str(&format!("{},{}= {}\n", i + 1, j + 1, body.join("+")));
            }
        }
        out
    }
}

pub fn parse_int_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_size(lines.next())?;
    let mut rows = Vec::with_capacity(n);
    for (no, l) in lines {
        if rows.len() == n {
            return Err(syntax(no, format!("more than {n} rows")));
        }
        let row = l
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| syntax(no, format!("bad integer `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(syntax(
                no,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(syntax(
            0,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok(IntMatrix::from_rows(&rows))
}

pub fn format_int_matrix(a: &IntMatrix) -> String {
    assert!(
        a.is_square(),
        "the integer matrix format holds square matrices"
    );
    format!("n={}\n{a}\n", a.rows())
}
