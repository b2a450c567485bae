//! Reading and writing check matrices as text.
//!
//! Symplectic files hold one row per line, `z` block and `x` block split by
//! a single `|`; GF(4) files hold one row per line over `0 1 w W`. In both,
//! blank lines and `#` comments are skipped. Malformed characters are
//! [`Error::Parse`]; well-formed text of the wrong shape is
//! [`Error::Format`].

use std::path::Path;

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitVector};
use crate::gf4::{parse_vector, render_vector, Gf4Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputFormat {
    Gf4,
    Symplectic,
}

impl InputFormat {
    /// `.g4` is quaternary; anything else is read as symplectic.
    pub fn from_path(path: &Path) -> InputFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g4") => InputFormat::Gf4,
            _ => InputFormat::Symplectic,
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses a symplectic check matrix. Rows must agree on width and on
/// whether and where they carry the separator, and the width must be even.
pub fn parse_symplectic(text: &str) -> Result<BinMatrix> {
    let mut rows = Vec::new();
    let mut shape: Option<(usize, Option<usize>)> = None;
    for (lineno, line) in content_lines(text) {
        let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
        let parts: Vec<&str> = compact.split('|').collect();
        if parts.len() > 2 {
            return Err(Error::Format(format!("line {lineno}: more than one '|'")));
        }
        let split = (parts.len() == 2).then(|| parts[0].len());
        let bits: String = parts.concat();
        let row = BitVector::parse(&bits).map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
        if let Some(s) = split {
            if 2 * s != row.len() {
                return Err(Error::Format(format!(
                    "line {lineno}: '|' after column {s} does not halve a row of {}",
                    row.len()
                )));
            }
        }
        match shape {
            None => shape = Some((row.len(), split)),
            Some((width, _)) if width != row.len() => {
                return Err(Error::Format(format!(
                    "line {lineno}: row has {} columns, expected {width}",
                    row.len()
                )))
            }
            Some((_, first)) if first.is_some() != split.is_some() => {
                return Err(Error::Format(format!("line {lineno}: '|' used on some rows only")));
            }
            _ => {}
        }
        rows.push(row);
    }
    let Some((width, _)) = shape else {
        return Err(Error::Parse("no matrix rows found".into()));
    };
    if width % 2 != 0 {
        return Err(Error::Format(format!("odd number of columns ({width})")));
    }
    BinMatrix::from_rows(rows, width)
}

/// Parses a GF(4) parity-check matrix.
pub fn parse_gf4(text: &str) -> Result<Gf4Matrix> {
    let mut rows: Vec<Vec<_>> = Vec::new();
    for (lineno, line) in content_lines(text) {
        let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
        let row = parse_vector(&compact).map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Format(format!(
                    "line {lineno}: row has {} columns, expected {}",
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse("no matrix rows found".into()));
    }
    let width = rows[0].len();
    Gf4Matrix::from_rows(rows, width)
}

/// Rows as `z|x` strings.
pub fn render_symplectic(m: &BinMatrix) -> Vec<String> {
    let n = m.ncols() / 2;
    m.rows()
        .iter()
        .map(|r| format!("{}|{}", r.slice(0, n), r.slice(n, 2 * n)))
        .collect()
}

pub fn render_gf4(m: &Gf4Matrix) -> Vec<String> {
    m.rows().iter().map(|r| render_vector(r)).collect()
}
