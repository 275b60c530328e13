//! Vertex files: a `t=<rational>` header followed by one point per line.
//!
//! ```text
//! # comment
//! t=22
//! -4 5/3 -1
//! 0 0 0   # trailing comments are fine
//! ```

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::Context;
use scavenger_core::qcore::{parse_rational, QError};
use scavenger_core::{QPoint3, Rational};

/// Parse failure with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFile {
    pub path: Option<PathBuf>,
    pub t: Rational,
    /// Distinct points in first-seen order.
    pub points: Vec<QPoint3>,
    /// One message per dropped duplicate row.
    pub warnings: Vec<String>,
}

impl VertexFile {
    /// `t` as a positive integer, which every search and certificate needs.
    pub fn integer_t(&self) -> anyhow::Result<u64> {
        use num_traits::{Signed, ToPrimitive};
        self.t
            .is_integer()
            .then(|| self.t.to_integer())
            .filter(|n| n.is_positive())
            .and_then(|n| n.to_u64())
            .with_context(|| format!("t = {} is not a positive integer", self.t))
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        rest = &rest[skip..];
        offset += skip;
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = (offset + 1, &rest[..len]);
        rest = &rest[len..];
        offset += len;
        Some(tok)
    })
}

fn rational_at(text: &str, line: usize, column: usize) -> Result<Rational, ParseError> {
    parse_rational(text).map_err(|e| match e {
        QError::Parse {
            column: c, reason, ..
        } => ParseError {
            line,
            column: column + c - 1,
            message: format!("{reason} in {text:?}"),
        },
        other => ParseError {
            line,
            column,
            message: other.to_string(),
        },
    })
}

pub fn parse_vertex_text(text: &str) -> Result<VertexFile, ParseError> {
    let mut t = None;
    let mut points = Vec::new();
    let mut seen: HashMap<QPoint3, usize> = HashMap::new();
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<(usize, &str)> = tokens(body).collect();
        let Some(&(col, first)) = toks.first() else {
            continue;
        };
        if t.is_none() {
            let value = first.strip_prefix("t=").ok_or_else(|| ParseError {
                line,
                column: col,
                message: "expected header t=<rational>".into(),
            })?;
            if let Some(&(c, _)) = toks.get(1) {
                return Err(ParseError {
                    line,
                    column: c,
                    message: "unexpected text after header".into(),
                });
            }
            t = Some(rational_at(value, line, col + 2)?);
            continue;
        }
        if toks.len() != 3 {
            let column = toks.get(3).map_or(col, |&(c, _)| c);
            return Err(ParseError {
                line,
                column,
                message: format!("expected 3 coordinates, found {}", toks.len()),
            });
        }
        let c: Vec<Rational> = toks
            .iter()
            .map(|&(c, s)| rational_at(s, line, c))
            .collect::<Result<_, _>>()?;
        let [x, y, z]: [Rational; 3] = c.try_into().expect("three coordinates");
        let p = QPoint3::new(x, y, z);
        if let Some(&first_line) = seen.get(&p) {
            warnings.push(format!(
                "line {line} repeats line {first_line} ({p}); kept once"
            ));
            continue;
        }
        seen.insert(p.clone(), line);
        points.push(p);
    }
    let t = t.ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing header t=<rational>".into(),
    })?;
    Ok(VertexFile {
        path: None,
        t,
        points,
        warnings,
    })
}

pub fn parse_vertex_file(path: &Path) -> anyhow::Result<VertexFile> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut file = parse_vertex_text(&text).with_context(|| format!("in {}", path.display()))?;
    file.path = Some(path.to_path_buf());
    Ok(file)
}

/// Renders points in vertex-file syntax.
pub fn render_vertex_file(t: &Rational, points: &[QPoint3]) -> String {
    let mut out = format!("t={t}\n");
    for p in points {
        out.push_str(&format!("{p}\n"));
    }
    out
}
