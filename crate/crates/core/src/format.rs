//! Text formats for matrices and matrix-trees.
//!
//! Matrix documents:
//!
//! ```text
//! # optional comments
//! p h n
//! a11 a12 ... a1n
//! ...
//! ah1 ... ahn
//! ```
//!
//! Tree documents have one node per line, `id parent labels`, where `parent`
//! is `-` for the root and `labels` is a comma-separated list of `R`, `C` and
//! `level:value`. The root line has no labels.
//!
//! In both formats lines whose first non-blank character is `#` and blank
//! lines are ignored; the final newline is optional.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::field::{is_prime, Field, MAX_PRIME};
use crate::linalg::Matrix;
use crate::matrix_tree::{MatrixTree, NodeId, TreeLabel, TreeNode};

/// Largest row or column count accepted from a document.
pub const MAX_DIMENSION: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("document is empty")]
    Empty,
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: modulus {p} is not a prime of at most {MAX_PRIME}")]
    NotPrime { line: usize, p: u64 },
    #[error("line {line}, column {col}: {token:?} is not a non-negative integer")]
    BadToken {
        line: usize,
        col: usize,
        token: String,
    },
    #[error("line {line}, column {col}: entry {value} is not below {p}")]
    EntryOutOfRange {
        line: usize,
        col: usize,
        value: u64,
        p: u8,
    },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongColumnCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("line {line}: {reason}")]
    MalformedTreeLine { line: usize, reason: String },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
}

impl ParseError {
    /// Stable short code for each failure class.
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Empty => "E-EMPTY",
            ParseError::MalformedHeader { .. } => "E-HEADER",
            ParseError::NotPrime { .. } => "E-PRIME",
            ParseError::BadToken { .. } => "E-TOKEN",
            ParseError::EntryOutOfRange { .. } => "E-RANGE",
            ParseError::WrongColumnCount { .. } => "E-COLS",
            ParseError::WrongRowCount { .. } => "E-ROWS",
            ParseError::MalformedTreeLine { .. } => "E-TREE-LINE",
            ParseError::InvalidTree(_) => "E-TREE",
        }
    }
}

/// Content lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim_start();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

/// Tokens with 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn number(line: usize, col: usize, tok: &str) -> Result<u64, ParseError> {
    let bad = || ParseError::BadToken {
        line,
        col,
        token: tok.to_string(),
    };
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    tok.parse().map_err(|_| bad())
}

pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let toks = tokens(header);
    if toks.len() != 3 {
        return Err(ParseError::MalformedHeader {
            line: hline,
            reason: format!("expected `p h n`, found {} fields", toks.len()),
        });
    }
    let mut nums = [0u64; 3];
    for (slot, &(col, tok)) in nums.iter_mut().zip(&toks) {
        *slot = number(hline, col, tok).map_err(|_| ParseError::MalformedHeader {
            line: hline,
            reason: format!("{tok:?} is not a non-negative integer"),
        })?;
    }
    let [p, h, n] = nums;
    if p > MAX_PRIME as u64 || !is_prime(p) {
        return Err(ParseError::NotPrime { line: hline, p });
    }
    if h as usize > MAX_DIMENSION || n as usize > MAX_DIMENSION {
        return Err(ParseError::MalformedHeader {
            line: hline,
            reason: format!("dimensions {h}x{n} exceed {MAX_DIMENSION}"),
        });
    }
    let field = Field::new(p as u16).expect("checked prime");
    let (h, n) = (h as usize, n as usize);
    let mut data = Vec::with_capacity(h * n);
    let mut found = 0;
    for (lineno, line) in lines {
        found += 1;
        if found > h {
            continue;
        }
        let toks = tokens(line);
        if toks.len() != n {
            return Err(ParseError::WrongColumnCount {
                line: lineno,
                expected: n,
                found: toks.len(),
            });
        }
        for (col, tok) in toks {
            let value = number(lineno, col, tok)?;
            if value >= p {
                return Err(ParseError::EntryOutOfRange {
                    line: lineno,
                    col,
                    value,
                    p: field.p(),
                });
            }
            data.push(value as u8);
        }
    }
    // with n = 0 rows are blank lines, which are not counted
    if n > 0 && found != h || n == 0 && found != 0 {
        return Err(ParseError::WrongRowCount { expected: h, found });
    }
    Ok(Matrix::new(field, h, n, data).expect("dimensions checked"))
}

pub fn write_matrix(a: &Matrix) -> String {
    let mut s = format!("{} {} {}\n", a.field().p(), a.rows(), a.cols());
    for r in 0..a.rows() {
        let row: Vec<String> = a.row(r).iter().map(u8::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn tree_label(line: usize, tok: &str) -> Result<TreeLabel, ParseError> {
    let bad = |reason: String| ParseError::MalformedTreeLine { line, reason };
    match tok {
        "R" => Ok(TreeLabel::Row),
        "C" => Ok(TreeLabel::Column),
        _ => {
            let (i, a) = tok
                .split_once(':')
                .ok_or_else(|| bad(format!("unknown label {tok:?}")))?;
            let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
            if !digits(i) || !digits(a) {
                return Err(bad(format!("entry label {tok:?} is not `level:value`")));
            }
            let level: usize = i.parse().map_err(|_| bad(format!("level {i:?} too large")))?;
            let value: u16 = a.parse().map_err(|_| bad(format!("value {a:?} too large")))?;
            if value > u8::MAX as u16 {
                return Err(bad(format!("value {value} too large")));
            }
            Ok(TreeLabel::Entry {
                level,
                value: value as u8,
            })
        }
    }
}

/// Parses a tree document over `field` and validates the tree invariants.
pub fn parse_tree(text: &str, field: Field) -> Result<MatrixTree, ParseError> {
    let mut nodes: BTreeMap<NodeId, TreeNode> = BTreeMap::new();
    for (lineno, line) in content_lines(text) {
        let bad = |reason: String| ParseError::MalformedTreeLine {
            line: lineno,
            reason,
        };
        let toks = tokens(line);
        if toks.len() < 2 || toks.len() > 3 {
            return Err(bad(format!(
                "expected `id parent labels`, found {} fields",
                toks.len()
            )));
        }
        let id_of = |col: usize, tok: &str| -> Result<NodeId, ParseError> {
            let v = number(lineno, col, tok)?;
            NodeId::try_from(v).map_err(|_| bad(format!("node id {v} too large")))
        };
        let id = id_of(toks[0].0, toks[0].1)?;
        let parent = match toks[1].1 {
            "-" => None,
            t => Some(id_of(toks[1].0, t)?),
        };
        let labels = match toks.get(2) {
            None => vec![],
            Some(&(_, t)) => t
                .split(',')
                .map(|l| tree_label(lineno, l))
                .collect::<Result<_, _>>()?,
        };
        if nodes.insert(id, TreeNode { parent, labels }).is_some() {
            return Err(bad(format!("node {id} defined twice")));
        }
    }
    if nodes.is_empty() {
        return Err(ParseError::Empty);
    }
    MatrixTree::new(field, nodes).map_err(|e| ParseError::InvalidTree(e.to_string()))
}

pub fn write_tree(t: &MatrixTree) -> String {
    let mut s = String::new();
    for (id, node) in t.nodes() {
        let parent = node.parent.map_or("-".to_string(), |p| p.to_string());
        let _ = write!(s, "{id} {parent}");
        if !node.labels.is_empty() {
            let labels: Vec<String> = node.labels.iter().map(|l| l.to_string()).collect();
            let _ = write!(s, " {}", labels.join(","));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_u23() {
        let a = parse_matrix("2 2 3\n1 0 1\n0 1 1\n").unwrap();
        assert_eq!(a, Matrix::from_rows(Field::gf2(), &[[1u8, 0, 1], [0, 1, 1]], 3).unwrap());
        // no trailing newline, comments
        let b = parse_matrix("# U_{2,3}\n2 2 3\n1 0 1\n  # mid\n0 1 1").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn error_classes() {
        let code = |s: &str| parse_matrix(s).unwrap_err().code();
        assert_eq!(code("4 1 1\n1\n"), "E-PRIME");
        assert_eq!(code("3 1 2\n1 5\n"), "E-RANGE");
        assert_eq!(code("2 2 2\n1 0\n"), "E-ROWS");
        assert_eq!(code("2 1 2\n1 0\n1 1\n"), "E-ROWS");
        assert_eq!(code("2 1 2\n1\n"), "E-COLS");
        assert_eq!(code("2 1\n1\n"), "E-HEADER");
        assert_eq!(code("2 x 1\n1\n"), "E-HEADER");
        assert_eq!(code("2 1 1\n-1\n"), "E-TOKEN");
        assert_eq!(code(""), "E-EMPTY");
        assert_eq!(code("# only a comment\n"), "E-EMPTY");
        assert_eq!(code("2 99999 1\n"), "E-HEADER");
    }

    #[test]
    fn range_error_positions() {
        let e = parse_matrix("3 1 2\n1 5\n").unwrap_err();
        assert_eq!(
            e,
            ParseError::EntryOutOfRange {
                line: 2,
                col: 3,
                value: 5,
                p: 3
            }
        );
    }

    #[test]
    fn zero_width_matrices() {
        let a = parse_matrix("5 2 0\n\n\n").unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 0));
        assert_eq!(write_matrix(&a), "5 2 0\n\n\n");
        let a = parse_matrix("5 0 3\n").unwrap();
        assert_eq!((a.rows(), a.cols()), (0, 3));
    }

    #[test]
    fn tree_documents() {
        let doc = "0 -\n1 0 R\n2 1 R\n3 1 C,0:0,1:1\n4 2 C,0:0,1:0,2:1\n5 2 C,0:0,1:1,2:1\n";
        let t = parse_tree(doc, Field::gf2()).unwrap();
        assert_eq!(write_tree(&t), doc);
        assert_eq!(
            t.decode().unwrap(),
            Matrix::from_rows(Field::gf2(), &[[1u8, 0, 1], [0, 1, 1]], 3).unwrap()
        );
    }

    #[test]
    fn tree_errors() {
        let f = Field::gf2();
        let code = |s: &str| parse_tree(s, f).unwrap_err().code();
        assert_eq!(code("0 -\n1 0 X\n"), "E-TREE-LINE");
        assert_eq!(code("0 -\n0 - \n"), "E-TREE-LINE");
        assert_eq!(code("0 -\n1 0 R extra\n"), "E-TREE-LINE");
        assert_eq!(code("0 -\n1 0 C\n"), "E-TREE");
        assert_eq!(code("0 -\n1 0 C,0:7\n"), "E-TREE");
        assert_eq!(code("a -\n"), "E-TOKEN");
        assert_eq!(code(""), "E-EMPTY");
    }
}
