//! Edge-list text format and label sidecars.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! The header gives the vertex and edge counts, followed by exactly `m`
//! lines of 0-based endpoints. Anything after `#` on a line is ignored, as
//! are blank lines. Label sidecars are JSON objects mapping role names to
//! vertex indices.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let syntax = |msg: String| ParseError::Syntax { line, msg };
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = it
            .next()
            .ok_or_else(|| syntax(format!("expected {what}")))?;
        tok.parse()
            .map_err(|_| syntax(format!("invalid {what} `{tok}`")))
    };
    let pair = (next("first integer")?, next("second integer")?);
    if let Some(extra) = it.next() {
        return Err(syntax(format!("unexpected token `{extra}`")));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(hline, header)?;
    let edges = lines
        .map(|(i, l)| parse_pair(i, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_edge_list(path: &Path) -> Result<Graph, ParseError> {
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.into(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Conventional sidecar location: `graph.el` → `graph.el.labels.json`.
pub fn sidecar_path(edge_list: &Path) -> PathBuf {
    let mut name = edge_list.as_os_str().to_owned();
    name.push(".labels.json");
    PathBuf::from(name)
}

pub fn read_labels(path: &Path) -> Result<BTreeMap<String, usize>, ParseError> {
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.into(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| ParseError::Json {
        path: path.into(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# a path\n3 2\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: invalid second integer `x`");
        let err = parse_edge_list("3 2\n0 1 2\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            parse_edge_list(""),
            Err(ParseError::MissingHeader)
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeCount {
                declared: 2,
                found: 1
            })
        ));
        let err = parse_edge_list("3 1\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("Disconnected"));
    }

    proptest! {
        #[test]
        fn write_then_parse(n in 2usize..12, seed in any::<u64>()) {
            let g = crate::tree::random_tree(n, seed).unwrap();
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
