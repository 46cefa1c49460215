//! Line-oriented graph files.
//!
//! ```text
//! c comment
//! p bc <n> <m> <directed|undirected>
//! e <u> <v> <w>
//! ```
//!
//! Weights are positive decimals with at most six fractional digits. An
//! undirected file lists each edge once.

use std::fmt::Write as _;

use incbc_core::{Graph, GraphError, WeightParseError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `p bc <n> <m> <directed|undirected>` header")]
    MissingHeader,
    #[error("second header")]
    DuplicateHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("malformed line: {0}")]
    BadLine(String),
    #[error("header declares {declared} edges, file has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("bad weight: {0}")]
    Weight(#[from] WeightParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, kind: impl Into<ParseErrorKind>) -> Self {
        ParseError { line, kind: kind.into() }
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

pub(crate) fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, text: &str) -> Result<T, ParseError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::new(line, ParseErrorKind::BadLine(text.to_string())))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::new(0, ParseErrorKind::MissingHeader))?;
    let bad_header = || ParseError::new(hline, ParseErrorKind::BadHeader(header.to_string()));
    let toks: Vec<&str> = header.split_whitespace().collect();
    let [p, bc, n, m, kind] = toks[..] else {
        return Err(if header.starts_with("p ") { bad_header() } else { ParseError::new(hline, ParseErrorKind::MissingHeader) });
    };
    if p != "p" || bc != "bc" {
        return Err(ParseError::new(hline, ParseErrorKind::MissingHeader));
    }
    let n: usize = n.parse().map_err(|_| bad_header())?;
    let m: usize = m.parse().map_err(|_| bad_header())?;
    let undirected = match kind {
        "directed" => false,
        "undirected" => true,
        _ => return Err(bad_header()),
    };
    let mut g = Graph::new(n, undirected).map_err(|e| ParseError::new(hline, e))?;

    let mut found = 0;
    let mut last_line = hline;
    for (line, text) in lines {
        last_line = line;
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some("e") => {}
            Some("p") => return Err(ParseError::new(line, ParseErrorKind::DuplicateHeader)),
            _ => return Err(ParseError::new(line, ParseErrorKind::BadLine(text.to_string()))),
        }
        let u: usize = field(toks.next(), line, text)?;
        let v: usize = field(toks.next(), line, text)?;
        let w = toks
            .next()
            .ok_or_else(|| ParseError::new(line, ParseErrorKind::BadLine(text.to_string())))?
            .parse()
            .map_err(|e: WeightParseError| ParseError::new(line, e))?;
        if toks.next().is_some() {
            return Err(ParseError::new(line, ParseErrorKind::BadLine(text.to_string())));
        }
        g.add_edge(u, v, w).map_err(|e| ParseError::new(line, e))?;
        found += 1;
    }
    if found != m {
        return Err(ParseError::new(last_line, ParseErrorKind::EdgeCount { declared: m, found }));
    }
    Ok(g)
}

/// Canonical text: edges in lexicographic order, undirected edges once
/// with the smaller endpoint first.
pub fn write_graph(g: &Graph) -> String {
    let edges: Vec<_> = g.edges().filter(|&(u, v, _)| !g.is_undirected() || u < v).collect();
    let kind = if g.is_undirected() { "undirected" } else { "directed" };
    let mut out = format!("p bc {} {} {}\n", g.vertex_count(), edges.len(), kind);
    for (u, v, w) in edges {
        writeln!(out, "e {u} {v} {w}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use incbc_core::Weight;

    #[test]
    fn parses_examples() {
        let g = parse_graph("p bc 2 1 directed\ne 0 1 1.5").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.weight(0, 1), Some(Weight::from_scaled(1_500_000)));
        assert_eq!(g.edge_count(), 1);

        let g = parse_graph("c a comment\n\np bc 2 1 undirected\ne 0 1 2\n").unwrap();
        assert_eq!(g.weight(0, 1), Some(Weight::from_units(2)));
        assert_eq!(g.weight(1, 0), Some(Weight::from_units(2)));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graph("p bc 2 1 directed\ne 0 1 0").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::NonPositiveWeight { u: 0, v: 1 }));

        let err = parse_graph("e 0 1 0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);

        let cases = [
            ("p bc 2 2 directed\ne 0 1 1\ne 0 1 2", 3),
            ("p bc 2 1 directed\ne 0 2 1", 2),
            ("p bc 2 1 directed\ne 0 1 1.0000001", 2),
            ("p bc 2 1 directed\ne 0 1", 2),
            ("p bc 2 1 sideways\ne 0 1 1", 1),
            ("p bc 2 1 directed\np bc 2 1 directed", 2),
            ("p bc 3 2 directed\ne 0 1 1", 2),
            ("p bc 2 2 undirected\ne 0 1 1\ne 1 0 1", 3),
        ];
        for (text, line) in cases {
            assert_eq!(parse_graph(text).unwrap_err().line, line, "{text}");
        }
    }

    #[test]
    fn canonical_round_trip() {
        let text = "p bc 4 3 directed\ne 2 3 0.25\ne 0 1 1\ne 0 2 7.5\n";
        let g = parse_graph(text).unwrap();
        let canon = write_graph(&g);
        assert_eq!(canon, "p bc 4 3 directed\ne 0 1 1\ne 0 2 7.5\ne 2 3 0.25\n");
        assert_eq!(parse_graph(&canon).unwrap(), g);

        let u = parse_graph("p bc 3 2 undirected\ne 2 1 3\ne 0 1 1").unwrap();
        assert_eq!(write_graph(&u), "p bc 3 2 undirected\ne 0 1 1\ne 1 2 3\n");
        assert_eq!(parse_graph(&write_graph(&u)).unwrap(), u);
    }
}
