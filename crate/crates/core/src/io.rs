//! Plain-text graph and colouring formats.
//!
//! Graph format: first line `n m`, then exactly `m` lines `u v` with
//! `0 <= u < v < n`, ASCII decimal, single-space separated, LF-terminated.
//!
//! Colouring format: `n` lines `v colour_id` covering every vertex exactly
//! once, colour ids positive.
//!
//! Writers emit the canonical form (edges sorted, vertices ascending), so a
//! parse/write round trip is byte-identical on canonical input. Parsers
//! report the offending line number.

use thiserror::Error;

use crate::graph::{Colouring, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatErrorKind {
    #[error("expected {expected}, got `{got}`")]
    Malformed { expected: &'static str, got: String },
    #[error("integer out of range: `{0}`")]
    BadInteger(String),
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoints must satisfy u < v, got {u} {v}")]
    NotAscending { u: usize, v: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("duplicate entry for vertex {0}")]
    DuplicateVertex(usize),
    #[error("colour ids must be positive")]
    ZeroColour,
    #[error("unexpected end of input: {0}")]
    UnexpectedEof(&'static str),
    #[error("trailing content after the declared data")]
    TrailingContent,
}

fn err(line: usize, kind: FormatErrorKind) -> FormatError {
    FormatError { line, kind }
}

fn two_fields<'a>(
    line_no: usize,
    line: &'a str,
    expected: &'static str,
) -> Result<(&'a str, &'a str), FormatError> {
    let mut parts = line.split(' ');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => Ok((a, b)),
        _ => Err(err(
            line_no,
            FormatErrorKind::Malformed { expected, got: line.to_string() },
        )),
    }
}

fn parse_int(line_no: usize, tok: &str) -> Result<usize, FormatError> {
    if tok.len() > 1 && tok.starts_with('0') {
        // Reject non-canonical numerals so round trips stay bit-exact.
        return Err(err(line_no, FormatErrorKind::BadInteger(tok.to_string())));
    }
    tok.parse::<usize>()
        .map_err(|_| err(line_no, FormatErrorKind::BadInteger(tok.to_string())))
}

/// Parses the graph text format.
pub fn parse_graph(input: &str) -> Result<Graph, FormatError> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| err(1, FormatErrorKind::UnexpectedEof("missing `n m` header")))?;
    let (a, b) = two_fields(1, header, "`n m` header")?;
    let n = parse_int(1, a)?;
    let m = parse_int(1, b)?;

    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line_no = i + 2;
        let line = lines
            .next()
            .ok_or_else(|| err(line_no, FormatErrorKind::UnexpectedEof("missing edge line")))?;
        let (a, b) = two_fields(line_no, line, "edge line `u v`")?;
        let u = parse_int(line_no, a)?;
        let v = parse_int(line_no, b)?;
        if u >= n {
            return Err(err(line_no, FormatErrorKind::VertexOutOfRange { v: u, n }));
        }
        if v >= n {
            return Err(err(line_no, FormatErrorKind::VertexOutOfRange { v, n }));
        }
        if u == v {
            return Err(err(line_no, FormatErrorKind::SelfLoop(u)));
        }
        if u > v {
            return Err(err(line_no, FormatErrorKind::NotAscending { u, v }));
        }
        edges.push((u, v));
    }
    if lines.next().is_some() {
        return Err(err(m + 2, FormatErrorKind::TrailingContent));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        // Find the later of the two occurrences for the line number.
        let dup = w[0];
        let line_no = edges.iter().rposition(|&e| e == dup).unwrap() + 2;
        return Err(err(line_no, FormatErrorKind::DuplicateEdge { u: dup.0, v: dup.1 }));
    }
    Ok(Graph::new(n, edges).expect("validated above"))
}

/// Canonical graph text form: header then sorted edges, LF line endings.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// Parses the colouring text format for a graph on `n` vertices.
pub fn parse_colouring(input: &str, n: usize) -> Result<Colouring, FormatError> {
    let mut colour_of: Vec<Option<u32>> = vec![None; n];
    let mut lines = input.lines();
    for i in 0..n {
        let line_no = i + 1;
        let line = lines.next().ok_or_else(|| {
            err(line_no, FormatErrorKind::UnexpectedEof("missing `v colour_id` line"))
        })?;
        let (a, b) = two_fields(line_no, line, "`v colour_id` line")?;
        let v = parse_int(line_no, a)?;
        let colour = parse_int(line_no, b)?;
        if v >= n {
            return Err(err(line_no, FormatErrorKind::VertexOutOfRange { v, n }));
        }
        if colour == 0 {
            return Err(err(line_no, FormatErrorKind::ZeroColour));
        }
        let colour: u32 = colour
            .try_into()
            .map_err(|_| err(line_no, FormatErrorKind::BadInteger(b.to_string())))?;
        if colour_of[v].is_some() {
            return Err(err(line_no, FormatErrorKind::DuplicateVertex(v)));
        }
        colour_of[v] = Some(colour);
    }
    if lines.next().is_some() {
        return Err(err(n + 1, FormatErrorKind::TrailingContent));
    }
    let colours: Vec<u32> = colour_of.into_iter().map(|c| c.unwrap()).collect();
    Ok(Colouring::new(colours).expect("zero colours rejected above"))
}

/// Canonical colouring text form: one `v colour_id` line per vertex,
/// ascending by vertex id.
pub fn write_colouring(c: &Colouring) -> String {
    let mut out = String::new();
    for v in 0..c.len() {
        out.push_str(&format!("{} {}\n", v, c.colour(v)));
    }
    out
}
