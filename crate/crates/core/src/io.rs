//! Graph file formats: DIMACS-style edge list, graph6, and JSON.
//!
//! Edge list:
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>
//! ```
//! with 0-indexed vertices. JSON is `{"n": <n>, "edges": [[u, v], ...]}`.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
    Json,
}

impl GraphFormat {
    /// Guesses the format from a file extension; anything unrecognised is
    /// treated as an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("g6" | "graph6") => GraphFormat::Graph6,
            Some("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "dimacs" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::Parse(format!("unsupported graph format {other:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text.trim()),
        GraphFormat::Json => parse_json(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        GraphFormat::Json => to_json(g),
    }
}

pub fn read_graph_file(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_graph(
        &text,
        format.unwrap_or_else(|| GraphFormat::from_path(path)),
    )
}

pub fn write_graph_file(g: &Graph, path: &Path, format: Option<GraphFormat>) -> Result<()> {
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    fs::write(path, write_graph(g, format))?;
    Ok(())
}

fn parse_usize(tok: Option<&str>, line_no: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("line {line_no}: missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line_no}: bad {what} {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse(format!("line {line_no}: duplicate header")));
                }
                // Tolerate the DIMACS "p edge n m" variant.
                let mut first = toks.next();
                if first.is_some_and(|t| t.parse::<usize>().is_err()) {
                    first = toks.next();
                }
                let n = parse_usize(first, line_no, "vertex count")?;
                let m = parse_usize(toks.next(), line_no, "edge count")?;
                if n > MAX_VERTICES {
                    return Err(Error::TooLarge(n));
                }
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(Error::Parse(format!(
                        "line {line_no}: edge before \"p\" header"
                    )));
                }
                let u = parse_usize(toks.next(), line_no, "endpoint")?;
                let v = parse_usize(toks.next(), line_no, "endpoint")?;
                edges.push((u, v));
            }
            Some(tok) => {
                return Err(Error::Parse(format!(
                    "line {line_no}: unexpected token {tok:?}"
                )))
            }
            None => {}
        }
        if toks.next().is_some() {
            return Err(Error::Parse(format!("line {line_no}: trailing tokens")));
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing \"p <n> <m>\" header".into()))?;
    let g = Graph::new(n, &edges)?;
    if g.edge_count() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {} distinct edges were listed",
            g.edge_count()
        )));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// graph6 encoding of `g` (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(
            "graph6 contains bytes outside 63..=126".into(),
        ));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => {
            return Err(Error::Parse(
                "graph6 vertex counts above 258047 are not supported".into(),
            ))
        }
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Parse("truncated graph6 size field".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {need} for n = {n}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: JsonGraph = serde_json::from_str(text)?;
    if doc.n > MAX_VERTICES {
        return Err(Error::TooLarge(doc.n));
    }
    Graph::new(doc.n, &doc.edges)
}

pub fn to_json(g: &Graph) -> String {
    let doc = JsonGraph {
        n: g.n(),
        edges: g.edges(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph serializes");
    s.push('\n');
    s
}
