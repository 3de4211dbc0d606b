//! The `.3g` text format.
//!
//! Triple graphs: a header line `n m`, then `m` lines `i j k` with 0-based,
//! strictly ascending vertex ids. k-uniform graphs use the header `n k m`
//! and `k` ids per edge line. Lines starting with `#` and blank lines are
//! ignored. Duplicate edges are rejected.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{KGraph, TripleGraph};

pub fn read_triple_graph(path: impl AsRef<Path>) -> Result<TripleGraph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_triple_graph(&text, path)
}

pub fn write_triple_graph(path: impl AsRef<Path>, g: &TripleGraph) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for [i, j, k] in g.edges() {
        out.push_str(&format!("{i} {j} {k}\n"));
    }
    fs::write(path, out).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_kgraph(path: impl AsRef<Path>) -> Result<KGraph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_kgraph(&text, path)
}

pub fn write_kgraph(path: impl AsRef<Path>, g: &KGraph) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    out.push_str(&format!("{} {} {}\n", g.n(), g.k(), g.edge_count()));
    for e in g.edges() {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    fs::write(path, out).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn fail(path: &Path, line_no: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        msg: format!("line {line_no}: {}", msg.into()),
    }
}

/// Content lines with their 1-based line numbers, comments and blanks
/// stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_usizes(path: &Path, line_no: usize, line: &str, expected: usize) -> Result<Vec<usize>> {
    let vals: Vec<usize> = line
        .split_whitespace()
        .map(|w| {
            w.parse::<usize>()
                .map_err(|_| fail(path, line_no, format!("expected an integer, got `{w}`")))
        })
        .collect::<Result<_>>()?;
    if vals.len() != expected {
        return Err(fail(
            path,
            line_no,
            format!("expected {expected} fields, got {}", vals.len()),
        ));
    }
    Ok(vals)
}

pub fn parse_triple_graph(text: &str, path: &Path) -> Result<TripleGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| fail(path, 1, "missing `n m` header"))?;
    let h = parse_usizes(path, hline, header, 2)?;
    let (n, m) = (h[0], h[1]);
    let mut g = TripleGraph::new(n);
    let mut count = 0usize;
    for (line_no, line) in lines {
        let v = parse_usizes(path, line_no, line, 3)?;
        if !(v[0] < v[1] && v[1] < v[2]) {
            return Err(fail(path, line_no, "vertex ids must be strictly ascending"));
        }
        match g.add_edge(v[0], v[1], v[2]) {
            Ok(true) => {}
            Ok(false) => return Err(fail(path, line_no, format!("duplicate edge {line}"))),
            Err(e) => return Err(fail(path, line_no, e.to_string())),
        }
        count += 1;
    }
    if count != m {
        return Err(Error::Format {
            path: path.to_path_buf(),
            msg: format!("header promises {m} edges, found {count}"),
        });
    }
    Ok(g)
}

pub fn parse_kgraph(text: &str, path: &Path) -> Result<KGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| fail(path, 1, "missing `n k m` header"))?;
    let h = parse_usizes(path, hline, header, 3)?;
    let (n, k, m) = (h[0], h[1], h[2]);
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let v = parse_usizes(path, line_no, line, k)?;
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(fail(path, line_no, "vertex ids must be strictly ascending"));
        }
        edges.push(v);
    }
    if edges.len() != m {
        return Err(Error::Format {
            path: path.to_path_buf(),
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    KGraph::from_edges(n, k, edges).map_err(|e| Error::Format {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })
}
