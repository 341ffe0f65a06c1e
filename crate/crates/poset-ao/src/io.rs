//! Text formats: poset files (`poset <n>` header, one `u > v` relation per
//! line), graph files (`graph <n>`, `u -- v`), and DOT export for Hasse
//! diagrams.
//!
//! Input is liberal: relation lines may be any valid order pairs (not only
//! covers), duplicates and blank lines are ignored, `#` starts a comment.
//! Output is canonical: the writer emits covers only, sorted.

use crate::graph::SimpleGraph;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, 0 for file-level problems.
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line == 0 {
            write!(f, "parse error: {}", self.message)
        } else {
            write!(f, "parse error on line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Which kind of object a file holds, from its header keyword.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Poset,
    Graph,
}

/// Lines with comments stripped, paired with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_header(line: usize, text: &str, keyword: &str) -> Result<usize, ParseError> {
    let mut tokens = text.split_whitespace();
    match tokens.next() {
        Some(k) if k == keyword => {}
        other => return fail(line, format!("expected '{keyword} <n>', got {other:?}")),
    }
    let n = match tokens.next() {
        Some(t) => t
            .parse::<usize>()
            .map_err(|_| ParseError {
                line,
                message: format!("invalid element count '{t}'"),
            })?,
        None => return fail(line, "missing element count")?,
    };
    if tokens.next().is_some() {
        return fail(line, "trailing tokens after header");
    }
    Ok(n)
}

fn parse_pair(line: usize, text: &str, sep: &str, n: usize) -> Result<(usize, usize), ParseError> {
    let mut parts = text.splitn(2, sep);
    let (a, b) = match (parts.next(), parts.next()) {
        (Some(a), Some(b)) => (a.trim(), b.trim()),
        _ => return fail(line, format!("expected '<u> {sep} <v>'")),
    };
    let parse = |t: &str| -> Result<usize, ParseError> {
        t.parse::<usize>().map_err(|_| ParseError {
            line,
            message: format!("invalid element id '{t}'"),
        })
    };
    let (u, v) = (parse(a)?, parse(b)?);
    if u >= n || v >= n {
        return fail(line, format!("element id out of range 0..{n}"));
    }
    Ok((u, v))
}

/// Reads the header keyword to decide what a file holds.
pub fn detect_kind(text: &str) -> Result<FileKind, ParseError> {
    match content_lines(text).next() {
        Some((_, line)) if line.starts_with("poset") => Ok(FileKind::Poset),
        Some((_, line)) if line.starts_with("graph") => Ok(FileKind::Graph),
        Some((ln, line)) => fail(ln, format!("unknown header '{line}'")),
        None => fail(0, "empty file"),
    }
}

/// Parses a poset file into its element count and `(upper, lower)` pairs.
/// The pairs still need [`Poset::from_cover_relations`], whose `CycleError`
/// is a separate failure mode from parsing.
pub fn parse_poset_file(text: &str) -> Result<(usize, Vec<(usize, usize)>), ParseError> {
    let mut lines = content_lines(text);
    let (hline, htext) = match lines.next() {
        Some(x) => x,
        None => return fail(0, "empty file"),
    };
    let n = parse_header(hline, htext, "poset")?;
    let mut pairs = Vec::new();
    for (ln, text) in lines {
        pairs.push(parse_pair(ln, text, ">", n)?);
    }
    Ok((n, pairs))
}

/// Parses a graph file. Self-loops are rejected, duplicate edges ignored.
pub fn parse_graph_file(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, htext) = match lines.next() {
        Some(x) => x,
        None => return fail(0, "empty file"),
    };
    let n = parse_header(hline, htext, "graph")?;
    let mut g = SimpleGraph::new(n);
    for (ln, text) in lines {
        let (u, v) = parse_pair(ln, text, "--", n)?;
        if u == v {
            return fail(ln, format!("self-loop at {u}"));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Canonical poset file: covers only, sorted.
pub fn write_poset_file(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.n());
    for c in p.cover_pairs() {
        out.push_str(&format!("{} > {}\n", c.upper, c.lower));
    }
    out
}

pub fn write_graph_file(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} -- {v}\n"));
    }
    out
}

/// DOT rendering of the Hasse diagram: cover edges drawn lower -> upper,
/// elements grouped into ranks by chain level so the drawing approximates
/// the usual upward diagram. Cosmetic only.
pub fn poset_dot(p: &Poset) -> String {
    let n = p.n();
    // level(v) = length of the longest chain ending at v
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| p.below(v).count());
    let mut level = vec![0usize; n];
    for &v in &order {
        level[v] = p.below(v).iter().map(|u| level[u] + 1).max().unwrap_or(0);
    }

    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    if n > 0 {
        let max_level = level.iter().copied().max().unwrap_or(0);
        for l in 0..=max_level {
            let members: Vec<String> =
                (0..n).filter(|&v| level[v] == l).map(|v| v.to_string()).collect();
            if !members.is_empty() {
                out.push_str(&format!("  {{ rank=same; {} }}\n", members.join("; ")));
            }
        }
        for c in p.cover_pairs() {
            out.push_str(&format!("  {} -> {};\n", c.lower, c.upper));
        }
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph g {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
