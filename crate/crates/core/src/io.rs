//! Plain-text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. Blank lines and
//! lines starting with `#` are skipped. Trailing `key: value` lines after
//! the edges are returned as sidecar entries.
//!
//! Packing: an `anchor: v ...` line, then one block per part made of a
//! `vertices: v ...` line and an `arcs: u->v ...` line.
//!
//! Terminals: one `s t` pair per line.

use crate::digraph::{Arc, Digraph, Subdigraph, UndirectedGraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::linkage::TerminalSequence;
use crate::packing::Packing;
use std::fmt::Write;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| parse_err(line, format!("expected a vertex number, found {tok:?}"))))
        .collect()
}

/// Header, pairs, and sidecar entries of an edge-list file.
pub struct EdgeList {
    pub n: usize,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub sidecar: Vec<(String, String)>,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut it = lines(text);
    let (hline, header) = it.next().ok_or_else(|| parse_err(1, "missing header line `n m`"))?;
    let head = numbers(hline, header)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let mut pairs = Vec::with_capacity(m);
    let mut sidecar = Vec::new();
    let mut last = hline;
    for (ln, l) in it {
        last = ln;
        if pairs.len() < m {
            let nums = numbers(ln, l)?;
            let [u, v] = nums[..] else {
                return Err(parse_err(ln, "edge line must be `u v`"));
            };
            for w in [u, v] {
                if w >= n {
                    return Err(parse_err(ln, format!("vertex {w} out of range for order {n}")));
                }
            }
            pairs.push((u, v));
        } else {
            let (key, value) = l
                .split_once(':')
                .ok_or_else(|| parse_err(ln, "expected `key: value` after the edge lines"))?;
            sidecar.push((key.trim().to_string(), value.trim().to_string()));
        }
    }
    if pairs.len() < m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", pairs.len())));
    }
    Ok(EdgeList { n, pairs, sidecar })
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let e = parse_edge_list(text)?;
    Digraph::new(e.n, e.pairs)
}

pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    let e = parse_edge_list(text)?;
    UndirectedGraph::new(e.n, e.pairs)
}

pub fn write_digraph(d: &Digraph) -> String {
    write_pairs(d.n(), d.arcs())
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    write_pairs(g.n(), g.edges())
}

fn write_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> String {
    let mut out = format!("{n} {}\n", pairs.len());
    for (u, v) in pairs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Graphviz rendering; labels, when present, become node labels.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.n() {
        match d.label(v) {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

fn join(vs: impl IntoIterator<Item = Vertex>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_packing(p: &Packing) -> String {
    let mut out = format!("anchor: {}\n", join(p.anchor.iter()));
    for part in &p.parts {
        let arcs: Vec<String> = part.arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
        let _ = write!(out, "\nvertices: {}\narcs: {}\n", join(part.vertices.iter()), arcs.join(" "));
    }
    out
}

/// Parses a packing; vertex numbers are checked against `n` only when the
/// packing is later verified against a host.
pub fn parse_packing(text: &str) -> Result<Packing> {
    let mut anchor = None;
    let mut parts: Vec<(Vec<Vertex>, Vec<Arc>)> = Vec::new();
    let mut expect_arcs = false;
    for (ln, l) in lines(text) {
        let (key, value) = l
            .split_once(':')
            .ok_or_else(|| parse_err(ln, "expected `anchor:`, `vertices:` or `arcs:`"))?;
        match key.trim() {
            "anchor" if anchor.is_none() && parts.is_empty() => anchor = Some(numbers(ln, value)?),
            "vertices" if anchor.is_some() && !expect_arcs => {
                parts.push((numbers(ln, value)?, Vec::new()));
                expect_arcs = true;
            }
            "arcs" if expect_arcs => {
                let part = parts.last_mut().expect("arcs follow vertices");
                for tok in value.split_whitespace() {
                    let (u, v) = tok
                        .split_once("->")
                        .ok_or_else(|| parse_err(ln, format!("arc {tok:?} is not of the form u->v")))?;
                    let u = numbers(ln, u)?;
                    let v = numbers(ln, v)?;
                    match (&u[..], &v[..]) {
                        ([u], [v]) => part.1.push((*u, *v)),
                        _ => return Err(parse_err(ln, format!("arc {tok:?} is not of the form u->v"))),
                    }
                }
                expect_arcs = false;
            }
            other => return Err(parse_err(ln, format!("unexpected `{other}:` line"))),
        }
    }
    if expect_arcs {
        return Err(parse_err(text.lines().count(), "part without an `arcs:` line"));
    }
    let anchor = anchor.ok_or_else(|| parse_err(1, "missing `anchor:` line"))?;
    Ok(Packing {
        anchor: VertexSet::from_iter_dedup(anchor),
        parts: parts
            .into_iter()
            .map(|(vs, arcs)| Subdigraph::new(VertexSet::from_iter_dedup(vs), arcs))
            .collect(),
    })
}

pub fn parse_terminals(text: &str, n: usize) -> Result<TerminalSequence> {
    let mut pairs = Vec::new();
    for (ln, l) in lines(text) {
        let nums = numbers(ln, l)?;
        let [s, t] = nums[..] else {
            return Err(parse_err(ln, "terminal line must be `s t`"));
        };
        pairs.push((s, t));
    }
    TerminalSequence::new(pairs, n)
}

pub fn write_terminals(t: &TerminalSequence) -> String {
    t.pairs().iter().map(|(s, t)| format!("{s} {t}\n")).collect()
}

/// Parses a whitespace- or comma-separated vertex list.
pub fn parse_vertex_list(s: &str, n: usize) -> Result<VertexSet> {
    let nums = numbers(1, &s.replace(',', " "))?;
    VertexSet::new(nums, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let text = write_digraph(&d);
        assert_eq!(text, "3 3\n0 1\n1 2\n2 0\n");
        assert_eq!(parse_digraph(&text).unwrap(), d);
    }

    #[test]
    fn sidecar_lines_are_collected() {
        let e = parse_edge_list("# c\n2 1\n0 1\nS: 0 1\nell: 2\n").unwrap();
        assert_eq!(e.pairs, vec![(0, 1)]);
        assert_eq!(e.sidecar, vec![("S".into(), "0 1".into()), ("ell".into(), "2".into())]);
    }

    #[test]
    fn bad_input_names_the_line() {
        assert!(matches!(parse_digraph("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_digraph("x y\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_digraph("2 2\n0 1\n0 1\n"), Err(Error::ParallelArc((0, 1))));
    }

    #[test]
    fn packing_round_trip() {
        let p = crate::extremal::construct_kn_packing(3, &VertexSet::from_iter_dedup([0, 1])).unwrap();
        let text = write_packing(&p);
        assert!(text.starts_with("anchor: 0 1\n\nvertices: 0 1\narcs: 0->1 1->0\n"));
        assert_eq!(parse_packing(&text).unwrap(), p);
        assert!(parse_packing("anchor: 0 1\nvertices: 0 1\n").is_err());
        assert!(parse_packing("anchor: 0 1\nvertices: 0 1\narcs: 0-1\n").is_err());
    }

    #[test]
    fn terminals() {
        let t = parse_terminals("0 1\n2 3\n", 4).unwrap();
        assert_eq!(write_terminals(&t), "0 1\n2 3\n");
        assert!(parse_terminals("0 1\n1 2\n", 4).is_err());
    }

    #[test]
    fn dot_output() {
        let d = Digraph::new(2, [(0, 1)]).unwrap().with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(to_dot(&d), "digraph D {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  0 -> 1;\n}\n");
    }
}
