//! Text formats: edge lists, DIMACS, PACE `.gr`, PACE `.td` and weight files.
//!
//! Every parser reports the 1-based line of the first problem and never
//! panics on malformed input.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::treedec::TreeDecomposition;
use crate::weights::WeightFunction;

/// Refuse vertex counts beyond this when parsing (adjacency is dense in
/// places).
pub const MAX_PARSE_N: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    /// `n m` header then `u v` pairs, 0-indexed.
    Edgelist,
    /// `p edge n m` then `e u v`, 1-indexed.
    Dimacs,
    /// `p tw n m` then `u v`, 1-indexed.
    Pace,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank lines with comments removed, paired with their line numbers.
fn content_lines<'a>(text: &'a str, comment: &'a [&'a str]) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let l = raw.trim();
        if l.is_empty() || comment.iter().any(|c| l == *c || l.starts_with(&format!("{c} ")) || (*c == "#" && l.starts_with('#'))) {
            None
        } else {
            Some((i + 1, l))
        }
    })
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    t.parse::<usize>().map_err(|_| perr(line, format!("{what} '{t}' is not a non-negative integer")))
}

fn no_more<'a>(mut it: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match it.next() {
        Some(t) => Err(perr(line, format!("unexpected token '{t}'"))),
        None => Ok(()),
    }
}

/// Detects the format from the first content line.
pub fn detect_format(text: &str) -> GraphFormat {
    for raw in text.lines() {
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') || l == "c" || l.starts_with("c ") {
            continue;
        }
        let mut it = l.split_whitespace();
        if it.next() == Some("p") {
            return match it.next() {
                Some("tw") => GraphFormat::Pace,
                _ => GraphFormat::Dimacs,
            };
        }
        return GraphFormat::Edgelist;
    }
    GraphFormat::Edgelist
}

/// Parses any of the three graph formats, chosen by [`detect_format`].
pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_as(text, detect_format(text))
}

pub fn parse_graph_as(text: &str, format: GraphFormat) -> Result<Graph> {
    let comments: &[&str] = match format {
        GraphFormat::Edgelist => &["#"],
        GraphFormat::Dimacs | GraphFormat::Pace => &["c", "#"],
    };
    let mut lines = content_lines(text, comments);
    let (hline, header) = lines.next().ok_or_else(|| perr(1, "empty input: missing header"))?;
    let mut it = header.split_whitespace();
    let (n, m) = match format {
        GraphFormat::Edgelist => (num(it.next(), hline, "n")?, num(it.next(), hline, "m")?),
        GraphFormat::Dimacs | GraphFormat::Pace => {
            let want = if format == GraphFormat::Dimacs { "edge" } else { "tw" };
            if it.next() != Some("p") {
                return Err(perr(hline, "expected 'p' header line"));
            }
            match it.next() {
                Some(k) if k == want || (format == GraphFormat::Dimacs && k == "col") => {}
                other => return Err(perr(hline, format!("expected 'p {want}', got {other:?}"))),
            }
            (num(it.next(), hline, "n")?, num(it.next(), hline, "m")?)
        }
    };
    no_more(it, hline)?;
    if n > MAX_PARSE_N {
        return Err(perr(hline, format!("n = {n} exceeds the parser limit {MAX_PARSE_N}")));
    }
    let one_based = format != GraphFormat::Edgelist;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = hline;
    for (ln, l) in lines {
        last_line = ln;
        let mut it = l.split_whitespace();
        if format == GraphFormat::Dimacs {
            match it.next() {
                Some("e") => {}
                Some(t) => return Err(perr(ln, format!("expected 'e u v', got '{t}'"))),
                None => unreachable!("content lines are non-empty"),
            }
        }
        let mut u = num(it.next(), ln, "endpoint")?;
        let mut v = num(it.next(), ln, "endpoint")?;
        no_more(it, ln)?;
        if one_based {
            if u == 0 || v == 0 {
                return Err(perr(ln, "vertex ids are 1-based in this format"));
            }
            u -= 1;
            v -= 1;
        }
        if u >= n || v >= n {
            return Err(perr(ln, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(perr(ln, format!("self-loop at {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(perr(ln, format!("duplicate edge {} {}", key.0, key.1)));
        }
        if edges.len() == m {
            return Err(perr(ln, format!("more than the declared {m} edges")));
        }
        edges.push(key);
    }
    if edges.len() != m {
        return Err(perr(last_line, format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

/// Writes `g` with edges sorted, in the requested format.
pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut s = String::new();
    let edges = g.edges();
    match format {
        GraphFormat::Edgelist => {
            let _ = writeln!(s, "{} {}", g.n(), edges.len());
            for (u, v) in edges {
                let _ = writeln!(s, "{u} {v}");
            }
        }
        GraphFormat::Dimacs => {
            let _ = writeln!(s, "p edge {} {}", g.n(), edges.len());
            for (u, v) in edges {
                let _ = writeln!(s, "e {} {}", u + 1, v + 1);
            }
        }
        GraphFormat::Pace => {
            let _ = writeln!(s, "p tw {} {}", g.n(), edges.len());
            for (u, v) in edges {
                let _ = writeln!(s, "{} {}", u + 1, v + 1);
            }
        }
    }
    s
}

/// PACE 2017 `.td`: `s td <bags> <width+1> <n>`, `b <id> <v...>`, then tree
/// edges, all 1-indexed. Returns the decomposition and the declared `n`.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut lines = content_lines(text, &["c"]);
    let (hline, header) = lines.next().ok_or_else(|| perr(1, "empty input: missing 's td' line"))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("s") || it.next() != Some("td") {
        return Err(perr(hline, "expected 's td <bags> <width+1> <n>'"));
    }
    let nb = num(it.next(), hline, "bag count")?;
    let declared = num(it.next(), hline, "max bag size")?;
    let n = num(it.next(), hline, "vertex count")?;
    no_more(it, hline)?;
    if n > MAX_PARSE_N || nb > MAX_PARSE_N {
        return Err(perr(hline, "sizes exceed the parser limit"));
    }
    if nb == 0 {
        return Err(perr(hline, "a decomposition needs at least one bag"));
    }
    let mut bags: Vec<Option<VertexSet>> = vec![None; nb];
    let mut edges = Vec::new();
    let mut last_line = hline;
    for (ln, l) in lines {
        last_line = ln;
        let mut it = l.split_whitespace();
        let first = it.next().expect("content lines are non-empty");
        if first == "b" {
            let id = num(it.next(), ln, "bag id")?;
            if id == 0 || id > nb {
                return Err(perr(ln, format!("bag id {id} outside 1..={nb}")));
            }
            if bags[id - 1].is_some() {
                return Err(perr(ln, format!("bag {id} listed twice")));
            }
            let mut members = Vec::new();
            for t in it {
                let v: usize = t.parse().map_err(|_| perr(ln, format!("vertex '{t}' is not an integer")))?;
                if v == 0 || v > n {
                    return Err(perr(ln, format!("vertex {v} outside 1..={n}")));
                }
                members.push(v - 1);
            }
            let count = members.len();
            let set = VertexSet::from_vec(members);
            if set.len() != count {
                return Err(perr(ln, "repeated vertex in bag"));
            }
            bags[id - 1] = Some(set);
        } else {
            let a = num(Some(first), ln, "tree node")?;
            let b = num(it.next(), ln, "tree node")?;
            no_more(it, ln)?;
            if a == 0 || b == 0 || a > nb || b > nb {
                return Err(perr(ln, format!("tree edge {a} {b} outside 1..={nb}")));
            }
            if edges.len() + 1 >= nb {
                return Err(perr(ln, format!("more than {} tree edges", nb - 1)));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| perr(last_line, format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    let actual = bags.iter().map(VertexSet::len).max().unwrap_or(0);
    if actual != declared {
        return Err(perr(hline, format!("header declares largest bag {declared}, bags have {actual}")));
    }
    let td = TreeDecomposition::new(bags, edges).map_err(|e| perr(last_line, e.to_string()))?;
    Ok((td, n))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "s td {} {} {}", td.len(), td.max_bag_size(), n);
    for (i, b) in td.bags().iter().enumerate() {
        let _ = write!(s, "b {}", i + 1);
        for v in b {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    for &(a, b) in td.edges() {
        let _ = writeln!(s, "{} {}", a + 1, b + 1);
    }
    s
}

/// Weight file: lines `v numerator denominator` or `v integer`, `#`
/// comments; unlisted vertices weigh zero. The result is scaled to total
/// one.
pub fn parse_weights(text: &str, n: usize) -> Result<WeightFunction> {
    let mut num_of: Vec<crate::weights::Rational> = vec![crate::weights::Rational::from_integer(0); n];
    let mut listed = vec![false; n];
    let mut last_line = 1;
    for (ln, l) in content_lines(text, &["#"]) {
        last_line = ln;
        let mut it = l.split_whitespace();
        let v = num(it.next(), ln, "vertex")?;
        if v >= n {
            return Err(perr(ln, format!("vertex {v} out of range for n = {n}")));
        }
        if listed[v] {
            return Err(perr(ln, format!("vertex {v} listed twice")));
        }
        let p = it.next().ok_or_else(|| perr(ln, "missing weight"))?;
        let p: u64 = p.parse().map_err(|_| perr(ln, format!("weight '{p}' is not a non-negative integer")))?;
        let q: u64 = match it.next() {
            Some(t) => t.parse().map_err(|_| perr(ln, format!("denominator '{t}' is not a non-negative integer")))?,
            None => 1,
        };
        no_more(it, ln)?;
        if q == 0 {
            return Err(perr(ln, "zero denominator"));
        }
        listed[v] = true;
        num_of[v] = crate::weights::Rational::new(p as i128, q as i128);
    }
    let w = WeightFunction::from_ratios(&num_of).map_err(|e| perr(last_line, e.to_string()))?;
    w.normalized().map_err(|e| perr(last_line, e.to_string()))
}

pub fn write_weights(w: &WeightFunction) -> String {
    let mut s = String::new();
    for (v, &x) in w.numerators().iter().enumerate() {
        if x != 0 {
            let _ = writeln!(s, "{v} {x} {}", w.denominator());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn edgelist_roundtrip() {
        let g = petersen();
        for f in [GraphFormat::Edgelist, GraphFormat::Dimacs, GraphFormat::Pace] {
            let text = write_graph(&g, f);
            assert_eq!(detect_format(&text), f);
            let h = parse_graph(&text).unwrap();
            assert_eq!(h.edges(), g.edges());
            assert_eq!(write_graph(&h, f), text);
        }
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_graph("# a triangle\n3 3\n0 1\n\n1 2 # inline is not a comment\n").err().unwrap();
        assert!(matches!(g, Error::Parse { line: 5, .. }));
        let g = parse_graph("# c\n3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.m(), 3);
        assert!(matches!(parse_graph("3 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 0 1\n"), Err(Error::Parse { line: 2, .. })));
        let d = parse_graph("c hi\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(d.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn td_roundtrip() {
        let bags = vec![VertexSet::from_vec(vec![0, 1]), VertexSet::from_vec(vec![1, 2]), VertexSet::from_vec(vec![2, 3])];
        let td = TreeDecomposition::new(bags, vec![(0, 1), (1, 2)]).unwrap();
        let text = write_td(&td, 4);
        assert_eq!(text, "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n");
        let (back, n) = parse_td(&text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(back, td);
        assert_eq!(write_td(&back, n), text);
        assert!(matches!(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_td("s td 1 3 3\nb 1 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_td("s td 1 1 3\nb 1 4\n"), Err(Error::Parse { line: 2, .. })));
        let (empty, _) = parse_td("c empty bag\ns td 1 0 0\nb 1\n").unwrap();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn weights() {
        let w = parse_weights("0 1 2\n# c\n2 1\n", 4).unwrap();
        assert!(w.is_normal());
        assert_eq!(w.numerators(), &[1, 0, 2, 0]);
        assert_eq!(w.denominator(), 3);
        assert_eq!(parse_weights(&write_weights(&w), 4).unwrap(), w);
        assert!(matches!(parse_weights("0 1\n0 2\n", 2), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_weights("0 1 0\n", 2), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_weights("", 2), Err(Error::Parse { .. })));
        assert!(parse_weights("0 18446744073709551615 1\n1 18446744073709551615 3\n", 2).is_err());
    }
}
