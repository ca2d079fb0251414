//! Edge-list text: optional `n <count>` first line, then one `u v` per line.
//! Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub(crate) fn parse_ids(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::text(lineno, format!("expected a vertex id, found {tok:?}")))
        })
        .collect()
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

/// Parses an `n <count>` declaration if `line` is one.
pub(crate) fn parse_order_line(line: &str, lineno: usize) -> Result<Option<usize>> {
    let mut toks = line.split_whitespace();
    if toks.next() != Some("n") {
        return Ok(None);
    }
    let n = toks
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::text(lineno, "expected `n <count>`"))?;
    if toks.next().is_some() {
        return Err(Error::text(lineno, "trailing tokens after `n <count>`"));
    }
    Ok(Some(n))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut first = true;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if first {
            first = false;
            if let Some(n) = parse_order_line(line, lineno)? {
                declared = Some(n);
                continue;
            }
        }
        let ids = parse_ids(line, lineno)?;
        let [u, v] = ids[..] else {
            return Err(Error::text(lineno, "expected `u v`"));
        };
        if u == v {
            return Err(Error::text(lineno, format!("loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(Error::text(lineno, format!("vertex id >= declared n = {n}")));
            }
        }
        edges.push((u.min(v), u.max(v), lineno));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
        let (u, v, _) = w[0];
        return Err(Error::text(w[1].2.max(w[0].2), format!("duplicate edge {u}-{v}")));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|e| e.1 + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn triangle_and_declared_order() {
        assert_eq!(parse_edge_list("0 1\n1 2\n2 0").unwrap(), complete(3).unwrap());
        let g = parse_edge_list("n 4\n0 1").unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn input_errors() {
        assert!(matches!(parse_edge_list("0 1\n1 0"), Err(Error::Text { line: 2, .. })));
        assert!(matches!(parse_edge_list("1 1"), Err(Error::Text { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 2\n0 2"), Err(Error::Text { line: 2, .. })));
        assert!(parse_edge_list("0 x").is_err());
        assert!(parse_edge_list("0 1 2").is_err());
    }

    #[test]
    fn round_trip() {
        let g = crate::graph::petersen();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }
}
