//! graph6 encoding.
//!
//! The header is `N(n)`: one byte `n + 63` for `n <= 62`, `126` followed by
//! three 6-bit groups for `n <= 258047`, or `126 126` followed by six groups
//! beyond that. The body is the upper triangle of the adjacency matrix in
//! column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte,
//! most significant bit first, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by the long form.
pub const GRAPH6_MAX_ORDER: usize = 1 << 18;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (line, skip) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, 10),
        None => (line, 0),
    };
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(skip + pos, format!("byte {:#04x} outside 63..=126", bytes[pos])));
    }
    let group = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| err(skip + i, "truncated header"))
    };
    let (n, body_start) = match bytes.first() {
        None => return Err(err(skip, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                let mut n = 0;
                for i in 2..8 {
                    n = (n << 6) | group(i)?;
                }
                (n, 8)
            } else {
                let mut n = 0;
                for i in 1..4 {
                    n = (n << 6) | group(i)?;
                }
                (n, 4)
            }
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > GRAPH6_MAX_ORDER {
        return Err(err(skip, format!("order {n} exceeds the supported {GRAPH6_MAX_ORDER}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < need {
        return Err(err(
            skip + bytes.len(),
            format!("truncated bit vector: need {need} bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(err(skip + body_start + need, "trailing bytes after bit vector"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = (body[k / 6] - 63) as usize;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if need > 0 && pairs % 6 != 0 {
        let padding = (body[need - 1] - 63) as usize & ((1 << (6 - pairs % 6)) - 1);
        if padding != 0 {
            return Err(err(skip + body_start + need - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, petersen};

    #[test]
    fn smallest_codes() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    // Decoded independently with networkx.from_graph6_bytes.
    #[test]
    fn decodes_reference_codes() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        let g = parse_graph6("DQw").unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 4), (1, 3), (1, 4), (2, 4)]
        );
        assert_eq!(encode_graph6(&g), "DQw");
        assert_eq!(encode_graph6(&petersen()), "IheA@GUAo");
    }

    #[test]
    fn long_form() {
        let g = crate::graph::cycle(70).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("DQ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D Q") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~?").is_err());
        assert!(parse_graph6("DQwA").is_err());
    }
}
