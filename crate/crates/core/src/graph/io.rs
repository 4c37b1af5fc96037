//! graph6 and edge-list text formats.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 supports at most 258047 vertices");
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is skipped).
pub fn from_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let malformed = |why: &str| GraphError::Graph6(why.to_string());
    if bytes.is_empty() {
        return Err(malformed("empty line"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(&format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.get(1) == Some(&b'~') {
            return Err(malformed("8-byte size headers are not supported"));
        }
        if bytes.len() < 4 {
            return Err(malformed("truncated size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(malformed("3-byte size header for a small graph"));
        }
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(&format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parses every non-empty line of a graph6 file.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}

/// Edge-list text: an `n=<count>` line, then one `u v` pair per line.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = || GraphError::EdgeList(format!("line {}: {raw:?}", lineno + 1));
        if n.is_none() {
            let count = line
                .strip_prefix("n=")
                .or_else(|| line.strip_prefix("n ="))
                .ok_or_else(bad)?;
            n = Some(count.trim().parse().map_err(|_| bad())?);
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
    }
    let n = n.ok_or_else(|| GraphError::EdgeList("missing n= header".into()))?;
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n={}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
