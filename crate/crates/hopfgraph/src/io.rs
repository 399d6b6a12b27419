//! Graph serialization: graph6 and a plain edge-list text format.
//!
//! graph6 is the wire encoding for canonical forms: one byte `n + 63`
//! followed by the upper-triangular adjacency bits, column by column, packed
//! six bits per byte with offset 63. Only the short form (n < 63) is
//! supported, which is far above the enumeration caps.
//!
//! The edge-list format has one `u v` pair per line, `#` comments, and an
//! optional `n=<k>` header to declare trailing isolated vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n >= 63 {
        return Err(Error::resource(format!(
            "graph6 short form supports fewer than 63 vertices, got {n}"
        )));
    }
    let mut out = vec![(n as u8) + 63];
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                b |= 1 << (5 - k);
            }
        }
        out.push(b + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let parse_err = |column: usize, message: &str| Error::Parse {
        line: 1,
        column,
        message: message.to_string(),
    };
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 string"));
    }
    if bytes[0] == 126 {
        return Err(parse_err(1, "graph6 long form (>= 63 vertices) not supported"));
    }
    if !(63..126).contains(&bytes[0]) {
        return Err(parse_err(1, "invalid graph6 size byte"));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(parse_err(
            bytes.len(),
            &format!("expected {} data bytes for {} vertices", nbytes, n),
        ));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for (idx, &b) in bytes[1..].iter().enumerate() {
        if !(63..127).contains(&b) {
            return Err(parse_err(idx + 2, "invalid graph6 data byte"));
        }
        let v = b - 63;
        for k in 0..6 {
            bits.push((v >> (5 - k)) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[pos] {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(parse_err(bytes.len(), "nonzero padding bits"));
    }
    Graph::new(n, &edges)
}

pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_seen: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |column: usize, message: String| Error::Parse {
            line: lineno + 1,
            column,
            message,
        };
        if let Some(rest) = line.strip_prefix("n=") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(3, format!("invalid vertex count '{}'", rest)))?;
            declared_n = Some(n);
            continue;
        }
        let mut parts = line.split_whitespace();
        let u_str = parts.next().unwrap();
        let v_str = parts
            .next()
            .ok_or_else(|| err(line.len(), "expected 'u v' pair".to_string()))?;
        if parts.next().is_some() {
            return Err(err(line.len(), "too many fields on line".to_string()));
        }
        let u: usize = u_str
            .parse()
            .map_err(|_| err(1, format!("invalid vertex '{}'", u_str)))?;
        let v: usize = v_str
            .parse()
            .map_err(|_| err(u_str.len() + 2, format!("invalid vertex '{}'", v_str)))?;
        max_seen = Some(max_seen.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = match (declared_n, max_seen) {
        (Some(n), Some(m)) if m >= n => {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("edge endpoint {} exceeds declared n={}", m, n),
            })
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    Graph::new(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edgelist(text),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Graph6 => encode_graph6(g),
        GraphFormat::EdgeList => Ok(encode_edgelist(g)),
    }
}
