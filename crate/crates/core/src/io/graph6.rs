use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Encodes `g` in graph6: a size byte `n + 63`, then the upper triangle in
/// column order packed six bits per byte, each byte offset by 63.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(Error::Graph6Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6Byte { position, byte });
        }
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        // 126 introduces the multi-byte size form, which is out of range here
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if payload.len() != expected {
        return Err(Error::Graph6Length {
            expected: expected + 1,
            found: bytes.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
