//! graph6 text encoding (short form, n ≤ 62).
//!
//! One graph per ASCII line: a header byte `n + 63`, then the bits of the
//! upper triangle read column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), …`), packed big-endian six to a byte with 63 added to each
//! byte. Padding bits must be zero. Lines produced here round-trip
//! byte-identically and match standard generator output.

use crate::{Error, Graph, Result};

const MAX_N: usize = 62;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line (without its trailing newline).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty line"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(format!(
            "byte {} at position {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    if bytes[0] == 126 {
        return Err(bad("multi-byte order header: only n <= 62 is supported"));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(bad("order 0 graph is not representable"));
    }
    let expected = 1 + body_len(n);
    if bytes.len() < expected {
        return Err(bad(format!(
            "line too short: {} bytes, need {expected} for order {n}",
            bytes.len()
        )));
    }
    if bytes.len() > expected {
        return Err(bad(format!(
            "trailing garbage: {} bytes after the {expected} expected for order {n}",
            bytes.len() - expected
        )));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let total_bits = n * (n - 1) / 2;
    for &byte in &bytes[1..] {
        let group = byte - 63;
        for k in 0..6 {
            let bit = group >> (5 - k) & 1;
            if bit_index >= total_bits {
                if bit != 0 {
                    return Err(bad("nonzero padding bits"));
                }
            } else if bit == 1 {
                edges.push(column_major_pair(bit_index));
            }
            bit_index += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Inverse of the upper-triangle bit order: bit index -> `(row, col)`.
fn column_major_pair(index: usize) -> (usize, usize) {
    // Bits for column j occupy indices j(j-1)/2 .. j(j-1)/2 + j - 1.
    let mut col = 1usize;
    while col * (col + 1) / 2 <= index {
        col += 1;
    }
    let row = index - col * (col - 1) / 2;
    (row, col)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_N {
        return Err(Error::OrderOutOfRange {
            order: n,
            reason: "graph6 short form encodes at most 62 vertices",
        });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group = group << 1 | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("all bytes printable"))
}
