//! Header-less graph6 codec, single-byte size form only (`n ≤ 62`).
//!
//! The size byte is `n + 63`. The upper triangle of the adjacency matrix is
//! read column by column, `x(0,1), x(0,2), x(1,2), x(0,3), …`, packed six
//! bits per byte (most significant first, zero padded) and offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

const OFFSET: u8 = 63;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // column v, row u
        let k = v * (v - 1) / 2 + u;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    let mut out = String::with_capacity(packed.len() + 1);
    out.push((n as u8 + OFFSET) as char);
    out.extend(packed.into_iter().map(|b| (b + OFFSET) as char));
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let malformed = |offset: usize, reason: &str| Error::MalformedGraph6 {
        offset,
        reason: reason.to_string(),
    };
    if let Some(pos) = bytes.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(malformed(pos, "byte outside the printable range 63..=126"));
    }
    let Some(&size) = bytes.first() else {
        return Err(malformed(0, "empty input"));
    };
    if size == 126 {
        return Err(malformed(0, "multi-byte size form is not supported (n > 62)"));
    }
    let n = (size - OFFSET) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(malformed(
            bytes.len().min(expected),
            &format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = bytes[expected - 1] - OFFSET;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed(expected - 1, "non-zero padding bits"));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}
