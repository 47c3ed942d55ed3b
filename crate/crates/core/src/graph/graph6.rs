//! graph6 encoding for graphs on at most 12 vertices.

use super::{SmallGraph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push((63 + chunk) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (chunk << (6 - filled))) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<SmallGraph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Parse(format!("invalid graph6 string {s:?}")));
    }
    let n = (first - 63) as usize;
    if first == 126 {
        return Err(Error::OrderTooLarge { order: 63, cap: MAX_ORDER });
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, cap: MAX_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!("graph6 string {s:?} has wrong length for {n} vertices")));
    }
    let mut g = SmallGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Parse(format!("invalid graph6 byte {byte:#x}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g = g.with_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
