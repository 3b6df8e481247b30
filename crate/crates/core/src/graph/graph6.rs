//! graph6: the size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors_mask(j);
        for i in 0..j {
            chunk = chunk << 1 | (column >> i & 1) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();

    let mut pos = 0;
    let mut next = |what: &str| -> Result<u64> {
        let b = *bytes.get(pos).ok_or_else(|| malformed(format!("truncated {what}")))?;
        if !(63..=126).contains(&b) {
            return Err(malformed(format!("illegal character {:?} at offset {pos}", b as char)));
        }
        pos += 1;
        Ok((b - 63) as u64)
    };

    let first = next("size header")?;
    let n = if first < 63 {
        first as usize
    } else {
        let second = next("size header")?;
        let (count, lead) = if second == 63 { (6, next("size header")?) } else { (3, second) };
        let mut n = lead;
        for _ in 1..count {
            n = n << 6 | next("size header")?;
        }
        n as usize
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let body = total_bits.div_ceil(6);
    let mut g = Graph::with_vertices(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    let mut consumed = 0;
    for _ in 0..body {
        let chunk = next("adjacency data")?;
        for bit in (0..6).rev() {
            let set = chunk >> bit & 1 == 1;
            if consumed < total_bits {
                if set {
                    g.insert_edge(i, j)?;
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if set {
                return Err(malformed("non-zero padding bits"));
            }
            consumed += 1;
        }
    }
    if pos != bytes.len() {
        return Err(malformed(format!("{} trailing byte(s)", bytes.len() - pos)));
    }
    Ok(g)
}
