//! graph6 encoding (McKay's format) for undirected simple graphs.

use super::{Graph, GraphError};

const MAX_GRAPH6: usize = 68_719_476_735;

fn encode_n(n: usize, out: &mut Vec<u8>) -> Result<(), GraphError> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else if n <= MAX_GRAPH6 {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(GraphError::Graph6TooLarge(n));
    }
    Ok(())
}

/// Encodes the upper triangle column by column, six bits per byte.
pub fn graph6_encode(g: &Graph) -> Result<String, GraphError> {
    let n = g.node_count();
    let mut out = Vec::new();
    encode_n(n, &mut out)?;
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_link(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let bad = |why: &str| GraphError::MalformedGraph6(format!("{why} in `{text}`"));
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let sextet = |k: usize| -> Result<usize, GraphError> {
        bytes
            .get(k)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| bad("truncated size field"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(bad("empty string")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for k in 2..8 {
                n = (n << 6) | sextet(k)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for k in 1..4 {
                n = (n << 6) | sextet(k)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(bad("wrong length for the declared size"));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = (bytes[pos + k / 6] - 63) as usize;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_link(i, j)?;
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    if bits % 6 != 0 {
        let last = (bytes[pos - 1] - 63) as usize;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(bad("non-zero padding bits"));
        }
    }
    Ok(g)
}
