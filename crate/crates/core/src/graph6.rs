//! graph6 encoding: an order prefix followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable character
//! (offset 63), zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the 4-byte prefix.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            what: "graph6",
            order: n,
            limit: MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn decode(line: &str) -> Result<Graph> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} at position {i} is outside the printable range 63..=126"
        )));
    }
    let (n, body) = if bytes[0] != b'~' {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == b'~' {
        return Err(Error::OrderTooLarge {
            what: "graph6",
            order: MAX_ORDER + 1,
            limit: MAX_ORDER,
        });
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        if n <= 62 {
            return Err(Error::Graph6(format!("long-form prefix used for order {n}")));
        }
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data characters for order {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(encode(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        // Same five-vertex graph as the petgraph fixture: a-c, a-e, b-d, d-e.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn long_form_prefix() {
        let g = Graph::cycle(70).without_bipartition();
        let s = encode(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::Graph6(_))));
        assert!(matches!(decode("B"), Err(Error::Graph6(_))));
        assert!(matches!(decode("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(decode("B w"), Err(Error::Graph6(_))));
        assert!(matches!(decode("B!"), Err(Error::Graph6(_))));
        assert!(matches!(decode("~?"), Err(Error::Graph6(_))));
        assert!(matches!(decode("~~??????"), Err(Error::OrderTooLarge { .. })));
    }
}
