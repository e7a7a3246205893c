//! graph6 text encoding (McKay's format).
//!
//! The payload is the upper triangle of the adjacency matrix in column
//! order, `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte
//! (most significant first) with 63 added to each byte.

use super::SimpleGraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047;

pub(super) fn encode(g: &SimpleGraph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_ORDER,
        "graph6 supports at most {MAX_ORDER} vertices"
    );
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

pub(super) fn decode(text: &str) -> Result<SimpleGraph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let body = body.strip_prefix(HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {b:#04x} is outside the printable range 63..=126"
        )));
    }
    let six = |b: u8| (b - 63) as usize;

    let (n, payload) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::MalformedGraph6(
            "orders above 258047 are not supported".into(),
        ));
    } else if bytes.len() >= 4 {
        let n = (six(bytes[1]) << 12) | (six(bytes[2]) << 6) | six(bytes[3]);
        if n <= 62 {
            return Err(Error::MalformedGraph6(format!(
                "order {n} must use the one-byte header"
            )));
        }
        (n, &bytes[4..])
    } else {
        return Err(Error::MalformedGraph6("truncated order header".into()));
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs {expected} payload bytes, found {}",
            payload.len()
        )));
    }

    let mut g = SimpleGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(payload[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.edges.insert((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if six(payload[expected - 1]) & ((1 << pad) - 1) != 0 {
            return Err(Error::MalformedGraph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_values() {
        assert_eq!(encode(&SimpleGraph::complete(3)), "Bw");
        assert_eq!(encode(&SimpleGraph::empty(1)), "@");
        assert_eq!(encode(&SimpleGraph::empty(0)), "?");
        assert_eq!(decode("Bw").unwrap(), SimpleGraph::complete(3));
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), SimpleGraph::complete(3));
    }

    #[test]
    fn matches_reference_encoder() {
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = SimpleGraph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn long_header() {
        let g = SimpleGraph::star(69);
        let text = encode(&g);
        assert!(text.starts_with("~?@E"));
        assert_eq!(decode(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "B", "Bww", "B ", "Bx", "~~", "~?", "~??~"] {
            assert!(
                matches!(decode(bad), Err(Error::MalformedGraph6(_))),
                "{bad:?} should be rejected"
            );
        }
    }
}
