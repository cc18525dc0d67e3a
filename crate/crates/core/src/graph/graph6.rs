//! The graph6 text encoding: a size prefix followed by the upper triangle of
//! the adjacency matrix in column order, six bits per printable byte.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn push_bits(out: &mut Vec<u8>, value: u64, groups: usize) {
    for g in (0..groups).rev() {
        out.push(63 + ((value >> (6 * g)) & 0x3f) as u8);
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        push_bits(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_bits(&mut out, n as u64, 6);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_error(msg: impl Into<String>) -> GraphError {
    GraphError::Parse(msg.into())
}

pub fn decode(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_error(format!("byte {b:#x} is not a graph6 character")));
    }
    let six = |range: &[u8]| range.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    let (n, body) = match bytes {
        [] => return Err(parse_error("empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(parse_error("truncated graph6 size field")),
        [b, rest @ ..] => (u64::from(b - 63), rest),
    };
    let n = usize::try_from(n).map_err(|_| parse_error("graph6 size overflows usize"))?;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(parse_error(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Decodes one graph per non-empty line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&Graph::cycle(4)), "Cl");
        assert_eq!(encode(&Graph::complete(5)), "D~{");
        assert_eq!(decode("Cl").unwrap(), Graph::cycle(4));
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn petersen() {
        let g = decode("IheA@GUAo").unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(encode(&g), "IheA@GUAo");
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::path(100);
        let text = encode(&g);
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(decode(&text).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\u{7f}").is_err());
    }
}
