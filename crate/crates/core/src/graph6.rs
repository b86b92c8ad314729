//! graph6 text encoding.
//!
//! Layout: a size header followed by the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! big-endian into 6-bit groups, each group offset by 63 into printable
//! ASCII. The size header is one byte for `n <= 62`, `~` plus three bytes up
//! to 258047 and `~~` plus six bytes beyond that.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Graph6Error;
use crate::graph::SimpleGraph;

const SHORT_LIMIT: usize = 62;
const LONG_LIMIT: usize = 258_047;
const HEADER_PREFIX: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let groups = if n <= SHORT_LIMIT {
        1
    } else if n <= LONG_LIMIT {
        out.push('~');
        3
    } else {
        out.push_str("~~");
        6
    };
    for i in (0..groups).rev() {
        out.push(char::from(63 + ((n >> (6 * i)) & 0x3f) as u8));
    }
}

pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (group << (6 - filled))));
    }
    out
}

fn sextet(b: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Graph6Error::InvalidByte(b))
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let (skip, groups) = match bytes {
        [] => return Err(Graph6Error::Empty),
        [126, 126, ..] => (2, 6),
        [126, ..] => (1, 3),
        _ => (0, 1),
    };
    if bytes.len() < skip + groups {
        return Err(Graph6Error::Header);
    }
    let mut n = 0usize;
    for &b in &bytes[skip..skip + groups] {
        n = (n << 6) | usize::from(sextet(b).map_err(|_| Graph6Error::Header)?);
    }
    // Sizes must use the shortest header form.
    let canonical = match groups {
        1 => true,
        3 => n > SHORT_LIMIT,
        _ => n > LONG_LIMIT,
    };
    if !canonical {
        return Err(Graph6Error::Header);
    }
    Ok((n, skip + groups))
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, offset) = read_size(bytes)?;
    let data = &bytes[offset..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length { expected, found: data.len() });
    }
    let sextets = data.iter().map(|&b| sextet(b)).collect::<Result<Vec<u8>, _>>()?;
    let pad = expected * 6 - bits;
    if let Some(&last) = sextets.last() {
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if sextets[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(write_graph6(&SimpleGraph::new(5)), "D??");
        assert_eq!(write_graph6(&SimpleGraph::complete(5)), "D~{");
        assert_eq!(write_graph6(&SimpleGraph::new(0)), "?");
        let g = SimpleGraph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn long_form_header() {
        let g = SimpleGraph::cycle(63);
        let s = write_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Length { expected: 2, found: 1 }));
        assert_eq!(parse_graph6("D???"), Err(Graph6Error::Length { expected: 2, found: 3 }));
        // K_5 with a padding bit set.
        assert_eq!(parse_graph6("D~|"), Err(Graph6Error::TrailingBits));
        assert_eq!(parse_graph6("D?\u{7f}"), Err(Graph6Error::InvalidByte(0x7f)));
        assert_eq!(parse_graph6("~"), Err(Graph6Error::Header));
        // n = 5 written in the long form is not canonical.
        assert_eq!(parse_graph6("~??D??"), Err(Graph6Error::Header));
    }

    #[test]
    fn accepts_header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<D~{\n").unwrap(), SimpleGraph::complete(5));
    }
}
