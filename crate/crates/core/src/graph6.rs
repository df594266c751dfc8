//! graph6 decoding for simple graphs.
//!
//! Edges come out in the order of the upper-triangle bit stream:
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.

use crate::edgeset::MAX_VERTICES;
use crate::error::GraphError;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn sextet(b: u8) -> Result<u64, GraphError> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as u64)
    } else {
        Err(err(format!("invalid character {:?}", b as char)))
    }
}

/// Decodes the vertex count, returning it with the remaining bytes.
fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    match bytes {
        [] => Err(err("empty string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated vertex count"));
            }
            let n = rest[..6]
                .iter()
                .try_fold(0u64, |acc, &b| Ok::<_, GraphError>(acc << 6 | sextet(b)?))?;
            Ok((n as usize, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated vertex count"));
            }
            let n = rest[..3]
                .iter()
                .try_fold(0u64, |acc, &b| Ok::<_, GraphError>(acc << 6 | sextet(b)?))?;
            Ok((n as usize, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sextet(*b)? as usize, rest)),
    }
}

/// Decodes one graph6 string into a graph without degree validation.
pub fn parse_graph6_any(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let (n, body) = decode_order(line.as_bytes())?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { n, m: 0 });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(err(format!(
            "expected {want} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let word = sextet(body[k / 6])?;
            if word >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = want * 6 - bits;
        if sextet(last)? & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Decodes one graph6 string into a validated cubic graph.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let g = parse_graph6_any(line)?;
    g.check_cubic()?;
    Ok(g)
}
