//! Graph interchange: graph6, DIMACS edge lists, and a JSON dump.
//!
//! graph6 packs the upper triangle of the adjacency matrix in
//! column-major order, six bits per printable byte (offset 63). Vertex
//! counts up to 62 take one byte; larger counts take the 126 escape and
//! an 18-bit big-endian count.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const ESCAPE: u8 = 126;
const HEADER: &str = ">>graph6<<";

fn parse_err(reason: impl Into<String>) -> Error {
    Error::Parse {
        what: "graph6",
        reason: reason.into(),
    }
}

pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + OFFSET);
    } else {
        assert!(n <= 258_047, "graph6 short escape covers 18-bit counts");
        bytes.push(ESCAPE);
        for shift in [12u32, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(bytes).expect("printable ASCII by construction")
}

pub fn from_graph6(input: &str) -> Result<Graph> {
    let trimmed = input.trim();
    let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty input"));
    }
    for &b in bytes {
        if !(OFFSET..=ESCAPE).contains(&b) {
            return Err(parse_err(format!("byte {b} outside the printable range")));
        }
    }

    let (n, mut pos) = if bytes[0] == ESCAPE {
        if bytes.len() >= 2 && bytes[1] == ESCAPE {
            return Err(parse_err("36-bit vertex counts are not supported"));
        }
        if bytes.len() < 4 {
            return Err(parse_err("truncated vertex count"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - OFFSET) as usize;
        }
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let data_bytes = bit_count.div_ceil(6);
    if bytes.len() - pos != data_bytes {
        return Err(parse_err(format!(
            "expected {} data bytes for {} vertices, got {}",
            data_bytes,
            n,
            bytes.len() - pos
        )));
    }

    let mut graph = Graph::new(n);
    let mut acc = 0u8;
    let mut avail = 0u8;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                acc = bytes[pos] - OFFSET;
                avail = 6;
                pos += 1;
            }
            if acc >> 5 & 1 == 1 {
                graph.add_edge(i, j)?;
            }
            acc = (acc << 1) & 0x3f;
            avail -= 1;
        }
    }
    if acc != 0 {
        return Err(parse_err("padding bits are not zero"));
    }
    Ok(graph)
}

/// DIMACS edge format: a `p edge n m` header, then one `e u v` line per
/// edge with 1-based endpoints.
pub fn to_dimacs(graph: &Graph) -> String {
    let edges = graph.edges();
    let mut out = format!("p edge {} {}\n", graph.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads either DIMACS (with a `p edge` header, 1-based `e u v` lines,
/// `c` comments) or a bare list of 0-based `u v` pairs, one per line.
pub fn from_edge_list(input: &str) -> Result<Graph> {
    let edge_err = |reason: String| Error::Parse {
        what: "edge list",
        reason,
    };
    let mut lines = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('c'));

    let mut header: Option<(usize, usize)> = None;
    let mut pending: Option<&str> = None;
    if let Some(first) = lines.next() {
        if let Some(rest) = first.strip_prefix("p ") {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "edge" {
                return Err(edge_err(format!("bad problem line: {first}")));
            }
            let n = fields[1]
                .parse::<usize>()
                .map_err(|e| edge_err(format!("vertex count: {e}")))?;
            let m = fields[2]
                .parse::<usize>()
                .map_err(|e| edge_err(format!("edge count: {e}")))?;
            header = Some((n, m));
        } else {
            pending = Some(first);
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for line in pending.into_iter().chain(lines) {
        let body = match (header.is_some(), line.strip_prefix("e ")) {
            (true, Some(rest)) => rest,
            (true, None) => return Err(edge_err(format!("expected an e-line: {line}"))),
            (false, _) => line,
        };
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(edge_err(format!("expected two endpoints: {line}")));
        }
        let u = fields[0]
            .parse::<usize>()
            .map_err(|e| edge_err(format!("endpoint: {e}")))?;
        let v = fields[1]
            .parse::<usize>()
            .map_err(|e| edge_err(format!("endpoint: {e}")))?;
        if header.is_some() {
            if u == 0 || v == 0 {
                return Err(edge_err("endpoints are 1-based".into()));
            }
            pairs.push((u - 1, v - 1));
        } else {
            pairs.push((u, v));
        }
    }

    let n = match header {
        Some((n, _)) => n,
        None => pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut graph = Graph::new(n);
    for (u, v) in &pairs {
        graph.add_edge(*u, *v)?;
    }
    if let Some((_, m)) = header {
        if graph.edge_count() != m {
            return Err(edge_err(format!(
                "header promises {m} edges, found {}",
                graph.edge_count()
            )));
        }
    }
    Ok(graph)
}

/// `{"n": .., "edges": [[u, v], ..], "labels": [..] | null}` with labels
/// rendered as vertex-name strings when the graph carries them.
pub fn to_json(graph: &Graph) -> String {
    let value = serde_json::json!({
        "n": graph.n(),
        "edges": graph.edges(),
        "labels": graph.vertex_names(),
    });
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, hypercube, petersen};

    #[test]
    fn graph6_known_values() {
        // Documented sample: 5 vertices, edges 02 04 13 34.
        let mut g = Graph::new(5);
        for (u, v) in [(0, 2), (0, 4), (1, 3), (3, 4)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&cycle_graph(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&complete_graph(4)), "C~");
        assert_eq!(to_graph6(&Graph::new(1)), "@");
    }

    #[test]
    fn graph6_round_trips() {
        for g in [
            cycle_graph(8).unwrap(),
            complete_graph(7),
            petersen(),
            hypercube(4).unwrap(),
            Graph::new(3),
        ] {
            let enc = to_graph6(&g);
            let back = from_graph6(&enc).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
        }
    }

    #[test]
    fn graph6_long_form() {
        let g = cycle_graph(63).unwrap();
        let enc = to_graph6(&g);
        assert_eq!(&enc.as_bytes()[..4], &[126, 63, 63, 126]);
        let back = from_graph6(&enc).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn graph6_header_and_whitespace_tolerated() {
        let g = from_graph6(">>graph6<<DQc\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn graph6_malformed_inputs() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D\x1f").is_err());
        assert!(from_graph6("DQ").is_err());
        assert!(from_graph6("DQcc").is_err());
        // C5 data with a padding bit forced on.
        assert!(from_graph6("Dhd").is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = complete_graph(3);
        let text = to_dimacs(&g);
        assert_eq!(text, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        let back = from_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn bare_edge_list_is_zero_based() {
        let g = from_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_errors() {
        assert!(from_edge_list("p edge 3 5\ne 1 2\n").is_err());
        assert!(from_edge_list("p edge 3 1\n1 2\n").is_err());
        assert!(from_edge_list("p edge 3 1\ne 0 1\n").is_err());
        assert!(from_edge_list("0 1 2\n").is_err());
        assert!(from_edge_list("1 1\n").is_err());
        let with_comments = from_edge_list("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
        assert_eq!(with_comments.unwrap().edge_count(), 3);
    }

    #[test]
    fn json_shape() {
        let q2 = hypercube(2).unwrap();
        let value: serde_json::Value = serde_json::from_str(&to_json(&q2)).unwrap();
        assert_eq!(value["n"], 4);
        assert_eq!(value["edges"].as_array().unwrap().len(), 4);
        assert_eq!(value["labels"][2], "01");
        let unlabeled = complete_graph(3);
        let value: serde_json::Value = serde_json::from_str(&to_json(&unlabeled)).unwrap();
        assert!(value["labels"].is_null());
    }
}
