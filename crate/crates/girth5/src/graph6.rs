//! graph6 interchange (the nauty/gtools text format) plus a JSON edge-list
//! export for debugging.
//!
//! Bit layout follows the published format description: N(n) is one byte
//! `n + 63` for n <= 62, or '~' followed by three 6-bit bytes for larger n,
//! then the upper triangle of the adjacency matrix in column order
//! (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
//! offset by 63.

use crate::graph::LabeledGraph;
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph order {0} exceeds the graph6 3-byte size limit")]
    TooLarge(usize),
    #[error("the 8-byte order form is not supported")]
    HugeOrderForm,
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#x} outside the graph6 alphabet")]
    BadByte(u8),
    #[error("truncated graph6 string")]
    Truncated,
    #[error("trailing data after adjacency bits")]
    TrailingData,
    #[error("io error: {0}")]
    Io(String),
}

const MAX_N: usize = 258_047;

pub fn to_graph6(g: &LabeledGraph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(acc + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn from_graph6(text: &str) -> Result<LabeledGraph, Graph6Error> {
    let text = text
        .strip_prefix(">>graph6<<")
        .unwrap_or(text)
        .trim_end_matches(['\r', '\n']);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated);
        }
        if bytes[1] == 126 {
            // Orders above 258047 only appear in the 8-byte form, which
            // nothing here produces.
            return Err(Graph6Error::HugeOrderForm);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect_bytes = nbits.div_ceil(6);
    if bytes.len() - pos < expect_bytes {
        return Err(Graph6Error::Truncated);
    }
    if bytes.len() - pos > expect_bytes {
        return Err(Graph6Error::TrailingData);
    }
    let mut g = LabeledGraph::new(n);
    let mut acc = 0u8;
    let mut avail = 0;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                avail = 6;
            }
            if acc & 0x20 != 0 {
                g.add_edge(u, v)
                    .expect("triangle order yields no duplicates");
            }
            acc <<= 1;
            avail -= 1;
        }
    }
    Ok(g)
}

/// One graph per line; blank lines are skipped.
pub fn read_graph6_file(path: &Path) -> Result<Vec<LabeledGraph>, Graph6Error> {
    let text = fs::read_to_string(path).map_err(|e| Graph6Error::Io(e.to_string()))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}

pub fn write_graph6_file(path: &Path, graphs: &[&LabeledGraph]) -> Result<(), Graph6Error> {
    let mut out = Vec::new();
    for g in graphs {
        writeln!(out, "{}", to_graph6(g)?).unwrap();
    }
    fs::write(path, out).map_err(|e| Graph6Error::Io(e.to_string()))
}

/// JSON edge-list form: {"n", "edges", "labels"?}.
#[derive(Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u64>>,
}

pub fn to_edge_list_json(g: &LabeledGraph) -> EdgeListJson {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    EdgeListJson {
        n: g.vertex_count(),
        edges,
        labels: g.labels().map(|l| l.to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, petersen};

    #[test]
    fn five_cycle_encodes_to_dhc() {
        // Hand-computed: n=5 -> 'D'; upper-triangle bits of C_5 are
        // 1010 0110 01, padded to 101001 100100 -> 41,36 -> 'h','c'.
        let c5 = cycle_graph(5);
        assert_eq!(to_graph6(&c5).unwrap(), "Dhc");
        let back = from_graph6("Dhc").unwrap();
        assert_eq!(back.vertex_count(), 5);
        assert!(back.is_regular(2));
        assert_eq!(back.girth(), Some(5));
    }

    #[test]
    fn single_vertex_roundtrip() {
        let g = LabeledGraph::new(1);
        let s = to_graph6(&g).unwrap();
        assert_eq!(s, "@");
        let back = from_graph6(&s).unwrap();
        assert_eq!(back.vertex_count(), 1);
        assert_eq!(back.edge_count(), 0);
    }

    #[test]
    fn petersen_roundtrip_preserves_profile() {
        let p = petersen();
        let back = from_graph6(&to_graph6(&p).unwrap()).unwrap();
        assert_eq!(back.degree_profile(), vec![(3, 10)]);
        let mut want = p.edges().to_vec();
        want.sort_unstable();
        let mut got = back.edges().to_vec();
        got.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn long_form_order() {
        let g = LabeledGraph::new(100);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        let back = from_graph6(&s).unwrap();
        assert_eq!(back.vertex_count(), 100);
    }

    #[test]
    fn malformed_inputs_error() {
        assert_eq!(from_graph6("").unwrap_err(), Graph6Error::Empty);
        assert_eq!(from_graph6("D!").unwrap_err(), Graph6Error::BadByte(b'!'));
        assert_eq!(from_graph6("D").unwrap_err(), Graph6Error::Truncated);
        assert_eq!(from_graph6("Dhcc").unwrap_err(), Graph6Error::TrailingData);
    }

    #[test]
    fn header_prefix_tolerated() {
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap().edge_count(), 5);
    }
}
