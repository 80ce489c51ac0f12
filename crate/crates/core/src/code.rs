//! Binary interchange format for embedded planar graphs.
//!
//! The stream starts with the 15-byte header `>>planar_code<<`. Each graph
//! is then one byte giving the vertex count n (1..=255), followed by one
//! list per vertex: its neighbours in rotation order as 1-based bytes,
//! terminated by a 0 byte. The format is the common interchange produced
//! and consumed by standard plane-graph generators, so corpora can move in
//! and out of this toolkit byte-exactly.

use crate::bitset::Vertex;
use crate::embed::{EmbedError, PlanarGraph};
use std::fmt;

pub const PLANAR_CODE_HEADER: &[u8; 15] = b">>planar_code<<";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeError {
    /// The input does not start with `>>planar_code<<`.
    BadHeader { offset: usize },
    /// The input ended inside a graph record; `offset` is where more bytes
    /// were expected.
    TruncatedGraph { offset: usize },
    /// A byte that is neither a valid 1-based neighbour label nor a
    /// terminator, or a zero vertex count.
    InvalidNeighbor { offset: usize, byte: u8 },
    /// The record decoded structurally but is not a planar embedding.
    Invalid { offset: usize, source: EmbedError },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CodeError::BadHeader { offset } => {
                write!(f, "missing planar_code header at byte {offset}")
            }
            CodeError::TruncatedGraph { offset } => {
                write!(f, "input truncated inside a graph record at byte {offset}")
            }
            CodeError::InvalidNeighbor { offset, byte } => {
                write!(f, "invalid neighbour byte {byte} at offset {offset}")
            }
            CodeError::Invalid { offset, ref source } => {
                write!(f, "graph starting at byte {offset} is not planar: {source}")
            }
        }
    }
}

impl std::error::Error for CodeError {}

/// Streaming reader over a planar_code byte slice. Yields one decoded graph
/// per record; stops at the first error (subsequent records have no
/// trustworthy start offset).
pub struct PlanarCodeReader<'a> {
    bytes: &'a [u8],
    pos: usize,
    failed: bool,
}

impl<'a> PlanarCodeReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Result<Self, CodeError> {
        if bytes.len() < PLANAR_CODE_HEADER.len() || &bytes[..PLANAR_CODE_HEADER.len()] != PLANAR_CODE_HEADER {
            let offset = bytes
                .iter()
                .zip(PLANAR_CODE_HEADER.iter())
                .position(|(a, b)| a != b)
                .unwrap_or(bytes.len().min(PLANAR_CODE_HEADER.len()));
            return Err(CodeError::BadHeader { offset });
        }
        Ok(PlanarCodeReader {
            bytes,
            pos: PLANAR_CODE_HEADER.len(),
            failed: false,
        })
    }

    /// Byte offset of the next unread record.
    pub fn offset(&self) -> usize {
        self.pos
    }

    fn read_graph(&mut self) -> Result<PlanarGraph, CodeError> {
        let start = self.pos;
        let n = self.bytes[self.pos];
        if n == 0 {
            return Err(CodeError::InvalidNeighbor {
                offset: self.pos,
                byte: 0,
            });
        }
        self.pos += 1;
        let mut rot: Vec<Vec<Vertex>> = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let Some(&b) = self.bytes.get(self.pos) else {
                    return Err(CodeError::TruncatedGraph {
                        offset: self.bytes.len(),
                    });
                };
                if b == 0 {
                    self.pos += 1;
                    break;
                }
                if b > n {
                    return Err(CodeError::InvalidNeighbor {
                        offset: self.pos,
                        byte: b,
                    });
                }
                list.push(b - 1);
                self.pos += 1;
            }
            rot.push(list);
        }
        PlanarGraph::build(rot).map_err(|source| CodeError::Invalid {
            offset: start,
            source,
        })
    }
}

impl Iterator for PlanarCodeReader<'_> {
    type Item = Result<PlanarGraph, CodeError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.pos >= self.bytes.len() {
            return None;
        }
        let item = self.read_graph();
        if item.is_err() {
            self.failed = true;
        }
        Some(item)
    }
}

/// Decode a whole planar_code stream eagerly.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlanarGraph>, CodeError> {
    PlanarCodeReader::new(bytes)?.collect()
}

/// Append one graph record (no header) to `out`.
pub fn write_graph_record(g: &PlanarGraph, out: &mut Vec<u8>) {
    out.push(g.n() as u8);
    for v in g.vertices() {
        out.extend(g.neighbors(v).iter().map(|&w| w + 1));
        out.push(0);
    }
}

/// Encode graphs as a planar_code stream: header, then one record per graph
/// with vertices in index order and rotations exactly as stored, making the
/// encoding deterministic and round-trip stable. The graph type already
/// enforces the format's 255-vertex cap.
pub fn write_planar_code<'a, I>(graphs: I) -> Vec<u8>
where
    I: IntoIterator<Item = &'a PlanarGraph>,
{
    let mut out = Vec::from(PLANAR_CODE_HEADER.as_slice());
    for g in graphs {
        write_graph_record(g, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::test_graphs;

    #[test]
    fn decodes_a_handwritten_triangle() {
        let mut bytes = Vec::from(PLANAR_CODE_HEADER.as_slice());
        bytes.extend_from_slice(&[3, 2, 3, 0, 3, 1, 0, 1, 2, 0]);
        let gs = read_planar_code(&bytes).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!((gs[0].n(), gs[0].m(), gs[0].face_count()), (3, 3, 2));
        assert_eq!(write_planar_code(&gs), bytes);
    }

    #[test]
    fn rejects_missing_header() {
        assert_eq!(
            read_planar_code(b">>planar_kode<<").unwrap_err(),
            CodeError::BadHeader { offset: 9 }
        );
        assert_eq!(
            read_planar_code(b"").unwrap_err(),
            CodeError::BadHeader { offset: 0 }
        );
    }

    #[test]
    fn rejects_truncation_and_bad_bytes() {
        let mut bytes = Vec::from(PLANAR_CODE_HEADER.as_slice());
        bytes.extend_from_slice(&[3, 2, 3, 0, 3, 1]);
        assert_eq!(
            read_planar_code(&bytes).unwrap_err(),
            CodeError::TruncatedGraph { offset: bytes.len() }
        );

        let mut bytes = Vec::from(PLANAR_CODE_HEADER.as_slice());
        bytes.extend_from_slice(&[3, 2, 7, 0]);
        assert_eq!(
            read_planar_code(&bytes).unwrap_err(),
            CodeError::InvalidNeighbor { offset: 17, byte: 7 }
        );

        let mut bytes = Vec::from(PLANAR_CODE_HEADER.as_slice());
        bytes.push(0);
        assert_eq!(
            read_planar_code(&bytes).unwrap_err(),
            CodeError::InvalidNeighbor { offset: 15, byte: 0 }
        );
    }

    #[test]
    fn rejects_structurally_invalid_records() {
        // Vertex 0 lists 1 as a neighbour but not vice versa.
        let mut bytes = Vec::from(PLANAR_CODE_HEADER.as_slice());
        bytes.extend_from_slice(&[2, 2, 0, 0]);
        match read_planar_code(&bytes).unwrap_err() {
            CodeError::Invalid { offset: 15, .. } => {}
            e => panic!("expected Invalid at 15, got {e:?}"),
        }
    }

    #[test]
    fn round_trips_multiple_graphs() {
        let graphs = vec![test_graphs::k4(), test_graphs::cube(), test_graphs::cycle(5)];
        let bytes = write_planar_code(&graphs);
        let back = read_planar_code(&bytes).unwrap();
        assert_eq!(graphs, back);
        assert_eq!(write_planar_code(&back), bytes);
        for (a, b) in graphs.iter().zip(&back) {
            assert_eq!(a.canonical_code(), b.canonical_code());
        }
    }

    #[test]
    fn reader_reports_offsets_and_stops_after_error() {
        let mut bytes = Vec::from(PLANAR_CODE_HEADER.as_slice());
        write_graph_record(&test_graphs::k4(), &mut bytes);
        let bad_at = bytes.len() + 1;
        bytes.extend_from_slice(&[2, 9]);
        let mut r = PlanarCodeReader::new(&bytes).unwrap();
        assert!(r.next().unwrap().is_ok());
        assert_eq!(
            r.next().unwrap().unwrap_err(),
            CodeError::InvalidNeighbor { offset: bad_at, byte: 9 }
        );
        assert!(r.next().is_none());
    }
}
