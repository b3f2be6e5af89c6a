//! Tree interchange formats: graph6 and plain edge lists.
//!
//! graph6 reference: the format description distributed with nauty
//! (`formats.txt`). Edge lists put the order on line 1 and one `u v`
//! pair per subsequent line; labels may be arbitrary non-negative
//! integers and are normalized to `0..n` by sorted order on ingest.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tree::Tree;

const G6_MAX_SMALL: usize = 62;
const G6_MAX_MEDIUM: usize = 258_047;

/// Encodes a tree in graph6.
pub fn to_graph6(tree: &Tree) -> String {
    let n = tree.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= G6_MAX_SMALL {
        bytes.push(n as u8 + 63);
    } else if n <= G6_MAX_MEDIUM {
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in (0..36).step_by(6).rev() {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if tree.neighbors(i).contains(&j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        bytes.push(acc + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 line and validates the result as a tree.
pub fn tree_from_graph6(line: &str) -> Result<Tree> {
    let data = line.trim();
    let data = data.strip_prefix(">>graph6<<").unwrap_or(data);
    let bytes = data.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("invalid graph6 byte".into()));
    }
    let vals: Vec<u8> = bytes.iter().map(|&b| b - 63).collect();
    let (n, header) = if vals.is_empty() {
        return Err(Error::Parse("empty graph6 line".into()));
    } else if vals[0] != 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] != 63 {
        (
            ((vals[1] as usize) << 12) | ((vals[2] as usize) << 6) | vals[3] as usize,
            4,
        )
    } else if vals.len() >= 8 {
        let mut n = 0usize;
        for &v in &vals[2..8] {
            n = (n << 6) | v as usize;
        }
        (n, 8)
    } else {
        return Err(Error::Parse("truncated graph6 header".into()));
    };
    let pair_bits = n * (n - 1) / 2;
    let need = header + pair_bits.div_ceil(6);
    if vals.len() < need {
        return Err(Error::Parse(format!(
            "graph6 body too short: need {need} bytes, got {}",
            vals.len()
        )));
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = vals[header + pos / 6];
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Tree::from_edges(n, &edges)
}

/// Serializes a tree as an edge list: order on line 1, `u v` per line.
pub fn to_edge_list(tree: &Tree) -> String {
    let mut out = format!("{}\n", tree.order());
    for (u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses an edge list, normalizing arbitrary integer labels to `0..n`
/// by sorted order.
pub fn tree_from_edge_list(text: &str) -> Result<Tree> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("first line must be the order".into()))?;
    let mut raw = Vec::new();
    let mut labels = BTreeMap::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let u: u64 = it
            .next()
            .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad label in: {line}")))?;
        let v: u64 = it
            .next()
            .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad label in: {line}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in: {line}")));
        }
        labels.insert(u, 0usize);
        labels.insert(v, 0usize);
        raw.push((u, v));
    }
    for (rank, (_, slot)) in labels.iter_mut().enumerate() {
        *slot = rank;
    }
    let edges: Vec<(usize, usize)> = raw.into_iter().map(|(u, v)| (labels[&u], labels[&v])).collect();
    Tree::from_edges(n, &edges)
}

/// Reads a tree from text that is either graph6 or an edge list.
///
/// graph6 bytes live in `63..=126`, so a first line made of digits can
/// only be an edge-list header.
pub fn tree_from_text(text: &str) -> Result<Tree> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    if first.trim().bytes().all(|b| b.is_ascii_digit()) {
        tree_from_edge_list(text)
    } else {
        tree_from_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{path_tree, star_tree};

    #[test]
    fn graph6_round_trip_small() {
        for t in [path_tree(2), path_tree(7), star_tree(5)] {
            let enc = to_graph6(&t);
            let back = tree_from_graph6(&enc).unwrap();
            assert_eq!(back.canonical_code(), t.canonical_code());
            assert_eq!(back.order(), t.order());
        }
    }

    #[test]
    fn graph6_known_encoding() {
        // P4 as 0-1-2-3: bits (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) = 101001.
        let p4 = path_tree(4);
        assert_eq!(to_graph6(&p4), "Ch");
    }

    #[test]
    fn graph6_medium_header() {
        let t = path_tree(100);
        let enc = to_graph6(&t);
        assert!(enc.starts_with('~'));
        let back = tree_from_graph6(&enc).unwrap();
        assert_eq!(back.order(), 100);
        assert_eq!(back.diameter(), 99);
    }

    #[test]
    fn edge_list_round_trip_and_label_normalization() {
        let t = star_tree(4);
        let text = to_edge_list(&t);
        let back = tree_from_edge_list(&text).unwrap();
        assert_eq!(back.canonical_code(), t.canonical_code());

        // Arbitrary labels normalize by sorted order.
        let weird = "3\n10 700\n700 42\n";
        let tree = tree_from_edge_list(weird).unwrap();
        assert_eq!(tree.order(), 3);
        assert_eq!(tree.diameter(), 2);
    }

    #[test]
    fn sniffing_picks_format() {
        let t = path_tree(5);
        assert_eq!(
            tree_from_text(&to_edge_list(&t)).unwrap().canonical_code(),
            t.canonical_code()
        );
        assert_eq!(
            tree_from_text(&to_graph6(&t)).unwrap().canonical_code(),
            t.canonical_code()
        );
    }

    #[test]
    fn rejects_non_tree_graph6() {
        // Triangle on 3 vertices: n=3, bits (0,1),(0,2),(1,2) = 111 -> value 111000 = 56 -> 'w'.
        assert!(tree_from_graph6("Bw").is_err());
    }
}
