//! Brute-force oracle for the free-tree stream: enumerate every labeled
//! tree through its Prüfer sequence, deduplicate by canonical code, and
//! compare counts and code multisets against the generator. The oracle is
//! O(n^{n-2}), so the live tests stop at order 8; orders 9 and 10 run
//! under `--ignored`.

use std::collections::BTreeSet;

use wiener_lab::enumerate::{count_trees, enumerate_trees, tree_from_pruefer};

/// All canonical codes of trees on `n` vertices, by exhaustive Prüfer
/// enumeration.
fn pruefer_code_set(n: usize) -> BTreeSet<Vec<u8>> {
    let mut codes = BTreeSet::new();
    if n == 1 || n == 2 {
        let stream = enumerate_trees(n).unwrap();
        for t in stream {
            codes.insert(t.canonical_code());
        }
        return codes;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let tree = tree_from_pruefer(&seq).unwrap();
        codes.insert(tree.canonical_code());
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == len {
                return codes;
            }
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

fn check_against_oracle(n: usize) {
    let oracle = pruefer_code_set(n);
    let streamed: BTreeSet<Vec<u8>> = enumerate_trees(n)
        .unwrap()
        .map(|t| t.canonical_code())
        .collect();
    assert_eq!(streamed.len(), count_trees(n).unwrap(), "stream repeats a class at n={n}");
    assert_eq!(oracle, streamed, "code sets differ at n={n}");
}

#[test]
fn stream_matches_pruefer_oracle_up_to_order_8() {
    // 1, 1, 1, 2, 3, 6, 11, 23
    for n in 1..=8 {
        check_against_oracle(n);
    }
}

#[test]
fn five_vertex_trees_have_three_codes() {
    assert_eq!(pruefer_code_set(5).len(), 3);
}

#[test]
fn frozen_counts_from_oracle_runs() {
    // Orders 9 and 10 computed by the ignored oracle tests below and the
    // degree-sequence literature; frozen here so the default suite pins
    // them without the O(n^{n-2}) cost.
    assert_eq!(count_trees(9).unwrap(), 47);
    assert_eq!(count_trees(10).unwrap(), 106);
}

#[test]
#[ignore = "exhaustive 9^7 Prüfer sweep, run with --ignored"]
fn stream_matches_pruefer_oracle_order_9() {
    check_against_oracle(9);
}

#[test]
#[ignore = "exhaustive 10^8 Prüfer sweep, run with --ignored"]
fn stream_matches_pruefer_oracle_order_10() {
    check_against_oracle(10);
}
