//! Free-tree enumeration and random labelled trees.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_code;
use crate::graph::Graph;

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical code.
///
/// Trees on `k + 1` vertices are grown from those on `k` vertices by adding
/// a leaf in every possible position; duplicates are merged by canonical
/// code.
pub fn enumerate_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for k in 1..n {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for t in &level {
            let edges: Vec<_> = t.edges().collect();
            for v in 0..k {
                let mut grown = edges.clone();
                grown.push((v, k));
                let g = Graph::from_edge_list(k + 1, &grown).expect("leaf extension is simple");
                let code = canonical_code(&g).expect("leaf extension is a tree");
                next.entry(code).or_insert(g);
            }
        }
        level = next.into_values().collect();
    }
    level.into_iter()
}

/// The trees on `1..=n_max` vertices, smallest first.
pub fn enumerate_trees_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (1..=n_max).flat_map(enumerate_trees)
}

/// A uniformly random labelled tree on `n` vertices, drawn through a random
/// Prüfer word. The same seed always gives the same tree.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "trees need at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer_decode(n, &word)
}

/// Decodes a Prüfer word of length `n - 2` over `0..n`.
pub fn prufer_decode(n: usize, word: &[usize]) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    assert_eq!(word.len(), n - 2, "Prüfer word length must be n - 2");
    let mut degree = vec![1usize; n];
    for &w in word {
        degree[w] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // linear-time decoding with a moving pointer to the smallest leaf
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &w in word {
        edges.push((leaf, w));
        degree[w] -= 1;
        if w < ptr && degree[w] == 1 {
            leaf = w;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding yields a tree")
}
