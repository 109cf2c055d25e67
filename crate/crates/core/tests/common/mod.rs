//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's enumeration or canonical-form code.

#![allow(dead_code)]

use std::collections::HashSet;

/// Adjacency lists of the labeled tree with Prüfer word `word`.
pub fn decode(n: usize, word: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    if n == 2 {
        adj[0].push(1);
        adj[1].push(0);
        return adj;
    }
    let mut degree = vec![1usize; n];
    for &w in word {
        degree[w] += 1;
    }
    for &w in word {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        adj[leaf].push(w);
        adj[w].push(leaf);
        degree[leaf] -= 1;
        degree[w] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    adj[rest[0]].push(rest[1]);
    adj[rest[1]].push(rest[0]);
    adj
}

/// AHU code packed into bits: `1`, the sorted child codes, `0`.
fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> (u64, u32) {
    let mut kids: Vec<(u64, u32)> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted(adj, w, v))
        .collect();
    kids.sort_unstable();
    let (mut bits, mut len) = (1u64, 1u32);
    for (b, l) in kids {
        bits = (bits << l) | b;
        len += l;
    }
    (bits << 1, len + 1)
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let ecc = |s: usize| {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        dist.into_iter().max().unwrap()
    };
    let e: Vec<usize> = (0..n).map(ecc).collect();
    let best = *e.iter().min().unwrap();
    (0..n).filter(|&v| e[v] == best).collect()
}

/// Isomorphism-invariant code for trees with at most 32 vertices.
pub fn tree_code(adj: &[Vec<usize>]) -> (u64, u32) {
    centers(adj)
        .into_iter()
        .map(|c| rooted(adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// Number of unlabeled trees on `n` vertices, by decoding every Prüfer word
/// over `{2, ..., n-1}` (vertices 0 and 1 are then leaves, and every tree
/// has two leaves) and counting distinct codes.
pub fn labeled_dedup_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let alphabet = n - 2;
    let mut word = vec![2usize; len];
    let mut seen = HashSet::new();
    loop {
        seen.insert(tree_code(&decode(n, &word)));
        let mut i = 0;
        loop {
            if i == len {
                return seen.len();
            }
            word[i] += 1;
            if word[i] < 2 + alphabet {
                break;
            }
            word[i] = 2;
            i += 1;
        }
    }
}

pub fn edges_of(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

/// Brute-force isomorphism test over all permutations.
pub fn isomorphic(a: &[(usize, usize)], b: &[(usize, usize)], n: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target: HashSet<(usize, usize)> = b.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.iter()
            .all(|&(u, v)| target.contains(&(perm[u].min(perm[v]), perm[u].max(perm[v]))))
        {
            return true;
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// γ_p by trying every subset, smallest first.
pub fn brute_gamma(n: usize, edges: &[(usize, usize)], p: usize) -> usize {
    let mut nbr = vec![0u64; n];
    for &(u, v) in edges {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    (0u64..1 << n)
        .filter(|&d| (0..n).all(|v| d & (1 << v) != 0 || (nbr[v] & d).count_ones() as usize >= p))
        .map(|d| d.count_ones() as usize)
        .min()
        .unwrap()
}

/// Number of unlabeled trees on `n` vertices from Otter's formula
/// t(x) = r(x) - (r(x)^2 - r(x^2)) / 2, with rooted counts r from the
/// standard divisor recurrence.
pub fn otter_count(n: usize) -> usize {
    let mut r = vec![0usize; n + 1];
    r[1] = 1;
    for m in 2..=n {
        let mut s = 0;
        for k in 1..m {
            let dsum: usize = (1..=k).filter(|d| k % d == 0).map(|d| d * r[d]).sum();
            s += dsum * r[m - k];
        }
        r[m] = s / (m - 1);
    }
    let square: usize = (1..n).map(|i| r[i] * r[n - i]).sum();
    let diag = if n.is_multiple_of(2) { r[n / 2] } else { 0 };
    r[n] - (square - diag) / 2
}

fn neighbour_masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut nbr = vec![0u64; n];
    for &(u, v) in edges {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    nbr
}

/// Total shortfall of `x` as a p-dominating set.
pub fn brute_deficiency(n: usize, edges: &[(usize, usize)], p: usize, x: u64) -> usize {
    let nbr = neighbour_masks(n, edges);
    (0..n)
        .filter(|&v| x & (1 << v) == 0)
        .map(|v| p.saturating_sub((nbr[v] & x).count_ones() as usize))
        .sum()
}

/// η_p by trying every subset of size below γ_p.
pub fn brute_eta(n: usize, edges: &[(usize, usize)], p: usize) -> usize {
    let gamma = brute_gamma(n, edges, p);
    (0u64..1 << n)
        .filter(|x| (x.count_ones() as usize) < gamma)
        .map(|x| brute_deficiency(n, edges, p, x))
        .min()
        .unwrap()
}

/// r_p straight from the definition: the fewest non-edges whose addition
/// lowers γ_p, trying every set of non-edges by size.
pub fn brute_r(n: usize, edges: &[(usize, usize)], p: usize) -> usize {
    let gamma = brute_gamma(n, edges, p);
    if gamma <= p {
        return 0;
    }
    let present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !present.contains(e))
        .collect();
    for k in 1..=missing.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut all = edges.to_vec();
            all.extend(idx.iter().map(|&i| missing[i]));
            if brute_gamma(n, &all, p) < gamma {
                return k;
            }
            let Some(i) = (0..k).rev().find(|&i| idx[i] < missing.len() - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("joining everything to one vertex lowers γ_p below p + 1")
}
