//! Bitmask helpers for the exhaustive searches. Everything here assumes at
//! most 64 vertices; callers enforce that through [`Limits`].

use serde::{Deserialize, Serialize};

/// Size guards for the exponential searches. Exceeding one is an explicit
/// refusal, never an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Exhaustive γ_p on graphs that are not trees.
    pub gamma_exhaustive: usize,
    /// Listing every minimum p-dominating set.
    pub all_min_sets: usize,
    /// Exhaustive η_p.
    pub eta: usize,
    /// r_p straight from its definition.
    pub definition: usize,
    /// Subset-quantified structural checks.
    pub structural: usize,
    /// Family membership by exhaustive search.
    pub exhaustive_recognize: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            gamma_exhaustive: 24,
            all_min_sets: 20,
            eta: 24,
            definition: 10,
            structural: 16,
            exhaustive_recognize: 20,
        }
    }
}

/// Hard ceiling for any mask-based search.
pub(crate) const MASK_BITS: usize = 64;

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Is `d` p-dominating in the graph with neighbourhood masks `nbr`?
pub(crate) fn dominates(nbr: &[u64], p: usize, d: u64) -> bool {
    let mut outside = full_mask(nbr.len()) & !d;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        if ((nbr[v] & d).count_ones() as usize) < p {
            return false;
        }
    }
    true
}

/// `η_p(V, X, G)`: total shortfall of the vertices outside `x`.
pub(crate) fn deficiency(nbr: &[u64], p: usize, x: u64) -> usize {
    let mut outside = full_mask(nbr.len()) & !x;
    let mut total = 0;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        total += p.saturating_sub((nbr[v] & x).count_ones() as usize);
    }
    total
}

/// All `k`-subsets of `pool` as masks, in lexicographic order of their
/// sorted member lists (given a sorted pool).
pub(crate) struct Combinations<'a> {
    pool: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    pub(crate) fn new(pool: &'a [usize], k: usize) -> Self {
        Combinations {
            pool,
            idx: (0..k).collect(),
            done: k > pool.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | (1 << self.pool[i]));
        let k = self.idx.len();
        let n = self.pool.len();
        match (0..k).rev().find(|&i| self.idx[i] < n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(mask)
    }
}
