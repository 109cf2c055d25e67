//! Simple undirected graphs over dense vertex ids, fixed-universe vertex
//! sets, and rooted views of trees.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted, so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a validated simple graph. Edge order does not matter.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_new_edge(u, v)?;
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edges += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        for (u, list) in g.adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(g)
    }

    fn check_new_edge(&self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// A copy of `self` with the extra edges `extra` added (`G + B`).
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in extra {
            g.check_new_edge(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            let pos = g.adj[u].binary_search(&v).unwrap_err();
            g.adj[u].insert(pos, v);
            let pos = g.adj[v].binary_search(&u).unwrap_err();
            g.adj[v].insert(pos, u);
            g.edges += 1;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(|&v| self.degree(v) == 1)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// True iff the graph is connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edges + 1 == self.order() && self.is_connected()
    }

    /// Vertex set of the component of `G - x` containing `y`, for an edge `xy`.
    pub fn component_of(&self, x: usize, y: usize) -> Result<VertexSet> {
        if !self.has_edge(x, y) {
            return Err(Error::NotAnEdge(x, y));
        }
        let mut set = VertexSet::new(self.order());
        set.insert(y);
        let mut stack = vec![y];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if w != x && !set.contains(w) {
                    set.insert(w);
                    stack.push(w);
                }
            }
        }
        Ok(set)
    }

    /// Every pair of non-adjacent vertices, once, in lexicographic order.
    pub fn complement_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            let mut nbrs = self.adj[u].iter().peekable();
            for v in u + 1..n {
                while nbrs.next_if(|&&w| w < v).is_some() {}
                if nbrs.peek() != Some(&&v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `keep`, relabelled densely in increasing id
    /// order. Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(old_ids.len());
        for (i, &v) in old_ids.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    g.adj[i].push(new_id[w]);
                }
            }
            g.adj[i].sort_unstable();
        }
        g.edges = g.adj.iter().map(Vec::len).sum::<usize>() / 2;
        (g, old_ids)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.order(), &edges).expect("relabel of a valid graph")
    }

    /// Neighbourhood bitmasks, for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }
}

/// A subset of `0..universe` with constant-time membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set, rejecting members outside the universe.
    pub fn from_members(universe: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::new(universe);
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_mask(universe: usize, mask: u64) -> Self {
        let mut s = Self::new(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    pub(crate) fn to_mask(&self) -> u64 {
        debug_assert!(self.universe <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let universe = self.universe.max(other.universe);
        let mut s = VertexSet::new(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0);
        }
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Number of neighbours of `v` in this set.
    pub fn count_neighbors(&self, g: &Graph, v: usize) -> usize {
        g.neighbors(v).iter().filter(|&&w| self.contains(w)).count()
    }

    /// Re-embeds the set into a larger universe.
    pub fn widened(&self, universe: usize) -> VertexSet {
        assert!(universe >= self.universe);
        let mut s = VertexSet::new(universe);
        s.words[..self.words.len()].copy_from_slice(&self.words);
        s
    }
}

/// Sets compare by their sorted member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A tree hung from a root: parents, children, and a top-down order.
#[derive(Debug, Clone)]
pub struct RootedView {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl RootedView {
    pub fn new(tree: &Graph, root: usize) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        let n = tree.order();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in tree.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
        Ok(RootedView {
            root,
            parent,
            children,
            order,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// `C(v)`, sorted.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Breadth-first order from the root; parents precede children.
    pub fn top_down(&self) -> &[usize] {
        &self.order
    }

    /// `D[v]`: `v` together with all of its descendants.
    pub fn closed_descendants(&self, v: usize) -> VertexSet {
        let mut set = VertexSet::new(self.parent.len());
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            set.insert(u);
            stack.extend_from_slice(&self.children[u]);
        }
        set
    }

    /// For every vertex, the largest distance to a vertex of `D[v]`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.parent.len()];
        for &u in self.order.iter().rev() {
            if let Some(p) = self.parent[u] {
                h[p] = h[p].max(h[u] + 1);
            }
        }
        h
    }
}
