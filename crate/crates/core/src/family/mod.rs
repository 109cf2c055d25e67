//! The extremal family 𝒯_p: block builders, the edge join, the four growth
//! operations with their tracked set `A`, and construction traces.
//!
//! Every member is grown from `T_0 = K_{1,p}` with `A(T_0)` its leaves. A
//! step attaches a block by an edge from the block's center to a vertex `y`
//! of the current tree; the block's vertices are appended after the existing
//! ids, center first.

mod recognize;

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::domination::{check_order, check_universe, private_neighbors, unique_gamma_set};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use recognize::{
    enumerate_members, recognize, recognize_exhaustive, recognize_exhaustive_with,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Op {
    /// Attach `K_{1,p-1}` at `y ∈ A`.
    O1,
    /// Attach `K_{1,p}` at `y ∉ A`.
    O2,
    /// Attach `F_{p-1}` at `y ∈ A` with enough p-private neighbours.
    O3,
    /// Attach `F_{t,p-1}`, `t >= p`, anywhere.
    O4,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub op: Op,
    pub y: usize,
    #[serde(default)]
    pub t: Option<usize>,
}

/// A replayable derivation of a member of 𝒯_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub p: usize,
    #[serde(rename = "ops")]
    pub steps: Vec<Step>,
}

impl ConstructionTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// `K_{1,t}`, `t` defaulting to `p`.
    Star,
    /// `S_t`: `K_{1,t}` with a pendant vertex on every leaf.
    Spider,
    /// `F_{p-1}`: a 3-vertex path whose ends carry `p - 1` leaves each.
    F,
    /// `F_{t,p-1}`: `S_t` whose ends carry `p - 1` leaves each.
    Ft,
    /// Two adjacent centers with `p` leaves each.
    DoubleStar,
}

impl std::str::FromStr for BlockKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(BlockKind::Star),
            "spider" => Ok(BlockKind::Spider),
            "F" | "f" => Ok(BlockKind::F),
            "Ft" | "ft" => Ok(BlockKind::Ft),
            "double_star" | "double-star" => Ok(BlockKind::DoubleStar),
            other => Err(Error::InvalidBlock(format!("unknown block kind `{other}`"))),
        }
    }
}

/// A tree together with a tracked vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub tree: Graph,
    pub a: VertexSet,
}

struct Builder {
    edges: Vec<(usize, usize)>,
    n: usize,
}

impl Builder {
    fn new() -> Self {
        Builder {
            edges: Vec::new(),
            n: 1,
        }
    }

    fn attach(&mut self, parent: usize) -> usize {
        let v = self.n;
        self.n += 1;
        self.edges.push((parent, v));
        v
    }

    fn leaves(&mut self, parent: usize, count: usize) -> Vec<usize> {
        (0..count).map(|_| self.attach(parent)).collect()
    }

    fn finish(self, a: impl IntoIterator<Item = usize>) -> Member {
        let tree = Graph::from_edge_list(self.n, &self.edges).expect("builder edges are valid");
        let a = VertexSet::from_members(self.n, a).expect("builder ids are in range");
        Member { tree, a }
    }
}

/// Builds a block with vertex 0 as its center, together with its canonical
/// set: the leaves for a star, the center and leaves for `F_{p-1}`, the
/// middle vertices and leaves for `F_{t,p-1}`, and the unique minimum
/// p-dominating set for spiders and double stars.
pub fn build_block(kind: BlockKind, p: usize, t: Option<usize>) -> Result<Member> {
    check_order(p, 1)?;
    let mut b = Builder::new();
    match kind {
        BlockKind::Star => {
            let leaves = b.leaves(0, t.unwrap_or(p));
            Ok(b.finish(leaves))
        }
        BlockKind::Spider => {
            let t = t.ok_or_else(|| Error::InvalidBlock("spider needs t".into()))?;
            for _ in 0..t {
                let m = b.attach(0);
                b.attach(m);
            }
            computed(b.finish([]), p)
        }
        BlockKind::F => {
            if p < 2 {
                return Err(Error::InvalidBlock("F_{p-1} needs p >= 2".into()));
            }
            let mut a = vec![0];
            for _ in 0..2 {
                let end = b.attach(0);
                a.extend(b.leaves(end, p - 1));
            }
            Ok(b.finish(a))
        }
        BlockKind::Ft => {
            let t = t.ok_or_else(|| Error::InvalidBlock("F_{t,p-1} needs t".into()))?;
            if t < p {
                return Err(Error::InvalidBlock(format!(
                    "F_{{t,p-1}} needs t >= p, got t = {t}, p = {p}"
                )));
            }
            if p < 2 {
                return Err(Error::InvalidBlock("F_{t,p-1} needs p >= 2".into()));
            }
            let mut a = Vec::new();
            for _ in 0..t {
                let m = b.attach(0);
                let end = b.attach(m);
                a.push(m);
                a.extend(b.leaves(end, p - 1));
            }
            Ok(b.finish(a))
        }
        BlockKind::DoubleStar => {
            b.leaves(0, p);
            let other = b.attach(0);
            b.leaves(other, p);
            computed(b.finish([]), p)
        }
    }
}

fn computed(block: Member, p: usize) -> Result<Member> {
    let a = unique_gamma_set(&block.tree, p).map_err(|e| match e {
        Error::NotUnique(_) => {
            Error::InvalidBlock(format!("block has no unique minimum {p}-dominating set"))
        }
        other => other,
    })?;
    Ok(Member {
        tree: block.tree,
        a,
    })
}

/// `G ⊎_{xy} H`: the disjoint union with `H` shifted by `|V(G)|`, plus the
/// edge `x (y + |V(G)|)`.
pub fn join_with_edge(g: &Graph, x: usize, h: &Graph, y: usize) -> Result<Graph> {
    let shift = g.order();
    if x >= shift {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: shift,
        });
    }
    if y >= h.order() {
        return Err(Error::VertexOutOfRange {
            vertex: y,
            n: h.order(),
        });
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (u + shift, v + shift)));
    edges.push((x, y + shift));
    Graph::from_edge_list(shift + h.order(), &edges)
}

/// `T_0 = K_{1,p}` with `A` its leaves.
pub fn initial_member(p: usize) -> Result<Member> {
    check_order(p, 1)?;
    build_block(BlockKind::Star, p, None)
}

fn reject(op: Op, condition: impl Into<String>) -> Error {
    Error::Precondition {
        op,
        condition: condition.into(),
    }
}

/// Checks the precondition of `op` at `y` and returns the block to attach.
fn block_for(
    tree: &Graph,
    a: &VertexSet,
    p: usize,
    op: Op,
    y: usize,
    t: Option<usize>,
) -> Result<Member> {
    check_order(p, 3)?;
    check_universe(tree, a)?;
    if y >= tree.order() {
        return Err(Error::VertexOutOfRange {
            vertex: y,
            n: tree.order(),
        });
    }
    if op != Op::O4 && t.is_some() {
        return Err(reject(op, "t is only used by O4"));
    }
    match op {
        Op::O1 | Op::O3 if !a.contains(y) => Err(reject(op, format!("y = {y} is not in A"))),
        Op::O1 => build_block(BlockKind::Star, p, Some(p - 1)),
        Op::O2 if a.contains(y) => Err(reject(op, format!("y = {y} is in A"))),
        Op::O2 => build_block(BlockKind::Star, p, None),
        Op::O3 => {
            let private = private_neighbors(tree, p, a, y)?.len();
            let needed = (p + 1).min(a.count_neighbors(tree, y) + 2);
            if private < needed {
                return Err(reject(
                    op,
                    format!("|PN_p(y, A)| = {private} < {needed} at y = {y}"),
                ));
            }
            build_block(BlockKind::F, p, None)
        }
        Op::O4 => match t {
            None => Err(reject(op, "t is required")),
            Some(t) if t < p => Err(reject(op, format!("t = {t} < p = {p}"))),
            Some(t) => build_block(BlockKind::Ft, p, Some(t)),
        },
    }
}

/// One growth step: attaches the block of `op` at `y` and extends `A` by the
/// block's canonical set.
pub fn apply_operation(
    tree: &Graph,
    a: &VertexSet,
    p: usize,
    op: Op,
    y: usize,
    t: Option<usize>,
) -> Result<Member> {
    let block = block_for(tree, a, p, op, y, t)?;
    let shift = tree.order();
    let grown = join_with_edge(tree, y, &block.tree, 0)?;
    let mut new_a = a.widened(grown.order());
    for v in block.a.iter() {
        new_a.insert(v + shift);
    }
    Ok(Member {
        tree: grown,
        a: new_a,
    })
}

/// Replays a trace from `K_{1,p}`; a failing step is reported with its index.
pub fn replay_trace(trace: &ConstructionTrace) -> Result<Member> {
    check_order(trace.p, 3)?;
    if trace.steps.is_empty() {
        return Err(Error::MalformedTrace(
            "a member needs at least one step".into(),
        ));
    }
    let mut m = initial_member(trace.p)?;
    for (index, s) in trace.steps.iter().enumerate() {
        m = apply_operation(&m.tree, &m.a, trace.p, s.op, s.y, s.t).map_err(|e| {
            Error::ReplayStep {
                index,
                source: Box::new(e),
            }
        })?;
    }
    Ok(m)
}

/// Every step whose precondition holds on `m`, with O4's `t` in `p..=t_max`,
/// ordered by `y`, then operation, then `t`.
pub fn applicable_steps(m: &Member, p: usize, t_max: usize) -> Result<Vec<Step>> {
    check_order(p, 3)?;
    let mut out = Vec::new();
    for y in 0..m.tree.order() {
        for op in [Op::O1, Op::O2, Op::O3] {
            if block_for(&m.tree, &m.a, p, op, y, None).is_ok() {
                out.push(Step { op, y, t: None });
            }
        }
        out.extend((p..=t_max).map(|t| Step {
            op: Op::O4,
            y,
            t: Some(t),
        }));
    }
    Ok(out)
}

/// Largest `t` [`generate_member`] uses for O4.
pub fn default_t_max(p: usize) -> usize {
    p + 2
}

/// Samples a member with `ops` steps. At each step the next move is drawn
/// uniformly from [`applicable_steps`]; the result depends only on `seed`.
pub fn generate_member(p: usize, ops: usize, seed: u64) -> Result<(Member, ConstructionTrace)> {
    generate_member_with(p, ops, seed, default_t_max(p))
}

pub fn generate_member_with(
    p: usize,
    ops: usize,
    seed: u64,
    t_max: usize,
) -> Result<(Member, ConstructionTrace)> {
    check_order(p, 3)?;
    if ops == 0 {
        return Err(Error::MalformedTrace(
            "a member needs at least one step".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = initial_member(p)?;
    let mut steps = Vec::with_capacity(ops);
    for _ in 0..ops {
        let choices = applicable_steps(&m, p, t_max.max(p))?;
        let s = *choices.choose(&mut rng).expect("O2 or O4 always applies");
        m = apply_operation(&m.tree, &m.a, p, s.op, s.y, s.t)?;
        steps.push(s);
    }
    Ok((m, ConstructionTrace { p, steps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::domination::gamma_p;

    #[test]
    fn block_sizes() {
        let f = build_block(BlockKind::F, 3, None).unwrap();
        assert_eq!((f.tree.order(), f.a.len()), (7, 5));
        assert!(f.a.contains(0));
        let ft = build_block(BlockKind::Ft, 3, Some(3)).unwrap();
        assert_eq!((ft.tree.order(), ft.a.len()), (13, 9));
        let star = build_block(BlockKind::Star, 3, None).unwrap();
        assert_eq!(star.a.to_vec(), vec![1, 2, 3]);
        let ds = build_block(BlockKind::DoubleStar, 3, None).unwrap();
        assert_eq!((ds.tree.order(), ds.a.len()), (8, 6));
        assert!(build_block(BlockKind::Ft, 3, Some(2)).is_err());
    }

    #[test]
    fn canonical_sets_are_minimum() {
        for p in 3..6 {
            let f = build_block(BlockKind::F, p, None).unwrap();
            assert_eq!(unique_gamma_set(&f.tree, p).unwrap(), f.a);
            for t in p..p + 2 {
                let ft = build_block(BlockKind::Ft, p, Some(t)).unwrap();
                assert_eq!(unique_gamma_set(&ft.tree, p).unwrap(), ft.a);
            }
        }
    }

    #[test]
    fn join_counts() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let p4 = join_with_edge(&p2, 1, &p2, 0).unwrap();
        assert_eq!((p4.order(), p4.size()), (4, 3));
        assert!(p4.has_edge(1, 2));
        let k12 = Graph::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        let ds = join_with_edge(&k12, 0, &k12, 0).unwrap();
        assert_eq!(ds.degree(0), 3);
        assert_eq!(ds.degree(3), 3);
    }

    #[test]
    fn first_steps() {
        let t0 = initial_member(3).unwrap();
        let o1 = apply_operation(&t0.tree, &t0.a, 3, Op::O1, 1, None).unwrap();
        let f = build_block(BlockKind::F, 3, None).unwrap();
        assert_eq!(
            canonical_code(&o1.tree).unwrap(),
            canonical_code(&f.tree).unwrap()
        );
        assert_eq!(o1.a.len(), 5);
        let o2 = apply_operation(&t0.tree, &t0.a, 3, Op::O2, 0, None).unwrap();
        assert_eq!((o2.tree.order(), o2.a.len()), (8, 6));
        let err = apply_operation(&t0.tree, &t0.a, 3, Op::O1, 0, None).unwrap_err();
        assert!(matches!(err, Error::Precondition { op: Op::O1, .. }));
    }

    #[test]
    fn trace_json_round_trip() {
        let trace = ConstructionTrace {
            p: 3,
            steps: vec![
                Step {
                    op: Op::O1,
                    y: 1,
                    t: None,
                },
                Step {
                    op: Op::O4,
                    y: 0,
                    t: Some(3),
                },
            ],
        };
        let text = trace.to_json();
        assert_eq!(
            text,
            r#"{"p":3,"ops":[{"op":"O1","y":1,"t":null},{"op":"O4","y":0,"t":3}]}"#
        );
        assert_eq!(ConstructionTrace::from_json(&text).unwrap(), trace);
        let m = replay_trace(&trace).unwrap();
        assert_eq!(m.tree.order(), 4 + 3 + 13);
        assert_eq!(gamma_p(&m.tree, 3).unwrap().value, m.a.len());
    }

    #[test]
    fn empty_and_bad_traces() {
        let empty = ConstructionTrace {
            p: 3,
            steps: vec![],
        };
        assert!(matches!(
            replay_trace(&empty),
            Err(Error::MalformedTrace(_))
        ));
        let bad = ConstructionTrace {
            p: 3,
            steps: vec![
                Step {
                    op: Op::O2,
                    y: 0,
                    t: None,
                },
                Step {
                    op: Op::O2,
                    y: 1,
                    t: None,
                },
            ],
        };
        assert!(matches!(
            replay_trace(&bad),
            Err(Error::ReplayStep { index: 1, .. })
        ));
    }

    #[test]
    fn generation_is_deterministic() {
        let (a, ta) = generate_member(3, 4, 11).unwrap();
        let (b, tb) = generate_member(3, 4, 11).unwrap();
        assert_eq!(ta, tb);
        assert_eq!(a, b);
        assert_eq!(replay_trace(&ta).unwrap(), a);
    }
}
