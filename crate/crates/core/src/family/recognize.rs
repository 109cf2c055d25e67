//! Deciding membership in 𝒯_p.
//!
//! [`recognize`] peels blocks off a tree one at a time, always at the deepest
//! point of the tree hung from a leaf, using the unique minimum p-dominating
//! set to decide which operation to undo. [`recognize_exhaustive`] instead
//! grows every member up to the target order and compares; it is slow but
//! makes no structural assumptions, and serves as the oracle for the former.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::{
    applicable_steps, apply_operation, initial_member, replay_trace, ConstructionTrace, Member, Op,
    Step,
};
use crate::canon::{canonical_code, canonical_code_colored};
use crate::deficiency::mu_point;
use crate::domination::{gamma_p_tree, private_neighbors};
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedView, VertexSet};
use crate::search::Limits;

fn check_p(p: usize) -> Result<()> {
    if p < 3 {
        return Err(Error::Unsupported(format!(
            "family recognition is only defined for p >= 3, got p = {p}"
        )));
    }
    Ok(())
}

/// One undone operation, in original vertex ids. `block` lists the removed
/// vertices in builder order, center first.
struct Peel {
    op: Op,
    y: usize,
    t: Option<usize>,
    block: Vec<usize>,
}

/// A construction trace for `tree`, or `None` when it is not in 𝒯_p. The
/// trace is replayed and compared against `tree` before it is returned.
pub fn recognize(tree: &Graph, p: usize) -> Result<Option<ConstructionTrace>> {
    check_p(p)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let cert = gamma_p_tree(tree, p)?;
    if !cert.unique {
        return Ok(None);
    }
    let d = cert.witness;
    let mut alive = VertexSet::full(tree.order());
    let mut peels = Vec::new();
    let star = loop {
        let (g, ids) = tree.induced(&alive);
        let local_d =
            VertexSet::from_members(g.order(), (0..g.order()).filter(|&i| d.contains(ids[i])))
                .expect("local ids are in range");
        if g.order() == p + 1 {
            if let Some(c) = (0..g.order()).find(|&v| g.degree(v) == p) {
                let leaves = g.neighbors(c).iter().map(|&l| ids[l]);
                break std::iter::once(ids[c]).chain(leaves).collect::<Vec<_>>();
            }
        }
        let Some(peel) = next_peel(&g, p, &local_d)? else {
            return Ok(None);
        };
        let peel = Peel {
            y: ids[peel.y],
            block: peel.block.iter().map(|&v| ids[v]).collect(),
            ..peel
        };
        for &v in &peel.block {
            alive.remove(v);
        }
        peels.push(peel);
    };
    if peels.is_empty() {
        return Ok(None);
    }
    let mut replay_id = vec![usize::MAX; tree.order()];
    for (i, &v) in star.iter().enumerate() {
        replay_id[v] = i;
    }
    let mut next = star.len();
    let mut steps = Vec::with_capacity(peels.len());
    for peel in peels.iter().rev() {
        steps.push(Step {
            op: peel.op,
            y: replay_id[peel.y],
            t: peel.t,
        });
        for &v in &peel.block {
            replay_id[v] = next;
            next += 1;
        }
    }
    let trace = ConstructionTrace { p, steps };
    let rebuilt = match replay_trace(&trace) {
        Ok(m) => m,
        Err(_) => return Ok(None),
    };
    Ok((canonical_code(&rebuilt.tree)? == canonical_code(tree)?).then_some(trace))
}

/// Finds the block to peel next, in the local ids of `g`.
fn next_peel(g: &Graph, p: usize, d: &VertexSet) -> Result<Option<Peel>> {
    let Some(root) = g.leaves().next() else {
        return Ok(None);
    };
    let view = RootedView::new(g, root)?;
    let h = view.heights();
    let v1: Vec<usize> = (0..g.order()).filter(|&v| h[v] == 1 && v != root).collect();
    if let Some(&x) = v1.iter().find(|&&x| g.degree(x) == p + 1) {
        let block = std::iter::once(x)
            .chain(view.children(x).iter().copied())
            .collect();
        let y = view.parent(x).expect("x is not the root");
        return Ok(Some(Peel {
            op: Op::O2,
            y,
            t: None,
            block,
        }));
    }
    if v1.iter().any(|&x| g.degree(x) != p) {
        return Ok(None);
    }
    // the path x-w-v-u with deg(w) largest, ties to the smallest tuple
    let mut best: Option<(usize, [usize; 4])> = None;
    for x in (0..g.order()).filter(|&x| h[x] == 3) {
        for &w in view.children(x).iter().filter(|&&w| h[w] == 2) {
            for &v in view.children(w).iter().filter(|&&v| h[v] == 1) {
                let u = view.children(v)[0];
                let better = match best {
                    None => true,
                    Some((deg, path)) => {
                        g.degree(w) > deg || (g.degree(w) == deg && [x, w, v, u] < path)
                    }
                };
                if better {
                    best = Some((g.degree(w), [x, w, v, u]));
                }
            }
        }
    }
    let Some((_, [x, w, v, _])) = best else {
        return Ok(None);
    };
    if !d.contains(w) {
        return Ok(None);
    }
    let mu = mu_point(g, p, d, w)?;
    let cw = view.children(w);
    if mu >= p + 2 {
        let block = std::iter::once(v)
            .chain(view.children(v).iter().copied())
            .collect();
        return Ok(Some(Peel {
            op: Op::O1,
            y: w,
            t: None,
            block,
        }));
    }
    if mu != p + 1 {
        return Ok(None);
    }
    if cw.len() == 2 && d.contains(x) {
        let mut block = vec![w];
        for &c in cw {
            if h[c] != 1 || view.children(c).len() != p - 1 {
                return Ok(None);
            }
            block.push(c);
            block.extend_from_slice(view.children(c));
        }
        return Ok(Some(Peel {
            op: Op::O3,
            y: x,
            t: None,
            block,
        }));
    }
    if cw.len() == 1 && !d.contains(x) && !private_neighbors(g, p, d, w)?.contains(x) {
        let Some(y) = view.parent(x) else {
            return Ok(None);
        };
        let mut block = vec![x];
        for &m in view.children(x) {
            let [end] = view.children(m) else {
                return Ok(None);
            };
            let leaves = view.children(*end);
            if leaves.len() != p - 1 || leaves.iter().any(|&l| g.degree(l) != 1) {
                return Ok(None);
            }
            block.extend([m, *end]);
            block.extend_from_slice(leaves);
        }
        let t = view.children(x).len();
        if t < p {
            return Ok(None);
        }
        return Ok(Some(Peel {
            op: Op::O4,
            y,
            t: Some(t),
            block,
        }));
    }
    Ok(None)
}

fn block_order(op: Op, p: usize, t: Option<usize>) -> usize {
    match op {
        Op::O1 => p,
        Op::O2 => p + 1,
        Op::O3 => 2 * p + 1,
        Op::O4 => 1 + t.unwrap_or(p) * (p + 1),
    }
}

fn colors(m: &Member) -> Vec<u8> {
    (0..m.tree.order())
        .map(|v| u8::from(m.a.contains(v)))
        .collect()
}

/// Grows every pair `(T, A)` reachable from `K_{1,p}` while the order stays
/// at most `n_max`, merging pairs that are isomorphic with `A` preserved.
/// `visit` sees each new pair with the trace that first reached it and may
/// stop the search by returning `Some`.
fn grow<R>(
    p: usize,
    n_max: usize,
    mut visit: impl FnMut(&Member, &ConstructionTrace) -> Result<Option<R>>,
) -> Result<Option<R>> {
    let start = initial_member(p)?;
    let mut seen = HashSet::new();
    seen.insert(canonical_code_colored(&start.tree, &colors(&start))?);
    let mut queue = VecDeque::from([(start, Vec::<Step>::new())]);
    while let Some((m, steps)) = queue.pop_front() {
        let room = n_max.saturating_sub(m.tree.order());
        let t_max = (room.saturating_sub(1) / (p + 1)).max(p);
        for s in applicable_steps(&m, p, t_max)? {
            if block_order(s.op, p, s.t) > room {
                continue;
            }
            let next = apply_operation(&m.tree, &m.a, p, s.op, s.y, s.t)?;
            if !seen.insert(canonical_code_colored(&next.tree, &colors(&next))?) {
                continue;
            }
            let mut next_steps = steps.clone();
            next_steps.push(s);
            let trace = ConstructionTrace {
                p,
                steps: next_steps,
            };
            if let Some(r) = visit(&next, &trace)? {
                return Ok(Some(r));
            }
            if next.tree.order() < n_max {
                queue.push_back((next, trace.steps));
            }
        }
    }
    Ok(None)
}

pub fn recognize_exhaustive(tree: &Graph, p: usize) -> Result<Option<ConstructionTrace>> {
    recognize_exhaustive_with(tree, p, &Limits::default())
}

/// Membership by growing all members of the same order.
pub fn recognize_exhaustive_with(
    tree: &Graph,
    p: usize,
    limits: &Limits,
) -> Result<Option<ConstructionTrace>> {
    check_p(p)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let n = tree.order();
    if n > limits.exhaustive_recognize {
        return Err(Error::GuardExceeded {
            what: "exhaustive family recognition",
            n,
            limit: limits.exhaustive_recognize,
        });
    }
    let target = canonical_code(tree)?;
    grow(p, n, |m, trace| {
        let hit = m.tree.order() == n && canonical_code(&m.tree)? == target;
        Ok(hit.then(|| trace.clone()))
    })
}

/// All members of 𝒯_p with at most `n_max` vertices, one per isomorphism
/// class, keyed by canonical code, each with one trace.
pub fn enumerate_members(
    p: usize,
    n_max: usize,
) -> Result<BTreeMap<Vec<u8>, (Graph, ConstructionTrace)>> {
    check_p(p)?;
    let mut out = BTreeMap::new();
    grow::<()>(p, n_max, |m, trace| {
        out.entry(canonical_code(&m.tree)?)
            .or_insert_with(|| (m.tree.clone(), trace.clone()));
        Ok(None)
    })?;
    Ok(out)
}
