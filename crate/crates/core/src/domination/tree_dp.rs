//! Exact γ_p on trees by dynamic programming over a rooted view.
//!
//! Every vertex keeps the best cost (and number of optimal solutions) of its
//! subtree for the states "in D" and "not in D with `k` children in D",
//! where `k` is capped at `p`.

use crate::graph::{Graph, RootedView};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Constraint {
    Free,
    In,
    Out,
}

const INF: u32 = u32::MAX / 4;

#[derive(Debug, Clone, Copy)]
struct Best {
    cost: u32,
    ways: u64,
}

impl Best {
    const NONE: Best = Best { cost: INF, ways: 0 };

    fn unit(cost: u32) -> Best {
        Best { cost, ways: 1 }
    }

    fn then(self, other: Best) -> Best {
        if self.cost >= INF || other.cost >= INF {
            return Best::NONE;
        }
        Best {
            cost: self.cost + other.cost,
            ways: self.ways.saturating_mul(other.ways),
        }
    }

    fn or(self, other: Best) -> Best {
        match self.cost.cmp(&other.cost) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => Best {
                cost: self.cost,
                ways: self.ways.saturating_add(other.ways),
            },
        }
    }
}

pub(crate) struct TreeDp {
    view: RootedView,
    p: usize,
    n: usize,
}

impl TreeDp {
    pub(crate) fn new(tree: &Graph, p: usize) -> Self {
        let view = RootedView::new(tree, 0).expect("caller checked tree");
        TreeDp {
            view,
            p,
            n: tree.order(),
        }
    }

    /// Minimum size of a p-dominating set respecting `constraints`, with the
    /// (saturating) number of such sets. `None` when infeasible.
    pub(crate) fn solve(&self, constraints: &[Constraint]) -> Option<(usize, u64)> {
        let p = self.p;
        let mut inn = vec![Best::NONE; self.n];
        let mut out = vec![vec![Best::NONE; p + 1]; self.n];
        for &v in self.view.top_down().iter().rev() {
            let mut in_v = Best::unit(1);
            let mut out_v = vec![Best::NONE; p + 1];
            out_v[0] = Best::unit(0);
            for &c in self.view.children(v) {
                let child_in = inn[c];
                // child outside D: satisfied with v in D needs k >= p - 1,
                // without v needs k >= p
                let with_parent = out[c][p.saturating_sub(1)..]
                    .iter()
                    .fold(Best::NONE, |acc, &b| acc.or(b));
                let without_parent = out[c][p];
                in_v = in_v.then(child_in.or(with_parent));
                let mut next = vec![Best::NONE; p + 1];
                for k in 0..=p {
                    if out_v[k].cost >= INF {
                        continue;
                    }
                    let kk = (k + 1).min(p);
                    next[kk] = next[kk].or(out_v[k].then(child_in));
                    next[k] = next[k].or(out_v[k].then(without_parent));
                }
                out_v = next;
            }
            match constraints[v] {
                Constraint::In => out_v.iter_mut().for_each(|b| *b = Best::NONE),
                Constraint::Out => in_v = Best::NONE,
                Constraint::Free => {}
            }
            inn[v] = in_v;
            out[v] = out_v;
        }
        let root = self.view.root();
        let best = inn[root].or(out[root][p]);
        (best.cost < INF).then_some((best.cost as usize, best.ways))
    }

    /// The lexicographically smallest minimum p-dominating set, by fixing
    /// vertices greedily in increasing order.
    pub(crate) fn smallest_witness(&self, value: usize) -> Vec<bool> {
        let mut constraints = vec![Constraint::Free; self.n];
        for v in 0..self.n {
            constraints[v] = Constraint::In;
            let keep = matches!(self.solve(&constraints), Some((c, _)) if c == value);
            if !keep {
                constraints[v] = Constraint::Out;
            }
        }
        constraints.iter().map(|&c| c == Constraint::In).collect()
    }
}
