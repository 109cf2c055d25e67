//! Exact η_p on trees: the least total shortfall over sets of a fixed size.
//!
//! Each vertex keeps, for every size `s` of `X` inside its subtree, the best
//! cost when it is in `X`, and when it is outside `X` with `j` children in
//! `X` (`j` capped at `p`). A vertex outside `X` is charged once its parent's
//! status is known.

use crate::domination::Constraint;
use crate::graph::{Graph, RootedView};

const INF: u32 = u32::MAX / 4;

pub(crate) struct EtaDp {
    view: RootedView,
    p: usize,
    n: usize,
    k: usize,
}

fn knap(a: &[u32], b: &[u32], k: usize) -> Vec<u32> {
    let mut out = vec![INF; k + 1];
    for (s1, &x) in a.iter().enumerate().filter(|(_, &x)| x < INF) {
        for (s2, &y) in b
            .iter()
            .enumerate()
            .take(k + 1 - s1)
            .filter(|(_, &y)| y < INF)
        {
            out[s1 + s2] = out[s1 + s2].min(x + y);
        }
    }
    out
}

impl EtaDp {
    pub(crate) fn new(tree: &Graph, p: usize, k: usize) -> Self {
        let view = RootedView::new(tree, 0).expect("caller checked tree");
        EtaDp {
            view,
            p,
            n: tree.order(),
            k,
        }
    }

    fn short(&self, j: usize, parent_in: bool) -> u32 {
        self.p.saturating_sub(j + usize::from(parent_in)) as u32
    }

    /// Least η_p(V, X, T) over `|X| = k` respecting `constraints`.
    pub(crate) fn solve(&self, constraints: &[Constraint]) -> Option<usize> {
        let (p, k) = (self.p, self.k);
        let mut inn = vec![Vec::new(); self.n];
        let mut out = vec![Vec::new(); self.n];
        for &v in self.view.top_down().iter().rev() {
            let mut in_v = vec![INF; k + 1];
            if k >= 1 {
                in_v[1] = 0;
            }
            let mut out_v = vec![vec![INF; k + 1]; p + 1];
            out_v[0][0] = 0;
            for &c in self.view.children(v) {
                let child_in: &Vec<u32> = &inn[c];
                let child_out: &Vec<Vec<u32>> = &out[c];
                let settled = |parent_in: bool| -> Vec<u32> {
                    (0..=k)
                        .map(|s| {
                            (0..=p)
                                .map(|j| child_out[j][s].saturating_add(self.short(j, parent_in)))
                                .min()
                                .unwrap_or(INF)
                                .min(INF)
                        })
                        .collect()
                };
                let below_in: Vec<u32> = child_in
                    .iter()
                    .zip(settled(true))
                    .map(|(&a, b)| a.min(b))
                    .collect();
                in_v = knap(&in_v, &below_in, k);
                let below_out = settled(false);
                let mut next = vec![vec![INF; k + 1]; p + 1];
                for (j, row) in out_v.iter().enumerate() {
                    let with_child = knap(row, child_in, k);
                    let without = knap(row, &below_out, k);
                    let jj = (j + 1).min(p);
                    for s in 0..=k {
                        next[jj][s] = next[jj][s].min(with_child[s]);
                        next[j][s] = next[j][s].min(without[s]);
                    }
                }
                out_v = next;
            }
            match constraints[v] {
                Constraint::In => out_v.iter_mut().for_each(|row| row.fill(INF)),
                Constraint::Out => in_v.fill(INF),
                Constraint::Free => {}
            }
            inn[v] = in_v;
            out[v] = out_v;
        }
        let root = self.view.root();
        let best = (0..=p)
            .map(|j| out[root][j][k].saturating_add(self.short(j, false)))
            .fold(inn[root][k], u32::min);
        (best < INF).then_some(best as usize)
    }

    /// The lexicographically smallest minimiser, by fixing vertices in
    /// increasing order.
    pub(crate) fn smallest_witness(&self, value: usize) -> Vec<bool> {
        let mut constraints = vec![Constraint::Free; self.n];
        for v in 0..self.n {
            constraints[v] = Constraint::In;
            if self.solve(&constraints) != Some(value) {
                constraints[v] = Constraint::Out;
            }
        }
        constraints.iter().map(|&c| c == Constraint::In).collect()
    }
}
