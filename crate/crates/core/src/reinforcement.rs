//! The p-reinforcement number r_p: the fewest non-edges whose addition
//! lowers γ_p, or 0 when γ_p(G) <= p.
//!
//! Two independent routes are provided. [`r_p_by_definition`] searches edge
//! sets directly; [`r_p_by_eta`] evaluates η_p(G), which equals r_p(G)
//! whenever γ_p(G) >= p + 1.

use serde::Serialize;

use crate::deficiency::{eta_graph_with, EtaSearch, EtaWitness};
use crate::domination::{check_order, gamma_p_with, is_p_dominating};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{dominates, Combinations, Limits, MASK_BITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definition,
    Eta,
    Convention,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReinforcementResult {
    pub p: usize,
    pub value: usize,
    /// Non-edges `B` with γ_p(G + B) < γ_p(G); empty when `value == 0`.
    pub witness_edges: Vec<(usize, usize)>,
    pub method: Method,
    /// Whether `G + witness_edges` was checked to have a smaller γ_p.
    pub witness_verified: bool,
}

impl ReinforcementResult {
    fn convention(p: usize) -> Self {
        ReinforcementResult {
            p,
            value: 0,
            witness_edges: Vec::new(),
            method: Method::Convention,
            witness_verified: true,
        }
    }
}

/// One above the tree bound, so a violation of it is still visible.
pub fn default_budget(p: usize) -> usize {
    p + 2
}

pub fn r_p_by_definition(g: &Graph, p: usize, budget: usize) -> Result<ReinforcementResult> {
    r_p_by_definition_with(g, p, budget, &Limits::default())
}

/// Tries every set of `k` non-edges for `k = 1, 2, ..., budget`. A set
/// works when `G + B` has a p-dominating set of size γ_p(G) - 1.
pub fn r_p_by_definition_with(
    g: &Graph,
    p: usize,
    budget: usize,
    limits: &Limits,
) -> Result<ReinforcementResult> {
    check_order(p, 1)?;
    if budget == 0 {
        return Err(Error::Unsupported("budget must be at least 1".into()));
    }
    let n = g.order();
    let limit = limits.definition.min(MASK_BITS);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "r_p by definition",
            n,
            limit,
        });
    }
    let gamma = gamma_p_with(g, p, limits)?.value;
    if gamma <= p {
        return Ok(ReinforcementResult::convention(p));
    }
    let base = g.masks();
    let all: Vec<usize> = (0..n).collect();
    let candidates: Vec<u64> = Combinations::new(&all, gamma - 1).collect();
    let non_edges = g.complement_edges();
    let edge_ids: Vec<usize> = (0..non_edges.len()).collect();
    let mut nbr = base.clone();
    for k in 1..=budget.min(non_edges.len()) {
        for chosen in Combinations::new(&edge_ids, k) {
            nbr.copy_from_slice(&base);
            let mut bits = chosen;
            while bits != 0 {
                let (u, v) = non_edges[bits.trailing_zeros() as usize];
                bits &= bits - 1;
                nbr[u] |= 1 << v;
                nbr[v] |= 1 << u;
            }
            if candidates.iter().any(|&x| dominates(&nbr, p, x)) {
                let witness_edges = (0..non_edges.len())
                    .filter(|&i| chosen & (1 << i) != 0)
                    .map(|i| non_edges[i])
                    .collect();
                return Ok(ReinforcementResult {
                    p,
                    value: k,
                    witness_edges,
                    method: Method::Definition,
                    witness_verified: true,
                });
            }
        }
    }
    Err(Error::BudgetExhausted { budget })
}

pub fn r_p_by_eta(g: &Graph, p: usize) -> Result<ReinforcementResult> {
    r_p_by_eta_with(g, p, &Limits::default())
}

/// r_p(G) = η_p(G) for γ_p(G) >= p + 1. The witness joins every deficient
/// vertex to just enough members of the η-set.
pub fn r_p_by_eta_with(g: &Graph, p: usize, limits: &Limits) -> Result<ReinforcementResult> {
    check_order(p, 1)?;
    let gamma = gamma_p_with(g, p, limits)?.value;
    if gamma <= p {
        return Err(Error::BelowThreshold { p, gamma });
    }
    let eta = eta_graph_with(g, p, limits, EtaSearch::Restricted)?;
    let witness_edges = edges_from_eta(g, &eta);
    let witness_verified = witness_edges.len() == eta.total
        && g.with_edges(&witness_edges)
            .is_ok_and(|h| eta.x.len() < gamma && is_p_dominating(&h, p, &eta.x));
    Ok(ReinforcementResult {
        p,
        value: eta.total,
        witness_edges,
        method: Method::Eta,
        witness_verified,
    })
}

/// For each vertex short by `d`, edges to the `d` smallest members of the
/// η-set it is not yet adjacent to.
pub fn edges_from_eta(g: &Graph, eta: &EtaWitness) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(eta.total);
    for (v, &short) in eta.deficiencies.iter().enumerate() {
        let targets = eta.x.iter().filter(|&x| !g.has_edge(v, x)).take(short);
        edges.extend(targets.map(|x| (v.min(x), v.max(x))));
    }
    edges.sort_unstable();
    edges
}

pub fn r_p(g: &Graph, p: usize) -> Result<ReinforcementResult> {
    r_p_with(g, p, &Limits::default())
}

/// The convention when γ_p(G) <= p, the η route otherwise.
pub fn r_p_with(g: &Graph, p: usize, limits: &Limits) -> Result<ReinforcementResult> {
    check_order(p, 1)?;
    if gamma_p_with(g, p, limits)?.value <= p {
        return Ok(ReinforcementResult::convention(p));
    }
    r_p_by_eta_with(g, p, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::gamma_p;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn star(t: usize) -> Graph {
        let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
        Graph::from_edge_list(t + 1, &edges).unwrap()
    }

    #[test]
    fn p4_needs_one_edge() {
        let r = r_p_by_definition(&path(4), 2, default_budget(2)).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.method, Method::Definition);
        let h = path(4).with_edges(&r.witness_edges).unwrap();
        assert!(gamma_p(&h, 2).unwrap().value < 3);
    }

    #[test]
    fn star_conventions_and_pairs() {
        let r = r_p_by_definition(&star(3), 3, 5).unwrap();
        assert_eq!((r.value, r.method), (0, Method::Convention));
        assert_eq!(r_p_by_definition(&star(3), 2, 4).unwrap().value, 2);
        assert_eq!(r_p_by_eta(&star(3), 2).unwrap().value, 2);
        assert!(matches!(
            r_p_by_eta(&star(3), 3),
            Err(Error::BelowThreshold { p: 3, gamma: 3 })
        ));
    }

    #[test]
    fn p7_with_p3() {
        let r = r_p_by_eta(&path(7), 3).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.witness_verified);
    }

    #[test]
    fn single_vertex_is_zero() {
        for p in 1..4 {
            assert_eq!(r_p(&Graph::empty(1), p).unwrap().value, 0);
        }
    }

    #[test]
    fn budget_is_a_distinct_signal() {
        // r_2(K_{1,3}) = 2, so a budget of one edge runs out
        assert!(matches!(
            r_p_by_definition(&star(3), 2, 1),
            Err(Error::BudgetExhausted { budget: 1 })
        ));
    }
}
