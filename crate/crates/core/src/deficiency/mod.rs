//! The deficiency functional η_p and the private-neighbour functional μ_p.
//!
//! For a candidate set `X`, a vertex outside `X` with fewer than `p`
//! neighbours in `X` is short by `p - |N(x) ∩ X|`; η_p sums the shortfalls.
//! η_p(G) minimises that sum over all `X` smaller than γ_p(G). Adding a
//! vertex to `X` never raises any shortfall, so the default search only
//! looks at `|X| = γ_p(G) - 1`; the unrestricted search is kept to test
//! that reduction. Trees use an exact dynamic program over sets of size
//! γ_p(T) - 1; the exhaustive search stays available as its oracle.
//!
//! μ_p(x, X, G) = |PN_p(x, X, G)| + max(0, p - |N(x) ∩ X|), minimised over
//! `x ∈ X` and then over all minimum p-dominating sets `X`.

mod tree_dp;

use serde::Serialize;

use crate::domination::{
    all_minimum_p_dominating_sets_with, check_order, check_universe, gamma_p_with,
    private_neighbors,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::{deficiency, full_mask, Combinations, Limits, MASK_BITS};

/// Shortfall of a single vertex with respect to `x_set`.
pub fn eta_point(g: &Graph, p: usize, x_set: &VertexSet, v: usize) -> usize {
    if x_set.contains(v) {
        0
    } else {
        p.saturating_sub(x_set.count_neighbors(g, v))
    }
}

/// `η_p(S, X, G)`: summed shortfall over the vertices of `s`.
pub fn eta_local(g: &Graph, p: usize, x_set: &VertexSet, s: &VertexSet) -> usize {
    s.iter().map(|v| eta_point(g, p, x_set, v)).sum()
}

/// `η_p(V, X, G)`.
pub fn eta_total(g: &Graph, p: usize, x_set: &VertexSet) -> usize {
    (0..g.order()).map(|v| eta_point(g, p, x_set, v)).sum()
}

/// A minimising set for η_p(G) with its per-vertex shortfalls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaWitness {
    pub p: usize,
    pub x: VertexSet,
    pub deficiencies: Vec<usize>,
    pub total: usize,
}

impl EtaWitness {
    fn new(g: &Graph, p: usize, x: VertexSet) -> Self {
        let deficiencies: Vec<usize> = (0..g.order()).map(|v| eta_point(g, p, &x, v)).collect();
        let total = deficiencies.iter().sum();
        EtaWitness {
            p,
            x,
            deficiencies,
            total,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EtaSearch {
    /// Only sets of size γ_p(G) - 1.
    #[default]
    Restricted,
    /// Every set smaller than γ_p(G).
    Unrestricted,
}

pub fn eta_graph(g: &Graph, p: usize) -> Result<EtaWitness> {
    eta_graph_with(g, p, &Limits::default(), EtaSearch::Restricted)
}

/// η_p(G) with the lexicographically smallest minimising set. Restricted
/// searches on trees use the dynamic program and need no size guard.
pub fn eta_graph_with(g: &Graph, p: usize, limits: &Limits, mode: EtaSearch) -> Result<EtaWitness> {
    check_order(p, 1)?;
    if mode == EtaSearch::Restricted && g.is_tree() {
        return eta_tree(g, p, limits);
    }
    eta_exhaustive(g, p, limits, mode)
}

fn eta_tree(tree: &Graph, p: usize, limits: &Limits) -> Result<EtaWitness> {
    let gamma = gamma_p_with(tree, p, limits)?.value;
    let dp = tree_dp::EtaDp::new(tree, p, gamma - 1);
    let value = dp
        .solve(&vec![crate::domination::Constraint::Free; tree.order()])
        .expect("sets of size gamma_p - 1 exist");
    let chosen = dp.smallest_witness(value);
    let x = VertexSet::from_members(tree.order(), (0..tree.order()).filter(|&v| chosen[v]))?;
    let w = EtaWitness::new(tree, p, x);
    debug_assert_eq!(w.total, value);
    Ok(w)
}

/// η_p(G) by enumerating candidate sets; the oracle for the tree program.
pub fn eta_exhaustive(g: &Graph, p: usize, limits: &Limits, mode: EtaSearch) -> Result<EtaWitness> {
    check_order(p, 1)?;
    let n = g.order();
    let limit = limits.eta.min(MASK_BITS);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "exhaustive eta_p",
            n,
            limit,
        });
    }
    let gamma = gamma_p_with(g, p, limits)?.value;
    if gamma == 0 {
        return Err(Error::Unsupported("eta_p needs gamma_p >= 1".into()));
    }
    let nbr = g.masks();
    let best = match mode {
        EtaSearch::Restricted => {
            let pool: Vec<usize> = (0..n).collect();
            let mut best: Option<(usize, u64)> = None;
            for x in Combinations::new(&pool, gamma - 1) {
                let total = deficiency(&nbr, p, x);
                if best.is_none_or(|(b, _)| total < b) {
                    best = Some((total, x));
                    // nothing smaller than gamma_p dominates, so 1 is optimal
                    if total == 1 {
                        break;
                    }
                }
            }
            best.expect("gamma_p >= 1 leaves at least the empty set").1
        }
        EtaSearch::Unrestricted => {
            let mut best: Option<(usize, VertexSet)> = None;
            for x in 0..=full_mask(n) {
                if x.count_ones() as usize >= gamma {
                    continue;
                }
                let total = deficiency(&nbr, p, x);
                let set = VertexSet::from_mask(n, x);
                let better = match &best {
                    None => true,
                    Some((b, s)) => total < *b || (total == *b && set < *s),
                };
                if better {
                    best = Some((total, set));
                }
            }
            best.expect("the empty set is always a candidate")
                .1
                .to_mask()
        }
    };
    Ok(EtaWitness::new(g, p, VertexSet::from_mask(n, best)))
}

/// μ_p(x, D, G).
pub fn mu_point(g: &Graph, p: usize, d: &VertexSet, x: usize) -> Result<usize> {
    let private = private_neighbors(g, p, d, x)?.len();
    Ok(private + p.saturating_sub(d.count_neighbors(g, x)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuEntry {
    pub vertex: usize,
    pub private_count: usize,
    pub deficit: usize,
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuReport {
    pub p: usize,
    pub set: VertexSet,
    pub entries: Vec<MuEntry>,
    /// μ_p(D, G).
    pub set_min: usize,
    /// First member of `set` attaining `set_min`.
    pub argmin: usize,
    /// μ_p(G), when minimised over all minimum sets.
    pub graph_min: Option<usize>,
}

/// μ_p(x, D, G) for every `x ∈ D`.
pub fn mu_set(g: &Graph, p: usize, d: &VertexSet) -> Result<MuReport> {
    check_order(p, 1)?;
    check_universe(g, d)?;
    let mut entries = Vec::with_capacity(d.len());
    for x in d.iter() {
        let private_count = private_neighbors(g, p, d, x)?.len();
        let deficit = p.saturating_sub(d.count_neighbors(g, x));
        entries.push(MuEntry {
            vertex: x,
            private_count,
            deficit,
            mu: private_count + deficit,
        });
    }
    let best = entries
        .iter()
        .min_by_key(|e| e.mu)
        .ok_or_else(|| Error::Unsupported("mu_p of an empty set".into()))?;
    Ok(MuReport {
        p,
        set: d.clone(),
        set_min: best.mu,
        argmin: best.vertex,
        entries,
        graph_min: None,
    })
}

pub fn mu_graph(g: &Graph, p: usize) -> Result<MuReport> {
    mu_graph_with(g, p, &Limits::default())
}

/// μ_p(G) over all minimum p-dominating sets; ties keep the
/// lexicographically first set.
pub fn mu_graph_with(g: &Graph, p: usize, limits: &Limits) -> Result<MuReport> {
    let mut best: Option<MuReport> = None;
    for d in all_minimum_p_dominating_sets_with(g, p, limits)? {
        let report = mu_set(g, p, &d)?;
        if best.as_ref().is_none_or(|b| report.set_min < b.set_min) {
            best = Some(report);
        }
    }
    let mut best = best.expect("at least one minimum set");
    best.graph_min = Some(best.set_min);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn local_eta_on_p4() {
        let p4 = path(4);
        let all = VertexSet::full(4);
        assert_eq!(eta_local(&p4, 2, &set(4, &[0, 2]), &all), 1);
        assert_eq!(eta_local(&p4, 2, &all, &all), 0);
        assert_eq!(eta_local(&p4, 2, &set(4, &[0, 1]), &all), 3);
    }

    #[test]
    fn eta_of_p4() {
        let w = eta_graph(&path(4), 2).unwrap();
        assert_eq!(w.total, 1);
        assert_eq!(w.x, set(4, &[0, 2]));
        assert_eq!(w.deficiencies, vec![0, 0, 0, 1]);
        let u = eta_graph_with(&path(4), 2, &Limits::default(), EtaSearch::Unrestricted).unwrap();
        assert_eq!(u, w);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_point(&path(4), 2, &set(4, &[0, 2, 3]), 0).unwrap(), 3);
        assert!(matches!(
            mu_point(&path(4), 2, &set(4, &[0, 2, 3]), 1),
            Err(Error::NotInSet(1))
        ));
        // K_{1,3}, p = 2: the centre sees three members, so no leaf has a
        // 2-private neighbour and every leaf scores 0 + 2
        let k13 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = mu_graph(&k13, 2).unwrap();
        assert_eq!(r.set, set(4, &[1, 2, 3]));
        assert_eq!(r.graph_min, Some(2));
        assert!(r
            .entries
            .iter()
            .all(|e| e.private_count == 0 && e.deficit == 2));
    }

    #[test]
    fn mu_of_p4_bounds_reinforcement() {
        let r = mu_graph(&path(4), 2).unwrap();
        assert!(r.graph_min.unwrap() >= 1);
    }

    #[test]
    fn tree_program_matches_enumeration() {
        for n in 1..=9 {
            for t in crate::generate::enumerate_trees(n) {
                for p in 1..=3 {
                    let fast = eta_graph(&t, p).unwrap();
                    let slow =
                        eta_exhaustive(&t, p, &Limits::default(), EtaSearch::Restricted).unwrap();
                    assert_eq!(fast, slow, "n = {n}, p = {p}, {t:?}");
                }
            }
        }
    }
}
