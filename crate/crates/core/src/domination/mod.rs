//! p-dominating sets, the p-domination number γ_p, uniqueness of minimum
//! sets, p-private neighbourhoods and the private-neighbour count ℓ_p.
//!
//! A set `D` is p-dominating when every vertex outside `D` has at least `p`
//! neighbours inside it. Every vertex of degree below `p` therefore belongs to
//! every p-dominating set; the exhaustive search seeds with those forced
//! vertices and branches only on the rest. Trees use an exact dynamic
//! program instead, cross-checked against the exhaustive search in tests.

mod tree_dp;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::{dominates, Combinations, Limits, MASK_BITS};

pub(crate) use tree_dp::{Constraint, TreeDp};

/// γ_p together with a witness and a uniqueness verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaCertificate {
    pub p: usize,
    pub value: usize,
    /// The lexicographically smallest minimum set.
    pub witness: VertexSet,
    pub unique: bool,
    /// Every minimum set, when they were listed.
    pub all_min_sets: Option<Vec<VertexSet>>,
}

pub(crate) fn check_order(p: usize, min: usize) -> Result<()> {
    if p < min {
        return Err(Error::OrderTooSmall { p, min });
    }
    Ok(())
}

pub(crate) fn check_universe(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.universe() != g.order() {
        return Err(Error::UniverseMismatch {
            set: set.universe(),
            graph: g.order(),
        });
    }
    Ok(())
}

/// Vertices of degree at most `p - 1`; they lie in every p-dominating set.
pub fn forced_vertices(g: &Graph, p: usize) -> VertexSet {
    let mut s = VertexSet::new(g.order());
    for v in (0..g.order()).filter(|&v| g.degree(v) < p) {
        s.insert(v);
    }
    s
}

pub fn is_p_dominating(g: &Graph, p: usize, d: &VertexSet) -> bool {
    (0..g.order())
        .filter(|&v| !d.contains(v))
        .all(|v| d.count_neighbors(g, v) >= p)
}

/// γ_p(G) with default limits.
pub fn gamma_p(g: &Graph, p: usize) -> Result<GammaCertificate> {
    gamma_p_with(g, p, &Limits::default())
}

/// Trees go through the dynamic program; other graphs through the
/// exhaustive search, subject to `limits.gamma_exhaustive`.
pub fn gamma_p_with(g: &Graph, p: usize, limits: &Limits) -> Result<GammaCertificate> {
    let cert = if g.is_tree() {
        gamma_p_tree(g, p)?
    } else {
        gamma_p_exhaustive(g, p, limits)?
    };
    debug_assert!(is_p_dominating(g, p, &cert.witness));
    Ok(cert)
}

/// γ_p of a tree by dynamic programming; no size limit.
pub fn gamma_p_tree(tree: &Graph, p: usize) -> Result<GammaCertificate> {
    check_order(p, 1)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let dp = TreeDp::new(tree, p);
    let (value, ways) = dp
        .solve(&vec![Constraint::Free; tree.order()])
        .expect("V is always p-dominating");
    let chosen = dp.smallest_witness(value);
    let witness = VertexSet::from_members(tree.order(), (0..tree.order()).filter(|&v| chosen[v]))?;
    assert!(
        is_p_dominating(tree, p, &witness),
        "tree DP produced an invalid witness"
    );
    Ok(GammaCertificate {
        p,
        value,
        witness,
        unique: ways == 1,
        all_min_sets: None,
    })
}

/// Number of minimum p-dominating sets of a tree, saturating at `u64::MAX`.
pub fn count_minimum_sets_tree(tree: &Graph, p: usize) -> Result<u64> {
    check_order(p, 1)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let dp = TreeDp::new(tree, p);
    Ok(dp
        .solve(&vec![Constraint::Free; tree.order()])
        .map_or(0, |(_, w)| w))
}

fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(Error::GuardExceeded { what, n, limit });
    }
    Ok(())
}

/// Seeds with the forced vertices and tries residue subsets in increasing
/// size and lexicographic order, so the first hit is the smallest witness.
pub fn gamma_p_exhaustive(g: &Graph, p: usize, limits: &Limits) -> Result<GammaCertificate> {
    check_order(p, 1)?;
    guard("exhaustive gamma_p", g.order(), limits.gamma_exhaustive)?;
    let n = g.order();
    let nbr = g.masks();
    let forced = forced_vertices(g, p).to_mask();
    let pool: Vec<usize> = (0..n).filter(|&v| forced & (1 << v) == 0).collect();
    for extra in 0..=pool.len() {
        let mut hits = Combinations::new(&pool, extra)
            .map(|c| c | forced)
            .filter(|&d| dominates(&nbr, p, d));
        if let Some(first) = hits.next() {
            let unique = hits.next().is_none();
            return Ok(GammaCertificate {
                p,
                value: first.count_ones() as usize,
                witness: VertexSet::from_mask(n, first),
                unique,
                all_min_sets: None,
            });
        }
    }
    unreachable!("V is always p-dominating")
}

pub fn all_minimum_p_dominating_sets(g: &Graph, p: usize) -> Result<Vec<VertexSet>> {
    all_minimum_p_dominating_sets_with(g, p, &Limits::default())
}

/// Every minimum p-dominating set, in lexicographic order.
pub fn all_minimum_p_dominating_sets_with(
    g: &Graph,
    p: usize,
    limits: &Limits,
) -> Result<Vec<VertexSet>> {
    check_order(p, 1)?;
    guard("listing all minimum sets", g.order(), limits.all_min_sets)?;
    let n = g.order();
    let nbr = g.masks();
    let forced = forced_vertices(g, p).to_mask();
    let pool: Vec<usize> = (0..n).filter(|&v| forced & (1 << v) == 0).collect();
    for extra in 0..=pool.len() {
        let sets: Vec<VertexSet> = Combinations::new(&pool, extra)
            .map(|c| c | forced)
            .filter(|&d| dominates(&nbr, p, d))
            .map(|d| VertexSet::from_mask(n, d))
            .collect();
        if !sets.is_empty() {
            return Ok(sets);
        }
    }
    unreachable!("V is always p-dominating")
}

/// [`gamma_p_with`] plus the full list of minimum sets.
pub fn gamma_p_full(g: &Graph, p: usize, limits: &Limits) -> Result<GammaCertificate> {
    let mut cert = gamma_p_with(g, p, limits)?;
    let all = all_minimum_p_dominating_sets_with(g, p, limits)?;
    debug_assert_eq!(all[0], cert.witness);
    cert.unique = all.len() == 1;
    cert.all_min_sets = Some(all);
    Ok(cert)
}

/// Outcome of the tree uniqueness criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub unique: bool,
    /// A vertex of `D` with degree at least `p` that has more than `p - 2`
    /// neighbours in `D` and fewer than two p-private neighbours.
    pub offending: Option<usize>,
}

/// Decides whether the p-dominating set `d` of a tree is its unique minimum
/// set: every `x` in `d` with `deg(x) >= p` must have `|N(x) ∩ d| <= p - 2`
/// or at least two p-private neighbours.
pub fn uniqueness_report(tree: &Graph, p: usize, d: &VertexSet) -> Result<UniquenessReport> {
    check_order(p, 2)?;
    check_universe(tree, d)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if !is_p_dominating(tree, p, d) {
        return Err(Error::NotPDominating(p));
    }
    for x in d.iter().filter(|&x| tree.degree(x) >= p) {
        let inside = d.count_neighbors(tree, x);
        if inside + 2 > p && private_neighbors(tree, p, d, x)?.len() < 2 {
            return Ok(UniquenessReport {
                unique: false,
                offending: Some(x),
            });
        }
    }
    Ok(UniquenessReport {
        unique: true,
        offending: None,
    })
}

/// `PN_p(x, X, G)`: neighbours `y` of `x` outside `X` with exactly `p`
/// neighbours in `X`.
pub fn private_neighbors(g: &Graph, p: usize, x_set: &VertexSet, x: usize) -> Result<VertexSet> {
    check_universe(g, x_set)?;
    if !x_set.contains(x) {
        return Err(Error::NotInSet(x));
    }
    let mut out = VertexSet::new(g.order());
    for &y in g.neighbors(x) {
        if !x_set.contains(y) && x_set.count_neighbors(g, y) == p {
            out.insert(y);
        }
    }
    Ok(out)
}

/// The unique minimum set of a tree, or [`Error::NotUnique`].
pub fn unique_gamma_set(tree: &Graph, p: usize) -> Result<VertexSet> {
    let cert = gamma_p_tree(tree, p)?;
    if !cert.unique {
        return Err(Error::NotUnique(p));
    }
    Ok(cert.witness)
}

/// ℓ_p(T): the number of vertices that are p-private neighbours of some
/// member of the unique minimum set.
pub fn ell_p(tree: &Graph, p: usize) -> Result<usize> {
    let d = unique_gamma_set(tree, p)?;
    let mut union = VertexSet::new(tree.order());
    let mut total = 0;
    for x in d.iter() {
        let pn = private_neighbors(tree, p, &d, x)?;
        total += pn.len();
        union = union.union(&pn);
    }
    // each private neighbour is counted once per member of D it sees
    assert_eq!(
        total,
        p * union.len(),
        "private-neighbour double count broke"
    );
    Ok(union.len())
}
