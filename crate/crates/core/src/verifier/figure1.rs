//! The 31-vertex fixture tree: γ_2 = 17 and a 16-vertex set avoiding the
//! marked vertex `x` with η_2 = 3 that splits 7 / 9 across the two large
//! components of `T - x`, although the minimum set splits 8 / 8.
//!
//! The check also expects r_2 = 3 and fails on it: the drawn tree has
//! η_2 = 2, attained by moving 22, 24 to 23 and 29 to 28, 30.

use std::time::Instant;

use serde::Serialize;

use super::structural::CheckStatus;
use super::{VerificationReport, Violation};
use crate::deficiency::{eta_total, mu_point};
use crate::domination::{gamma_p, unique_gamma_set};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::io::{parse_edge_list, to_edge_list};
use crate::reinforcement::r_p;

/// The fixture as an edge list.
pub const FIGURE1_EDGE_LIST: &str = include_str!("../../fixtures/figure1.txt");

/// The marked vertex and its two neighbours on the spine.
pub const FIGURE1_X: usize = 5;
pub const FIGURE1_X1: usize = 6;
pub const FIGURE1_X2: usize = 4;

/// The filled vertices of the figure.
pub const FIGURE1_SET: [usize; 16] = [0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 19, 21, 22, 24, 26, 29];

pub fn figure1_tree() -> Graph {
    parse_edge_list(FIGURE1_EDGE_LIST).expect("embedded fixture parses")
}

pub fn figure1_set() -> VertexSet {
    VertexSet::from_members(31, FIGURE1_SET).expect("fixture set is in range")
}

/// Everything the fixture is checked against, computed from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Figure1Values {
    pub gamma: usize,
    pub r: usize,
    pub set_size: usize,
    pub eta_of_set: usize,
    pub mu_at_x: usize,
    pub set_in_t1: usize,
    pub set_in_t2: usize,
    pub d_in_t1: usize,
    pub d_in_t2: usize,
    /// Status of the component-count statement for the fixture set.
    pub lemma_status: CheckStatus,
}

pub fn figure1_values() -> Result<Figure1Values> {
    let t = figure1_tree();
    let x_set = figure1_set();
    let d = unique_gamma_set(&t, 2)?;
    let t1 = t.component_of(FIGURE1_X, FIGURE1_X1)?;
    let t2 = t.component_of(FIGURE1_X, FIGURE1_X2)?;
    let eta_of_set = eta_total(&t, 2, &x_set);
    // the component-count conclusion, evaluated on the figure's set itself:
    // r_2 of the drawn tree is not 3, so the structural checks call it vacuous
    let lemma_status = if eta_of_set != 3 {
        CheckStatus::Vacuous
    } else if t1.intersection(&x_set).len() == t1.intersection(&d).len()
        && t2.intersection(&x_set).len() == t2.intersection(&d).len()
    {
        CheckStatus::Pass
    } else {
        CheckStatus::ExpectedCounterexample
    };
    Ok(Figure1Values {
        gamma: gamma_p(&t, 2)?.value,
        r: r_p(&t, 2)?.value,
        set_size: x_set.len(),
        eta_of_set,
        mu_at_x: mu_point(&t, 2, &d, FIGURE1_X)?,
        set_in_t1: t1.intersection(&x_set).len(),
        set_in_t2: t2.intersection(&x_set).len(),
        d_in_t1: t1.intersection(&d).len(),
        d_in_t2: t2.intersection(&d).len(),
        lemma_status,
    })
}

/// Compares [`figure1_values`] with the values in the figure.
pub fn figure1_fixture_check() -> Result<VerificationReport> {
    let start = Instant::now();
    let got = figure1_values()?;
    let expected = [
        ("gamma_2", got.gamma, 17),
        ("r_2", got.r, 3),
        ("|X|", got.set_size, 16),
        ("eta_2(V, X, T)", got.eta_of_set, 3),
        ("mu_2(x, D, T)", got.mu_at_x, 4),
        ("|X ∩ T_1|", got.set_in_t1, 7),
        ("|X ∩ T_2|", got.set_in_t2, 9),
        ("|D ∩ T_1|", got.d_in_t1, 8),
        ("|D ∩ T_2|", got.d_in_t2, 8),
    ];
    let tree = to_edge_list(&figure1_tree());
    let mut violations: Vec<Violation> = expected
        .iter()
        .filter(|(_, g, e)| g != e)
        .map(|(name, g, e)| Violation {
            tree: tree.clone(),
            detail: format!("{name} = {g}, expected {e}"),
        })
        .collect();
    if got.lemma_status != CheckStatus::ExpectedCounterexample {
        violations.push(Violation {
            tree: tree.clone(),
            detail: format!(
                "component counts for the fixture set: {:?}, expected a p = 2 counterexample",
                got.lemma_status
            ),
        });
    }
    Ok(VerificationReport {
        claim: "figure-1".into(),
        p: 2,
        n_max: 31,
        checked: 1,
        violations,
        census: Default::default(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
